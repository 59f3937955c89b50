import logging

from handlers.command_handler import EXIT_OK, CommandHandler, oriented_category, unoriented_category
from oriented.diagram import validate_word

logger = logging.getLogger(__name__)


def _word(text: str) -> str:
    return "" if text == "0" else validate_word(text)


class DimHomHandler(CommandHandler):
    """
    Counts the basis diagrams of a morphism space.

    Two integers select the unoriented space Hom(r, s); words over u, d (or any pair
    with --oriented, where 0 stands for the empty word) select the oriented one.
    """

    name = "dim-hom"

    def handle(self, args) -> int:
        source, target = args.source, args.target
        config = args.run_config
        if args.oriented or not (source.isdigit() and target.isdigit()):
            category = oriented_category(config)
            basis = category.basis(_word(source), _word(target))
        else:
            category = unoriented_category(config)
            basis = category.basis(int(source), int(target))
        logger.info(f"Hom({source}, {target}) in {category} has {len(basis)} basis diagrams")
        self.emit({"schema": 1, "algebra": category.algebra.name, "source": source, "target": target, "count": len(basis)})
        return EXIT_OK
