import logging

from cli.expression import print_morphism
from handlers.command_handler import EXIT_OK, CommandHandler
from oriented.category import OrientedCategory

logger = logging.getLogger(__name__)


class NormalizeHandler(CommandHandler):
    """
    Prints the normal form of an expression as a list of (coefficient, diagram).

    Unoriented results also carry `text`, an expression that elaborates back to the
    same normal form.
    """

    name = "normalize"

    def handle(self, args) -> int:
        category, f = self.elaborate(args, args.expr)
        algebra = category.algebra
        if isinstance(category, OrientedCategory):
            payload = {"schema": 1, "category": "oriented", "source": f.source, "target": f.target, "terms": f.to_json(algebra)}
        else:
            payload = {
                "schema": 1,
                "category": "unoriented",
                "r": f.r,
                "s": f.s,
                "terms": f.to_json(algebra),
                "text": print_morphism(f, category),
            }
        logger.info(f"Normal form has {len(f.terms)} terms")
        self.emit(payload)
        return EXIT_OK
