import logging

from handlers.command_handler import EXIT_CHECK_FAILED, EXIT_OK, CommandHandler, oriented_category, unoriented_category
from oriented import relations as oriented_relations
from unoriented import relations as unoriented_relations

logger = logging.getLogger(__name__)


class CheckRelationsHandler(CommandHandler):
    """Runs the relation suite of the configured category over a set of token labels."""

    name = "check-relations"

    def handle(self, args) -> int:
        config = args.run_config
        if args.oriented:
            category = oriented_category(config)
            check = oriented_relations.check_relations
        else:
            category = unoriented_category(config)
            check = unoriented_relations.check_relations
        labels = None
        if args.label:
            labels = [category.algebra.parse(text) for text in args.label]
        rows = check(category, labels)
        failed = [row for row in rows if not row["ok"]]
        self.emit({"schema": 1, "category": repr(category), "passed": len(rows) - len(failed), "failed": len(failed), "rows": rows})
        return EXIT_CHECK_FAILED if failed else EXIT_OK
