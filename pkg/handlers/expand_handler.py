import logging

from handlers.command_handler import EXIT_OK, CommandHandler
from helpers.errors import TypeMismatchError
from oriented.category import OrientedCategory

logger = logging.getLogger(__name__)


class ExpandOrientationsHandler(CommandHandler):
    """Prints D(f), the orientation expansion of an unoriented expression."""

    name = "expand-orientations"

    def handle(self, args) -> int:
        category, f = self.elaborate(args, args.expr)
        if isinstance(category, OrientedCategory):
            raise TypeMismatchError("expand-orientations takes an unoriented expression")
        self.emit(category.orientation_expand(f).to_json(category.oriented))
        return EXIT_OK
