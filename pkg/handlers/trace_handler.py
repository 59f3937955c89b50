import logging

from handlers.command_handler import EXIT_OK, CommandHandler
from superalg.scalars import format_scalar

logger = logging.getLogger(__name__)


class TraceHandler(CommandHandler):
    name = "trace"

    def handle(self, args) -> int:
        category, f = self.elaborate(args, args.expr)
        value = category.categorical_trace(f)
        self.emit({"schema": 1, "trace": format_scalar(value)})
        return EXIT_OK
