import logging

from formslie.spanning import spanning_check, spanning_check_oriented
from handlers.command_handler import EXIT_CHECK_FAILED, EXIT_OK, CommandHandler, category_for_form

logger = logging.getLogger(__name__)


class CheckFullnessHandler(CommandHandler):
    """
    Compares the span of the diagram images with the solved space of equivariant maps.

    `elapsed` is only reported with --timing so that output is stable across runs.
    """

    name = "check-fullness"

    def handle(self, args) -> int:
        config = args.run_config
        if args.glmn:
            m, n = args.glmn
            report = spanning_check_oriented(config.algebra_name(), m, n, args.source or "", args.target or "", config.max_unknowns)
        else:
            form = self.form(args)
            report = spanning_check(category_for_form(form), form, args.r, args.s, config.max_unknowns)
        if not args.timing:
            report.pop("elapsed", None)
        self.emit(report)
        return EXIT_OK if report["ok"] else EXIT_CHECK_FAILED
