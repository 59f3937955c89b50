import logging

from handlers.command_handler import EXIT_CHECK_FAILED, EXIT_OK, CommandHandler, category_for_form, unoriented_category
from incarnate.faithfulness import butte_check

logger = logging.getLogger(__name__)


class CheckFaithfulnessHandler(CommandHandler):
    """
    Linear independence checks for Hom(r, s).

    Without --form: the orientation expansions of the unoriented basis.
    With --form: the F_Phi images of the basis, plus the test-vector pairing.
    """

    name = "check-faithfulness"

    def handle(self, args) -> int:
        if args.form:
            form = self.form(args)
            report = butte_check(category_for_form(form), form, args.r, args.s)
            ok = report["independent"] and report["pairing_ok"] is not False
        else:
            category = unoriented_category(args.run_config)
            report = {"schema": 1, "category": repr(category), **category.faithfulness(args.r, args.s)}
            ok = report["independent"]
        self.emit(report)
        return EXIT_OK if ok else EXIT_CHECK_FAILED
