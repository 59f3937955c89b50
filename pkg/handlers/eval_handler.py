import logging

from cli.expression import Elaborator, parse
from handlers.command_handler import EXIT_OK, CommandHandler, category_for_form
from incarnate.oriented_functor import eval_oriented, incarnation_for
from incarnate.unoriented_functor import eval_unoriented

logger = logging.getLogger(__name__)


class EvalHandler(CommandHandler):
    """
    Evaluates an expression through an incarnation superfunctor.

    With --glmn m n the expression is oriented and tokens name elements of A^op
    (written with the names of A), acting on A^{m|n}. Otherwise the expression is
    unoriented and evaluated through F_Phi for the configured form, in the category
    whose algebra, parity and bubble value that form realizes.
    """

    name = "eval"

    def handle(self, args) -> int:
        config = args.run_config
        node = parse(args.expr)
        if args.glmn:
            m, n = args.glmn
            incarnation = incarnation_for(config.algebra_name(), m, n)
            f = Elaborator(incarnation.category).evaluate(node)
            result = eval_oriented(f, incarnation.category, m, n)
        else:
            form = self.form(args)
            category = category_for_form(form)
            f = Elaborator(category).evaluate(node)
            result = eval_unoriented(f, category, form)
        logger.info(f"Evaluated to a {result.shape[0]}x{result.shape[1]} map")
        self.emit(result.to_json())
        return EXIT_OK
