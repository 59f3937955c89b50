import argparse
import logging
from typing import List, Optional

from handlers.catalog_handler import ListFormsHandler
from handlers.dim_hom_handler import DimHomHandler
from handlers.eval_handler import EvalHandler
from handlers.expand_handler import ExpandOrientationsHandler
from handlers.faithfulness_handler import CheckFaithfulnessHandler
from handlers.forms_handler import CheckEmbeddingsHandler, CheckQuaternionicHandler, LieBasisHandler
from handlers.fullness_handler import CheckFullnessHandler
from handlers.normalize_handler import NormalizeHandler
from handlers.relations_handler import CheckRelationsHandler
from handlers.trace_handler import TraceHandler
from handlers.command_handler import EXIT_ERROR
from helpers.configurator import RunConfig
from helpers.errors import EngineError

logger = logging.getLogger(__name__)


class CliInitializer:
    """
    Builds the command-line parser and dispatches each subcommand to its handler.

    In expressions `f ; g` means g after f: diagrams are read bottom to top.
    """

    def __init__(self, out=None, err=None):
        self.normalize_handler_instance = NormalizeHandler(out, err)
        self.dim_hom_handler_instance = DimHomHandler(out, err)
        self.eval_handler_instance = EvalHandler(out, err)
        self.relations_handler_instance = CheckRelationsHandler(out, err)
        self.fullness_handler_instance = CheckFullnessHandler(out, err)
        self.faithfulness_handler_instance = CheckFaithfulnessHandler(out, err)
        self.expand_handler_instance = ExpandOrientationsHandler(out, err)
        self.trace_handler_instance = TraceHandler(out, err)
        self.list_forms_handler_instance = ListFormsHandler(out, err)
        self.lie_basis_handler_instance = LieBasisHandler(out, err)
        self.quaternionic_handler_instance = CheckQuaternionicHandler(out, err)
        self.embeddings_handler_instance = CheckEmbeddingsHandler(out, err)
        self.parser = self.initialize_parser()

    def initialize_parser(self) -> argparse.ArgumentParser:
        """
        Declares the global flags and one subparser per handler.

        Returns:
            argparse.ArgumentParser: The configured parser.
        """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--config", default="config.ini", help="key = value configuration file")
        common.add_argument("--algebra", help="catalog algebra, e.g. R, C, H, Cl3R, Mat(1|1,R)")
        common.add_argument("--involution", choices=("default", "id"))
        common.add_argument("--field", choices=("rational", "gaussian"))
        common.add_argument("--sigma", type=int, choices=(0, 1))
        common.add_argument("--d", help="bubble parameter, a rational or Gaussian rational")
        common.add_argument("--form", help="catalog form, e.g. osp(2,1|0) or u(1,1|0,0)")
        common.add_argument("--log-level", dest="log_level")
        common.add_argument("--max-unknowns", dest="max_unknowns", type=int)
        common.add_argument("--oriented", action="store_true", help="read the expression in the oriented category")

        parser = argparse.ArgumentParser(prog="brauer", description="Exact computations in Brauer supercategories.")
        commands = parser.add_subparsers(dest="command", required=True)

        def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
            sub = commands.add_parser(name, parents=[common], help=help_text)
            sub.set_defaults(handler=handler)
            return sub

        command("normalize", self.normalize_handler_instance, "normal form of an expression").add_argument("expr")

        dim_hom = command("dim-hom", self.dim_hom_handler_instance, "number of basis diagrams of Hom(X, Y)")
        dim_hom.add_argument("source")
        dim_hom.add_argument("target")

        evaluate = command("eval", self.eval_handler_instance, "image of an expression under an incarnation")
        evaluate.add_argument("expr")
        evaluate.add_argument("--glmn", nargs=2, type=int, metavar=("M", "N"), help="oriented incarnation on A^{m|n}")

        relations = command("check-relations", self.relations_handler_instance, "relation suite of the configured category")
        relations.add_argument("--label", action="append", help="token label, repeatable (default: the algebra basis)")

        fullness = command("check-fullness", self.fullness_handler_instance, "diagram images against equivariant maps")
        fullness.add_argument("--r", type=int, default=2)
        fullness.add_argument("--s", type=int, default=2)
        fullness.add_argument("--glmn", nargs=2, type=int, metavar=("M", "N"))
        fullness.add_argument("--source", help="oriented source word with --glmn")
        fullness.add_argument("--target", help="oriented target word with --glmn")
        fullness.add_argument("--timing", action="store_true")

        faithfulness = command("check-faithfulness", self.faithfulness_handler_instance, "linear independence of basis images")
        faithfulness.add_argument("--r", type=int, default=2)
        faithfulness.add_argument("--s", type=int, default=2)

        command("expand-orientations", self.expand_handler_instance, "orientation expansion D(f)").add_argument("expr")
        command("trace", self.trace_handler_instance, "categorical trace of an endomorphism").add_argument("expr")
        command("list-forms", self.list_forms_handler_instance, "form, algebra and embedding catalogs")
        command("lie-basis", self.lie_basis_handler_instance, "the Lie superalgebra of a form")
        command("check-quaternionic", self.quaternionic_handler_instance, "identities of a quaternionic form")
        command("check-embeddings", self.embeddings_handler_instance, "catalogued superalgebra embeddings").add_argument(
            "--name", action="append"
        )
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """
        Parses argv, loads the configuration and runs the selected handler.

        Returns:
            int: 0 on success, 1 when a check fails, 2 on errors.
        """
        args = self.parser.parse_args(argv)
        try:
            args.run_config = RunConfig.load(
                args.config,
                algebra=args.algebra,
                involution=args.involution,
                field=args.field,
                sigma=args.sigma,
                d=args.d,
                form=args.form,
                log_level=args.log_level,
                max_unknowns=args.max_unknowns,
            )
        except EngineError as e:
            logger.error(f"Failed to load configuration: {e}")
            args.handler.emit_error(e)
            return EXIT_ERROR
        logging.getLogger().setLevel(args.run_config.log_level.upper())
        logger.info(f"Running {args.command} with {args.run_config}")
        return args.handler.run(args)
