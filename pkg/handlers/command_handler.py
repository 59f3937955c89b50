import json
import logging
import sys
from typing import Tuple, Union

from cli.expression import Elaborator, is_oriented, parse
from formslie.forms import FormSpec, catalog_form
from helpers.configurator import RunConfig
from helpers.errors import EngineError
from oriented.category import OrientedCategory
from oriented.diagram import OrMorphism
from superalg.catalog import make_algebra
from superalg.scalars import parse_scalar
from unoriented.category import UnorientedCategory
from unoriented.diagram import UnMorphism

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def unoriented_category(config: RunConfig) -> UnorientedCategory:
    return UnorientedCategory(make_algebra(config.algebra_name()), config.sigma, parse_scalar(config.d))


def oriented_category(config: RunConfig) -> OrientedCategory:
    return OrientedCategory(make_algebra(config.algebra_name()), parse_scalar(config.d))


def category_for_form(form: FormSpec) -> UnorientedCategory:
    """The category whose parameters F_Phi realizes."""
    return UnorientedCategory(form.algebra, form.sigma, form.specialization)


class CommandHandler:
    """
    Base class of the subcommand handlers.

    Subclasses implement `handle(args)` and return an exit code. `run` turns any
    EngineError into a JSON error on stderr.
    """

    name = ""

    def __init__(self, out=None, err=None):
        self.out = out
        self.err = err

    def run(self, args) -> int:
        try:
            return self.handle(args)
        except EngineError as e:
            logger.error(f"Failed to run {self.name}: {e}")
            self.emit_error(e)
            return EXIT_ERROR

    def handle(self, args) -> int:
        raise NotImplementedError

    def emit(self, payload: dict) -> None:
        out = self.out or sys.stdout
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")

    def emit_error(self, error: EngineError) -> None:
        err = self.err or sys.stderr
        payload = {"schema": 1, "error": type(error).__name__, "message": str(error)}
        position = getattr(error, "position", None)
        if position is not None:
            payload["position"] = position
        err.write(json.dumps(payload, ensure_ascii=False) + "\n")

    def form(self, args) -> FormSpec:
        config: RunConfig = args.run_config
        return catalog_form(config.form_name(getattr(args, "form", None)))

    def elaborate(self, args, expression: str) -> Tuple[Union[UnorientedCategory, OrientedCategory], Union[UnMorphism, OrMorphism]]:
        """
        Parses an expression and elaborates it in the configured category.

        The oriented category is used when --oriented is given or when the
        expression mentions an oriented-only generator.
        """
        config: RunConfig = args.run_config
        node = parse(expression)
        if getattr(args, "oriented", False) or is_oriented(node):
            category = oriented_category(config)
        else:
            category = unoriented_category(config)
        logger.info(f"Elaborating in {category}")
        return category, Elaborator(category).evaluate(node)
