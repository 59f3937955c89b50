"""
The unoriented incarnation superfunctor F_Phi : Brauer^sigma(A, inv; nu(m - n)) -> G(Phi)-supermodules.
"""
import logging
from functools import lru_cache
from typing import Dict, Optional

from formslie.forms import FormSpec
from helpers.errors import ConfigurationError, UnknownNameError
from incarnate.modules import LinearMap, flip, place, stack, tensor_all
from incarnate.oriented_functor import OrientedIncarnation
from superalg.scalars import ZERO, Scalar, scalar, sign
from unoriented.category import UnorientedCategory
from unoriented.diagram import Layer, UnDiagram, UnMorphism

logger = logging.getLogger(__name__)


class UnorientedIncarnation:
    """
    Evaluates unoriented diagrams on tensor powers of V = A^{m|n} equipped with Phi.

    Args:
        form (FormSpec): The superhermitian form; Phi = tau o phi is used throughout.
    """

    def __init__(self, form: FormSpec):
        self.form = form
        self.module = form.module
        self.oriented = OrientedIncarnation(form.algebra, form.m, form.n)
        self._generators: Dict[str, LinearMap] = {}
        self._tokens: Dict[int, LinearMap] = {}

    def __repr__(self) -> str:
        return f"UnorientedIncarnation({self.form.name})"

    def identity(self, k: int) -> LinearMap:
        return LinearMap.identity(self.module.power_parities(k))

    def token_map(self, index: int) -> LinearMap:
        """rho of a^inv for the basis element a."""
        if index not in self._tokens:
            algebra = self.form.algebra
            self._tokens[index] = self.oriented.token_map(algebra.inv(algebra.basis_element(index)))
        return self._tokens[index]

    def generator_map(self, kind: str) -> LinearMap:
        """
        Image of cross, cap or cup.

        Raises:
            UnknownNameError: For any other kind.
        """
        if kind in self._generators:
            return self._generators[kind]
        form, module = self.form, self.module
        p, size = module.parities, module.dim
        pair = module.power_parities(2)
        if kind == "cross":
            image = flip(p, p).scale(form.nu)
        elif kind == "cap":
            gram = form.ground_gram
            columns = {x * size + y: {0: gram[x][y]} for x in range(size) for y in range(size)}
            image = LinearMap(pair, (0,), columns)
        elif kind == "cup":
            dual = form.dual_coefficients
            column: Dict[int, Scalar] = {}
            for x in range(size):
                s = sign(form.sigma * p[x])
                for z in range(size):
                    if dual[x][z]:
                        column[x * size + z] = column.get(x * size + z, ZERO) + dual[x][z] * s
            image = LinearMap((0,), pair, {0: column})
        else:
            raise UnknownNameError(f"unknown unoriented generator {kind!r}")
        self._generators[kind] = image
        return image

    def layer_map(self, layer: Layer) -> LinearMap:
        if layer.kind == "tokens":
            tokens = dict(layer.tokens)
            pieces = [self.token_map(tokens[i]) if i in tokens else self.identity(1) for i in range(layer.width)]
            return tensor_all(pieces)
        consumed = {"cross": 2, "cap": 2, "cup": 0}[layer.kind]
        right = layer.width - layer.left - consumed
        return place(self.generator_map(layer.kind), self.identity(layer.left), self.identity(right))

    def diagram_map(self, diagram: UnDiagram) -> LinearMap:
        return stack([self.layer_map(layer) for layer in diagram.layers()])

    def evaluate(self, f: UnMorphism) -> LinearMap:
        """F_Phi(f) as a map V^{(x) r} -> V^{(x) s}."""
        total = LinearMap(self.module.power_parities(f.r), self.module.power_parities(f.s))
        for diagram, value in f.sorted_terms():
            total = total + self.diagram_map(diagram).scale(value)
        return total


@lru_cache(maxsize=32)
def incarnation_for_form(form: FormSpec) -> UnorientedIncarnation:
    return UnorientedIncarnation(form)


def check_compatible(category: UnorientedCategory, form: FormSpec) -> None:
    """
    Raises:
        ConfigurationError: If the algebra, the parity or the bubble value do not match the form.
    """
    if category.algebra.name != form.algebra.name:
        raise ConfigurationError(f"form {form.name} lives over {form.algebra.name}, the category over {category.algebra.name}")
    if category.sigma != form.sigma:
        raise ConfigurationError(f"form {form.name} has parity {form.sigma}, the category has sigma = {category.sigma}")
    if not form.algebra.supertrace_vanishes and category.d != scalar(form.specialization):
        raise ConfigurationError(f"form {form.name} realizes d = {form.specialization}, the category has d = {category.d}")


def eval_unoriented(f: UnMorphism, category: UnorientedCategory, form: FormSpec, incarnation: Optional[UnorientedIncarnation] = None) -> LinearMap:
    """
    Evaluates a morphism of Brauer^sigma(A, inv; d) through F_Phi.

    Args:
        f (UnMorphism): The morphism, in normal form.
        category (UnorientedCategory): The category f belongs to.
        form (FormSpec): Phi.
        incarnation (Optional[UnorientedIncarnation]): Reused evaluator, built when omitted.

    Returns:
        LinearMap: F_Phi(f).
    """
    check_compatible(category, form)
    incarnation = incarnation or incarnation_for_form(form)
    logger.debug(f"Evaluating {f} with {incarnation}")
    return incarnation.evaluate(f)
