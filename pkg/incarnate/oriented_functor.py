"""
The oriented incarnation superfunctor G : OB(A^op; m - n) -> gl(m|n, A)-supermodules.

Up strands go to V = A^{m|n}, down strands to V*. A token labelled a^op acts on V
by rho_a(v) = (-1)^{|a||v|} v a and on V* by the dual map f -> (-1)^{|a||f|} f o rho_a.
Tokens are written with the names of the A basis; the category carrying them is
OB(A^op), whose basis is the same.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from helpers.errors import ConfigurationError, TypeMismatchError, UnknownNameError
from incarnate.modules import LinearMap, SuperModule, flip, place, stack, tensor_all
from oriented.category import OrientedCategory
from oriented.diagram import DOWN, UP, OrDiagram, OrMorphism
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.catalog import make_algebra
from superalg.scalars import ONE, Scalar, scalar, sign
from unoriented.diagram import bubble_swaps

logger = logging.getLogger(__name__)


class OrientedIncarnation:
    """
    Evaluates oriented diagrams on tensor products of V and V*.

    Args:
        algebra (SuperAlgebra): A, the algebra V is a right module over.
        m (int): Even rank of V.
        n (int): Odd rank of V.
    """

    def __init__(self, algebra: SuperAlgebra, m: int, n: int):
        self.algebra = algebra
        self.module = SuperModule(algebra, m, n)
        self.category = OrientedCategory(algebra.opposite(), m - n)
        self._maps: Dict[Tuple, LinearMap] = {}

    def __repr__(self) -> str:
        return f"OrientedIncarnation({self.algebra.name}, {self.module.m}|{self.module.n})"

    def parities(self, word: str) -> Tuple[int, ...]:
        return self.module.power_parities(len(word))

    def identity(self, word: str) -> LinearMap:
        return LinearMap.identity(self.parities(word))

    def rho(self, index: int) -> LinearMap:
        """Right action of the basis element `index` with its Koszul sign."""
        key = ("rho", index)
        if key not in self._maps:
            module, algebra = self.module, self.algebra
            a_parity = algebra.parities[index]
            columns = {}
            for x, parity in enumerate(module.parities):
                t, b = module.split(x)
                product = algebra.mul_basis(b, index)
                columns[x] = {module.index(t, k): c * sign(a_parity * parity) for k, c in product.items()}
            self._maps[key] = LinearMap(module.parities, module.parities, columns)
        return self._maps[key]

    def dual_rho(self, index: int) -> LinearMap:
        """f -> (-1)^{|a||f|} f o rho_a on V*, in the basis dual to the ground basis."""
        key = ("dual", index)
        if key not in self._maps:
            parities = self.module.parities
            a_parity = self.algebra.parities[index]
            columns: Dict[int, Dict[int, Scalar]] = {}
            for z, column in self.rho(index).columns.items():
                for y, value in column.items():
                    columns.setdefault(y, {})[z] = value * sign(a_parity * parities[y])
            self._maps[key] = LinearMap(parities, parities, columns)
        return self._maps[key]

    def token_map(self, a: AlgElem, orientation: str = UP) -> LinearMap:
        total = LinearMap(self.module.parities, self.module.parities)
        for index, c in a.coeffs.items():
            piece = self.rho(index) if orientation == UP else self.dual_rho(index)
            total = total + piece.scale(c)
        return total

    def generator_map(self, kind: str, argument=None) -> LinearMap:
        """
        Image of an oriented generator.

        Args:
            kind (str): cross (on any two letters), capL, capR, cupL, cupR,
                token or dtoken (argument: an AlgElem).

        Returns:
            LinearMap: flip, ev, ev o flip, coev, the twisted coevaluation, rho_a or its dual.

        Raises:
            UnknownNameError: For an unknown kind.
        """
        module = self.module
        p, size = module.parities, module.dim
        pair = self.parities("uu")
        unit = (0,)
        if kind == "cross":
            return flip(p, p)
        if kind == "capL":
            return LinearMap(pair, unit, {x * size + x: {0: ONE} for x in range(size)})
        if kind == "capR":
            return LinearMap(pair, unit, {x * size + x: {0: ONE * sign(p[x])} for x in range(size)})
        if kind == "cupL":
            return LinearMap(unit, pair, {0: {x * size + x: ONE for x in range(size)}})
        if kind == "cupR":
            return LinearMap(unit, pair, {0: {x * size + x: ONE * sign(p[x]) for x in range(size)}})
        if kind == "token":
            return self.token_map(argument, UP)
        if kind == "dtoken":
            return self.token_map(argument, DOWN)
        raise UnknownNameError(f"unknown oriented generator {kind!r}")

    def _token_layer(self, word: str, tokens: Dict[int, int]) -> LinearMap:
        pieces = []
        for position, letter in enumerate(word):
            if position in tokens:
                index = tokens[position]
                pieces.append(self.rho(index) if letter == UP else self.dual_rho(index))
            else:
                pieces.append(LinearMap.identity(self.module.parities))
        return tensor_all(pieces)

    def _around(self, piece: LinearMap, word: str, left: int, consumed: int) -> LinearMap:
        return place(piece, self.identity(word[:left]), self.identity(word[left + consumed:]))

    def diagram_map(self, diagram: OrDiagram) -> LinearMap:
        """
        Bottom tokens, crossings sorting the bottom, caps, cups, crossings sorting the top,
        then the cup tokens.
        """
        source, target = diagram.source, diagram.target
        r = len(source)
        pairs = [tuple(sorted((s.start, s.end))) for s in diagram.strands]
        token_of = {tuple(sorted((s.start, s.end))): s.token for s in diagram.strands}
        through = sorted(pair for pair in pairs if pair[0] <= r < pair[1])
        caps = sorted(pair for pair in pairs if pair[1] <= r)
        cups = sorted(pair for pair in pairs if pair[0] > r)

        bottom_tokens = {a - 1: token_of[(a, b)] for a, b in through}
        bottom_tokens.update({b - 1: token_of[(a, b)] for a, b in caps})
        layers: List[LinearMap] = [self._token_layer(source, bottom_tokens)]

        desired = [a for a, _ in through] + [p for pair in caps for p in pair]
        order = {label: i for i, label in enumerate(desired)}
        word = source
        for position in bubble_swaps([order[label] for label in range(1, r + 1)]):
            layers.append(self._around(self.generator_map("cross"), word, position, 2))
            word = word[:position] + word[position + 1] + word[position] + word[position + 2:]
        k = len(through)
        for c in reversed(range(len(caps))):
            left = k + 2 * c
            kind = "capL" if word[left:left + 2] == "du" else "capR"
            layers.append(self._around(self.generator_map(kind), word, left, 2))
            word = word[:left] + word[left + 2:]

        top_of = dict(through)
        sequence = [top_of[a] for a, _ in through]
        for a, b in cups:
            letters = target[a - r - 1] + target[b - r - 1]
            kind = "cupL" if letters == "ud" else "cupR"
            layers.append(self._around(self.generator_map(kind), word, len(word), 0))
            word += letters
            sequence.extend((a, b))
        for position in bubble_swaps(sequence):
            layers.append(self._around(self.generator_map("cross"), word, position, 2))
            word = word[:position] + word[position + 1] + word[position] + word[position + 2:]
        if word != target:
            raise TypeMismatchError(f"layer factorization reached {word!r} instead of {target!r}")
        top_tokens = {a - r - 1: token_of[(a, b)] for a, b in cups}
        layers.append(self._token_layer(target, top_tokens))
        return stack(layers)

    def evaluate(self, f: OrMorphism) -> LinearMap:
        """G(f) as a linear map between the tensor products named by f's words."""
        total = LinearMap(self.parities(f.source), self.parities(f.target))
        for diagram, value in f.sorted_terms():
            total = total + self.diagram_map(diagram).scale(value)
        return total


def module_algebra(token_algebra: SuperAlgebra) -> SuperAlgebra:
    """A for a category whose tokens live in A^op."""
    if token_algebra.name.endswith("^op"):
        return make_algebra(token_algebra.name[:-3])
    return token_algebra.opposite()


@lru_cache(maxsize=32)
def incarnation_for(algebra_name: str, m: int, n: int) -> OrientedIncarnation:
    return OrientedIncarnation(make_algebra(algebra_name), m, n)


def eval_oriented(f: OrMorphism, category: OrientedCategory, m: int, n: int) -> LinearMap:
    """
    Evaluates a morphism of OB(A^op; d) on A^{m|n}.

    Raises:
        ConfigurationError: If the bubble value d differs from m - n while str_A is not zero.
    """
    algebra = module_algebra(category.algebra)
    if not algebra.supertrace_vanishes and category.d != scalar(m - n):
        raise ConfigurationError(f"G on {algebra.name}^({m}|{n}) needs d = {m - n}, the category has d = {category.d}")
    incarnation = incarnation_for(algebra.name, m, n)
    logger.debug(f"Evaluating {f} with {incarnation}")
    return incarnation.evaluate(f)
