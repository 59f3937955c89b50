"""
Normal-form arithmetic in the unoriented Brauer supercategory Brauer^sigma(A, inv; d).

Composites are computed through the orientation expansion: the matching of a
composite is found by gluing, and its tokens and coefficient are read off the
oriented component in which every token spot points up. The expansion is
faithful, so that component determines the unoriented normal form.
"""
import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from helpers.errors import AlgebraError, ConfigurationError, TypeMismatchError, UnknownNameError
from oriented.category import OrientedCategory
from oriented.diagram import OrDiagram, Strand
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, scalar
from unoriented.diagram import Pair, UnDiagram, UnMorphism, enumerate_basis_un, glue
from unoriented.expansion import OrientationExpansion, faithfulness_report
from unoriented.shifted import ShiftedMatrixMorphism, ShiftedOrMorphism

logger = logging.getLogger(__name__)

HALF = scalar(1) / scalar(2)


class UnorientedCategory:
    """
    Brauer^sigma(A, inv; d) for an involutive Frobenius superalgebra.

    Args:
        algebra (SuperAlgebra): Token algebra; needs a Frobenius form and an anti-involution.
        sigma (int): Parity of cups and caps.
        d (Scalar): Value of a bubble carrying 1, divided by str_A(1).

    Raises:
        ConfigurationError: If the algebra lacks structure, or sigma = 1 with d != 0 and str_A != 0.
    """

    def __init__(self, algebra: SuperAlgebra, sigma: int = 0, d=1):
        if not algebra.is_frobenius or not algebra.is_involutive:
            raise ConfigurationError(f"{algebra.name} must be Frobenius with an anti-involution")
        if sigma not in (0, 1):
            raise ConfigurationError(f"sigma must be 0 or 1, got {sigma}")
        d = scalar(d)
        if algebra.supertrace_vanishes and d:
            logger.info(f"str_{algebra.name} vanishes, bubbles are zero: using d = 0")
            d = ZERO
        if sigma == 1 and d:
            raise ConfigurationError(
                f"sigma = 1 with d = {d} over {algebra.name}: a bubble equals minus itself, so d must be 0"
            )
        self.algebra = algebra
        self.sigma = sigma
        self.d = d
        self.oriented = OrientedCategory(algebra, d * HALF if sigma == 0 else ZERO)
        self.expansion = OrientationExpansion(algebra, sigma, self.oriented)
        self._signs: Dict[UnDiagram, Scalar] = {}

    def __repr__(self) -> str:
        return f"UnorientedCategory({self.algebra.name}, sigma={self.sigma}, d={self.d})"

    def inv(self, a: AlgElem) -> AlgElem:
        return self.algebra.inv(a)

    # building morphisms

    def from_pairs(self, r: int, s: int, decorated: Sequence[Tuple[Pair, AlgElem]], coefficient=ONE) -> UnMorphism:
        """Multilinear expansion of a matching whose strands carry arbitrary algebra elements."""
        terms: Dict[UnDiagram, Scalar] = {}
        choices = [list(token.coeffs.items()) for _, token in decorated]
        for picked in itertools.product(*choices):
            value = scalar(coefficient)
            chosen = {}
            for (pair, _), (index, c) in zip(decorated, picked):
                value = value * c
                chosen[pair] = index
            diagram = UnDiagram.build(r, s, chosen)
            terms[diagram] = terms.get(diagram, ZERO) + value
        return UnMorphism(r, s, terms)

    def identity(self, n: int) -> UnMorphism:
        one = self.algebra.one()
        return self.from_pairs(n, n, [((i, n + i), one) for i in range(1, n + 1)])

    def generator(self, kind: str, argument=None) -> UnMorphism:
        """
        One of cross, cap, cup, token(a) or id(n), already in normal form.

        Raises:
            UnknownNameError: For any other kind.
        """
        one = self.algebra.one()
        if kind == "cross":
            return self.from_pairs(2, 2, [((1, 4), one), ((2, 3), one)])
        if kind == "cap":
            return self.from_pairs(2, 0, [((1, 2), one)])
        if kind == "cup":
            return self.from_pairs(0, 2, [((1, 2), one)])
        if kind == "token":
            return self.from_pairs(1, 1, [((1, 2), argument)])
        if kind == "id":
            return self.identity(argument or 0)
        raise UnknownNameError(f"unknown unoriented generator {kind!r}")

    def token(self, a: AlgElem) -> UnMorphism:
        return self.generator("token", a)

    def morphism(self, diagram: UnDiagram, coefficient=ONE) -> UnMorphism:
        return UnMorphism(diagram.r, diagram.s, {diagram: scalar(coefficient)})

    def basis(self, r: int, s: int) -> List[UnDiagram]:
        return enumerate_basis_un(self.algebra, r, s)

    # reading normal forms off the orientation expansion

    def _upward(self, diagram: UnDiagram) -> OrDiagram:
        """The oriented diagram in the all-up orientation component of D(diagram)."""
        source, target = diagram.reference_words()
        strands = []
        for (a, b), token in zip(diagram.pairs, diagram.tokens):
            kind = diagram.kind((a, b))
            if kind == "through":
                strands.append(Strand(a, b, token))
            else:
                strands.append(Strand(b, a, token))
        return OrDiagram.build(source, target, strands)

    def reference_sign(self, diagram: UnDiagram) -> Scalar:
        """Sign of the all-up component of D(diagram), always +1 or -1."""
        if diagram in self._signs:
            return self._signs[diagram]
        source, target = diagram.reference_words()
        entry = self.expansion.column(diagram, source).get(target)
        value = entry.base.terms.get(self._upward(diagram), ZERO) if entry else ZERO
        if value not in (ONE, -ONE):
            raise AlgebraError(f"orientation expansion lost the basis diagram {diagram.to_dict(self.algebra)}")
        self._signs[diagram] = value
        return value

    def _decode(self, r: int, s: int, pairs: Tuple[Pair, ...], component: Optional[ShiftedOrMorphism]) -> Dict[UnDiagram, Scalar]:
        result: Dict[UnDiagram, Scalar] = {}
        if not component:
            return result
        for oriented, value in component.base.terms.items():
            decorated = {tuple(sorted((strand.start, strand.end))): strand.token for strand in oriented.strands}
            diagram = UnDiagram.build(r, s, decorated)
            if diagram.pairs != pairs:
                raise AlgebraError("orientation expansion changed the underlying matching")
            result[diagram] = result.get(diagram, ZERO) + value * self.reference_sign(diagram)
        return result

    # composition

    def compose_diagrams(self, top: UnDiagram, bottom: UnDiagram) -> Dict[UnDiagram, Scalar]:
        pairs, loops = glue(top, bottom)
        skeleton = UnDiagram(bottom.r, top.s, pairs, (0,) * len(pairs))
        source, target = skeleton.reference_words()
        total: Optional[ShiftedOrMorphism] = None
        for middle, right in self.expansion.column(bottom, source).items():
            left = self.expansion.column(top, middle).get(target)
            if not left:
                continue
            piece = left.compose(self.oriented, right)
            total = piece if total is None else total + piece
        logger.debug(f"Composite matching {pairs} with {loops} loops")
        return self._decode(bottom.r, top.s, pairs, total)

    def compose(self, f: UnMorphism, g: UnMorphism) -> UnMorphism:
        """
        f after g (f stacked on top of g).

        Raises:
            TypeMismatchError: If g has a different number of top endpoints than f has bottom ones.
        """
        if f.r != g.s:
            raise TypeMismatchError(f"cannot compose: top has {f.r} bottom endpoints, bottom has {g.s} top endpoints")
        terms: Dict[UnDiagram, Scalar] = {}
        for top, a in f.terms.items():
            for bottom, b in g.terms.items():
                for diagram, c in self.compose_diagrams(top, bottom).items():
                    terms[diagram] = terms.get(diagram, ZERO) + a * b * c
        return UnMorphism(g.r, f.s, terms)

    def tensor_diagrams(self, left: UnDiagram, right: UnDiagram) -> Dict[UnDiagram, Scalar]:
        r1, s1, r2 = left.r, left.s, right.r

        def shift_left(p: int) -> int:
            return p if p <= r1 else p + r2

        def shift_right(p: int) -> int:
            return p + r1 if p <= r2 else p + r1 + s1

        decorated = {tuple(sorted((shift_left(a), shift_left(b)))): t for (a, b), t in zip(left.pairs, left.tokens)}
        decorated.update({tuple(sorted((shift_right(a), shift_right(b)))): t for (a, b), t in zip(right.pairs, right.tokens)})
        skeleton = UnDiagram.build(r1 + r2, s1 + right.s, decorated)
        s_left, t_left = left.reference_words()
        s_right, t_right = right.reference_words()
        piece = self.expansion.column(left, s_left)[t_left].tensor(self.oriented, self.expansion.column(right, s_right)[t_right])
        return self._decode(skeleton.r, skeleton.s, skeleton.pairs, piece)

    def tensor(self, f: UnMorphism, g: UnMorphism) -> UnMorphism:
        """f placed to the left of g."""
        terms: Dict[UnDiagram, Scalar] = {}
        for left, a in f.terms.items():
            for right, b in g.terms.items():
                for diagram, c in self.tensor_diagrams(left, right).items():
                    terms[diagram] = terms.get(diagram, ZERO) + a * b * c
        return UnMorphism(f.r + g.r, f.s + g.s, terms)

    def tensor_all(self, pieces: Sequence[UnMorphism]) -> UnMorphism:
        result = self.identity(0)
        for piece in pieces:
            result = self.tensor(result, piece)
        return result

    # derived morphisms

    def bubble(self, a: AlgElem) -> Scalar:
        """cap o (token(a) (x) id) o cup."""
        cap, cup = self.generator("cap"), self.generator("cup")
        loop = self.compose(cap, self.compose(self.tensor(self.token(a), self.identity(1)), cup))
        return loop.scalar_value()

    def nested_cups(self, n: int) -> UnMorphism:
        one = self.algebra.one()
        return self.from_pairs(0, 2 * n, [((i, 2 * n + 1 - i), one) for i in range(1, n + 1)])

    def nested_caps(self, n: int) -> UnMorphism:
        one = self.algebra.one()
        return self.from_pairs(2 * n, 0, [((i, 2 * n + 1 - i), one) for i in range(1, n + 1)])

    def categorical_trace(self, f: UnMorphism) -> Scalar:
        """
        Closes an endomorphism of go^n off to the right.

        Raises:
            TypeMismatchError: If f is not an endomorphism.
        """
        if f.r != f.s:
            raise TypeMismatchError(f"trace needs an endomorphism, got {f.r}->{f.s}")
        closed = self.tensor(f, self.identity(f.r))
        value = self.compose(self.nested_caps(f.r), self.compose(closed, self.nested_cups(f.r))).scalar_value()
        logger.debug(f"Trace of {f} is {value}")
        return value

    def apply_xi(self, f: UnMorphism) -> UnMorphism:
        """Replaces every token a by a^inv; coefficients are kept."""
        algebra = self.algebra
        terms: Dict[UnDiagram, Scalar] = {}
        for diagram, value in f.terms.items():
            images = [list(algebra.inv(algebra.basis_element(t)).coeffs.items()) for t in diagram.tokens]
            for picked in itertools.product(*images):
                c = value
                for _, x in picked:
                    c = c * x
                image = diagram.with_tokens([index for index, _ in picked])
                terms[image] = terms.get(image, ZERO) + c
        return UnMorphism(f.r, f.s, terms)

    def orientation_expand(self, f: UnMorphism) -> ShiftedMatrixMorphism:
        """D(f) as a matrix over all orientations of source and target."""
        result = self.expansion.empty_matrix(f.r, f.s)
        for diagram, value in f.sorted_terms():
            self.expansion.expand_diagram(diagram, value, result)
        return result

    def faithfulness(self, r: int, s: int) -> dict:
        return faithfulness_report(self.expansion, r, s)
