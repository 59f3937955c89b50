"""
Normal-form arithmetic in the oriented Brauer supercategory OB(A; d).

Composition traces strands through the middle object, multiplies the tokens met
along each strand, evaluates closed loops to d * str_A, and tracks the super
interchange sign by counting inversions among odd tokens between the stacked
height order and the height order of the result.
"""
import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from helpers.errors import ConfigurationError, TypeMismatchError, UnknownNameError
from oriented.diagram import DOWN, UP, OrDiagram, OrMorphism, Strand, dual_word, enumerate_basis, validate_word
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, scalar, sign

logger = logging.getLogger(__name__)

# A traced composite strand: (start, end, global token indices in orientation order).
Traced = Tuple[int, int, List[int]]


def odd_inversions(order: Sequence[int], odd: Sequence[bool]) -> int:
    """Number of pairs of odd entries appearing in decreasing order."""
    count = 0
    seen: List[int] = []
    for value in order:
        if odd[value]:
            count += sum(1 for earlier in seen if earlier > value)
            seen.append(value)
    return count


class OrientedCategory:
    """
    OB(A; d) for a Frobenius superalgebra A and a specialization d.

    Args:
        algebra (SuperAlgebra): Token algebra; must carry a Frobenius form.
        d (Scalar): Value of a counterclockwise bubble with token 1, divided by str_A(1).
    """

    def __init__(self, algebra: SuperAlgebra, d=1):
        if not algebra.is_frobenius:
            raise ConfigurationError(f"{algebra.name} has no Frobenius form; OB needs one")
        self.algebra = algebra
        self.d = scalar(d)

    def __repr__(self) -> str:
        return f"OrientedCategory({self.algebra.name}, d={self.d})"

    # building morphisms

    def from_strands(self, source: str, target: str, strands: Sequence[Tuple[int, int, AlgElem]], coefficient=ONE) -> OrMorphism:
        """Multilinear expansion of a matching whose strands carry arbitrary algebra elements."""
        terms: Dict[OrDiagram, Scalar] = {}
        choices = [list(token.coeffs.items()) for _, _, token in strands]
        for picked in itertools.product(*choices):
            value = coefficient
            chosen = []
            for (start, end, _), (index, c) in zip(strands, picked):
                value = value * c
                chosen.append(Strand(start, end, index))
            diagram = OrDiagram.build(source, target, chosen)
            terms[diagram] = terms.get(diagram, ZERO) + value
        return OrMorphism(source, target, terms)

    def identity(self, word: str) -> OrMorphism:
        validate_word(word)
        n = len(word)
        one = self.algebra.one()
        strands = []
        for i, letter in enumerate(word, start=1):
            strands.append((i, n + i, one) if letter == UP else (n + i, i, one))
        return self.from_strands(word, word, strands)

    def crossing(self, word: str) -> OrMorphism:
        """The crossing with bottom word `word` (two letters); its top word is reversed."""
        validate_word(word)
        if len(word) != 2:
            raise TypeMismatchError("a crossing has two strands")
        one = self.algebra.one()
        strands = []
        for bottom, top in ((1, 4), (2, 3)):
            letter = word[bottom - 1]
            strands.append((bottom, top, one) if letter == UP else (top, bottom, one))
        return self.from_strands(word, word[::-1], strands)

    def token(self, a: AlgElem, orientation: str = UP) -> OrMorphism:
        if orientation == UP:
            return self.from_strands(UP, UP, [(1, 2, a)])
        return self.from_strands(DOWN, DOWN, [(2, 1, a)])

    def generator(self, kind: str, argument=None) -> OrMorphism:
        """
        One of the generating morphisms, already in normal form.

        Args:
            kind (str): cross, capL, capR, cupL, cupR, token, dtoken or id.
            argument: The AlgElem for token/dtoken, the word for id.

        Returns:
            OrMorphism: The generator.
        """
        one = self.algebra.one()
        if kind == "cross":
            return self.crossing(UP + UP)
        if kind == "capL":
            return self.from_strands("du", "", [(2, 1, one)])
        if kind == "capR":
            return self.from_strands("ud", "", [(1, 2, one)])
        if kind == "cupL":
            return self.from_strands("", "ud", [(2, 1, one)])
        if kind == "cupR":
            return self.from_strands("", "du", [(1, 2, one)])
        if kind == "token":
            return self.token(argument, UP)
        if kind == "dtoken":
            return self.token(argument, DOWN)
        if kind == "id":
            return self.identity(argument or "")
        raise UnknownNameError(f"unknown oriented generator {kind!r}")

    # composition

    def _trace(self, f: OrDiagram, g: OrDiagram) -> Tuple[List[Traced], List[List[int]], List[Strand]]:
        nx, ny = len(g.source), len(g.target)
        f_order, g_order = f.canonical_strands(), g.canonical_strands()
        nf = len(f_order)
        f_starts = {s.start: (i, s) for i, s in enumerate(f_order)}
        g_starts = {s.start: (nf + i, s) for i, s in enumerate(g_order)}
        visited = set()

        def step(side: str, start: int):
            if side == "g":
                index, strand = g_starts[start]
                visited.add(index)
                if strand.end <= nx:
                    return index, ("bottom", strand.end)
                return index, ("f", strand.end - nx)
            index, strand = f_starts[start]
            visited.add(index)
            if strand.end > ny:
                return index, ("top", nx + strand.end - ny)
            return index, ("g", nx + strand.end)

        composite: List[Traced] = []
        entries = [("g", i + 1) for i, x in enumerate(g.source) if x == UP]
        entries += [("f", ny + j + 1) for j, y in enumerate(f.target) if y == DOWN]
        for side, start in entries:
            begin = start if side == "g" else nx + start - ny
            tokens = []
            while True:
                index, (where, point) = step(side, start)
                tokens.append(index)
                if where in ("bottom", "top"):
                    composite.append((begin, point, tokens))
                    break
                side, start = where, point
        loops: List[List[int]] = []
        candidates = [("f", s.start, i) for i, s in enumerate(f_order)] + [("g", s.start, nf + i) for i, s in enumerate(g_order)]
        for side, start, index in candidates:
            if index in visited:
                continue
            origin = (side, start)
            tokens = []
            while True:
                token_index, (where, point) = step(side, start)
                tokens.append(token_index)
                side, start = where, point
                if (side, start) == origin:
                    break
            loops.append(tokens)
        return composite, loops, f_order + g_order

    def _merge(self, source: str, target: str, composite: List[Traced], loops: List[List[int]], ordered: List[Strand]) -> Dict[OrDiagram, Scalar]:
        algebra = self.algebra
        odd = [bool(algebra.parities[s.token]) for s in ordered]
        factor = ONE
        loop_blocks: List[int] = []
        for tokens in loops:
            product = algebra.basis_element(ordered[tokens[0]].token)
            for index in tokens[1:]:
                product = algebra.mul(algebra.basis_element(ordered[index].token), product)
            value = self.d * algebra.supertrace(product)
            if not value:
                return {}
            factor = factor * value
            loop_blocks.extend(reversed(tokens))
        skeleton = OrDiagram.build(source, target, [Strand(a, b, 0) for a, b, _ in composite])
        slots = {(s.start, s.end): skeleton.slot(s) for s in skeleton.strands}
        composite = sorted(composite, key=lambda item: slots[(item[0], item[1])])
        order: List[int] = []
        products: List[AlgElem] = []
        for _, _, tokens in composite:
            order.extend(reversed(tokens))
            product = algebra.basis_element(ordered[tokens[0]].token)
            for index in tokens[1:]:
                product = algebra.mul(algebra.basis_element(ordered[index].token), product)
            if not product:
                return {}
            products.append(product)
        order.extend(loop_blocks)
        factor = factor * sign(odd_inversions(order, odd))
        result: Dict[OrDiagram, Scalar] = {}
        for picked in itertools.product(*(list(p.coeffs.items()) for p in products)):
            value = factor
            strands = []
            for (start, end, _), (token, c) in zip(composite, picked):
                value = value * c
                strands.append(Strand(start, end, token))
            diagram = OrDiagram.build(source, target, strands)
            total = result.get(diagram, ZERO) + value
            if total:
                result[diagram] = total
            else:
                result.pop(diagram, None)
        return result

    def compose_diagrams(self, f: OrDiagram, g: OrDiagram) -> Dict[OrDiagram, Scalar]:
        composite, loops, ordered = self._trace(f, g)
        return self._merge(g.source, f.target, composite, loops, ordered)

    def compose(self, f: OrMorphism, g: OrMorphism) -> OrMorphism:
        """
        f after g (f stacked on top of g).

        Raises:
            TypeMismatchError: If g's target is not f's source.
        """
        if f.source != g.target:
            raise TypeMismatchError(f"cannot compose: top source {f.source!r} differs from bottom target {g.target!r}")
        terms: Dict[OrDiagram, Scalar] = {}
        for top, a in f.terms.items():
            for bottom, b in g.terms.items():
                for diagram, c in self.compose_diagrams(top, bottom).items():
                    terms[diagram] = terms.get(diagram, ZERO) + a * b * c
        return OrMorphism(g.source, f.target, terms)

    def tensor_diagrams(self, f: OrDiagram, g: OrDiagram) -> Tuple[OrDiagram, int]:
        x1, x2, y1 = len(f.source), len(g.source), len(f.target)

        def shift_f(p: int) -> int:
            return p if p <= x1 else p + x2

        def shift_g(p: int) -> int:
            return p + x1 if p <= x2 else p + x1 + y1

        f_order, g_order = f.canonical_strands(), g.canonical_strands()
        ordered = [Strand(shift_f(s.start), shift_f(s.end), s.token) for s in f_order]
        ordered += [Strand(shift_g(s.start), shift_g(s.end), s.token) for s in g_order]
        diagram = OrDiagram.build(f.source + g.source, f.target + g.target, ordered)
        position = {s: i for i, s in enumerate(ordered)}
        order = [position[s] for s in diagram.canonical_strands()]
        odd = [bool(self.algebra.parities[s.token]) for s in ordered]
        return diagram, sign(odd_inversions(order, odd))

    def tensor(self, f: OrMorphism, g: OrMorphism) -> OrMorphism:
        """f placed to the left of g."""
        terms: Dict[OrDiagram, Scalar] = {}
        for left, a in f.terms.items():
            for right, b in g.terms.items():
                diagram, s = self.tensor_diagrams(left, right)
                terms[diagram] = terms.get(diagram, ZERO) + a * b * s
        return OrMorphism(f.source + g.source, f.target + g.target, terms)

    def tensor_all(self, pieces: Sequence[OrMorphism]) -> OrMorphism:
        result = self.identity("")
        for piece in pieces:
            result = self.tensor(result, piece)
        return result

    # derived morphisms

    def nested_cups(self, word: str) -> OrMorphism:
        """The unit 1 -> word + word* closing strands off to the right."""
        n = len(word)
        one = self.algebra.one()
        strands = []
        for i, letter in enumerate(word, start=1):
            partner = 2 * n + 1 - i
            strands.append((partner, i, one) if letter == UP else (i, partner, one))
        return self.from_strands("", word + dual_word(word), strands)

    def nested_caps(self, word: str) -> OrMorphism:
        """The counit word + word* -> 1."""
        n = len(word)
        one = self.algebra.one()
        strands = []
        for i, letter in enumerate(word, start=1):
            partner = 2 * n + 1 - i
            strands.append((i, partner, one) if letter == UP else (partner, i, one))
        return self.from_strands(word + dual_word(word), "", strands)

    def bubble(self, a: AlgElem, clockwise: bool = False) -> Scalar:
        """Counterclockwise (or clockwise) bubble carrying the token a."""
        if clockwise:
            loop = self.compose(self.generator("capR"), self.compose(self.tensor(self.token(a), self.identity(DOWN)), self.generator("cupL")))
        else:
            loop = self.compose(self.generator("capL"), self.compose(self.tensor(self.identity(DOWN), self.token(a)), self.generator("cupR")))
        return loop.scalar_value()

    def categorical_trace(self, f: OrMorphism) -> Scalar:
        """
        Closes an endomorphism off to the right and returns the resulting scalar.

        Raises:
            TypeMismatchError: If f is not an endomorphism.
        """
        if f.source != f.target:
            raise TypeMismatchError(f"trace needs an endomorphism, got {f.source!r}->{f.target!r}")
        word = f.source
        closed = self.tensor(f, self.identity(dual_word(word)))
        value = self.compose(self.nested_caps(word), self.compose(closed, self.nested_cups(word))).scalar_value()
        logger.debug(f"Trace of {f} is {value}")
        return value

    def basis(self, source: str, target: str) -> List[OrDiagram]:
        return enumerate_basis(self.algebra, source, target)

    def morphism(self, diagram: OrDiagram, coefficient=ONE) -> OrMorphism:
        return OrMorphism(diagram.source, diagram.target, {diagram: scalar(coefficient)})
