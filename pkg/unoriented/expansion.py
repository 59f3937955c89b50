"""
The orientation expansion D : Brauer^sigma(A, inv; d) -> Add(OB(A; d/2)_pi).

D sends the generating object to up (+) Pi^sigma down. On generators:

    cross    -> the four oriented crossings, (-1)^sigma on the down-down one
    cap      -> leftward cap + rightward cap
    cup      -> leftward cup + (-1)^sigma rightward cup
    token(a) -> up token a + (-1)^{sigma |a|} down token a^inv

Basis diagrams are expanded layer by layer, one source orientation at a time.
"""
import logging
from typing import Dict, List, Tuple

from oriented.category import OrientedCategory
from oriented.diagram import DOWN, UP
from superalg.algebra import SuperAlgebra
from superalg.scalars import Scalar, rank, sign
from unoriented.diagram import Layer, UnDiagram, enumerate_basis_un, perfect_matchings
from unoriented.shifted import ShiftedMatrixMorphism, ShiftedOrMorphism, words

logger = logging.getLogger(__name__)

Column = Dict[str, ShiftedOrMorphism]


class OrientationExpansion:
    """
    Evaluates D on unoriented basis diagrams.

    Args:
        algebra (SuperAlgebra): Involutive Frobenius token algebra.
        sigma (int): Parity of cups and caps.
        oriented (OrientedCategory): The target OB(A; d/2).
    """

    def __init__(self, algebra: SuperAlgebra, sigma: int, oriented: OrientedCategory):
        self.algebra = algebra
        self.sigma = sigma
        self.oriented = oriented
        self._layer_cache: Dict[Tuple[Layer, str], List[Tuple[str, ShiftedOrMorphism]]] = {}
        self._column_cache: Dict[Tuple[UnDiagram, str], Column] = {}

    def shift(self, word: str) -> int:
        return (self.sigma * word.count(DOWN)) % 2

    def identity(self, word: str) -> ShiftedOrMorphism:
        shift = self.shift(word)
        return ShiftedOrMorphism(self.oriented.identity(word), shift, shift)

    def _token_piece(self, letter: str, token: int) -> ShiftedOrMorphism:
        a = self.algebra.basis_element(token)
        if letter == UP:
            return ShiftedOrMorphism(self.oriented.token(a, UP), 0, 0)
        image = self.oriented.token(self.algebra.inv(a), DOWN).scale(sign(self.sigma * self.algebra.parities[token]))
        return ShiftedOrMorphism(image, self.sigma, self.sigma)

    def _surround(self, left: str, piece: ShiftedOrMorphism, right: str) -> ShiftedOrMorphism:
        category = self.oriented
        return self.identity(left).tensor(category, piece).tensor(category, self.identity(right))

    def layer_components(self, layer: Layer, word: str) -> List[Tuple[str, ShiftedOrMorphism]]:
        """Nonzero entries of D(layer) in the column of `word`, as (target word, entry)."""
        key = (layer, word)
        if key in self._layer_cache:
            return self._layer_cache[key]
        category, sigma = self.oriented, self.sigma
        result: List[Tuple[str, ShiftedOrMorphism]] = []
        if layer.kind == "tokens":
            tokens = dict(layer.tokens)
            value = ShiftedOrMorphism(category.identity(""), 0, 0)
            for position, letter in enumerate(word):
                piece = self._token_piece(letter, tokens[position]) if position in tokens else self.identity(letter)
                value = value.tensor(category, piece)
            result.append((word, value))
        else:
            k = layer.left
            left, right = word[:k], word[k + (2 if layer.kind in ("cross", "cap") else 0):]
            if layer.kind == "cross":
                pair = word[k:k + 2]
                base = category.crossing(pair)
                if pair == DOWN + DOWN:
                    base = base.scale(sign(sigma))
                shift = self.shift(pair)
                piece = ShiftedOrMorphism(base, shift, shift)
                result.append((left + pair[::-1] + right, self._surround(left, piece, right)))
            elif layer.kind == "cap":
                pair = word[k:k + 2]
                if pair in ("du", "ud"):
                    base = category.generator("capL" if pair == "du" else "capR")
                    piece = ShiftedOrMorphism(base, sigma, 0)
                    result.append((left + right, self._surround(left, piece, right)))
            elif layer.kind == "cup":
                for pair, kind, coefficient in (("ud", "cupL", 1), ("du", "cupR", sign(sigma))):
                    piece = ShiftedOrMorphism(category.generator(kind).scale(coefficient), 0, sigma)
                    result.append((left + pair + right, self._surround(left, piece, right)))
        result = [(w, value) for w, value in result if value]
        self._layer_cache[key] = result
        return result

    def column(self, diagram: UnDiagram, source: str) -> Column:
        """All entries D(diagram)_{(T, source)}, keyed by the target word T."""
        key = (diagram, source)
        if key in self._column_cache:
            return self._column_cache[key]
        state: Column = {source: self.identity(source)}
        for layer in diagram.layers():
            nxt: Column = {}
            for word, value in state.items():
                for out, component in self.layer_components(layer, word):
                    composed = component.compose(self.oriented, value)
                    if out in nxt:
                        composed = nxt[out] + composed
                    if composed:
                        nxt[out] = composed
                    else:
                        nxt.pop(out, None)
            state = nxt
        self._column_cache[key] = state
        return state

    def expand_diagram(self, diagram: UnDiagram, coefficient: Scalar, into: ShiftedMatrixMorphism) -> None:
        for source in words(diagram.r):
            for target, value in self.column(diagram, source).items():
                into.add_entry(target, source, value.scale(coefficient))

    def empty_matrix(self, r: int, s: int) -> ShiftedMatrixMorphism:
        return ShiftedMatrixMorphism([(w, self.shift(w)) for w in words(r)], [(w, self.shift(w)) for w in words(s)])


def faithfulness_report(expansion: OrientationExpansion, r: int, s: int) -> dict:
    """
    Rank of the expansions of the unoriented basis of Hom(r, s).

    D keeps the underlying matching, so independence is checked one matching at a time.
    """
    algebra = expansion.algebra
    total_rank = 0
    count = 0
    if (r + s) % 2 == 0:
        for matching in perfect_matchings(list(range(1, r + s + 1))):
            pairs = tuple(sorted(matching))
            diagrams = [d for d in enumerate_basis_un(algebra, r, s) if d.pairs == pairs]
            coordinates: Dict[Tuple, int] = {}
            vectors = []
            for diagram in diagrams:
                vector: Dict[int, Scalar] = {}
                for source in words(r):
                    for target, value in expansion.column(diagram, source).items():
                        for oriented_diagram, c in value.base.terms.items():
                            slot = coordinates.setdefault((target, source, oriented_diagram), len(coordinates))
                            vector[slot] = c
                vectors.append(vector)
            total_rank += rank(vectors, len(coordinates))
            count += len(diagrams)
    report = {"r": r, "s": s, "diagrams": count, "rank": total_rank, "independent": total_rank == count}
    logger.info(f"Orientation expansion faithfulness {report}")
    return report
