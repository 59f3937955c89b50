"""
Unoriented decorated Brauer diagrams and their layer factorization.

Endpoints 1..r are on the bottom and r+1..r+s on the top. A diagram is a perfect
matching of these points with one token per strand. The basis element attached
to a decorated matching is the composite of the layers returned by `layers`:
bottom tokens, crossings sorting the bottom points (through strands, then cap
pairs), caps from the right, cups added on the right, crossings sorting the top
points, top tokens on the left ends of cups.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from helpers.errors import TypeMismatchError
from superalg.algebra import SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, format_scalar

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Layer:
    """
    One horizontal slice of a basis diagram on `width` input strands.

    kind is "tokens" (tokens maps input position -> basis index), or one of
    "cross", "cap", "cup" placed after `left` identity strands.
    """

    kind: str
    width: int
    left: int = 0
    tokens: Tuple[Tuple[int, int], ...] = ()

    @property
    def out_width(self) -> int:
        if self.kind == "cap":
            return self.width - 2
        if self.kind == "cup":
            return self.width + 2
        return self.width


@dataclass(frozen=True)
class UnDiagram:
    r: int
    s: int
    pairs: Tuple[Pair, ...]
    tokens: Tuple[int, ...]

    @classmethod
    def build(cls, r: int, s: int, decorated: Mapping[Pair, int]) -> "UnDiagram":
        items = sorted((tuple(sorted(pair)), token) for pair, token in decorated.items())
        return cls(r, s, tuple(pair for pair, _ in items), tuple(token for _, token in items))

    def token_of(self) -> Dict[Pair, int]:
        return dict(zip(self.pairs, self.tokens))

    def kind(self, pair: Pair) -> str:
        a, b = pair
        if b <= self.r:
            return "cap"
        if a > self.r:
            return "cup"
        return "through"

    def cup_cap_count(self) -> int:
        return sum(1 for pair in self.pairs if self.kind(pair) != "through")

    def parity(self, algebra: SuperAlgebra, sigma: int) -> int:
        return (sigma * self.cup_cap_count() + sum(algebra.parities[t] for t in self.tokens)) % 2

    def with_tokens(self, tokens: Sequence[int]) -> "UnDiagram":
        return UnDiagram(self.r, self.s, self.pairs, tuple(tokens))

    def to_dict(self, algebra: SuperAlgebra) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "match": [list(pair) for pair in self.pairs],
            "tokens": {f"{a}-{b}": algebra.names[t] for (a, b), t in zip(self.pairs, self.tokens)},
        }

    def reference_words(self) -> Tuple[str, str]:
        """
        Orientation with every token spot pointing up: through strands upward, caps
        entering at the left end, cups leaving at the left end.
        """
        bottom = ["u"] * self.r
        top = ["u"] * self.s
        for a, b in self.pairs:
            kind = self.kind((a, b))
            if kind == "cap":
                bottom[a - 1], bottom[b - 1] = "d", "u"
            elif kind == "cup":
                top[a - self.r - 1], top[b - self.r - 1] = "u", "d"
        return "".join(bottom), "".join(top)

    def layers(self) -> List[Layer]:
        r = self.r
        token_of = self.token_of()
        through = sorted((a, b) for a, b in self.pairs if self.kind((a, b)) == "through")
        caps = sorted(pair for pair in self.pairs if self.kind(pair) == "cap")
        cups = sorted(pair for pair in self.pairs if self.kind(pair) == "cup")

        result: List[Layer] = []
        bottom_tokens = {a - 1: token_of[(a, b)] for a, b in through}
        bottom_tokens.update({b - 1: token_of[(a, b)] for a, b in caps})
        result.append(Layer("tokens", r, tokens=tuple(sorted(bottom_tokens.items()))))

        desired = [a for a, _ in through] + [p for pair in caps for p in pair]
        rank = {label: i for i, label in enumerate(desired)}
        sequence = list(range(1, r + 1))
        for position in bubble_swaps([rank[label] for label in sequence]):
            result.append(Layer("cross", r, left=position))
        width = r
        k = len(through)
        for c in reversed(range(len(caps))):
            result.append(Layer("cap", width, left=k + 2 * c))
            width -= 2

        top_of = {a: b for a, b in through}
        sequence = [top_of[a] for a, _ in through]
        for pair in cups:
            result.append(Layer("cup", width, left=width))
            width += 2
            sequence.extend(pair)
        for position in bubble_swaps(sequence):
            result.append(Layer("cross", width, left=position))
        top_tokens = {a - r - 1: token_of[(a, b)] for a, b in cups}
        result.append(Layer("tokens", width, tokens=tuple(sorted(top_tokens.items()))))
        return result


def bubble_swaps(values: List[int]) -> List[int]:
    """Adjacent transpositions (by left position) that sort `values`, applied bottom to top."""
    values = list(values)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(values) - 1):
            if values[i] > values[i + 1]:
                values[i], values[i + 1] = values[i + 1], values[i]
                swaps.append(i)
                changed = True
    return swaps


class UnMorphism:
    """A formal combination of UnDiagrams with common (r, s)."""

    __slots__ = ("r", "s", "terms")

    def __init__(self, r: int, s: int, terms: Optional[Mapping[UnDiagram, Scalar]] = None):
        self.r = r
        self.s = s
        self.terms: Dict[UnDiagram, Scalar] = {d: v for d, v in (terms or {}).items() if v}

    def __add__(self, other: "UnMorphism") -> "UnMorphism":
        if (self.r, self.s) != (other.r, other.s):
            raise TypeMismatchError(f"cannot add morphisms {self.r}->{self.s} and {other.r}->{other.s}")
        terms = dict(self.terms)
        for diagram, value in other.terms.items():
            terms[diagram] = terms.get(diagram, ZERO) + value
        return UnMorphism(self.r, self.s, terms)

    def __neg__(self) -> "UnMorphism":
        return self.scale(-ONE)

    def __sub__(self, other: "UnMorphism") -> "UnMorphism":
        return self + (-other)

    def scale(self, factor) -> "UnMorphism":
        return UnMorphism(self.r, self.s, {d: v * factor for d, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnMorphism):
            return NotImplemented
        return (self.r, self.s, self.terms) == (other.r, other.s, other.terms)

    def __hash__(self) -> int:
        return hash((self.r, self.s, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"UnMorphism({self.r}->{self.s}, {len(self.terms)} terms)"

    def sorted_terms(self) -> List[Tuple[UnDiagram, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: (item[0].pairs, item[0].tokens))

    def scalar_value(self) -> Scalar:
        if self.r or self.s:
            raise TypeMismatchError("only morphisms of the unit object have a scalar value")
        return self.terms.get(UnDiagram(0, 0, (), ()), ZERO)

    def parity(self, algebra: SuperAlgebra, sigma: int) -> Optional[int]:
        parities = {d.parity(algebra, sigma) for d in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def to_json(self, algebra: SuperAlgebra) -> List[dict]:
        return [{"coefficient": format_scalar(v), "diagram": d.to_dict(algebra)} for d, v in self.sorted_terms()]


def perfect_matchings(points: Sequence[int]) -> Iterator[List[Pair]]:
    """Pairs the first point with each other point in turn, recursively."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for matching in perfect_matchings(remaining):
            yield [(first, partner)] + matching


def enumerate_basis_un(algebra: SuperAlgebra, r: int, s: int) -> List[UnDiagram]:
    """
    All decorated perfect matchings of r + s points.

    Returns:
        List[UnDiagram]: dim(A)^((r+s)/2) * (r+s-1)!! diagrams, none when r + s is odd.
    """
    if (r + s) % 2:
        return []
    diagrams = []
    for matching in perfect_matchings(list(range(1, r + s + 1))):
        pairs = tuple(sorted(matching))
        for tokens in itertools.product(range(algebra.dim), repeat=len(pairs)):
            diagrams.append(UnDiagram(r, s, pairs, tuple(tokens)))
    logger.debug(f"Enumerated {len(diagrams)} unoriented diagrams {r}->{s}")
    return diagrams


def glue(top: UnDiagram, bottom: UnDiagram) -> Tuple[Tuple[Pair, ...], int]:
    """Matching of top o bottom and the number of closed loops."""
    r, k, s = bottom.r, bottom.s, top.s
    partner: Dict[Tuple[str, int], Tuple[str, int]] = {}
    for a, b in bottom.pairs:
        partner[("g", a)] = ("g", b)
        partner[("g", b)] = ("g", a)
    for a, b in top.pairs:
        partner[("f", a)] = ("f", b)
        partner[("f", b)] = ("f", a)

    def other_side(point: Tuple[str, int]) -> Optional[Tuple[str, int]]:
        side, p = point
        if side == "g" and p > r:
            return "f", p - r
        if side == "f" and p <= k:
            return "g", p + r
        return None

    def outer(point: Tuple[str, int]) -> int:
        side, p = point
        return p if side == "g" else r + p - k

    visited = set()
    pairs = []
    outer_points = [("g", p) for p in range(1, r + 1)] + [("f", k + q) for q in range(1, s + 1)]
    for point in outer_points:
        if point in visited:
            continue
        current = point
        while True:
            visited.add(current)
            nxt = partner[current]
            visited.add(nxt)
            across = other_side(nxt)
            if across is None:
                pairs.append(tuple(sorted((outer(point), outer(nxt)))))
                break
            current = across
    loops = 0
    for point in list(partner):
        if point in visited:
            continue
        loops += 1
        current = point
        while current not in visited:
            visited.add(current)
            nxt = partner[current]
            visited.add(nxt)
            current = other_side(nxt)
    return tuple(sorted(pairs)), loops
