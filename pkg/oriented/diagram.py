"""
Oriented decorated matchings and formal combinations of them.

Objects are words over {u, d}. Endpoints are numbered 1..r along the bottom (the
source) and r+1..r+s along the top (the target). A strand runs from a start
(bottom u or top d) to an end (bottom d or top u) and carries exactly one token,
an index into the algebra basis, sitting at its canonical spot: near the bottom
endpoint of a through strand, near the right endpoint of a cap, near the left
endpoint of a cup.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from helpers.errors import TypeMismatchError
from superalg.algebra import SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, format_scalar

logger = logging.getLogger(__name__)

UP, DOWN = "u", "d"


def validate_word(word: str) -> str:
    if any(letter not in (UP, DOWN) for letter in word):
        raise TypeMismatchError(f"object words use only 'u' and 'd', got {word!r}")
    return word


def dual_word(word: str) -> str:
    """X* : reversed, with every orientation flipped."""
    return "".join(DOWN if letter == UP else UP for letter in reversed(word))


def starts(source: str, target: str) -> List[int]:
    r = len(source)
    return [i + 1 for i, x in enumerate(source) if x == UP] + [r + j + 1 for j, y in enumerate(target) if y == DOWN]


def ends(source: str, target: str) -> List[int]:
    r = len(source)
    return [i + 1 for i, x in enumerate(source) if x == DOWN] + [r + j + 1 for j, y in enumerate(target) if y == UP]


@dataclass(frozen=True, order=True)
class Strand:
    start: int
    end: int
    token: int


@dataclass(frozen=True)
class OrDiagram:
    """One element of the basis of Hom(source, target): a matching with one token per strand."""

    source: str
    target: str
    strands: Tuple[Strand, ...]

    @classmethod
    def build(cls, source: str, target: str, strands: Sequence[Strand]) -> "OrDiagram":
        return cls(source, target, tuple(sorted(strands)))

    def slot(self, strand: Strand) -> Tuple[int, int]:
        """Height key of a strand's token; smaller is higher."""
        r = len(self.source)
        bottom = [p for p in (strand.start, strand.end) if p <= r]
        if not bottom:
            return 0, min(strand.start, strand.end)
        return 1, max(bottom)

    def canonical_strands(self) -> List[Strand]:
        """Strands in token height order, highest first."""
        return sorted(self.strands, key=self.slot)

    def parity(self, algebra: SuperAlgebra) -> int:
        return sum(algebra.parities[strand.token] for strand in self.strands) % 2

    def to_dict(self, algebra: SuperAlgebra) -> dict:
        return {
            "src": self.source,
            "tgt": self.target,
            "match": [[s.start, s.end] for s in self.strands],
            "tokens": {f"{s.start}-{s.end}": algebra.names[s.token] for s in self.strands},
        }


class OrMorphism:
    """
    A formal combination of OrDiagrams sharing source and target.

    Instances are treated as immutable; arithmetic returns new objects.
    """

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: str, target: str, terms: Optional[Mapping[OrDiagram, Scalar]] = None):
        self.source = validate_word(source)
        self.target = validate_word(target)
        self.terms: Dict[OrDiagram, Scalar] = {}
        for diagram, value in (terms or {}).items():
            if value:
                self.terms[diagram] = value

    def __add__(self, other: "OrMorphism") -> "OrMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise TypeMismatchError(f"cannot add {self.source}->{self.target} and {other.source}->{other.target}")
        terms = dict(self.terms)
        for diagram, value in other.terms.items():
            terms[diagram] = terms.get(diagram, ZERO) + value
        return OrMorphism(self.source, self.target, terms)

    def __neg__(self) -> "OrMorphism":
        return self.scale(-ONE)

    def __sub__(self, other: "OrMorphism") -> "OrMorphism":
        return self + (-other)

    def scale(self, factor) -> "OrMorphism":
        return OrMorphism(self.source, self.target, {d: v * factor for d, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrMorphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    def __hash__(self) -> int:
        return hash((self.source, self.target, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"OrMorphism({self.source!r}->{self.target!r}, {len(self.terms)} terms)"

    def sorted_terms(self) -> List[Tuple[OrDiagram, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0].strands)

    def scalar_value(self) -> Scalar:
        """Coefficient of the empty diagram of an endomorphism of the unit object."""
        if self.source or self.target:
            raise TypeMismatchError("only morphisms of the unit object have a scalar value")
        return self.terms.get(OrDiagram("", "", ()), ZERO)

    def parity(self, algebra: SuperAlgebra) -> Optional[int]:
        parities = {diagram.parity(algebra) for diagram in self.terms}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def to_json(self, algebra: SuperAlgebra) -> List[dict]:
        return [{"coefficient": format_scalar(value), "diagram": diagram.to_dict(algebra)} for diagram, value in self.sorted_terms()]


def matchings(source: str, target: str) -> Iterator[Dict[int, int]]:
    """Every bijection from starts to ends; nothing when the counts differ."""
    start_points, end_points = starts(source, target), ends(source, target)
    if len(start_points) != len(end_points):
        return
    for permutation in itertools.permutations(end_points):
        yield dict(zip(start_points, permutation))


def enumerate_basis(algebra: SuperAlgebra, source: str, target: str) -> List[OrDiagram]:
    """
    All decorated matchings of Hom(source, target).

    Args:
        algebra (SuperAlgebra): Supplies the token labels.
        source (str): Bottom word.
        target (str): Top word.

    Returns:
        List[OrDiagram]: ((v+w)/2)! * dim(A)^((v+w)/2) diagrams, or none when unbalanced.
    """
    validate_word(source)
    validate_word(target)
    diagrams = []
    for matching in matchings(source, target):
        pairs = sorted(matching.items())
        for tokens in itertools.product(range(algebra.dim), repeat=len(pairs)):
            diagrams.append(OrDiagram.build(source, target, [Strand(a, b, t) for (a, b), t in zip(pairs, tokens)]))
    logger.debug(f"Enumerated {len(diagrams)} oriented diagrams {source!r}->{target!r}")
    return diagrams
