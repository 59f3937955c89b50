"""
Pi-envelope arithmetic over OB(A; d).

A morphism Pi^r X -> Pi^s Y is stored as (f, r, s). Vertical composition simply
composes the underlying morphisms when the shifts agree; horizontal composition
follows

    f_r^s (x) g_u^v = (-1)^{r(|g|+u+v) + |f| v} (f (x) g)_{r+u}^{s+v}.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from helpers.errors import TypeMismatchError
from oriented.category import OrientedCategory
from oriented.diagram import OrMorphism
from superalg.scalars import sign

logger = logging.getLogger(__name__)


def homogeneous_parts(category: OrientedCategory, f: OrMorphism) -> Dict[int, OrMorphism]:
    parts: Dict[int, Dict] = {0: {}, 1: {}}
    for diagram, value in f.terms.items():
        parts[diagram.parity(category.algebra)][diagram] = value
    return {p: OrMorphism(f.source, f.target, terms) for p, terms in parts.items() if terms}


@dataclass(frozen=True)
class ShiftedOrMorphism:
    """An oriented morphism between parity-shifted objects Pi^src_shift X -> Pi^tgt_shift Y."""

    base: OrMorphism
    src_shift: int
    tgt_shift: int

    @property
    def source(self) -> str:
        return self.base.source

    @property
    def target(self) -> str:
        return self.base.target

    def __bool__(self) -> bool:
        return bool(self.base)

    def __add__(self, other: "ShiftedOrMorphism") -> "ShiftedOrMorphism":
        if (self.src_shift, self.tgt_shift) != (other.src_shift, other.tgt_shift):
            raise TypeMismatchError("cannot add morphisms between differently shifted objects")
        return ShiftedOrMorphism(self.base + other.base, self.src_shift, self.tgt_shift)

    def scale(self, factor) -> "ShiftedOrMorphism":
        return ShiftedOrMorphism(self.base.scale(factor), self.src_shift, self.tgt_shift)

    def parity(self, category: OrientedCategory) -> Optional[int]:
        base = self.base.parity(category.algebra)
        return None if base is None else (base + self.src_shift + self.tgt_shift) % 2

    def compose(self, category: OrientedCategory, other: "ShiftedOrMorphism") -> "ShiftedOrMorphism":
        """self after other: f_s^u o g_r^s = (f o g)_r^u."""
        if self.src_shift != other.tgt_shift:
            raise TypeMismatchError("parity shifts do not match at the interface")
        return ShiftedOrMorphism(category.compose(self.base, other.base), other.src_shift, self.tgt_shift)

    def tensor(self, category: OrientedCategory, other: "ShiftedOrMorphism") -> "ShiftedOrMorphism":
        r, s, u, v = self.src_shift, self.tgt_shift, other.src_shift, other.tgt_shift
        total = OrMorphism(self.source + other.source, self.target + other.target)
        for f_parity, f in homogeneous_parts(category, self.base).items():
            for g_parity, g in homogeneous_parts(category, other.base).items():
                s_sign = sign(r * (g_parity + u + v) + f_parity * v)
                total = total + category.tensor(f, g).scale(s_sign)
        return ShiftedOrMorphism(total, (r + u) % 2, (s + v) % 2)

    def pi_shift(self, category: OrientedCategory) -> "ShiftedOrMorphism":
        """Pi f : Pi X -> Pi Y acting as (-1)^{|f|} f."""
        total = OrMorphism(self.source, self.target)
        for parity, part in homogeneous_parts(category, self.base).items():
            total = total + part.scale(sign(parity))
        return ShiftedOrMorphism(total, (self.src_shift + 1) % 2, (self.tgt_shift + 1) % 2)

    def to_dict(self, category: OrientedCategory) -> dict:
        return {"src_shift": self.src_shift, "tgt_shift": self.tgt_shift, "terms": self.base.to_json(category.algebra)}


def words(length: int) -> List[str]:
    """All orientation words of a given length, u before d."""
    result = [""]
    for _ in range(length):
        result = [w + letter for w in result for letter in "ud"]
    return result


@dataclass
class ShiftedMatrixMorphism:
    """
    A morphism of Add(OB_pi): a sparse matrix of ShiftedOrMorphisms.

    Rows are labelled by (target word, shift), columns by (source word, shift);
    entries are keyed by (target word, source word).
    """

    source: List[Tuple[str, int]]
    target: List[Tuple[str, int]]
    entries: Dict[Tuple[str, str], ShiftedOrMorphism] = field(default_factory=dict)

    def add_entry(self, target: str, source: str, value: ShiftedOrMorphism) -> None:
        key = (target, source)
        combined = self.entries[key] + value if key in self.entries else value
        if combined:
            self.entries[key] = combined
        else:
            self.entries.pop(key, None)

    def entry(self, target: str, source: str) -> Optional[ShiftedOrMorphism]:
        return self.entries.get((target, source))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftedMatrixMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.entries == other.entries

    def compose(self, category: OrientedCategory, other: "ShiftedMatrixMorphism") -> "ShiftedMatrixMorphism":
        """Matrix product self . other."""
        result = ShiftedMatrixMorphism(other.source, self.target)
        by_source: Dict[str, List[Tuple[str, ShiftedOrMorphism]]] = {}
        for (t, s), value in self.entries.items():
            by_source.setdefault(s, []).append((t, value))
        for (middle, s), right in other.entries.items():
            for t, left in by_source.get(middle, ()):
                result.add_entry(t, s, left.compose(category, right))
        return result

    def tensor(self, category: OrientedCategory, other: "ShiftedMatrixMorphism") -> "ShiftedMatrixMorphism":
        source = [(a + b, (p + q) % 2) for a, p in self.source for b, q in other.source]
        target = [(a + b, (p + q) % 2) for a, p in self.target for b, q in other.target]
        result = ShiftedMatrixMorphism(source, target)
        for (t1, s1), left in self.entries.items():
            for (t2, s2), right in other.entries.items():
                result.add_entry(t1 + t2, s1 + s2, left.tensor(category, right))
        return result

    def nonzero_entries(self) -> Iterable[Tuple[Tuple[str, str], ShiftedOrMorphism]]:
        return sorted(self.entries.items())

    def to_json(self, category: OrientedCategory) -> dict:
        return {
            "schema": 1,
            "source": [[w, p] for w, p in self.source],
            "target": [[w, p] for w, p in self.target],
            "entries": [
                {"target": t, "source": s, **value.to_dict(category)}
                for (t, s), value in self.nonzero_entries()
            ],
        }
