"""
Free supermodules V = A^{m|n} over the ground field and sparse k-linear maps between
their tensor powers.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from helpers.errors import TypeMismatchError
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, format_scalar, sign
from superalg.supermatrix import SuperMatrix, block_parity

logger = logging.getLogger(__name__)

Vector = Dict[int, Scalar]


@dataclass(frozen=True)
class SuperModule:
    """
    A^{m|n} with ground basis e_t b, t-major then in the order of the algebra basis.

    Args:
        algebra (SuperAlgebra): The coefficient superalgebra.
        m (int): Number of even standard vectors.
        n (int): Number of odd standard vectors.
    """

    algebra: SuperAlgebra
    m: int
    n: int

    @property
    def rank(self) -> int:
        return self.m + self.n

    @property
    def dim(self) -> int:
        return self.rank * self.algebra.dim

    def index(self, t: int, b: int) -> int:
        return t * self.algebra.dim + b

    def split(self, index: int) -> Tuple[int, int]:
        return divmod(index, self.algebra.dim)

    @cached_property
    def parities(self) -> Tuple[int, ...]:
        return tuple(
            (block_parity(t, self.m) + self.algebra.parities[b]) % 2
            for t in range(self.rank)
            for b in range(self.algebra.dim)
        )

    def power_parities(self, k: int) -> Tuple[int, ...]:
        """Parities of the lexicographic basis of V^{(x) k}."""
        return tuple(sum(combo) % 2 for combo in itertools.product(self.parities, repeat=k))

    def vector(self, t: int, a: AlgElem) -> Vector:
        """Coordinates of e_t a."""
        return {self.index(t, b): c for b, c in a.coeffs.items()}

    def column_vector(self, vector: Vector) -> SuperMatrix:
        """A ground vector as a (m|n) x (1|0) supermatrix over A."""
        entries: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for index, c in vector.items():
            t, b = self.split(index)
            entries.setdefault((t, 0), {})[b] = c
        return SuperMatrix(self.algebra, (self.m, self.n), (1, 0), {k: AlgElem(self.algebra, v) for k, v in entries.items()})

    def from_column(self, column: SuperMatrix) -> Vector:
        vector: Vector = {}
        for (t, _), value in column.entries.items():
            for b, c in value.coeffs.items():
                vector[self.index(t, b)] = c
        return vector


class LinearMap:
    """
    A k-linear map between Z2-graded spaces with given basis parities, stored by columns.

    Args:
        source (Sequence[int]): Parities of the source basis.
        target (Sequence[int]): Parities of the target basis.
        columns (Dict[int, Vector]): Image of each source basis vector; zero columns omitted.
    """

    __slots__ = ("source", "target", "columns")

    def __init__(self, source: Sequence[int], target: Sequence[int], columns: Optional[Dict[int, Vector]] = None):
        self.source = tuple(source)
        self.target = tuple(target)
        self.columns: Dict[int, Vector] = {}
        for j, column in (columns or {}).items():
            cleaned = {i: v for i, v in column.items() if v}
            if cleaned:
                self.columns[j] = cleaned

    @classmethod
    def identity(cls, parities: Sequence[int]) -> "LinearMap":
        return cls(parities, parities, {j: {j: ONE} for j in range(len(parities))})

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.target), len(self.source)

    @property
    def parity(self) -> Optional[int]:
        parities = {(self.source[j] + self.target[i]) % 2 for j, column in self.columns.items() for i in column}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def apply(self, vector: Vector) -> Vector:
        result: Vector = {}
        for j, x in vector.items():
            for i, v in self.columns.get(j, {}).items():
                result[i] = result.get(i, ZERO) + v * x
        return {i: v for i, v in result.items() if v}

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.target != self.source:
            raise TypeMismatchError(f"cannot compose maps of shapes {self.shape} and {other.shape}")
        return LinearMap(other.source, self.target, {j: self.apply(column) for j, column in other.columns.items()})

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if (self.source, self.target) != (other.source, other.target):
            raise TypeMismatchError("cannot add maps between different spaces")
        columns = {j: dict(column) for j, column in self.columns.items()}
        for j, column in other.columns.items():
            target = columns.setdefault(j, {})
            for i, v in column.items():
                target[i] = target.get(i, ZERO) + v
        return LinearMap(self.source, self.target, columns)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-ONE)

    def scale(self, factor) -> "LinearMap":
        return LinearMap(self.source, self.target, {j: {i: v * factor for i, v in c.items()} for j, c in self.columns.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.source, self.target, self.columns) == (other.source, other.target, other.columns)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted((j, tuple(sorted(c.items()))) for j, c in self.columns.items()))))

    def __repr__(self) -> str:
        return f"LinearMap({self.shape[0]}x{self.shape[1]}, parity={self.parity})"

    def tensor(self, other: "LinearMap") -> "LinearMap":
        """(f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w), one homogeneous entry of g at a time."""
        width_in, width_out = len(other.source), len(other.target)
        source = tuple((p + q) % 2 for p in self.source for q in other.source)
        target = tuple((p + q) % 2 for p in self.target for q in other.target)
        columns: Dict[int, Vector] = {}
        for j, left in self.columns.items():
            v_parity = self.source[j]
            for l, right in other.columns.items():
                column = {}
                for k, b in right.items():
                    s = sign(((other.source[l] + other.target[k]) % 2) * v_parity)
                    for i, a in left.items():
                        column[i * width_out + k] = a * b * s
                columns[j * width_in + l] = column
        return LinearMap(source, target, columns)

    def vectorized(self) -> Vector:
        """Row-major coordinates, for rank computations over a family of maps."""
        width = len(self.source)
        return {i * width + j: v for j, column in self.columns.items() for i, v in column.items()}

    def to_json(self) -> dict:
        rows, cols = self.shape
        dense = [["0"] * cols for _ in range(rows)]
        for j, column in self.columns.items():
            for i, v in column.items():
                dense[i][j] = format_scalar(v)
        return {"schema": 1, "shape": [rows, cols], "parity": self.parity, "rows": dense}


def tensor_all(maps: Sequence[LinearMap]) -> LinearMap:
    result = LinearMap.identity((0,))
    for piece in maps:
        result = result.tensor(piece)
    return result


def flip(left: Sequence[int], right: Sequence[int]) -> LinearMap:
    """v (x) w -> (-1)^{|v||w|} w (x) v for ground bases with the given parities."""
    a, b = len(left), len(right)
    columns = {}
    for i in range(a):
        for j in range(b):
            columns[i * b + j] = {j * a + i: ONE * sign(left[i] * right[j])}
    source = [(p + q) % 2 for p in left for q in right]
    target = [(q + p) % 2 for q in right for p in left]
    return LinearMap(source, target, columns)


def place(piece: LinearMap, left: LinearMap, right: LinearMap) -> LinearMap:
    """left (x) piece (x) right, typically with identities on both sides."""
    return left.tensor(piece).tensor(right)


def stack(layers: List[LinearMap]) -> LinearMap:
    """Composite of maps listed bottom to top."""
    result = layers[0]
    for layer in layers[1:]:
        result = layer @ result
    return result
