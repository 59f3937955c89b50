"""
Supermatrices over a superalgebra and the matrix superalgebras Mat_{m|n}(A).

Rows and columns are split into an even block followed by an odd block; row r has
parity p(r) = 0 for r < m and 1 otherwise. Products are ordinary matrix products
of the entries, with no extra signs.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from helpers.errors import AlgebraError, TypeMismatchError
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, inverse, sign

logger = logging.getLogger(__name__)


def block_parity(index: int, even: int) -> int:
    return 0 if index < even else 1


class SuperMatrix:
    """
    A (m|n) x (r|s) matrix with entries in a superalgebra.

    Args:
        algebra (SuperAlgebra): Where the entries live.
        rows (Tuple[int, int]): (m, n) row block sizes.
        cols (Tuple[int, int]): (r, s) column block sizes.
        entries (Dict[Tuple[int, int], AlgElem]): Sparse nonzero entries.
    """

    __slots__ = ("algebra", "rows", "cols", "entries")

    def __init__(self, algebra: SuperAlgebra, rows: Tuple[int, int], cols: Tuple[int, int], entries: Dict[Tuple[int, int], AlgElem]):
        self.algebra = algebra
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = {key: value for key, value in entries.items() if value}

    @property
    def nrows(self) -> int:
        return self.rows[0] + self.rows[1]

    @property
    def ncols(self) -> int:
        return self.cols[0] + self.cols[1]

    def row_parity(self, r: int) -> int:
        return block_parity(r, self.rows[0])

    def col_parity(self, c: int) -> int:
        return block_parity(c, self.cols[0])

    def entry(self, r: int, c: int) -> AlgElem:
        return self.entries.get((r, c), self.algebra.zero())

    @property
    def parity(self) -> Optional[int]:
        """|X| when every entry (r,c) has parity |X| + p(r) + p(c); None when inhomogeneous."""
        found = set()
        for (r, c), value in self.entries.items():
            if value.parity is None:
                return None
            found.add((value.parity + self.row_parity(r) + self.col_parity(c)) % 2)
        if len(found) > 1:
            return None
        return found.pop() if found else 0

    def homogeneous_part(self, parity: int) -> "SuperMatrix":
        entries = {}
        for (r, c), value in self.entries.items():
            wanted = (parity + self.row_parity(r) + self.col_parity(c)) % 2
            entries[(r, c)] = value.homogeneous_part(wanted)
        return SuperMatrix(self.algebra, self.rows, self.cols, entries)

    @classmethod
    def identity(cls, algebra: SuperAlgebra, m: int, n: int) -> "SuperMatrix":
        return cls(algebra, (m, n), (m, n), {(t, t): algebra.one() for t in range(m + n)})

    @classmethod
    def zero(cls, algebra: SuperAlgebra, rows: Tuple[int, int], cols: Tuple[int, int]) -> "SuperMatrix":
        return cls(algebra, rows, cols, {})

    @classmethod
    def from_rows(cls, algebra: SuperAlgebra, rows: Tuple[int, int], cols: Tuple[int, int], grid: Sequence[Sequence[AlgElem]]) -> "SuperMatrix":
        return cls(algebra, rows, cols, {(r, c): value for r, line in enumerate(grid) for c, value in enumerate(line)})

    @classmethod
    def parity_matrix(cls, algebra: SuperAlgebra, m: int, n: int) -> "SuperMatrix":
        """S = diag(I_m, -I_n)."""
        return cls(algebra, (m, n), (m, n), {(t, t): algebra.one() * sign(block_parity(t, m)) for t in range(m + n)})

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise TypeMismatchError("supermatrix shapes differ")
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries[key] + value if key in entries else value
        return SuperMatrix(self.algebra, self.rows, self.cols, entries)

    def __neg__(self) -> "SuperMatrix":
        return self.scale(-ONE)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        return self + (-other)

    def scale(self, factor) -> "SuperMatrix":
        return SuperMatrix(self.algebra, self.rows, self.cols, {key: value * factor for key, value in self.entries.items()})

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if self.cols != other.rows:
            raise TypeMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, AlgElem]]] = {}
        for (k, c), value in other.entries.items():
            by_row.setdefault(k, []).append((c, value))
        entries: Dict[Tuple[int, int], AlgElem] = {}
        for (r, k), left in self.entries.items():
            for c, right in by_row.get(k, ()):
                product = self.algebra.mul(left, right)
                entries[(r, c)] = entries[(r, c)] + product if (r, c) in entries else product
        return SuperMatrix(self.algebra, self.rows, other.cols, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({r},{c}): {value}" for (r, c), value in sorted(self.entries.items()))
        return f"SuperMatrix({self.rows}x{self.cols}, {{{body}}})"

    def map_entries(self, function, algebra: Optional[SuperAlgebra] = None) -> "SuperMatrix":
        return SuperMatrix(algebra or self.algebra, self.rows, self.cols, {key: function(value) for key, value in self.entries.items()})

    def star(self) -> "SuperMatrix":
        return self.map_entries(self.algebra.star)

    def supertranspose(self) -> "SuperMatrix":
        """
        [[X00^T, (-1)^|X| X10^T], [-(-1)^|X| X01^T, X11^T]], applied to each homogeneous part.
        """
        result = SuperMatrix.zero(self.algebra, self.cols, self.rows)
        for parity in (0, 1):
            part = self.homogeneous_part(parity)
            entries = {}
            for (r, c), value in part.entries.items():
                pr, pc = self.row_parity(r), self.col_parity(c)
                if pr == 1 and pc == 0:
                    value = value * sign(parity)
                elif pr == 0 and pc == 1:
                    value = value * -sign(parity)
                entries[(c, r)] = value
            result = result + SuperMatrix(self.algebra, self.cols, self.rows, entries)
        return result

    def sharp(self) -> "SuperMatrix":
        """X^sharp = (X^star)^st."""
        return self.star().supertranspose()

    def supertrace_entry(self) -> AlgElem:
        """str X = tr X00 - (-1)^|X| tr X11, taken per homogeneous part (an element of A)."""
        total = self.algebra.zero()
        for parity in (0, 1):
            part = self.homogeneous_part(parity)
            for t in range(self.nrows):
                value = part.entry(t, t)
                if value:
                    total = total + (value if t < self.rows[0] else value * -sign(parity))
        return total

    def with_algebra(self, algebra: SuperAlgebra) -> "SuperMatrix":
        """Same coefficients read in another algebra with the same basis (e.g. A^op)."""
        return self.map_entries(lambda value: AlgElem(algebra, value.coeffs), algebra)


def op_iso(X: SuperMatrix, opposite: Optional[SuperAlgebra] = None) -> SuperMatrix:
    """
    Mat_{m|n}(A)^op -> Mat_{m|n}(A^op), X -> X_op^st.

    op_iso(XY) = (-1)^{|X||Y|} op_iso(Y) op_iso(X) for homogeneous X, Y.
    """
    target = opposite or X.algebra.opposite()
    return X.with_algebra(target).supertranspose()


def str_matrix(X: SuperMatrix) -> Scalar:
    """The supertrace of X as an element of Mat_{m|n}(A) acting on itself: (m-n) str_A(str X)."""
    m, n = X.rows
    return (m - n) * X.algebra.supertrace(X.supertrace_entry())


def matrix_inverse(X: SuperMatrix) -> SuperMatrix:
    """
    Inverse of an invertible square supermatrix.

    X acts on the right module A^{m|n} by left multiplication; that k-linear map is
    inverted exactly and read back column by column.
    """
    if X.rows != X.cols:
        raise TypeMismatchError("only square supermatrices can be inverted")
    algebra = X.algebra
    size, dim = X.nrows, algebra.dim
    total = size * dim

    def coordinates(column: Dict[int, AlgElem]) -> Dict[int, Scalar]:
        vector = {}
        for r, value in column.items():
            for b, c in value.coeffs.items():
                vector[r * dim + b] = c
        return vector

    dense = [[ZERO] * total for _ in range(total)]
    for u in range(size):
        for b in range(dim):
            basis = algebra.basis_element(b)
            column = {}
            for (r, c), value in X.entries.items():
                if c == u:
                    column[r] = algebra.mul(value, basis)
            for index, value in coordinates(column).items():
                dense[index][u * dim + b] = value
    try:
        inv = inverse(dense)
    except AlgebraError:
        raise AlgebraError("supermatrix is not invertible") from None
    unit = algebra.unit_coeffs
    entries: Dict[Tuple[int, int], AlgElem] = {}
    for u in range(size):
        # Y(e_u) = sum_r e_r Y_ru, and e_u = e_u * 1
        image = [ZERO] * total
        for b, c in unit.items():
            for row in range(total):
                image[row] += inv[row][u * dim + b] * c
        for r in range(size):
            coeffs = {b: image[r * dim + b] for b in range(dim) if image[r * dim + b]}
            if coeffs:
                entries[(r, u)] = AlgElem(algebra, coeffs)
    return SuperMatrix(algebra, X.rows, X.cols, entries)


def matrix_algebra(algebra: SuperAlgebra, m: int, n: int) -> SuperAlgebra:
    """
    Mat_{m|n}(A) with basis E_rs b (names `E<r>,<s>:<b>`, 1-based) and Frobenius form
    tau_A(str X) when A has one.
    """
    if m + n < 1:
        raise AlgebraError("matrix algebra needs m + n >= 1")
    size, dim = m + n, algebra.dim
    basis = []
    for r in range(size):
        for s in range(size):
            for b in range(dim):
                parity = (block_parity(r, m) + block_parity(s, m) + algebra.parities[b]) % 2
                basis.append((f"E{r + 1},{s + 1}:{algebra.names[b]}", parity))

    def index(r: int, s: int, b: int) -> int:
        return (r * size + s) * dim + b

    table = {}
    for r in range(size):
        for s in range(size):
            for u in range(size):
                for b in range(dim):
                    for c in range(dim):
                        product = algebra.mul_basis(b, c)
                        if product:
                            table[(index(r, s, b), index(s, u, c))] = {index(r, u, k): v for k, v in product.items()}
    unit = {}
    for t in range(size):
        for b, c in algebra.unit_coeffs.items():
            unit[index(t, t, b)] = c
    frobenius = None
    if algebra.is_frobenius:
        frobenius = [ZERO] * len(basis)
        for t in range(size):
            for b in range(dim):
                value = algebra.frobenius[b]
                frobenius[index(t, t, b)] = value if t < m else -value
    star = None
    name = f"Mat({m}|{n},{algebra.name})"
    logger.debug(f"Built {name} with {len(basis)} basis elements")
    return SuperAlgebra(name, basis, table, unit, frobenius, star, algebra.field)


def to_element(X: SuperMatrix, mat: SuperAlgebra) -> AlgElem:
    """Reads a square supermatrix as an element of the matching matrix algebra."""
    size, dim = X.nrows, X.algebra.dim
    coeffs = {}
    for (r, c), value in X.entries.items():
        for b, v in value.coeffs.items():
            coeffs[(r * size + c) * dim + b] = v
    return AlgElem(mat, coeffs)


def from_element(a: AlgElem, algebra: SuperAlgebra, m: int, n: int) -> SuperMatrix:
    size, dim = m + n, algebra.dim
    entries: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
    for index, value in a.coeffs.items():
        rc, b = divmod(index, dim)
        r, c = divmod(rc, size)
        entries.setdefault((r, c), {})[b] = value
    return SuperMatrix(algebra, (m, n), (m, n), {key: AlgElem(algebra, coeffs) for key, coeffs in entries.items()})
