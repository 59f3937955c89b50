"""
Exact scalars and the small amount of exact linear algebra the engine needs.

Every coefficient is an element of sympy's Gaussian rational field ``QQ_I``.
Real quantities simply have zero imaginary part; linear algebra drops to ``QQ``
whenever that is the case.
"""
import re
from fractions import Fraction
from typing import Dict, List, Sequence, Union

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from helpers.errors import AlgebraError, ExpressionSyntaxError

Scalar = type(QQ_I(0, 0))

ZERO = QQ_I(0, 0)
ONE = QQ_I(1, 0)
I_UNIT = QQ_I(0, 1)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def scalar(value: Union[int, Fraction, str, "Scalar"], imag: Union[int, Fraction] = 0) -> "Scalar":
    """Builds a Gaussian rational from ints, fractions or `p/q` strings."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    real = value if not isinstance(value, Fraction) else QQ(value.numerator, value.denominator)
    if isinstance(imag, Fraction):
        imag = QQ(imag.numerator, imag.denominator)
    return QQ_I(real, imag)


def sign(exponent: int) -> int:
    """(-1)**exponent."""
    return -1 if exponent % 2 else 1


def conj(z: "Scalar") -> "Scalar":
    return QQ_I(z.x, -z.y)


def is_real(z: "Scalar") -> bool:
    return not z.y


def _parse_rational(text: str, position: int = 0):
    match = _RATIONAL.match(text)
    if not match:
        raise ExpressionSyntaxError(f"not a rational number: {text!r}", position)
    numerator = int(match.group(1))
    denominator = int(match.group(2) or 1)
    if denominator == 0:
        raise ExpressionSyntaxError("zero denominator", position)
    return QQ(numerator, denominator)


def parse_scalar(text: str, position: int = 0) -> "Scalar":
    """
    Parses `p/q`, `r/s i`, `p/q+r/s i` (and `i` alone).

    Args:
        text (str): The literal.
        position (int): Offset reported in syntax errors.

    Returns:
        Scalar: The parsed Gaussian rational.
    """
    compact = text.replace(" ", "").replace("*", "")
    if not compact:
        raise ExpressionSyntaxError("empty scalar", position)
    if not compact.endswith(("i", "I")):
        return QQ_I(_parse_rational(compact, position), 0)
    body = compact[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_text, imag_text = body[:split], body[split:]
    else:
        real_text, imag_text = "0", body
    if imag_text in ("", "+"):
        imag_text = "1"
    elif imag_text == "-":
        imag_text = "-1"
    return QQ_I(_parse_rational(real_text, position), _parse_rational(imag_text, position))


def format_scalar(z: "Scalar") -> str:
    """Inverse of `parse_scalar` on canonical values."""
    if not z.y:
        return str(z.x)
    imag = "i" if z.y == 1 else "-i" if z.y == -1 else f"{z.y} i"
    if not z.x:
        return imag
    if imag.startswith("-"):
        return f"{z.x}{imag}"
    return f"{z.x}+{imag}"


def to_domain_matrix(rows: Sequence[Dict[int, "Scalar"]], ncols: int) -> DomainMatrix:
    """
    Packs sparse rows (column index -> scalar) into a sparse DomainMatrix.

    The domain is QQ when no entry has an imaginary part, QQ_I otherwise.
    """
    real = all(not value.y for row in rows for value in row.values())
    data = {}
    for r, row in enumerate(rows):
        entries = {}
        for c, value in row.items():
            if value:
                entries[c] = value.x if real else value
        if entries:
            data[r] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ if real else QQ_I)


def _from_domain(value, domain) -> "Scalar":
    if domain == QQ:
        return QQ_I(value, 0)
    return value


def rank(rows: Sequence[Dict[int, "Scalar"]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return to_domain_matrix(rows, ncols).rank()


def nullspace(rows: Sequence[Dict[int, "Scalar"]], ncols: int) -> List[Dict[int, "Scalar"]]:
    """Basis of {x : rows·x = 0}, each vector as a sparse dict."""
    if ncols == 0:
        return []
    if not rows:
        return [{c: ONE} for c in range(ncols)]
    matrix = to_domain_matrix(rows, ncols)
    kernel = matrix.nullspace().to_list()
    basis = []
    for vector in kernel:
        sparse = {c: _from_domain(value, matrix.domain) for c, value in enumerate(vector) if value}
        if sparse:
            basis.append(sparse)
    return basis


def inverse(rows: Sequence[Sequence["Scalar"]]) -> List[List["Scalar"]]:
    """Inverse of a dense square matrix; raises AlgebraError when singular."""
    size = len(rows)
    matrix = to_domain_matrix([{c: v for c, v in enumerate(row) if v} for row in rows], size)
    if matrix.rank() < size:
        raise AlgebraError("matrix is singular")
    inv = matrix.to_dense().inv().to_list()
    return [[_from_domain(value, matrix.domain) for value in row] for row in inv]
