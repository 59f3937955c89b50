"""
Finite-dimensional superalgebras given by structure constants.

A ``SuperAlgebra`` stores its basis (names with parities), the structure constants,
the unit and, optionally, a Frobenius form and an anti-involution. Everything derived
from the Frobenius form (dual basis, Nakayama automorphism, supertrace) is computed
once from the pairing matrix and cached.
"""
import logging
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from helpers.errors import AlgebraError, ExpressionSyntaxError
from superalg.scalars import ONE, ZERO, Scalar, format_scalar, inverse, parse_scalar, scalar, sign

logger = logging.getLogger(__name__)

Table = Dict[Tuple[int, int], Dict[int, Scalar]]


def _accumulate(target: Dict[int, Scalar], index: int, value: Scalar) -> None:
    total = target.get(index, ZERO) + value
    if total:
        target[index] = total
    else:
        target.pop(index, None)


class AlgElem:
    """
    An element of a superalgebra as a sparse coefficient vector over its basis.

    Zero coefficients are never stored, so two elements are equal exactly when their
    coefficient dictionaries are.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "SuperAlgebra", coeffs: Mapping[int, Scalar]):
        self.algebra = algebra
        self.coeffs = {index: scalar(value) for index, value in coeffs.items() if value}

    def terms(self) -> Dict[str, Scalar]:
        """Coefficients keyed by basis name."""
        return {self.algebra.names[index]: value for index, value in sorted(self.coeffs.items())}

    def coefficient(self, name: str) -> Scalar:
        return self.coeffs.get(self.algebra.index(name), ZERO)

    @property
    def parity(self) -> Optional[int]:
        """Parity of a homogeneous element, 0 for zero, None when inhomogeneous."""
        parities = {self.algebra.parities[index] for index in self.coeffs}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0

    def homogeneous_part(self, parity: int) -> "AlgElem":
        return AlgElem(self.algebra, {i: c for i, c in self.coeffs.items() if self.algebra.parities[i] == parity})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "AlgElem") -> "AlgElem":
        result = dict(self.coeffs)
        for index, value in other.coeffs.items():
            _accumulate(result, index, value)
        return AlgElem(self.algebra, result)

    def __neg__(self) -> "AlgElem":
        return AlgElem(self.algebra, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: "AlgElem") -> "AlgElem":
        return self + (-other)

    def __mul__(self, other: Union["AlgElem", Scalar, int]) -> "AlgElem":
        if isinstance(other, AlgElem):
            return self.algebra.mul(self, other)
        factor = scalar(other)
        return AlgElem(self.algebra, {i: c * factor for i, c in self.coeffs.items()})

    def __rmul__(self, other: Union[Scalar, int]) -> "AlgElem":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.algebra.name == other.algebra.name and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.algebra.name, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        return self.algebra.format(self)

    def __repr__(self) -> str:
        return f"AlgElem({self.algebra.name}: {self})"


class SuperAlgebra:
    """
    A superalgebra presented by a homogeneous basis and structure constants.

    Args:
        name (str): Catalog identifier.
        basis (Sequence[Tuple[str, int]]): Basis names with their parities, in the fixed order.
        table (Table): (i, j) -> coefficients of e_i e_j; missing pairs multiply to zero.
        unit (Mapping[int, Scalar]): Coefficients of the unit.
        frobenius (Optional[Sequence[Scalar]]): Values of the Frobenius form on the basis.
        star (Optional[Sequence[Mapping[int, Scalar]]]): Images of the basis under the anti-involution.
        field (str): "rational" or "gaussian", the ground field of the presentation.
    """

    def __init__(
        self,
        name: str,
        basis: Sequence[Tuple[str, int]],
        table: Table,
        unit: Mapping[int, Scalar],
        frobenius: Optional[Sequence[Scalar]] = None,
        star: Optional[Sequence[Mapping[int, Scalar]]] = None,
        field: str = "rational",
    ):
        self.name = name
        self.names: Tuple[str, ...] = tuple(entry[0] for entry in basis)
        self.parities: Tuple[int, ...] = tuple(entry[1] % 2 for entry in basis)
        self.table = {key: {k: scalar(v) for k, v in value.items() if v} for key, value in table.items()}
        self.unit_coeffs = {k: scalar(v) for k, v in unit.items() if v}
        self.frobenius = None if frobenius is None else tuple(scalar(v) for v in frobenius)
        self.star_table = None if star is None else tuple({k: scalar(v) for k, v in s.items() if v} for s in star)
        self.field = field
        self._index = {name: i for i, name in enumerate(self.names)}

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.name}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def is_frobenius(self) -> bool:
        return self.frobenius is not None

    @property
    def is_involutive(self) -> bool:
        return self.star_table is not None

    @property
    def has_odd_part(self) -> bool:
        return any(self.parities)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise AlgebraError(f"{name!r} is not a basis element of {self.name}") from None

    # element construction

    def element(self, coeffs: Mapping[str, Union[Scalar, int]]) -> AlgElem:
        return AlgElem(self, {self.index(name): value for name, value in coeffs.items()})

    def basis_element(self, index: int) -> AlgElem:
        return AlgElem(self, {index: ONE})

    def basis(self) -> List[AlgElem]:
        return [self.basis_element(i) for i in range(self.dim)]

    def one(self) -> AlgElem:
        return AlgElem(self, self.unit_coeffs)

    def zero(self) -> AlgElem:
        return AlgElem(self, {})

    # arithmetic

    def mul_basis(self, i: int, j: int) -> Dict[int, Scalar]:
        return self.table.get((i, j), {})

    def mul(self, a: AlgElem, b: AlgElem) -> AlgElem:
        result: Dict[int, Scalar] = {}
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                for k, c in self.mul_basis(i, j).items():
                    _accumulate(result, k, x * y * c)
        return AlgElem(self, result)

    def product(self, factors: Iterable[AlgElem]) -> AlgElem:
        result = self.one()
        for factor in factors:
            result = self.mul(result, factor)
        return result

    # Frobenius structure

    def _require_frobenius(self) -> Tuple[Scalar, ...]:
        if self.frobenius is None:
            raise AlgebraError(f"{self.name} carries no Frobenius form")
        return self.frobenius

    def tau(self, a: AlgElem) -> Scalar:
        form = self._require_frobenius()
        total = ZERO
        for index, value in a.coeffs.items():
            total += value * form[index]
        return total

    @cached_property
    def pairing(self) -> List[List[Scalar]]:
        """P[j][k] = tau(e_j e_k)."""
        form = self._require_frobenius()
        rows = []
        for j in range(self.dim):
            row = []
            for k in range(self.dim):
                value = ZERO
                for index, c in self.mul_basis(j, k).items():
                    value += c * form[index]
                row.append(value)
            rows.append(row)
        return rows

    @cached_property
    def _pairing_inverse(self) -> List[List[Scalar]]:
        try:
            return inverse(self.pairing)
        except AlgebraError:
            raise AlgebraError(f"Frobenius pairing of {self.name} is singular") from None

    @cached_property
    def dual_basis(self) -> Tuple[AlgElem, ...]:
        """Left dual basis: tau(b^v c) = delta_bc."""
        inv = self._pairing_inverse
        return tuple(AlgElem(self, {k: inv[b][k] for k in range(self.dim)}) for b in range(self.dim))

    @cached_property
    def _nakayama_images(self) -> Tuple[AlgElem, ...]:
        inv = self._pairing_inverse
        pairing = self.pairing
        images = []
        for i in range(self.dim):
            w = [sign(self.parities[i] * self.parities[j]) * pairing[i][j] for j in range(self.dim)]
            images.append(AlgElem(self, {k: sum((inv[k][j] * w[j] for j in range(self.dim)), ZERO) for k in range(self.dim)}))
        return tuple(images)

    def nakayama(self, a: AlgElem) -> AlgElem:
        """The automorphism with tau(ab) = (-1)^{|a||b|} tau(b nu(a))."""
        result = self.zero()
        for index, value in a.coeffs.items():
            result = result + self._nakayama_images[index] * value
        return result

    @cached_property
    def _supertrace_values(self) -> Tuple[Scalar, ...]:
        form = self._require_frobenius()
        values = []
        for k in range(self.dim):
            total = ZERO
            for b in range(self.dim):
                element = self.mul(self.dual_basis[b], self.mul(self.basis_element(b), self.basis_element(k)))
                total += sign(self.parities[b]) * self.tau(element)
            values.append(total)
        logger.debug(f"Supertrace of {self.name} on the basis: {[format_scalar(v) for v in values]}")
        return tuple(values)

    def supertrace(self, a: AlgElem) -> Scalar:
        """str_A(a) = sum_b (-1)^{|b|} tau(b^v b a)."""
        total = ZERO
        for index, value in a.coeffs.items():
            total += value * self._supertrace_values[index]
        return total

    @property
    def supertrace_vanishes(self) -> bool:
        return self.is_frobenius and not any(self._supertrace_values)

    # involution

    def star(self, a: AlgElem) -> AlgElem:
        if self.star_table is None:
            raise AlgebraError(f"{self.name} carries no anti-involution")
        result: Dict[int, Scalar] = {}
        for index, value in a.coeffs.items():
            for k, c in self.star_table[index].items():
                _accumulate(result, k, value * c)
        return AlgElem(self, result)

    def inv(self, a: AlgElem) -> AlgElem:
        """a^inv = nu(a)^star, the involution carried by the unoriented category."""
        return self.star(self.nakayama(a))

    # consistency checks

    def check_associative(self) -> bool:
        basis = self.basis()
        for a in basis:
            for b in basis:
                ab = self.mul(a, b)
                for c in basis:
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)):
                        return False
        return True

    def check_unital(self) -> bool:
        one = self.one()
        return all(self.mul(one, b) == b and self.mul(b, one) == b for b in self.basis())

    def check_parity(self) -> bool:
        for (i, j), product in self.table.items():
            for k in product:
                if self.parities[k] != (self.parities[i] + self.parities[j]) % 2:
                    return False
        if self.frobenius is not None:
            if any(value and parity for value, parity in zip(self.frobenius, self.parities)):
                return False
        return True

    def check_star(self) -> bool:
        if self.star_table is None:
            return True
        basis = self.basis()
        for a in basis:
            if self.star(self.star(a)) != a:
                return False
            for b in basis:
                lhs = self.star(self.mul(a, b))
                rhs = self.mul(self.star(b), self.star(a)) * sign(a.parity * b.parity)
                if lhs != rhs:
                    return False
        return True

    # derived algebras

    def opposite(self) -> "SuperAlgebra":
        """A^op with a^op b^op = (-1)^{|a||b|} (ba)^op, same basis and Frobenius form."""
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                s = sign(self.parities[i] * self.parities[j])
                product = self.mul_basis(j, i)
                if product:
                    table[(i, j)] = {k: s * c for k, c in product.items()}
        return SuperAlgebra(
            f"{self.name}^op",
            list(zip(self.names, self.parities)),
            table,
            self.unit_coeffs,
            self.frobenius,
            self.star_table,
            self.field,
        )

    def complexify(self) -> "SuperAlgebra":
        """Same presentation read over the Gaussian rationals."""
        return SuperAlgebra(
            f"{self.name}_C",
            list(zip(self.names, self.parities)),
            self.table,
            self.unit_coeffs,
            self.frobenius,
            self.star_table,
            "gaussian",
        )

    # text form

    def format(self, a: AlgElem) -> str:
        if not a.coeffs:
            return "0"
        pieces = []
        for index, value in sorted(a.coeffs.items()):
            name = self.names[index]
            negative = not value.y and value.x < 0
            magnitude = -value if negative else value
            if magnitude == ONE:
                text = name
            elif magnitude.y:
                text = f"({format_scalar(magnitude)})*{name}"
            else:
                text = f"{format_scalar(magnitude)}*{name}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f"- {text}" if negative else f"+ {text}")
        return " ".join(pieces)

    def parse(self, text: str, position: int = 0) -> AlgElem:
        """
        Reads a signed sum such as `1 + 2*i - 1/3*eps` or `(1/2+i)*eps`.

        A term without a basis name is a multiple of the unit.
        """
        result = self.zero()
        depth = 0
        start = 0
        terms: List[Tuple[int, str]] = []
        for offset, char in enumerate(text):
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif char in "+-" and depth == 0 and offset > start and text[start:offset].strip():
                previous = text[start:offset].rstrip()
                if not previous.endswith(("*", "/")):
                    terms.append((start, text[start:offset]))
                    start = offset
        terms.append((start, text[start:]))
        for offset, raw in terms:
            term = raw.strip()
            if not term:
                raise ExpressionSyntaxError("empty algebra term", position + offset)
            negative = term.startswith("-")
            term = term.lstrip("+-").strip()
            if "*" in term:
                coefficient_text, name = term.rsplit("*", 1)
                coefficient = parse_scalar(coefficient_text.strip().strip("()"), position + offset)
                name = name.strip()
            elif term in self._index:
                coefficient, name = ONE, term
            else:
                coefficient, name = parse_scalar(term.strip("()"), position + offset), None
            if negative:
                coefficient = -coefficient
            if name is None:
                result = result + self.one() * coefficient
            else:
                if name not in self._index:
                    raise ExpressionSyntaxError(f"{name!r} is not a basis element of {self.name}", position + offset)
                result = result + self.basis_element(self._index[name]) * coefficient
        return result
