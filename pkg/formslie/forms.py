"""
Catalog of nondegenerate superhermitian forms phi(v, w) = v^sharp M w on A^{m|n}.

The scalar form used by the unoriented incarnation is Phi = tau o phi.
"""
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Tuple

from helpers.errors import AlgebraError, ConfigurationError, UnknownNameError
from incarnate.modules import SuperModule, Vector
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.catalog import make_algebra
from superalg.scalars import ONE, Scalar, inverse, rank, sign
from superalg.supermatrix import SuperMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormSpec:
    """
    A (nu, star)-superhermitian form of parity sigma given by its Gram supermatrix.

    Args:
        name (str): Catalog name with parameters, e.g. `osp(2,1|2)`.
        algebra (SuperAlgebra): Involutive algebra the form is sesquilinear over.
        m (int): Even rank.
        n (int): Odd rank.
        nu (int): Symmetry sign, 1 or -1.
        sigma (int): Parity of the form.
        gram (SuperMatrix): M.
    """

    name: str
    algebra: SuperAlgebra
    m: int
    n: int
    nu: int
    sigma: int
    gram: SuperMatrix

    @property
    def module(self) -> SuperModule:
        return SuperModule(self.algebra, self.m, self.n)

    @property
    def specialization(self) -> int:
        """The bubble parameter nu (m - n) this form realizes."""
        return self.nu * (self.m - self.n)

    def phi(self, v: Vector, w: Vector) -> AlgElem:
        """phi(v, w) = v^sharp M w for ground vectors v, w."""
        module = self.module
        product = module.column_vector(v).sharp() @ self.gram @ module.column_vector(w)
        return product.entry(0, 0)

    def Phi(self, v: Vector, w: Vector) -> Scalar:
        return self.algebra.tau(self.phi(v, w))

    @cached_property
    def ground_gram(self) -> Tuple[Tuple[Scalar, ...], ...]:
        """G[x][y] = Phi(x, y) on the ground basis e_t b."""
        size = self.module.dim
        rows = []
        for x in range(size):
            rows.append(tuple(self.Phi({x: ONE}, {y: ONE}) for y in range(size)))
        return tuple(rows)

    @cached_property
    def dual_coefficients(self) -> List[List[Scalar]]:
        """x^v = sum_z C[x][z] z with Phi(x^v, y) = delta_xy, i.e. C = G^-1."""
        try:
            return inverse(self.ground_gram)
        except AlgebraError:
            raise ConfigurationError(f"form {self.name} is degenerate") from None

    def is_nondegenerate(self) -> bool:
        size = self.module.dim
        rows = [{y: value for y, value in enumerate(row) if value} for row in self.ground_gram]
        return rank(rows, size) == size

    def check_drop(self) -> bool:
        """M^sharp = nu (-1)^{|M|} M S."""
        parity = self.gram.parity
        if parity is None:
            return False
        S = SuperMatrix.parity_matrix(self.algebra, self.m, self.n)
        return self.gram.sharp() == (self.gram @ S).scale(self.nu * sign(parity))

    def check_supersymmetric(self) -> bool:
        """Phi(v, w) = nu (-1)^{|v||w|} Phi(w, v) and Phi(va, w) = (-1)^{|a||w|} Phi(v, w a^inv) on basis pairs."""
        module, algebra = self.module, self.algebra
        gram = self.ground_gram
        parities = module.parities
        for x in range(module.dim):
            for y in range(module.dim):
                if gram[x][y] != gram[y][x] * self.nu * sign(parities[x] * parities[y]):
                    return False
        for x in range(module.dim):
            for y in range(module.dim):
                tx, bx = module.split(x)
                ty, by = module.split(y)
                for index in range(algebra.dim):
                    a = algebra.basis_element(index)
                    va = module.vector(tx, algebra.mul(algebra.basis_element(bx), a))
                    w_inv = module.vector(ty, algebra.mul(algebra.basis_element(by), algebra.inv(a)))
                    left = self.Phi(va, {y: ONE})
                    right = self.Phi({x: ONE}, w_inv) * sign(algebra.parities[index] * parities[y])
                    if left != right:
                        return False
        return True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "algebra": self.algebra.name,
            "m": self.m,
            "n": self.n,
            "nu": self.nu,
            "sigma": self.sigma,
            "gram": [[self.algebra.format(self.gram.entry(r, c)) for c in range(self.gram.ncols)] for r in range(self.gram.nrows)],
        }


def _diagonal(algebra: SuperAlgebra, m: int, n: int, values: List[AlgElem]) -> SuperMatrix:
    return SuperMatrix(algebra, (m, n), (m, n), {(t, t): value for t, value in enumerate(values)})


def _symplectic_block(entries: Dict[Tuple[int, int], AlgElem], offset: int, half: int, one: AlgElem, lower: AlgElem) -> None:
    for t in range(half):
        entries[(offset + t, offset + half + t)] = one
        entries[(offset + half + t, offset + t)] = lower


def _osp(algebra: SuperAlgebra, p: int, q: int, n2: int, name: str) -> FormSpec:
    if n2 % 2:
        raise ConfigurationError(f"{name}: the odd rank must be even for an even symmetric form")
    m, one = p + q, algebra.one()
    entries = {(t, t): one if t < p else -one for t in range(m)}
    _symplectic_block(entries, m, n2 // 2, one, -one)
    return FormSpec(name, algebra, m, n2, 1, 0, SuperMatrix(algebra, (m, n2), (m, n2), entries))


def _unitary(p: int, q: int, r: int, s: int, name: str) -> FormSpec:
    algebra = make_algebra("C_real")
    one, i = algebra.one(), algebra.element({"i": 1})
    values = [one] * p + [-one] * q + [i] * r + [-i] * s
    return FormSpec(name, algebra, p + q, r + s, 1, 0, _diagonal(algebra, p + q, r + s, values))


def _quaternionic(n: int, p: int, q: int, name: str) -> FormSpec:
    algebra = make_algebra("H")
    one, j = algebra.one(), algebra.element({"j": 1})
    values = [one] * p + [-one] * q + [j] * n
    return FormSpec(name, algebra, p + q, n, 1, 0, _diagonal(algebra, p + q, n, values))


def _isomeric(p: int, q: int, name: str) -> FormSpec:
    algebra = make_algebra("ClC")
    one = algebra.one()
    return FormSpec(name, algebra, p + q, 0, 1, 0, _diagonal(algebra, p + q, 0, [one] * p + [-one] * q))


def _periplectic(m: int, nu: int, algebra_name: str, name: str) -> FormSpec:
    if nu not in (1, -1):
        raise ConfigurationError(f"{name}: nu must be 1 or -1")
    algebra = make_algebra(algebra_name)
    entries: Dict[Tuple[int, int], AlgElem] = {}
    _symplectic_block(entries, 0, m, algebra.one(), algebra.one() * (-nu))
    return FormSpec(name, algebra, m, m, nu, 1, SuperMatrix(algebra, (m, m), (m, m), entries))


_PATTERNS: List[Tuple[str, Callable[..., FormSpec]]] = [
    (r"osp\((\d+),(\d+)\|(\d+)\)", lambda name, p, q, n2: _osp(make_algebra("R"), int(p), int(q), int(n2), name)),
    (r"osp_C\((\d+)\|(\d+)\)", lambda name, m, n2: _osp(make_algebra("C_cplx"), int(m), 0, int(n2), name)),
    (r"u\((\d+),(\d+)\|(\d+),(\d+)\)", lambda name, p, q, r, s: _unitary(int(p), int(q), int(r), int(s), name)),
    (r"osp\*\((\d+)\|(\d+),(\d+)\)", lambda name, n, p, q: _quaternionic(int(n), int(p), int(q), name)),
    (r"uq\((\d+),(\d+)\)", lambda name, p, q: _isomeric(int(p), int(q), name)),
    (
        r"periplectic\((\d+),([+-]?1)(?:,(R|C_real|H))?\)",
        lambda name, m, nu, algebra=None: _periplectic(int(m), int(nu), algebra or "R", name),
    ),
]

FORM_FAMILIES = {
    "osp(p,q|2n)": "(R,id), diag(I_p, -I_q) (+) [[0, I_n], [-I_n, 0]], group OSp(p,q|2n,R)",
    "osp_C(m|2n)": "(C,id) over the Gaussian rationals, I_m (+) [[0, I_n], [-I_n, 0]], group OSp(m|2n,C)",
    "u(p,q|r,s)": "(C,*), diag(I_p, -I_q, iI_r, -iI_s), group U(p,q|r,s)",
    "osp*(n|p,q)": "(H,*), diag(I_p, -I_q, jI_n), group OSp*(n|p,q)",
    "uq(p,q)": "(ClC,*), diag(I_p, -I_q), group UQ(p,q)",
    "periplectic(m,nu)": "odd form [[0, I_m], [-nu I_m, 0]] over (R,id); append ,C_real or ,H for other algebras",
}


def catalog_form(name: str) -> FormSpec:
    """
    Builds a catalogued form from its name.

    Args:
        name (str): One of the FORM_FAMILIES patterns with parameters filled in.

    Returns:
        FormSpec: The form, with its Gram matrix exactly as catalogued.

    Raises:
        UnknownNameError: If no family matches.
        ConfigurationError: If the parameters violate the family's constraints.
    """
    text = name.replace(" ", "")
    for pattern, build in _PATTERNS:
        match = re.fullmatch(pattern, text)
        if match:
            args = [g for g in match.groups() if g is not None]
            form = build(text, *args)
            if form.m + form.n == 0:
                raise ConfigurationError(f"{name}: the module would be zero")
            logger.debug(f"Catalog form {text} on {form.algebra.name}^({form.m}|{form.n})")
            return form
    raise UnknownNameError(f"unknown form {name!r}; known families: {', '.join(FORM_FAMILIES)}")


def list_forms() -> List[dict]:
    return [{"family": family, "description": text} for family, text in FORM_FAMILIES.items()]
