"""
The catalog of named superalgebras.

Real division superalgebras are built as R, C, H and their Clifford doubles
D[eps]; every basis product is a signed basis element, so the presentations are
written with small monomial multiplication rules. Names understood by
`make_algebra`:

    R, C_real, C_real_id, H, Cl1R, Cl2R, Cl3R, Cl5R, Cl6R, Cl7R, ClC,
    C_cplx, ClC_cplx, T<n> (k[x]/(x^n)), Mat(m|n,<name>), <name>^op, <name>_C
"""
import logging
import re
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from helpers.errors import UnknownNameError
from superalg.algebra import SuperAlgebra
from superalg.scalars import ONE

logger = logging.getLogger(__name__)

# A monomial product: (coefficient, basis name).
Monomial = Tuple[int, str]
MulRule = Callable[[str, str], Monomial]

DIVISION_ALGEBRAS = ("R", "C_real", "H", "Cl1R", "Cl2R", "Cl3R", "Cl5R", "Cl6R", "Cl7R", "ClC")
INVOLUTIVE_PRESETS = {
    "(R,id)": "R",
    "(C,id)": "C_cplx",
    "(C,*)": "C_real",
    "(H,*)": "H",
    "(ClC,*)": "ClC",
}

_QUATERNION = {
    ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
    ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
}


def _real_mul(a: str, b: str) -> Monomial:
    return 1, "1"


def _complex_mul(a: str, b: str) -> Monomial:
    if a == "1":
        return 1, b
    if b == "1":
        return 1, a
    return -1, "1"


def _quaternion_mul(a: str, b: str) -> Monomial:
    if a == "1":
        return 1, b
    if b == "1":
        return 1, a
    return _QUATERNION[(a, b)]


def _conjugation_sign(name: str) -> int:
    return 1 if name == "1" else -1


def _eps_name(name: str) -> str:
    return "eps" if name == "1" else f"eps{name}"


def _clifford_double(base: Sequence[str], base_mul: MulRule, eps_square: int, twisted: bool) -> Tuple[List[str], MulRule]:
    """
    Doubles a monomial algebra D to D + eps D with eps odd.

    twisted: z eps = eps z*, so (a + eps b)(c + eps d) = (ac + eps^2 b* d) + eps(a* d + bc).
    central: eps commutes with D, so (a + eps b)(c + eps d) = (ac + eps^2 bd) + eps(ad + bc).
    """
    names = list(base) + [_eps_name(b) for b in base]
    split = {name: (0, name) for name in base}
    split.update({_eps_name(name): (1, name) for name in base})

    def conj(name: str) -> int:
        return _conjugation_sign(name) if twisted else 1

    def mul(x: str, y: str) -> Monomial:
        (ex, a), (ey, b) = split[x], split[y]
        if ex == 0 and ey == 0:
            c, z = base_mul(a, b)
            return c, z
        if ex == 0 and ey == 1:
            c, z = base_mul(a, b)
            return conj(a) * c, _eps_name(z)
        if ex == 1 and ey == 0:
            c, z = base_mul(a, b)
            return c, _eps_name(z)
        c, z = base_mul(a, b)
        return eps_square * conj(a) * c, z

    return names, mul


def _from_monomials(
    name: str,
    names: Sequence[str],
    mul: MulRule,
    star: Optional[Dict[str, Tuple[object, str]]] = None,
    field: str = "rational",
    frobenius: Optional[Sequence[int]] = None,
) -> SuperAlgebra:
    index = {n: i for i, n in enumerate(names)}
    basis = [(n, 1 if n.startswith("eps") else 0) for n in names]
    table = {}
    for a in names:
        for b in names:
            c, z = mul(a, b)
            table[(index[a], index[b])] = {index[z]: c}
    star_table = None
    if star is not None:
        star_table = [{index[star[n][1]]: star[n][0]} for n in names]
    form = frobenius if frobenius is not None else [1 if n == "1" else 0 for n in names]
    return SuperAlgebra(name, basis, table, {index["1"]: ONE}, form, star_table, field)


def _truncated_polynomial(n: int) -> SuperAlgebra:
    names = ["1"] + [f"x{power}" if power > 1 else "x" for power in range(1, n)]
    table = {}
    for a in range(n):
        for b in range(n):
            if a + b < n:
                table[(a, b)] = {a + b: ONE}
    frobenius = [1 if power == n - 1 else 0 for power in range(n)]
    star = [{power: ONE} for power in range(n)]
    return SuperAlgebra(f"T{n}", [(name, 0) for name in names], table, {0: ONE}, frobenius, star)


def _build(name: str) -> SuperAlgebra:
    if name == "R":
        return _from_monomials(name, ["1"], _real_mul, star={"1": (1, "1")})
    if name == "C_real":
        return _from_monomials(name, ["1", "i"], _complex_mul, star={"1": (1, "1"), "i": (-1, "i")})
    if name == "C_real_id":
        return _from_monomials(name, ["1", "i"], _complex_mul, star={"1": (1, "1"), "i": (1, "i")})
    if name == "H":
        names = ["1", "i", "j", "k"]
        return _from_monomials(name, names, _quaternion_mul, star={n: (_conjugation_sign(n), n) for n in names})
    if name in ("Cl1R", "Cl7R"):
        names, mul = _clifford_double(["1"], _real_mul, 1 if name == "Cl1R" else -1, twisted=False)
        return _from_monomials(name, names, mul)
    if name in ("Cl2R", "Cl6R"):
        names, mul = _clifford_double(["1", "i"], _complex_mul, 1 if name == "Cl2R" else -1, twisted=True)
        return _from_monomials(name, names, mul)
    if name in ("Cl3R", "Cl5R"):
        names, mul = _clifford_double(["1", "i", "j", "k"], _quaternion_mul, -1 if name == "Cl3R" else 1, twisted=False)
        return _from_monomials(name, names, mul)
    if name == "ClC":
        names, mul = _clifford_double(["1", "i"], _complex_mul, 1, twisted=False)
        # (a + eps b)* = a* + eps b* i
        star = {"1": (1, "1"), "i": (-1, "i"), "eps": (1, "epsi"), "epsi": (1, "eps")}
        return _from_monomials(name, names, mul, star=star)
    if name == "C_cplx":
        return _from_monomials(name, ["1"], _real_mul, star={"1": (1, "1")}, field="gaussian")
    if name == "ClC_cplx":
        names, mul = _clifford_double(["1"], _real_mul, 1, twisted=False)
        return _from_monomials(name, names, mul, field="gaussian")
    match = re.fullmatch(r"T(\d+)", name)
    if match and int(match.group(1)) >= 1:
        return _truncated_polynomial(int(match.group(1)))
    match = re.fullmatch(r"Mat\((\d+)\|(\d+),(.+)\)", name)
    if match:
        from superalg.supermatrix import matrix_algebra

        return matrix_algebra(make_algebra(match.group(3)), int(match.group(1)), int(match.group(2)))
    if name.endswith("^op"):
        return make_algebra(name[:-3]).opposite()
    if name.endswith("_C") and name != "_C":
        return make_algebra(name[:-2]).complexify()
    raise UnknownNameError(f"unknown algebra {name!r}")


@lru_cache(maxsize=None)
def make_algebra(name: str) -> SuperAlgebra:
    """
    Returns the catalog algebra with the given name.

    Args:
        name (str): A catalog identifier, possibly derived (opposite, complexified, matrix).

    Returns:
        SuperAlgebra: The shared, immutable presentation.

    Raises:
        UnknownNameError: If the name is not recognised.
    """
    name = name.strip()
    algebra = _build(name)
    logger.debug(f"Built algebra {name} of dimension {algebra.dim}")
    return algebra


def preset_algebra(preset: str) -> SuperAlgebra:
    """Maps an involutive preset label such as `(H,*)` to its algebra."""
    try:
        return make_algebra(INVOLUTIVE_PRESETS[preset.replace("⋆", "*").replace(" ", "")])
    except KeyError:
        raise UnknownNameError(f"unknown involutive preset {preset!r}") from None
