"""
The adjoint X -> X^dagger of a form, the Lie superalgebra g(phi) = {X : X^dagger = -X}
and representatives of the non-identity components of G_rd(phi).
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from formslie.forms import FormSpec
from incarnate.modules import LinearMap, SuperModule
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.scalars import ONE, ZERO, Scalar, nullspace, sign
from superalg.supermatrix import SuperMatrix, block_parity, matrix_inverse

logger = logging.getLogger(__name__)


def sharp(X: SuperMatrix) -> SuperMatrix:
    return X.sharp()


def _adjoint_factor(form: FormSpec) -> Tuple[SuperMatrix, SuperMatrix]:
    S = SuperMatrix.parity_matrix(form.algebra, form.m, form.n)
    right = form.gram.sharp() @ S
    return matrix_inverse(right), right


def dagger(X: SuperMatrix, form: FormSpec) -> SuperMatrix:
    """X^dagger = (M^sharp S)^-1 X^sharp M^sharp S."""
    left, right = _adjoint_factor(form)
    return left @ X.sharp() @ right


def matrix_unit(algebra: SuperAlgebra, m: int, n: int, r: int, c: int, b: int) -> SuperMatrix:
    return SuperMatrix(algebra, (m, n), (m, n), {(r, c): algebra.basis_element(b)})


def unit_coordinates(algebra: SuperAlgebra, m: int, n: int, parity: int) -> List[Tuple[int, int, int]]:
    """Coordinates (r, c, b) of the homogeneous part of Mat_{m|n}(A) of the given parity."""
    size = m + n
    return [
        (r, c, b)
        for r in range(size)
        for c in range(size)
        for b in range(algebra.dim)
        if (block_parity(r, m) + block_parity(c, m) + algebra.parities[b]) % 2 == parity
    ]


def _coordinates(X: SuperMatrix) -> Dict[Tuple[int, int, int], Scalar]:
    return {(r, c, b): value for (r, c), entry in X.entries.items() for b, value in entry.coeffs.items()}


def natural_action(X: SuperMatrix, module: SuperModule) -> LinearMap:
    """L_X(e_t b) = sum_r e_r (X_rt b) on the ground basis of V."""
    algebra = module.algebra
    columns: Dict[int, Dict[int, Scalar]] = {}
    for (r, t), entry in X.entries.items():
        for b in range(algebra.dim):
            image = algebra.mul(entry, algebra.basis_element(b))
            column = columns.setdefault(module.index(t, b), {})
            for k, c in image.coeffs.items():
                index = module.index(r, k)
                column[index] = column.get(index, ZERO) + c
    return LinearMap(module.parities, module.parities, columns)


def dual_action(X: SuperMatrix, module: SuperModule, parity: int) -> LinearMap:
    """(X f)(v) = -(-1)^{|X||f|} f(X v) on V*, in the basis dual to the ground basis."""
    action = natural_action(X, module)
    columns: Dict[int, Dict[int, Scalar]] = {}
    for z, column in action.columns.items():
        for y, value in column.items():
            columns.setdefault(y, {})[z] = -value * sign(parity * module.parities[y])
    return LinearMap(module.parities, module.parities, columns)


@dataclass
class LieBasis:
    """
    A basis of g(phi) over the ground field, split by parity.

    Args:
        form (FormSpec): The form.
        even (List[SuperMatrix]): Basis of g(phi)_0.
        odd (List[SuperMatrix]): Basis of g(phi)_1.
    """

    form: FormSpec
    even: List[SuperMatrix] = field(default_factory=list)
    odd: List[SuperMatrix] = field(default_factory=list)

    @property
    def elements(self) -> List[Tuple[SuperMatrix, int]]:
        return [(X, 0) for X in self.even] + [(X, 1) for X in self.odd]

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.even), len(self.odd)

    def is_antihermitian(self, X: SuperMatrix) -> bool:
        return dagger(X, self.form) == -X

    def bracket(self, X: SuperMatrix, px: int, Y: SuperMatrix, py: int) -> SuperMatrix:
        return X @ Y - (Y @ X).scale(sign(px * py))

    def check_closed(self) -> bool:
        """Brackets of basis elements satisfy X^dagger = -X again."""
        elements = self.elements
        for i, (X, px) in enumerate(elements):
            for Y, py in elements[i:]:
                if not self.is_antihermitian(self.bracket(X, px, Y, py)):
                    return False
        return True

    def check_invariance(self) -> bool:
        """Phi(Xv, w) = -(-1)^{|X||v|} Phi(v, Xw) on ground basis pairs."""
        module = self.form.module
        for X, px in self.elements:
            action = natural_action(X, module)
            for x in range(module.dim):
                for y in range(module.dim):
                    left = self.form.Phi(action.apply({x: ONE}), {y: ONE})
                    right = self.form.Phi({x: ONE}, action.apply({y: ONE}))
                    if left != -right * sign(px * module.parities[x]):
                        return False
        return True

    def to_dict(self) -> dict:
        return {"schema": 1, "form": self.form.name, "dim_even": len(self.even), "dim_odd": len(self.odd)}


def lie_basis(form: FormSpec) -> LieBasis:
    """
    Solves X^dagger + X = 0 over the ground coordinates of Mat_{m|n}(A), one parity at a time.

    Args:
        form (FormSpec): A catalogued form.

    Returns:
        LieBasis: Exact basis of g(phi).
    """
    algebra, m, n = form.algebra, form.m, form.n
    left, right = _adjoint_factor(form)
    result = LieBasis(form)
    for parity in (0, 1):
        unknowns = unit_coordinates(algebra, m, n, parity)
        rows: Dict[Tuple[int, int, int], Dict[int, Scalar]] = {}
        for column, (r, c, b) in enumerate(unknowns):
            X = matrix_unit(algebra, m, n, r, c, b)
            image = left @ X.sharp() @ right + X
            for key, value in _coordinates(image).items():
                rows.setdefault(key, {})[column] = value
        basis = []
        for vector in nullspace(list(rows.values()), len(unknowns)):
            entries: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
            for column, value in vector.items():
                r, c, b = unknowns[column]
                entries.setdefault((r, c), {})[b] = value
            basis.append(SuperMatrix(algebra, (m, n), (m, n), {key: AlgElem(algebra, v) for key, v in entries.items()}))
        if parity == 0:
            result.even = basis
        else:
            result.odd = basis
    logger.info(f"g({form.name}) has dimension {result.dims[0]}|{result.dims[1]}")
    return result


def gl_basis(algebra: SuperAlgebra, m: int, n: int) -> List[Tuple[SuperMatrix, int]]:
    """Matrix units times algebra basis elements, spanning gl(m|n, A)."""
    result = []
    for parity in (0, 1):
        for r, c, b in unit_coordinates(algebra, m, n, parity):
            result.append((matrix_unit(algebra, m, n, r, c, b), parity))
    return result


def _reflection(form: FormSpec, flips: List[int]) -> SuperMatrix:
    algebra = form.algebra
    size = form.m + form.n
    entries = {(t, t): -algebra.one() if t in flips else algebra.one() for t in range(size)}
    return SuperMatrix(algebra, (form.m, form.n), (form.m, form.n), entries)


def preserves_form(X: SuperMatrix, form: FormSpec) -> bool:
    """phi(Xv, Xw) = phi(v, w), i.e. X^sharp M X = M for even X."""
    return X.sharp() @ form.gram @ X == form.gram


def group_components(form: FormSpec) -> List[SuperMatrix]:
    """
    One element from each connected component of G_rd(phi) not containing the identity.

    Orthogonal factors O(p, q) and O(m, C) contribute reflections. Unitary and isomeric
    unitary groups are connected. The quaternionic factor is realized by H-linear
    matrices, whose complex determinant is positive, so it is connected here. For odd
    forms over (R, id) the group is GL(m, R) and a reflection diag(R, R) represents the
    det < 0 component.
    """
    name = form.name
    if name.startswith("osp(") or name.startswith("osp_C("):
        p = form.gram.entries
        positive = [t for t in range(form.m) if p[(t, t)] == form.algebra.one()]
        negative = [t for t in range(form.m) if t not in positive]
        flips: List[List[int]] = []
        if positive:
            flips.append([positive[0]])
        if negative and not name.startswith("osp_C("):
            flips.append([negative[0]])
            if positive:
                flips.append([positive[0], negative[0]])
        return [_reflection(form, f) for f in flips]
    if name.startswith("periplectic(") and form.algebra.name == "R" and form.m:
        return [_reflection(form, [0, form.m])]
    return []
