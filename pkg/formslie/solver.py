"""
Exact solver for spaces of equivariant maps between tensor products of V and V*.

A map f of parity p commutes with a Lie superalgebra element X of parity |X| when
X f = (-1)^{|X| p} f X, and with a group element g when g f = f g. Both conditions are
linear in the entries of f; the solution space is an exact nullspace.
"""
import logging
from typing import Dict, List, Sequence, Tuple

from formslie.forms import FormSpec
from formslie.lie import LieBasis, dual_action, gl_basis, group_components, lie_basis, natural_action
from helpers.errors import SizeLimitError
from incarnate.modules import LinearMap, SuperModule, tensor_all
from oriented.diagram import UP, validate_word
from superalg.algebra import SuperAlgebra
from superalg.scalars import ZERO, Scalar, nullspace, sign
from superalg.supermatrix import SuperMatrix

logger = logging.getLogger(__name__)

DEFAULT_MAX_UNKNOWNS = 100000


def leibniz_action(factors: Sequence[LinearMap]) -> LinearMap:
    """sum_i id (x) ... (x) A_i (x) ... (x) id; Koszul signs come from LinearMap.tensor."""
    identities = [LinearMap.identity(f.source) for f in factors]
    total = None
    for i, factor in enumerate(factors):
        piece = tensor_all(identities[:i] + [factor] + identities[i + 1:])
        total = piece if total is None else total + piece
    return total if total is not None else LinearMap((0,), (0,))


class EquivariantSolver:
    """
    Collects commutation conditions and solves for Hom(source, target).

    Args:
        source (Sequence[int]): Parities of the source basis.
        target (Sequence[int]): Parities of the target basis.
        max_unknowns (int): Refuse systems with more unknowns than this.
    """

    def __init__(self, source: Sequence[int], target: Sequence[int], max_unknowns: int = DEFAULT_MAX_UNKNOWNS):
        self.source = tuple(source)
        self.target = tuple(target)
        self.unknowns = len(self.source) * len(self.target)
        if self.unknowns > max_unknowns:
            raise SizeLimitError(f"{self.unknowns} unknowns exceed the limit of {max_unknowns}")
        self.rows: List[Dict[int, Scalar]] = []

    def _column(self, k: int, l: int) -> int:
        return k * len(self.source) + l

    def add_lie(self, on_source: LinearMap, on_target: LinearMap, parity: int) -> None:
        """Row (k, l) of X_t f - (-1)^{|X| p} f X_s, where p = |k| + |l| + |X|."""
        width, height = len(self.source), len(self.target)
        rows: Dict[Tuple[int, int], Dict[int, Scalar]] = {}
        for i, column in on_target.columns.items():
            for k, value in column.items():
                for l in range(width):
                    row = rows.setdefault((k, l), {})
                    key = self._column(i, l)
                    row[key] = row.get(key, ZERO) + value
        for l, column in on_source.columns.items():
            for j, value in column.items():
                for k in range(height):
                    p = (self.target[k] + self.source[j]) % 2
                    row = rows.setdefault((k, l), {})
                    key = self._column(k, j)
                    row[key] = row.get(key, ZERO) - value * sign(parity * p)
        self.rows.extend(row for row in rows.values() if any(row.values()))

    def add_group(self, on_source: LinearMap, on_target: LinearMap) -> None:
        self.add_lie(on_source, on_target, 0)

    def solve(self) -> List[LinearMap]:
        basis = []
        width = len(self.source)
        for vector in nullspace(self.rows, self.unknowns):
            columns: Dict[int, Dict[int, Scalar]] = {}
            for index, value in vector.items():
                k, l = divmod(index, width)
                columns.setdefault(l, {})[k] = value
            basis.append(LinearMap(self.source, self.target, columns))
        logger.info(f"Equivariant solver: {self.unknowns} unknowns, {len(self.rows)} equations, {len(basis)} solutions")
        return basis


def equivariant_homs(form: FormSpec, r: int, s: int, max_unknowns: int = DEFAULT_MAX_UNKNOWNS, lie: LieBasis = None) -> List[LinearMap]:
    """
    Basis of Hom_{G(Phi)}(V^{(x) r}, V^{(x) s}).

    Args:
        form (FormSpec): Phi.
        r (int): Tensor power of the source.
        s (int): Tensor power of the target.
        max_unknowns (int): Size guard.
        lie (LieBasis): Precomputed g(phi), computed when omitted.

    Raises:
        SizeLimitError: If (dim V)^(r+s) exceeds max_unknowns.
    """
    module = form.module
    solver = EquivariantSolver(module.power_parities(r), module.power_parities(s), max_unknowns)
    lie = lie or lie_basis(form)
    for X, parity in lie.elements:
        action = natural_action(X, module)
        solver.add_lie(leibniz_action([action] * r), leibniz_action([action] * s), parity)
    for g in group_components(form):
        action = natural_action(g, module)
        solver.add_group(tensor_all([action] * r), tensor_all([action] * s))
    return solver.solve()


def word_action(X: SuperMatrix, parity: int, module: SuperModule, word: str) -> LinearMap:
    up = natural_action(X, module)
    down = dual_action(X, module, parity)
    return leibniz_action([up if letter == UP else down for letter in word])


def gl_equivariant_homs(algebra: SuperAlgebra, m: int, n: int, source: str, target: str, max_unknowns: int = DEFAULT_MAX_UNKNOWNS) -> List[LinearMap]:
    """
    Basis of gl(m|n, A)-equivariant maps between mixed tensor products of V and V*.

    Args:
        algebra (SuperAlgebra): A, with V = A^{m|n}.
        m (int): Even rank.
        n (int): Odd rank.
        source (str): Word in u (V) and d (V*).
        target (str): Word in u and d.
        max_unknowns (int): Size guard.
    """
    source, target = validate_word(source), validate_word(target)
    module = SuperModule(algebra, m, n)
    solver = EquivariantSolver(module.power_parities(len(source)), module.power_parities(len(target)), max_unknowns)
    for X, parity in gl_basis(algebra, m, n):
        solver.add_lie(word_action(X, parity, module, source), word_action(X, parity, module, target), parity)
    return solver.solve()
