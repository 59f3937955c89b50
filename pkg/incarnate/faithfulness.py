"""
Linear independence of the images F_Phi(f) of basis diagrams, with the explicit test vectors v_f.
"""
import itertools
import logging
from typing import Dict, List, Optional

from formslie.forms import FormSpec
from helpers.errors import TypeMismatchError
from incarnate.modules import Vector
from incarnate.unoriented_functor import UnorientedIncarnation, check_compatible, incarnation_for_form
from superalg.scalars import ONE, ZERO, format_scalar, rank
from unoriented.category import UnorientedCategory
from unoriented.diagram import UnDiagram

logger = logging.getLogger(__name__)


def _is_diagonal(form: FormSpec) -> bool:
    return all(r == c for r, c in form.gram.entries)


def butte_vectors(f: UnDiagram, form: FormSpec) -> List[Vector]:
    """
    The factors v_1, ..., v_r of v_f for a diagram with no top endpoints.

    Strands are numbered by their right endpoint. The right endpoint of strand j carries
    e_j and its left endpoint the Phi-dual of e_j b_j, b_j being the strand's token.
    """
    if f.s:
        raise TypeMismatchError("test vectors are defined for diagrams with s = 0")
    module = form.module
    algebra = form.algebra
    dual = form.dual_coefficients
    factors: Dict[int, Vector] = {}
    strands = sorted(zip(f.pairs, f.tokens), key=lambda item: item[0][1])
    for j, ((left, right), token) in enumerate(strands):
        factors[right] = module.vector(j, algebra.one())
        x = module.index(j, token)
        factors[left] = {z: c for z, c in enumerate(dual[x]) if c}
    return [factors[i] for i in range(1, f.r + 1)]


def tensor_vector(factors: List[Vector], dim: int) -> Vector:
    """Coordinates of v_1 (x) ... (x) v_r in the lexicographic basis."""
    result: Vector = {}
    for picked in itertools.product(*[list(v.items()) for v in factors]):
        index, value = 0, ONE
        for i, c in picked:
            index = index * dim + i
            value = value * c
        result[index] = result.get(index, ZERO) + value
    return {i: v for i, v in result.items() if v}


def pairing_matrix(category: UnorientedCategory, form: FormSpec, total: int, incarnation: Optional[UnorientedIncarnation] = None):
    """F_Phi(f)(v_g) for all f, g in the basis of Hom(go^total, 1)."""
    incarnation = incarnation or incarnation_for_form(form)
    diagrams = category.basis(total, 0)
    dim = form.module.dim
    vectors = [tensor_vector(butte_vectors(g, form), dim) for g in diagrams]
    rows = []
    for f in diagrams:
        functional = incarnation.diagram_map(f)
        rows.append([functional.apply(v).get(0, ZERO) for v in vectors])
    return rows


def _signed_identity(rows) -> bool:
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if i == j and value not in (ONE, -ONE):
                return False
            if i != j and value:
                return False
    return True


def butte_check(category: UnorientedCategory, form: FormSpec, r: int, s: int) -> dict:
    """
    Rank of the images of the basis of Hom(go^r, go^s), and the v_f pairing on Hom(go^(r+s), 1).

    Args:
        category (UnorientedCategory): Source category, compatible with the form.
        form (FormSpec): Phi.
        r (int): Bottom endpoints.
        s (int): Top endpoints.

    Returns:
        dict: count, rank, independent, the hypothesis flag 2(m+n) >= r+s, and the pairing
            verdict (None when the Gram matrix is not diagonal, the pairing then holds only
            after a change of basis).
    """
    check_compatible(category, form)
    incarnation = incarnation_for_form(form)
    diagrams = category.basis(r, s)
    rows = [incarnation.diagram_map(f).vectorized() for f in diagrams]
    width = len(form.module.power_parities(r)) * len(form.module.power_parities(s))
    found = rank(rows, width) if rows else 0
    hypothesis = 2 * (form.m + form.n) >= r + s
    pairing_ok = None
    pairing_diagonal: List[str] = []
    if hypothesis and _is_diagonal(form) and (r + s) % 2 == 0:
        matrix = pairing_matrix(category, form, r + s, incarnation)
        pairing_ok = _signed_identity(matrix)
        pairing_diagonal = [format_scalar(matrix[i][i]) for i in range(len(matrix))]
    report = {
        "schema": 1,
        "form": form.name,
        "r": r,
        "s": s,
        "count": len(diagrams),
        "rank": found,
        "independent": found == len(diagrams),
        "hypothesis": hypothesis,
        "pairing_ok": pairing_ok,
        "pairing_diagonal": pairing_diagonal,
    }
    logger.info(f"Independence check {form.name} {r}->{s}: rank {found} of {len(diagrams)}")
    return report
