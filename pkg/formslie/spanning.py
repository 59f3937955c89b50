"""
Fullness checks: do the images of basis diagrams span the equivariant maps?
"""
import logging
import time
from collections import Counter
from itertools import permutations, product
from typing import List, Tuple

from sympy.combinatorics import Permutation

from formslie.forms import FormSpec
from formslie.solver import DEFAULT_MAX_UNKNOWNS, equivariant_homs, gl_equivariant_homs
from helpers.errors import ConfigurationError
from incarnate.modules import LinearMap
from incarnate.oriented_functor import incarnation_for
from incarnate.unoriented_functor import check_compatible, incarnation_for_form
from superalg.scalars import rank
from unoriented.category import UnorientedCategory

logger = logging.getLogger(__name__)


def _rank(maps: List[LinearMap]) -> int:
    if not maps:
        return 0
    width = len(maps[0].source) * len(maps[0].target)
    return rank([f.vectorized() for f in maps], width)


def _report(images: List[LinearMap], homs: List[LinearMap], started: float, **labels) -> dict:
    found = _rank(images)
    dim = len(homs)
    contained = _rank(images + homs) == dim
    report = {
        "schema": 1,
        **labels,
        "count": len(images),
        "rank": found,
        "dim": dim,
        "kernel_dim": len(images) - found,
        "contained": contained,
        "ok": contained and found == dim,
        "elapsed": round(time.perf_counter() - started, 3),
    }
    logger.info(f"Spanning check {labels}: rank {found}, dim {dim}")
    return report


def spanning_check(category: UnorientedCategory, form: FormSpec, r: int, s: int, max_unknowns: int = DEFAULT_MAX_UNKNOWNS) -> dict:
    """
    Compares the span of F_Phi of the basis of Hom(go^r, go^s) with Hom_{G(Phi)}(V^r, V^s).

    Returns:
        dict: rank of the images, dim of the solver's space, kernel_dim, contained (every image
            is equivariant) and ok (spanning).
    """
    started = time.perf_counter()
    check_compatible(category, form)
    incarnation = incarnation_for_form(form)
    images = [incarnation.diagram_map(f) for f in category.basis(r, s)]
    homs = equivariant_homs(form, r, s, max_unknowns)
    return _report(images, homs, started, form=form.name, r=r, s=s)


def spanning_check_oriented(algebra_name: str, m: int, n: int, source: str, target: str, max_unknowns: int = DEFAULT_MAX_UNKNOWNS) -> dict:
    """The same comparison for G on OB(A^op; m - n) and gl(m|n, A)."""
    started = time.perf_counter()
    incarnation = incarnation_for(algebra_name, m, n)
    images = [incarnation.diagram_map(f) for f in incarnation.category.basis(source, target)]
    homs = gl_equivariant_homs(incarnation.algebra, m, n, source, target, max_unknowns)
    return _report(images, homs, started, algebra=algebra_name, m=m, n=n, source=source, target=target)


def oriented_rank_check(algebra_name: str, m: int, n: int, source: str, target: str) -> dict:
    """Rank of the images of the oriented basis; equal to the count when G is injective there."""
    incarnation = incarnation_for(algebra_name, m, n)
    images = [incarnation.diagram_map(f) for f in incarnation.category.basis(source, target)]
    found = _rank(images)
    logger.info(f"Oriented rank {algebra_name}^({m}|{n}) {source}->{target}: {found} of {len(images)}")
    return {
        "schema": 1,
        "algebra": algebra_name,
        "m": m,
        "n": n,
        "source": source,
        "target": target,
        "count": len(images),
        "rank": found,
        "independent": found == len(images),
    }


def _unitary_weights(m: int, length: int) -> Counter:
    """Torus weights of (V + V*)^{(x) length} for gl(m, C), with multiplicity."""
    letters = [tuple(int(t == i) for t in range(m)) for i in range(m)]
    letters += [tuple(-x for x in weight) for weight in letters]
    weights: Counter = Counter()
    for word in product(letters, repeat=length):
        weights[tuple(sum(letter[t] for letter in word) for t in range(m))] += 1
    return weights


def weight_count_homs(form: FormSpec, r: int, s: int) -> int:
    """
    Real dimension of Hom_{U(p,q)}(V^{(x) r}, V^{(x) s}) counted from torus weights.

    After complexifying, V_R (x) C = V + V* as a gl(m, C)-module and the real hom space
    becomes the gl(m, C)-invariants of (V + V*)^{(x)(r + s)}. Those are counted with
    sum_w sign(w) mult(rho - w rho) over the symmetric group.

    Raises:
        ConfigurationError: If the form is not an even unitary form.
    """
    if not form.name.startswith("u(") or form.n:
        raise ConfigurationError(f"weight counting needs an even unitary form, got {form.name}")
    m = form.m
    weights = _unitary_weights(m, r + s)
    rho = tuple(range(m - 1, -1, -1))
    total = 0
    for image in permutations(range(m)):
        shifted: Tuple[int, ...] = tuple(rho[t] - rho[image[t]] for t in range(m))
        total += Permutation(list(image)).signature() * weights[shifted]
    logger.debug(f"Weight count for {form.name} at ({r}, {s}): {total}")
    return total


def weight_count_check(form: FormSpec, r: int, s: int, max_unknowns: int = DEFAULT_MAX_UNKNOWNS) -> dict:
    """Compares the weight count with the dimension found by the nullspace solver."""
    counted = weight_count_homs(form, r, s)
    solved = len(equivariant_homs(form, r, s, max_unknowns))
    logger.info(f"Weight count {form.name} ({r}, {s}): counted {counted}, solved {solved}")
    return {"schema": 1, "form": form.name, "r": r, "s": s, "counted": counted, "solved": solved, "ok": counted == solved}
