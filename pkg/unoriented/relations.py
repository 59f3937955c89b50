"""
Defining and derived relations of Brauer^sigma(A, inv; d).
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from superalg.algebra import AlgElem
from superalg.scalars import sign
from unoriented.category import UnorientedCategory
from unoriented.diagram import UnMorphism

logger = logging.getLogger(__name__)

Relation = Tuple[str, UnMorphism, UnMorphism]


def relation_suite(category: UnorientedCategory, a: AlgElem, b: AlgElem) -> List[Relation]:
    """
    Relations with token labels a and b (homogeneous).

    Returns:
        List[Relation]: (name, left side, right side).
    """
    U = category
    c, t = U.compose, U.tensor
    one, two = U.identity(1), U.identity(2)
    cross, cap, cup = U.generator("cross"), U.generator("cap"), U.generator("cup")
    pa, pb = a.parity or 0, b.parity or 0
    twist = sign(U.sigma)
    a_inv = U.inv(a)
    x1, x2 = t(cross, one), t(one, cross)
    empty = U.identity(0)
    algebra = U.algebra
    return [
        ("unit token", U.token(algebra.one()), one),
        ("token product", c(U.token(a), U.token(b)), U.token(algebra.mul(a, b))),
        ("crossing involution", c(cross, cross), two),
        ("braid", c(x1, c(x2, x1)), c(x2, c(x1, x2))),
        ("zigzag", c(t(one, cap), t(cup, one)), one),
        ("twisted zigzag", c(t(cap, one), t(one, cup)), one.scale(twist)),
        ("cap absorbs crossing", c(cap, cross), cap),
        ("crossing slides under cap", c(t(one, cap), t(cross, one)), c(t(cap, one), t(one, cross))),
        ("cup absorbs crossing", c(cross, cup), cup.scale(twist)),
        ("crossing slides over cup", c(t(cross, one), t(one, cup)), c(t(one, cross), t(cup, one))),
        ("token through crossing", c(cross, t(U.token(a), one)), c(t(one, U.token(a)), cross)),
        ("token across cap", c(cap, t(U.token(a), one)), c(cap, t(one, U.token(a_inv)))),
        ("token across cup", c(t(one, U.token(a)), cup), c(t(U.token(a_inv), one), cup)),
        ("bubble", empty.scale(U.bubble(a)), empty.scale(U.d * algebra.supertrace(a))),
        ("bubble cyclic", empty.scale(U.bubble(algebra.mul(a, b))), empty.scale(U.bubble(algebra.mul(b, a)) * sign(pa * pb))),
        ("bubble inverse", empty.scale(U.bubble(a)), empty.scale(U.bubble(a_inv) * twist)),
        ("super interchange", t(U.token(a), U.token(b)), c(t(one, U.token(b)), t(U.token(a), one)).scale(sign(pa * pb))),
        ("cap interchange", t(cap, cap), c(cap, t(two, cap))),
        ("twisted cap interchange", t(cap, cap), c(cap, t(cap, two)).scale(twist)),
    ]


def check_relations(category: UnorientedCategory, labels: Optional[Sequence[AlgElem]] = None) -> List[dict]:
    """
    Runs the suite for every ordered pair of labels (the algebra basis by default).

    Returns:
        List[dict]: One row per relation and label pair, with ok.
    """
    labels = list(labels) if labels is not None else category.algebra.basis()
    rows = []
    for a, b in itertools.product(labels, repeat=2):
        for name, left, right in relation_suite(category, a, b):
            rows.append({"relation": name, "a": str(a), "b": str(b), "ok": left == right})
    failed = [row for row in rows if not row["ok"]]
    logger.info(f"{len(rows) - len(failed)} of {len(rows)} unoriented relations hold for {category}")
    return rows
