"""
Defining and derived relations of OB(A; d), each as a pair of morphisms that must normalize equally.
"""
import itertools
import logging
from typing import List, Optional, Sequence, Tuple

from oriented.category import OrientedCategory
from oriented.diagram import DOWN, UP, OrMorphism
from superalg.algebra import AlgElem
from superalg.scalars import sign

logger = logging.getLogger(__name__)

Relation = Tuple[str, OrMorphism, OrMorphism]


def relation_suite(category: OrientedCategory, a: AlgElem, b: AlgElem) -> List[Relation]:
    """
    Relations with token labels a and b (homogeneous).

    Returns:
        List[Relation]: (name, left side, right side).
    """
    C = category
    c, t = C.compose, C.tensor
    up, down = C.identity(UP), C.identity(DOWN)
    cross = C.generator("cross")
    pa, pb = a.parity or 0, b.parity or 0
    x1, x2 = t(cross, up), t(up, cross)
    empty = C.identity("")
    return [
        ("unit token", C.token(C.algebra.one()), up),
        ("token product", c(C.token(a), C.token(b)), C.token(C.algebra.mul(a, b))),
        ("down token product", c(C.token(a, DOWN), C.token(b, DOWN)), C.token(C.algebra.mul(b, a), DOWN).scale(sign(pa * pb))),
        ("crossing involution", c(cross, cross), C.identity("uu")),
        ("braid", c(x1, c(x2, x1)), c(x2, c(x1, x2))),
        ("token through crossing", c(cross, t(C.token(a), up)), c(t(up, C.token(a)), cross)),
        ("left zigzag down", c(t(C.generator("capL"), down), t(down, C.generator("cupL"))), down),
        ("left zigzag up", c(t(up, C.generator("capL")), t(C.generator("cupL"), up)), up),
        ("right zigzag up", c(t(C.generator("capR"), up), t(up, C.generator("cupR"))), up),
        ("right zigzag down", c(t(down, C.generator("capR")), t(C.generator("cupR"), down)), down),
        ("curl", c(t(up, C.generator("capR")), c(t(cross, down), t(up, C.generator("cupL")))), up),
        ("sideways inversion", c(C.crossing("du"), C.crossing("ud")), C.identity("ud")),
        ("sideways inversion reversed", c(C.crossing("ud"), C.crossing("du")), C.identity("du")),
        ("token around right cap", c(C.generator("capR"), t(C.token(a), down)), c(C.generator("capR"), t(up, C.token(a, DOWN)))),
        ("token around left cap", c(C.generator("capL"), t(C.token(a, DOWN), up)), c(C.generator("capL"), t(down, C.token(a)))),
        ("token around left cup", c(t(C.token(a), down), C.generator("cupL")), c(t(up, C.token(a, DOWN)), C.generator("cupL"))),
        ("bubble", empty.scale(C.bubble(a)), empty.scale(C.d * C.algebra.supertrace(a))),
        ("interchange", t(C.token(a), C.token(b)), c(t(C.token(a), up), t(up, C.token(b)))),
        ("super interchange", t(C.token(a), C.token(b)), c(t(up, C.token(b)), t(C.token(a), up)).scale(sign(pa * pb))),
    ]


def check_relations(category: OrientedCategory, labels: Optional[Sequence[AlgElem]] = None) -> List[dict]:
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
    logger.info(f"{len(rows) - len(failed)} of {len(rows)} oriented relations hold for {category}")
    return rows
