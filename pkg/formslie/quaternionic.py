"""
The complex components of a quaternionic form.

Writing H = C + jC, phi = phi^1 + j phi^j with phi^1, phi^j complex valued. For
q = q1 + qi i + qj j + qk k this gives phi^1 = q1 + qi i and phi^j = qj - qk i.
"""
import logging
from typing import Dict, List

from formslie.forms import FormSpec
from formslie.lie import LieBasis, lie_basis, natural_action
from helpers.errors import ConfigurationError
from incarnate.modules import Vector
from superalg.algebra import AlgElem
from superalg.scalars import I_UNIT, ONE, ZERO, Scalar, conj, rank, sign

logger = logging.getLogger(__name__)


def _complex_parts(q: AlgElem):
    one, i, j, k = (q.coefficient(name) for name in ("1", "i", "j", "k"))
    return one + I_UNIT * i, j - I_UNIT * k


class QuaternionicForm:
    """
    phi^1 and phi^j of a form over (H, *), evaluated on ground vectors of H^{m|n}.

    Args:
        form (FormSpec): A form over H.

    Raises:
        ConfigurationError: If the form does not live over H.
    """

    def __init__(self, form: FormSpec):
        if form.algebra.name != "H":
            raise ConfigurationError(f"{form.name} is not a quaternionic form")
        self.form = form
        self.module = form.module
        self._j = form.algebra.index("j")
        self._i = form.algebra.index("i")

    def phi_1(self, v: Vector, w: Vector) -> Scalar:
        return _complex_parts(self.form.phi(v, w))[0]

    def phi_j(self, v: Vector, w: Vector) -> Scalar:
        return _complex_parts(self.form.phi(v, w))[1]

    def times(self, v: Vector, index: int) -> Vector:
        """v b for a basis element b of H, without a Koszul sign."""
        module, algebra = self.module, self.form.algebra
        result: Vector = {}
        for x, c in v.items():
            t, b = module.split(x)
            for k, value in algebra.mul_basis(b, index).items():
                key = module.index(t, k)
                result[key] = result.get(key, ZERO) + c * value
        return {key: value for key, value in result.items() if value}

    def times_j(self, v: Vector) -> Vector:
        return self.times(v, self._j)

    def complex_basis(self) -> List[Vector]:
        """{e_t, e_t j} over C = span(1, i)."""
        module = self.module
        one = self.form.algebra.index("1")
        return [{module.index(t, b): ONE} for t in range(module.rank) for b in (one, self._j)]

    def pairs(self):
        size = self.module.dim
        for x in range(size):
            for y in range(size):
                yield x, y, {x: ONE}, {y: ONE}

    def check_j_on_left(self) -> bool:
        """phi^j(vj, w) = -phi^1(v, w) and phi^1(vj, w) = phi^j(v, w)."""
        for _, _, v, w in self.pairs():
            vj = self.times_j(v)
            if self.phi_j(vj, w) != -self.phi_1(v, w) or self.phi_1(vj, w) != self.phi_j(v, w):
                return False
        return True

    def check_j_on_right(self) -> bool:
        """phi^j(v, wj) = conj phi^1(v, w) and phi^1(v, wj) = -conj phi^j(v, w)."""
        for _, _, v, w in self.pairs():
            wj = self.times_j(w)
            if self.phi_j(v, wj) != conj(self.phi_1(v, w)) or self.phi_1(v, wj) != -conj(self.phi_j(v, w)):
                return False
        return True

    def check_real_part(self) -> bool:
        """phi^j(v, wj) - phi^j(vj, w) = 2 Re phi(v, w)."""
        for _, _, v, w in self.pairs():
            real = self.form.phi(v, w).coefficient("1")
            if self.phi_j(v, self.times_j(w)) - self.phi_j(self.times_j(v), w) != real * 2:
                return False
        return True

    def check_symmetry(self) -> bool:
        """phi^j(w, v) = -nu (-1)^{|v||w|} phi^j(v, w), and phi^j is C-bilinear."""
        parities = self.module.parities
        for x, y, v, w in self.pairs():
            expected = self.phi_j(v, w) * (-self.form.nu * sign(parities[x] * parities[y]))
            if self.phi_j(w, v) != expected:
                return False
            value = self.phi_j(v, w) * I_UNIT
            if self.phi_j(self.times(v, self._i), w) != value or self.phi_j(v, self.times(w, self._i)) != value:
                return False
        return True

    def gram_j(self) -> List[List[Scalar]]:
        basis = self.complex_basis()
        return [[self.phi_j(v, w) for w in basis] for v in basis]

    def check_nondegenerate(self) -> bool:
        gram = self.gram_j()
        rows: List[Dict[int, Scalar]] = [{c: value for c, value in enumerate(row) if value} for row in gram]
        return rank(rows, len(gram)) == len(gram)

    def check_lie_preserves(self, lie: LieBasis) -> bool:
        """phi^j(Xv, w) = -(-1)^{|X||v|} phi^j(v, Xw) for every basis element of g(phi)."""
        parities = self.module.parities
        for X, px in lie.elements:
            action = natural_action(X, self.module)
            for x, y, v, w in self.pairs():
                left = self.phi_j(action.apply(v), w)
                right = self.phi_j(v, action.apply(w))
                if left != -right * sign(px * parities[x]):
                    return False
        return True


def phi_j_identities(form: FormSpec) -> dict:
    """
    Verifies the identities relating phi^1 and phi^j on all ground basis pairs.

    Returns:
        dict: One boolean per identity, plus ok.
    """
    quaternionic = QuaternionicForm(form)
    report = {
        "schema": 1,
        "form": form.name,
        "j_on_left": quaternionic.check_j_on_left(),
        "j_on_right": quaternionic.check_j_on_right(),
        "real_part": quaternionic.check_real_part(),
        "symmetric": quaternionic.check_symmetry(),
        "nondegenerate": quaternionic.check_nondegenerate(),
        "lie_preserves": quaternionic.check_lie_preserves(lie_basis(form)),
    }
    report["ok"] = all(value for key, value in report.items() if isinstance(value, bool))
    logger.info(f"Quaternionic identities for {form.name}: {'ok' if report['ok'] else 'failed'}")
    return report
