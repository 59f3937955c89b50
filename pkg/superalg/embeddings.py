"""
Injections of real division superalgebras into complex supermatrix algebras.

Each embedding sends every real basis element to a supermatrix over a complex-ground
algebra (C_cplx or ClC_cplx). `check_embedding` verifies it is a parity-preserving
homomorphism on all basis pairs and that the images span the target over the
Gaussian rationals, so that image + i*image is everything.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List

from helpers.errors import UnknownNameError
from superalg.algebra import AlgElem, SuperAlgebra
from superalg.catalog import make_algebra
from superalg.scalars import I_UNIT, ONE, Scalar, rank
from superalg.supermatrix import SuperMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Embedding:
    name: str
    source: str
    target: str
    shape: tuple
    images: Callable[[SuperAlgebra, SuperAlgebra], Dict[str, SuperMatrix]]
    expect_iso: bool = True


@dataclass
class EmbeddingReport:
    name: str
    homomorphism: bool
    parity_preserving: bool
    complex_rank: int
    target_dimension: int
    expect_iso: bool

    @property
    def spans(self) -> bool:
        return self.complex_rank == self.target_dimension

    @property
    def ok(self) -> bool:
        return self.homomorphism and self.parity_preserving and (self.spans == self.expect_iso)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "homomorphism": self.homomorphism,
            "parity_preserving": self.parity_preserving,
            "complex_rank": self.complex_rank,
            "target_dimension": self.target_dimension,
            "isomorphism_expected": self.expect_iso,
            "ok": self.ok,
        }


def _c(target: SuperAlgebra, real: int = 0, imag: int = 0, name: str = "1") -> AlgElem:
    return target.element({name: real * ONE + imag * I_UNIT})


def _grid(target: SuperAlgebra, shape, rows) -> SuperMatrix:
    return SuperMatrix.from_rows(target, shape[0], shape[1], rows)


def _complex_numbers(target: SuperAlgebra) -> Dict[str, AlgElem]:
    return {"1": _c(target, 1), "i": _c(target, 0, 1)}


def _pauli(target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    shape = ((2, 0), (2, 0))
    z = target.zero()
    return {
        "1": _grid(target, shape, [[_c(target, 1), z], [z, _c(target, 1)]]),
        "i": _grid(target, shape, [[_c(target, 0, 1), z], [z, _c(target, 0, -1)]]),
        "j": _grid(target, shape, [[z, _c(target, -1)], [_c(target, 1), z]]),
        "k": _grid(target, shape, [[z, _c(target, 0, -1)], [_c(target, 0, -1), z]]),
    }


def _r_to_c(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    return {"1": _grid(target, ((1, 0), (1, 0)), [[_c(target, 1)]])}


def _h_to_mat2(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    return _pauli(target)


def _cl1_to_clc(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    shape = ((1, 0), (1, 0))
    return {"1": _grid(target, shape, [[_c(target, 1)]]), "eps": _grid(target, shape, [[_c(target, 1, name="eps")]])}


def _cl7_to_clc(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    shape = ((1, 0), (1, 0))
    return {"1": _grid(target, shape, [[_c(target, 1)]]), "eps": _grid(target, shape, [[_c(target, 0, 1, name="eps")]])}


def _cl_twisted(sign_b: int) -> Callable[[SuperAlgebra, SuperAlgebra], Dict[str, SuperMatrix]]:
    """a + eps b -> [[a, sign_b b*], [b, a*]] in Mat_{1|1}(C)."""

    def images(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
        shape = ((1, 1), (1, 1))
        z = target.zero()
        numbers = _complex_numbers(target)
        conjugate = {"1": numbers["1"], "i": -numbers["i"]}
        result = {}
        for name in ("1", "i"):
            a = numbers[name]
            result[name] = _grid(target, shape, [[a, z], [z, conjugate[name]]])
            eps_name = "eps" if name == "1" else f"eps{name}"
            result[eps_name] = _grid(target, shape, [[z, conjugate[name] * sign_b], [a, z]])
        return result

    return images


def _cl_quaternionic(with_i: bool) -> Callable[[SuperAlgebra, SuperAlgebra], Dict[str, SuperMatrix]]:
    """a + eps b -> iota(a) + eps iota(b) (times i when with_i) in Mat_2(ClC)."""

    def images(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
        pauli = _pauli(target)
        eps = target.element({"eps": I_UNIT if with_i else ONE})
        result = {}
        for name, matrix in pauli.items():
            result[name] = matrix
            eps_name = "eps" if name == "1" else f"eps{name}"
            result[eps_name] = matrix.map_entries(lambda value: target.mul(eps, value))
        return result

    return images


def _clc_remark(source: SuperAlgebra, target: SuperAlgebra) -> Dict[str, SuperMatrix]:
    """The C-linear map a + eps b -> [[a, b], [b, a]]; a homomorphism, not onto."""
    shape = ((1, 1), (1, 1))
    z = target.zero()
    one = _c(target, 1)
    return {"1": _grid(target, shape, [[one, z], [z, one]]), "eps": _grid(target, shape, [[z, one], [one, z]])}


EMBEDDINGS: Dict[str, Embedding] = {
    e.name: e
    for e in [
        Embedding("R->C", "R", "C_cplx", ((1, 0), (1, 0)), _r_to_c),
        Embedding("H->Mat2(C)", "H", "C_cplx", ((2, 0), (2, 0)), _h_to_mat2),
        Embedding("Cl1R->ClC", "Cl1R", "ClC_cplx", ((1, 0), (1, 0)), _cl1_to_clc),
        Embedding("Cl2R->Mat11(C)", "Cl2R", "C_cplx", ((1, 1), (1, 1)), _cl_twisted(1)),
        Embedding("Cl3R->Mat2(ClC)", "Cl3R", "ClC_cplx", ((2, 0), (2, 0)), _cl_quaternionic(True)),
        Embedding("Cl5R->Mat2(ClC)", "Cl5R", "ClC_cplx", ((2, 0), (2, 0)), _cl_quaternionic(False)),
        Embedding("Cl6R->Mat11(C)", "Cl6R", "C_cplx", ((1, 1), (1, 1)), _cl_twisted(-1)),
        Embedding("Cl7R->ClC", "Cl7R", "ClC_cplx", ((1, 0), (1, 0)), _cl7_to_clc),
        Embedding("ClC->Mat11(C)", "ClC_cplx", "C_cplx", ((1, 1), (1, 1)), _clc_remark, expect_iso=False),
    ]
}


def embedding_images(name: str) -> Dict[str, SuperMatrix]:
    if name not in EMBEDDINGS:
        raise UnknownNameError(f"unknown embedding {name!r}")
    embedding = EMBEDDINGS[name]
    return embedding.images(make_algebra(embedding.source), make_algebra(embedding.target))


def _image_of(images: Dict[str, SuperMatrix], element: AlgElem, target: SuperAlgebra, shape) -> SuperMatrix:
    result = SuperMatrix.zero(target, *shape)
    for index, value in element.coeffs.items():
        result = result + images[element.algebra.names[index]].scale(value)
    return result


def _coordinates(matrix: SuperMatrix) -> Dict[int, Scalar]:
    dim = matrix.algebra.dim
    vector = {}
    for (r, c), value in matrix.entries.items():
        for b, v in value.coeffs.items():
            vector[(r * matrix.ncols + c) * dim + b] = v
    return vector


def check_embedding(name: str) -> EmbeddingReport:
    """
    Verifies one named embedding.

    Args:
        name (str): A key of EMBEDDINGS.

    Returns:
        EmbeddingReport: Homomorphism, parity and spanning results.

    Raises:
        UnknownNameError: If the embedding is not catalogued.
    """
    if name not in EMBEDDINGS:
        raise UnknownNameError(f"unknown embedding {name!r}")
    embedding = EMBEDDINGS[name]
    source, target = make_algebra(embedding.source), make_algebra(embedding.target)
    images = embedding.images(source, target)
    homomorphism = True
    for a in source.basis():
        for b in source.basis():
            lhs = _image_of(images, a, target, embedding.shape) @ _image_of(images, b, target, embedding.shape)
            rhs = _image_of(images, source.mul(a, b), target, embedding.shape)
            if lhs != rhs:
                logger.info(f"{name}: image of {a}*{b} does not match")
                homomorphism = False
    parity_preserving = all(images[n].parity == p for n, p in zip(source.names, source.parities))
    (m, n), _ = embedding.shape
    size = m + n
    vectors: List[Dict[int, Scalar]] = [_coordinates(images[n]) for n in source.names]
    complex_rank = rank(vectors, size * size * target.dim)
    report = EmbeddingReport(name, homomorphism, parity_preserving, complex_rank, size * size * target.dim, embedding.expect_iso)
    logger.info(f"Embedding {name}: {report.to_dict()}")
    return report
