import pytest

from helpers.errors import AlgebraError, ExpressionSyntaxError, UnknownNameError
from superalg.catalog import DIVISION_ALGEBRAS, INVOLUTIVE_PRESETS, make_algebra, preset_algebra
from superalg.embeddings import EMBEDDINGS, check_embedding
from superalg.scalars import I_UNIT, ONE, ZERO, format_scalar, inverse, nullspace, parse_scalar, rank, scalar
from superalg.supermatrix import SuperMatrix, matrix_algebra, matrix_inverse, op_iso, str_matrix


@pytest.mark.parametrize("text, value", [
    ("3", scalar(3)),
    ("-1/2", scalar(-1) / scalar(2)),
    ("i", I_UNIT),
    ("1/2+3i", scalar(1) / scalar(2) + I_UNIT * scalar(3)),
    ("2-i", scalar(2) - I_UNIT),
    ("1/3 i", I_UNIT / scalar(3)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


def test_format_scalar_is_read_back():
    for value in (ZERO, ONE, -I_UNIT, scalar(2) / scalar(3) + I_UNIT * scalar(5), I_UNIT / scalar(2)):
        assert parse_scalar(format_scalar(value)) == value


def test_parse_scalar_rejects_garbage():
    with pytest.raises(ExpressionSyntaxError):
        parse_scalar("1/0")
    with pytest.raises(ExpressionSyntaxError):
        parse_scalar("x")


def test_rank_and_nullspace():
    rows = [{0: ONE, 1: ONE}, {0: scalar(2), 1: scalar(2)}, {2: I_UNIT}]
    assert rank(rows, 3) == 2
    kernel = nullspace(rows, 3)
    assert len(kernel) == 1
    (vector,) = kernel
    assert vector.get(0, ZERO) == -vector.get(1, ZERO)
    assert vector.get(2, ZERO) == ZERO


def test_inverse_of_singular_matrix_fails():
    with pytest.raises(AlgebraError):
        inverse([[ONE, ONE], [ONE, ONE]])


@pytest.mark.parametrize("name", DIVISION_ALGEBRAS + ("C_real_id", "C_cplx", "ClC_cplx", "T3", "Mat(1|1,R)", "H^op"))
def test_catalog_algebras_are_consistent(name):
    algebra = make_algebra(name)
    assert algebra.check_associative()
    assert algebra.check_unital()
    assert algebra.check_parity()
    assert algebra.check_star()


@pytest.mark.parametrize("name", DIVISION_ALGEBRAS)
def test_dual_basis(name):
    algebra = make_algebra(name)
    for b, dual in zip(algebra.basis(), algebra.dual_basis):
        for c in algebra.basis():
            assert algebra.tau(algebra.mul(dual, c)) == (ONE if b == c else ZERO)


@pytest.mark.parametrize("name", DIVISION_ALGEBRAS)
def test_nakayama_twists_the_frobenius_form(name):
    algebra = make_algebra(name)
    basis = algebra.basis()
    for a in basis:
        for b in basis:
            left = algebra.tau(algebra.mul(a, b))
            right = algebra.tau(algebra.mul(b, algebra.nakayama(a)))
            assert left == right * (-1 if a.parity * b.parity else 1)


@pytest.mark.parametrize("name", DIVISION_ALGEBRAS)
def test_supertrace_vanishes_exactly_with_odd_part(name):
    algebra = make_algebra(name)
    assert algebra.supertrace_vanishes == algebra.has_odd_part


def test_quaternion_arithmetic():
    H = make_algebra("H")
    i, j, k = (H.element({name: 1}) for name in "ijk")
    assert H.mul(i, j) == k
    assert H.mul(j, i) == -k
    assert H.supertrace(H.one()) == scalar(4)
    assert H.supertrace(i) == ZERO
    assert H.inv(i) == -i
    assert H.parse("1 - 2*j + 1/2*k") == H.one() - j * 2 + k * (scalar(1) / scalar(2))


def test_complex_preset_variants():
    assert make_algebra("C_real").inv(make_algebra("C_real").element({"i": 1})).coefficient("i") == -ONE
    assert make_algebra("C_real_id").inv(make_algebra("C_real_id").element({"i": 1})).coefficient("i") == ONE
    assert make_algebra("C_real").supertrace(make_algebra("C_real").one()) == scalar(2)
    assert preset_algebra("(H,⋆)").name == "H"
    assert set(INVOLUTIVE_PRESETS) == {"(R,id)", "(C,id)", "(C,*)", "(H,*)", "(ClC,*)"}


def test_opposite_of_cl1_squares_like_cl7():
    op, cl7 = make_algebra("Cl1R^op"), make_algebra("Cl7R")
    eps = op.index("eps")
    assert op.mul_basis(eps, eps) == cl7.mul_basis(cl7.index("eps"), cl7.index("eps"))


def test_truncated_polynomial():
    T3 = make_algebra("T3")
    x = T3.element({"x": 1})
    assert T3.mul(x, x) == T3.element({"x2": 1})
    assert not T3.mul(x, T3.mul(x, x))
    assert T3.tau(T3.element({"x2": 1})) == ONE


def test_unknown_algebra():
    with pytest.raises(UnknownNameError):
        make_algebra("Octonions")
    with pytest.raises(AlgebraError):
        make_algebra("H").index("eps")


def test_matrix_inverse_and_supertrace():
    H = make_algebra("H")
    i, j = H.element({"i": 1}), H.element({"j": 1})
    X = SuperMatrix.from_rows(H, (2, 0), (2, 0), [[i, H.one()], [H.zero(), j]])
    assert matrix_inverse(X) @ X == SuperMatrix.identity(H, 2, 0)
    assert X @ matrix_inverse(X) == SuperMatrix.identity(H, 2, 0)
    with pytest.raises(AlgebraError):
        matrix_inverse(SuperMatrix.from_rows(H, (2, 0), (2, 0), [[i, i], [i, i]]))
    assert str_matrix(SuperMatrix.identity(H, 2, 1)) == scalar(4)


def test_op_iso_reverses_products():
    C = make_algebra("Cl1R")
    one, eps = C.one(), C.element({"eps": 1})
    X = SuperMatrix.from_rows(C, (1, 1), (1, 1), [[eps, one], [C.zero(), eps]])
    Y = SuperMatrix.from_rows(C, (1, 1), (1, 1), [[one, C.zero()], [eps, one]])
    opposite = C.opposite()
    sign = -1 if X.parity * Y.parity else 1
    assert op_iso(X @ Y, opposite) == (op_iso(Y, opposite) @ op_iso(X, opposite)).scale(sign)


def test_matrix_algebra_dimension_and_form():
    M = matrix_algebra(make_algebra("H"), 2, 0)
    assert M.dim == 16
    assert M.is_frobenius
    assert make_algebra("Mat(1|1,R)").supertrace_vanishes


@pytest.mark.parametrize("name", sorted(EMBEDDINGS))
def test_embeddings(name):
    report = check_embedding(name)
    assert report.homomorphism
    assert report.parity_preserving
    assert report.ok
