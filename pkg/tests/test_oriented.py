import random

import pytest

from helpers.errors import ConfigurationError, TypeMismatchError
from oriented.category import OrientedCategory
from oriented.diagram import DOWN, UP
from oriented.relations import check_relations, relation_suite
from superalg.algebra import SuperAlgebra
from superalg.catalog import DIVISION_ALGEBRAS, make_algebra
from superalg.scalars import ZERO, scalar


@pytest.fixture(scope="module")
def quaternions():
    return OrientedCategory(make_algebra("H"), 2)


def random_basis_morphism(category, source, target, rng):
    basis = category.basis(source, target)
    return category.morphism(rng.choice(basis), rng.randint(1, 3))


def test_generators(quaternions):
    H = quaternions.algebra
    up = quaternions.identity(UP)
    assert quaternions.token(H.one()) == up
    a, b = H.element({"i": 1}), H.element({"j": 1})
    assert quaternions.token(a * 2 + b) == quaternions.token(a).scale(2) + quaternions.token(b)
    cup = quaternions.generator("cupL")
    assert (cup.source, cup.target) == ("", "ud")


def test_composition_identities(quaternions):
    C = quaternions
    H = C.algebra
    i, j = H.element({"i": 1}), H.element({"j": 1})
    assert C.compose(C.generator("cross"), C.generator("cross")) == C.identity("uu")
    assert C.compose(C.token(i), C.token(j)) == C.token(H.mul(i, j))
    zigzag = C.compose(C.tensor(C.generator("capL"), C.identity(DOWN)), C.tensor(C.identity(DOWN), C.generator("cupL")))
    assert zigzag == C.identity(DOWN)
    assert C.bubble(i) == ZERO
    assert C.bubble(H.one()) == scalar(8)


def test_compose_type_mismatch(quaternions):
    with pytest.raises(TypeMismatchError):
        quaternions.compose(quaternions.identity("uu"), quaternions.identity("u"))


def test_algebra_without_frobenius_form_is_rejected():
    bare = SuperAlgebra("bare", [("1", 0)], {(0, 0): {0: 1}}, {0: 1})
    with pytest.raises(ConfigurationError):
        OrientedCategory(bare)


def test_tensor_unit_and_odd_interchange():
    C = OrientedCategory(make_algebra("Cl1R"), 0)
    eps = C.algebra.element({"eps": 1})
    empty = C.identity("")
    token = C.token(eps)
    assert C.tensor(token, empty) == token
    assert C.tensor(C.identity("u"), C.identity("d")) == C.identity("ud")
    lower_left = C.compose(C.tensor(C.identity(UP), token), C.tensor(token, C.identity(UP)))
    lower_right = C.compose(C.tensor(token, C.identity(UP)), C.tensor(C.identity(UP), token))
    assert lower_left == lower_right.scale(-1)


@pytest.mark.parametrize("source, target, algebra, count", [
    ("u", "u", "R", 1),
    ("ud", "ud", "H", 32),
    ("uu", "uu", "R", 2),
    ("u", "d", "R", 0),
    ("", "ud", "C_real", 2),
    ("uud", "u", "R", 2),
])
def test_basis_counts(source, target, algebra, count):
    assert len(OrientedCategory(make_algebra(algebra), 1).basis(source, target)) == count


def test_categorical_trace():
    R = OrientedCategory(make_algebra("R"), 3)
    assert R.categorical_trace(R.identity(UP)) == scalar(3)
    assert R.categorical_trace(R.generator("cross")) == scalar(3)
    assert R.categorical_trace(R.identity("uu")) == scalar(9)
    C = OrientedCategory(make_algebra("C_real"), 5)
    assert C.categorical_trace(C.token(C.algebra.element({"i": 1}))) == ZERO
    with pytest.raises(TypeMismatchError):
        R.categorical_trace(R.generator("cupL"))


@pytest.mark.parametrize("name", DIVISION_ALGEBRAS)
def test_relation_suite(name):
    category = OrientedCategory(make_algebra(name), 1)
    basis = category.algebra.basis()
    labels = basis if len(basis) <= 4 else [basis[0], basis[1], basis[len(basis) // 2], basis[-1]]
    failed = [row for row in check_relations(category, labels) if not row["ok"]]
    assert not failed


def test_relation_suite_names_are_unique(quaternions):
    one = quaternions.algebra.one()
    names = [name for name, _, _ in relation_suite(quaternions, one, one)]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("name", ["H", "Cl3R"])
def test_associativity_and_interchange(name):
    category = OrientedCategory(make_algebra(name), 1)
    rng = random.Random(7)
    balanced = ["ud", "du"]
    for _ in range(15):
        if rng.random() < 0.25:
            x = y = z = w = "uu"
        else:
            x, y, z, w = (rng.choice(balanced) for _ in range(4))
        f = random_basis_morphism(category, z, w, rng)
        g = random_basis_morphism(category, y, z, rng)
        h = random_basis_morphism(category, x, y, rng)
        assert category.compose(f, category.compose(g, h)) == category.compose(category.compose(f, g), h)
        assert category.tensor(f, category.tensor(g, h)) == category.tensor(category.tensor(f, g), h)


def test_odd_part_makes_d_irrelevant():
    rng = random.Random(3)
    zero, five = OrientedCategory(make_algebra("Cl2R"), 0), OrientedCategory(make_algebra("Cl2R"), 5)
    for _ in range(10):
        f = random_basis_morphism(zero, "ud", "ud", rng)
        g = random_basis_morphism(zero, "ud", "ud", rng)
        assert zero.compose(f, g) == five.compose(f, g)
