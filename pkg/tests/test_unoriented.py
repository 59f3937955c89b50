import random

import pytest

from helpers.errors import ConfigurationError, TypeMismatchError
from oriented.category import OrientedCategory
from superalg.catalog import INVOLUTIVE_PRESETS, make_algebra
from superalg.scalars import ZERO, scalar
from unoriented.category import UnorientedCategory
from unoriented.relations import check_relations
from unoriented.shifted import ShiftedOrMorphism

PRESETS = sorted(set(INVOLUTIVE_PRESETS.values()))


@pytest.fixture(scope="module")
def reals():
    return UnorientedCategory(make_algebra("R"), 0, 3)


@pytest.fixture(scope="module")
def quaternions():
    return UnorientedCategory(make_algebra("H"), 0, 1)


def random_basis_morphism(category, r, s, rng):
    return category.morphism(rng.choice(category.basis(r, s)), rng.randint(1, 3))


@pytest.mark.parametrize("algebra, r, s, count", [
    ("R", 2, 2, 3),
    ("H", 2, 2, 48),
    ("R", 0, 4, 3),
    ("R", 3, 3, 15),
    ("C_real", 1, 1, 2),
    ("R", 1, 2, 0),
])
def test_basis_counts(algebra, r, s, count):
    assert len(UnorientedCategory(make_algebra(algebra), 0, 1).basis(r, s)) == count


def test_loop_value(reals):
    assert reals.bubble(reals.algebra.one()) == scalar(3)
    loop = reals.compose(reals.generator("cap"), reals.generator("cup"))
    assert loop.scalar_value() == scalar(3)
    assert reals.categorical_trace(reals.identity(1)) == scalar(3)
    assert reals.categorical_trace(reals.generator("cross")) == scalar(3)
    assert reals.categorical_trace(reals.identity(2)) == scalar(9)


def test_trace_needs_an_endomorphism(reals):
    with pytest.raises(TypeMismatchError):
        reals.categorical_trace(reals.generator("cup"))


def test_quaternionic_loops(quaternions):
    H = quaternions.algebra
    assert quaternions.bubble(H.one()) == scalar(4)
    assert quaternions.bubble(H.element({"k": 1})) == ZERO


def test_odd_form_needs_zero_bubbles():
    with pytest.raises(ConfigurationError):
        UnorientedCategory(make_algebra("R"), 1, 2)
    assert UnorientedCategory(make_algebra("R"), 1, 0).d == ZERO


def test_odd_part_forces_zero_bubbles():
    category = UnorientedCategory(make_algebra("ClC"), 1, 5)
    assert category.d == ZERO


def test_non_involutive_algebra_is_rejected():
    with pytest.raises(ConfigurationError):
        UnorientedCategory(make_algebra("Cl1R"), 0, 0)


@pytest.mark.parametrize("sigma", [0, 1])
@pytest.mark.parametrize("name", PRESETS)
def test_relation_suite(name, sigma):
    category = UnorientedCategory(make_algebra(name), sigma, 1 if sigma == 0 else 0)
    failed = [row for row in check_relations(category) if not row["ok"]]
    assert not failed


def test_twisted_zigzag_sign():
    category = UnorientedCategory(make_algebra("R"), 1, 0)
    one = category.identity(1)
    cap, cup = category.generator("cap"), category.generator("cup")
    straight = category.compose(category.tensor(one, cap), category.tensor(cup, one))
    twisted = category.compose(category.tensor(cap, one), category.tensor(one, cup))
    assert straight == one
    assert twisted == one.scale(-1)


def test_token_slides_across_cap_as_inverse(quaternions):
    U = quaternions
    i = U.algebra.element({"i": 1})
    left = U.compose(U.generator("cap"), U.tensor(U.token(i), U.identity(1)))
    right = U.compose(U.generator("cap"), U.tensor(U.identity(1), U.token(i).scale(-1)))
    assert left == right


def test_apply_xi_is_an_involution(quaternions):
    rng = random.Random(11)
    for _ in range(5):
        f = random_basis_morphism(quaternions, 2, 2, rng)
        assert quaternions.apply_xi(quaternions.apply_xi(f)) == f


@pytest.mark.parametrize("name", ["R", "H", "ClC"])
def test_associativity(name):
    category = UnorientedCategory(make_algebra(name), 0, 1)
    rng = random.Random(5)
    for _ in range(10):
        f = random_basis_morphism(category, 2, 2, rng)
        g = random_basis_morphism(category, 2, 2, rng)
        h = random_basis_morphism(category, 0, 2, rng)
        assert category.compose(f, category.compose(g, h)) == category.compose(category.compose(f, g), h)
        assert category.tensor(f, category.tensor(g, h)) == category.tensor(category.tensor(f, g), h)


@pytest.mark.parametrize("name", PRESETS)
@pytest.mark.parametrize("r, s", [(1, 1), (2, 2), (0, 4), (1, 3)])
def test_orientation_expansion_is_faithful(name, r, s):
    category = UnorientedCategory(make_algebra(name), 0, 1)
    report = category.faithfulness(r, s)
    assert report["diagrams"] == len(category.basis(r, s))
    assert report["independent"]


def test_orientation_expansion_json(reals):
    expanded = reals.orientation_expand(reals.generator("cap")).to_json(reals.oriented)
    assert expanded["schema"] == 1
    assert expanded["entries"]


@pytest.mark.parametrize("name, sigma", [("R", 0), ("R", 1), ("H", 0), ("C_real", 1)])
def test_orientation_expansion_is_monoidal(name, sigma):
    category = UnorientedCategory(make_algebra(name), sigma, 1 if sigma == 0 else 0)
    oriented = category.oriented
    rng = random.Random(13)
    for _ in range(4):
        f = random_basis_morphism(category, 2, 2, rng)
        g = random_basis_morphism(category, 0, 2, rng)
        expand = category.orientation_expand
        assert expand(category.compose(f, g)) == expand(f).compose(oriented, expand(g))
        assert expand(category.tensor(f, g)) == expand(f).tensor(oriented, expand(g))


def test_parity_shift_signs():
    category = OrientedCategory(make_algebra("Cl1R"), 0)
    eps = category.token(category.algebra.element({"eps": 1}))
    odd = ShiftedOrMorphism(eps, 0, 0)
    shifted_identity = ShiftedOrMorphism(category.identity("u"), 1, 1)
    assert shifted_identity.tensor(category, odd).base == category.tensor(category.identity("u"), eps).scale(-1)
    assert odd.tensor(category, shifted_identity).base == category.tensor(eps, category.identity("u")).scale(-1)
    assert odd.pi_shift(category).base == eps.scale(-1)
    assert odd.pi_shift(category).pi_shift(category) == odd
    assert odd.parity(category) == 1
    assert odd.pi_shift(category).parity(category) == 1
