import random

import pytest

from formslie.forms import catalog_form
from helpers.errors import ConfigurationError, TypeMismatchError
from incarnate.faithfulness import butte_check, butte_vectors
from incarnate.modules import LinearMap, SuperModule, flip
from incarnate.oriented_functor import eval_oriented, incarnation_for
from incarnate.unoriented_functor import check_compatible, eval_unoriented, incarnation_for_form
from oriented.category import OrientedCategory
from superalg.catalog import make_algebra
from superalg.scalars import ONE, scalar
from unoriented.category import UnorientedCategory


def form_category(name):
    form = catalog_form(name)
    return form, UnorientedCategory(form.algebra, form.sigma, form.specialization)


def random_basis_morphism(category, source, target, rng):
    return category.morphism(rng.choice(category.basis(source, target)), rng.randint(1, 3))


def test_flip_squares_to_identity():
    parities = (0, 1, 1)
    swap = flip(parities, parities)
    assert swap @ swap == LinearMap.identity(swap.source)


def test_tensor_of_odd_maps_carries_a_sign():
    odd = LinearMap((0, 1), (0, 1), {0: {1: ONE}})
    square = odd.tensor(odd)
    assert square.apply({0: ONE}) == {3: ONE}
    assert square.parity == 0


def test_module_parities():
    module = SuperModule(make_algebra("Cl1R"), 1, 1)
    assert module.parities == (0, 1, 1, 0)
    assert module.dim == 4


@pytest.mark.parametrize("name", [
    "osp(2,1|0)",
    "osp(1,0|2)",
    "u(1,1|0,0)",
    "osp*(1|1,0)",
    "periplectic(1,1)",
    "uq(1,0)",
    pytest.param("u(1,1|1,0)", marks=pytest.mark.slow),
    pytest.param("osp(2,1|2)", marks=pytest.mark.slow),
    pytest.param("periplectic(2,1)", marks=pytest.mark.slow),
])
def test_unoriented_functoriality(name):
    form, category = form_category(name)
    incarnation = incarnation_for_form(form)
    rng = random.Random(17)
    shapes = [(0, 2), (2, 2), (2, 0), (1, 1)]
    for _ in range(100):
        r, s = rng.choice(shapes)
        t = rng.choice([t for t in (0, 1, 2) if (s + t) % 2 == 0])
        g = random_basis_morphism(category, r, s, rng)
        f = random_basis_morphism(category, s, t, rng)
        composite = eval_unoriented(category.compose(f, g), category, form, incarnation)
        assert composite == eval_unoriented(f, category, form, incarnation) @ eval_unoriented(g, category, form, incarnation)
        h = random_basis_morphism(category, *rng.choice(shapes), rng)
        tensor = eval_unoriented(category.tensor(g, h), category, form, incarnation)
        assert tensor == eval_unoriented(g, category, form, incarnation).tensor(eval_unoriented(h, category, form, incarnation))


@pytest.mark.parametrize("algebra, m, n", [
    ("R", 2, 1),
    ("H", 1, 0),
    ("Cl1R", 1, 1),
    ("C_real", 1, 1),
    pytest.param("C_real", 2, 1, marks=pytest.mark.slow),
])
def test_oriented_functoriality(algebra, m, n):
    incarnation = incarnation_for(algebra, m, n)
    category = incarnation.category
    rng = random.Random(23)
    balanced = ["ud", "du", ""]
    for _ in range(100):
        if rng.random() < 0.25:
            x = y = z = "uu"
        else:
            x, y, z = (rng.choice(balanced) for _ in range(3))
        g = random_basis_morphism(category, x, y, rng)
        f = random_basis_morphism(category, y, z, rng)
        composite = eval_oriented(category.compose(f, g), category, m, n)
        assert composite == eval_oriented(f, category, m, n) @ eval_oriented(g, category, m, n)
        assert eval_oriented(category.tensor(f, g), category, m, n) == eval_oriented(f, category, m, n).tensor(eval_oriented(g, category, m, n))


def test_oriented_bubble_is_superdimension():
    incarnation = incarnation_for("R", 3, 1)
    category = incarnation.category
    loop = category.compose(category.generator("capL"), category.generator("cupR"))
    image = eval_oriented(loop, category, 3, 1)
    assert image.columns == {0: {0: scalar(2)}}


def test_oriented_evaluation_checks_d():
    category = OrientedCategory(make_algebra("R^op"), 5)
    with pytest.raises(ConfigurationError):
        eval_oriented(category.identity("u"), category, 2, 0)


def test_unoriented_evaluation_checks_compatibility():
    form = catalog_form("osp(2,1|0)")
    wrong = UnorientedCategory(make_algebra("R"), 0, 7)
    with pytest.raises(ConfigurationError):
        eval_unoriented(wrong.identity(1), wrong, form)


def test_loop_realizes_the_specialization():
    form, category = form_category("osp(2,1|0)")
    loop = category.compose(category.generator("cap"), category.generator("cup"))
    assert eval_unoriented(loop, category, form).columns == {0: {0: scalar(3)}}


def test_butte_check_quaternions():
    form, category = form_category("osp*(0|2,0)")
    report = butte_check(category, form, 2, 2)
    assert report["count"] == 48
    assert report["rank"] == 48
    assert report["independent"]
    assert report["pairing_ok"] is True


def test_butte_check_reals():
    form, category = form_category("osp(2,0|0)")
    report = butte_check(category, form, 1, 1)
    assert report["independent"]
    assert report["pairing_ok"] is True


def test_butte_vectors_need_caps_only():
    form, category = form_category("osp(2,0|0)")
    with pytest.raises(TypeMismatchError):
        butte_vectors(category.basis(1, 1)[0], form)
    (diagram,) = category.basis(2, 0)
    assert len(butte_vectors(diagram, form)) == 2


def test_integer_bubble_matches_the_form():
    form = catalog_form("osp(2,1|0)")
    check_compatible(UnorientedCategory(make_algebra("R"), 0, 3), form)
    check_compatible(UnorientedCategory(make_algebra("R"), 0, scalar(3)), form)
    check_compatible(UnorientedCategory(make_algebra("R"), 0, "3"), form)
    with pytest.raises(ConfigurationError):
        check_compatible(UnorientedCategory(make_algebra("R"), 0, -3), form)
    negative = catalog_form("osp(1,0|2)")
    check_compatible(UnorientedCategory(make_algebra("R"), 0, -1), negative)


def test_incarnations_are_cached_per_form():
    first = incarnation_for_form(catalog_form("osp(2,1|0)"))
    assert incarnation_for_form(catalog_form("osp(2,1|0)")) is first
    assert incarnation_for_form(catalog_form("osp(1,0|2)")) is not first
