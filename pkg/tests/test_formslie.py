import pytest

from formslie.forms import FORM_FAMILIES, catalog_form, list_forms
from formslie.lie import dagger, gl_basis, group_components, lie_basis, preserves_form
from formslie.quaternionic import QuaternionicForm, phi_j_identities
from formslie.solver import equivariant_homs, gl_equivariant_homs
from formslie.spanning import oriented_rank_check, spanning_check, spanning_check_oriented, weight_count_check, weight_count_homs
from helpers.errors import ConfigurationError, SizeLimitError, UnknownNameError
from superalg.catalog import make_algebra
from superalg.embeddings import embedding_images
from superalg.scalars import ONE, ZERO, scalar
from unoriented.category import UnorientedCategory

CATALOG = [
    "osp(2,1|0)",
    "osp(1,0|2)",
    "osp(0,0|2)",
    "osp_C(1|2)",
    "u(1,1|0,0)",
    "u(1,0|1,0)",
    "osp*(1|1,0)",
    "uq(1,1)",
    "periplectic(1,1)",
    "periplectic(2,-1)",
    "periplectic(1,1,H)",
]


def category_for(form):
    return UnorientedCategory(form.algebra, form.sigma, form.specialization)


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_forms_are_superhermitian(name):
    form = catalog_form(name)
    assert form.check_drop()
    assert form.check_supersymmetric()
    assert form.is_nondegenerate()


@pytest.mark.parametrize("name, error", [
    ("osp(1,0|3)", ConfigurationError),
    ("osp(0,0|0)", ConfigurationError),
    ("periplectic(1,2)", UnknownNameError),
    ("sl(2)", UnknownNameError),
])
def test_invalid_forms(name, error):
    with pytest.raises(error):
        catalog_form(name)


def test_specialization():
    assert catalog_form("osp(2,1|0)").specialization == 3
    assert catalog_form("osp(1,0|2)").specialization == -1
    assert catalog_form("periplectic(2,1)").specialization == 0
    assert catalog_form("periplectic(2,1)").sigma == 1


def test_list_forms_covers_every_family():
    assert {row["family"] for row in list_forms()} == set(FORM_FAMILIES)


@pytest.mark.parametrize("name, dims", [
    ("osp(2,1|0)", (3, 0)),
    ("osp(0,0|2)", (3, 0)),
    ("osp(1,0|2)", (3, 2)),
    ("u(1,1|0,0)", (4, 0)),
    ("osp*(0|1,0)", (3, 0)),
])
def test_lie_superalgebra_dimensions(name, dims):
    lie = lie_basis(catalog_form(name))
    assert lie.dims == dims
    assert lie.check_closed()
    assert lie.check_invariance()


def test_lie_basis_is_antihermitian():
    form = catalog_form("osp*(1|1,0)")
    lie = lie_basis(form)
    for X, _ in lie.elements:
        assert dagger(X, form) == -X


def test_group_components():
    assert len(group_components(catalog_form("osp(2,1|0)"))) == 3
    assert len(group_components(catalog_form("osp(2,0|2)"))) == 1
    assert group_components(catalog_form("osp(0,0|2)")) == []
    assert group_components(catalog_form("u(1,1|0,0)")) == []
    assert group_components(catalog_form("osp*(0|2,0)")) == []
    assert len(group_components(catalog_form("periplectic(2,1)"))) == 1
    for name in ("osp(2,1|0)", "periplectic(2,1)", "osp_C(2|0)"):
        form = catalog_form(name)
        assert all(preserves_form(g, form) for g in group_components(form))


def test_gl_basis_size():
    assert len(gl_basis(make_algebra("H"), 1, 1)) == 16


def test_solver_size_guard():
    with pytest.raises(SizeLimitError):
        equivariant_homs(catalog_form("osp(2,1|0)"), 2, 2, max_unknowns=10)


def test_invariant_bilinear_forms():
    assert len(equivariant_homs(catalog_form("osp(2,1|0)"), 2, 0)) == 1
    assert len(equivariant_homs(catalog_form("osp(2,1|0)"), 1, 0)) == 0


def test_gl_invariants_of_v_and_dual():
    homs = gl_equivariant_homs(make_algebra("R"), 2, 0, "ud", "")
    assert len(homs) == 1


@pytest.mark.parametrize("name, expected", [
    ("osp(2,1|0)", 3),
    ("osp(0,0|2)", 2),
    ("u(1,1|0,0)", 12),
])
def test_fullness(name, expected):
    form = catalog_form(name)
    report = spanning_check(category_for(form), form, 2, 2)
    assert report["rank"] == expected
    assert report["dim"] == expected
    assert report["contained"]
    assert report["ok"]


def test_fullness_periplectic():
    form = catalog_form("periplectic(1,1)")
    report = spanning_check(category_for(form), form, 2, 2)
    assert report["contained"]
    assert report["ok"]
    assert report["rank"] == report["dim"]


@pytest.mark.parametrize("algebra, m, n, word", [("C_real", 1, 1, "uu"), ("H", 1, 0, "ud")])
def test_oriented_fullness(algebra, m, n, word):
    report = spanning_check_oriented(algebra, m, n, word, word)
    assert report["ok"]


def test_oriented_rank():
    report = oriented_rank_check("H", 2, 0, "ud", "ud")
    assert report["count"] == 32
    assert report["independent"]


def test_quaternionic_identities():
    report = phi_j_identities(catalog_form("osp*(1|1,0)"))
    assert report["ok"]


def test_quaternionic_real_part():
    form = catalog_form("osp*(0|1,0)")
    quaternionic = QuaternionicForm(form)
    module = form.module
    e1 = {module.index(0, form.algebra.index("1")): ONE}
    e1j = quaternionic.times_j(e1)
    assert quaternionic.phi_j(e1, e1j) - quaternionic.phi_j(e1j, e1) == scalar(2)
    assert quaternionic.phi_1(e1, e1) == ONE


def test_quaternionic_form_needs_quaternions():
    with pytest.raises(ConfigurationError):
        QuaternionicForm(catalog_form("u(1,0|0,0)"))


@pytest.mark.parametrize("name, r, s, expected", [
    ("u(1,1|0,0)", 2, 2, 12),
    ("u(1,1|0,0)", 1, 1, 2),
    ("u(1,1|0,0)", 2, 0, 2),
    ("u(1,1|0,0)", 1, 0, 0),
    ("u(1,0|0,0)", 1, 1, 2),
])
def test_weight_count_matches_solver(name, r, s, expected):
    report = weight_count_check(catalog_form(name), r, s)
    assert report["counted"] == expected
    assert report["solved"] == expected
    assert report["ok"]


def test_weight_count_needs_even_unitary_form():
    with pytest.raises(ConfigurationError):
        weight_count_homs(catalog_form("osp(2,1|0)"), 1, 1)
    with pytest.raises(ConfigurationError):
        weight_count_homs(catalog_form("u(1,0|1,0)"), 1, 1)


def test_quaternion_matrices_have_positive_determinant():
    images = embedding_images("H->Mat2(C)")
    for coords in [(1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 1), (1, 2, -1, 3)]:
        image = images["1"].scale(scalar(0))
        for label, value in zip(["1", "i", "j", "k"], coords):
            image = image + images[label].scale(scalar(value))
        z = [[image.entry(r, c).coeffs.get(0, ZERO) for c in range(2)] for r in range(2)]
        assert z[0][0] * z[1][1] - z[0][1] * z[1][0] == scalar(sum(x * x for x in coords))


def test_pure_quaternionic_group_is_connected():
    form = catalog_form("osp*(1|0,0)")
    assert group_components(form) == []
    report = spanning_check(category_for(form), form, 1, 1)
    assert report["contained"]
    assert (report["rank"], report["dim"]) == (4, 8)
    assert not report["ok"]
