import pytest

from unproj.campedelli import CampedelliParams, build_eigenforms, build_surface_ideal, surface_ring
from unproj.coeff import FieldSpec, make_field, primitive_sixth_root
from unproj.groebner import ideals_equal
from unproj.symmetry import (
    GROUP_ORDER,
    GroupAction,
    PointCoordinates,
    apply_group,
    basis_vector_images,
    compare_point_formulas,
)


def test_generator_has_order_six():
    g = GroupAction.surface()
    assert g.power(GROUP_ORDER).is_identity()
    assert not any(g.power(k).is_identity() for k in range(1, GROUP_ORDER))
    assert g.compose(g.inverse()).is_identity()
    assert g.power(7).images == g.images


def test_cube_negates_x_and_y():
    cube = GroupAction.surface().power(3)
    assert cube.image("x1") == (-1, "x1")
    assert cube.image("z2") == (1, "z2")
    assert cube.image("y3") == (-1, "y3")


def test_action_preserves_degrees():
    assert GroupAction.surface().preserves_degrees(surface_ring(FieldSpec.rationals()))


def test_signed_permutations_only():
    with pytest.raises(ValueError):
        GroupAction((("x1", 1, "x2"),))
    with pytest.raises(ValueError):
        GroupAction((("x1", 2, "x1"),))


def test_eigenforms_scale_by_powers_of_zeta():
    field = FieldSpec.cyclotomic6()
    fld = make_field(field)
    zeta = primitive_sixth_root(fld)
    forms = build_eigenforms(surface_ring(field))
    for name, form in forms.items():
        exponent = int(name[1])
        assert apply_group(1, form) == form.scale(fld.pow(zeta, exponent)), name


@pytest.mark.slow
def test_ideal_is_invariant():
    params = CampedelliParams.from_strings(["1", "2", "3", "5", "7", "11", "0", "0"], FieldSpec.prime_field(103))
    T = build_surface_ideal(params).T
    equal, missing = ideals_equal(T, apply_group(1, T))
    assert equal, missing


def test_point_action_is_contragredient():
    ring = surface_ring(FieldSpec.rationals())
    f = ring.gen("x1") + ring.gen("y1") * ring.gen("z3")
    point = PointCoordinates.from_values(FieldSpec.rationals(), {"x1": 2, "x2": 3, "x3": 5, "y1": 7, "y2": 11, "z3": 13})
    moved = apply_group(1, point)
    # f(gP) == (g^-1 f)(P)
    assert moved.evaluate(f) == point.evaluate(apply_group(5, f))


def test_printed_point_formula_disagrees_at_y2_and_y3():
    comparison = compare_point_formulas(FieldSpec.rationals())
    assert [d["coordinate"] for d in comparison["disagree"]] == ["y2", "y3"]
    assert comparison["disagree"][0]["derived"] == "-ay1"
    assert comparison["disagree"][0]["printed"] == "-ay2"
    assert len(comparison["agree"]) == 10


def test_basis_vectors_follow_the_generator():
    expected = {
        "x1": "-x2",
        "x2": "-x3",
        "x3": "-x1",
        "x4": "-x4",
        "z1": "z2",
        "z2": "z3",
        "z3": "z1",
        "z4": "z4",
        "y1": "-y2",
        "y2": "-y3",
        "y3": "-y1",
        "y4": "-y4",
    }
    assert basis_vector_images(FieldSpec.rationals()) == expected
    assert basis_vector_images(FieldSpec.prime_field(103)) == expected


def test_apply_group_rejects_other_targets():
    with pytest.raises(TypeError):
        apply_group(1, "x1")
