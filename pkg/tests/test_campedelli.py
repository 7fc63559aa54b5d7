import json
import random

import pytest

import unproj.fixed_locus  # noqa: F401  registers the fixed-locus conditions
from unproj.campedelli import (
    DIMENSION_ANCHOR,
    EXPLICIT_TABLE,
    REDUCED_VARIABLES,
    REDUCTION_ANCHOR,
    CampedelliParams,
    GenericityError,
    build_surface_ideal,
    evaluate_genericity,
    form_eigenvalue_exponent,
    parse_sections,
    reduce_to_A,
    reference_L,
    require_generic,
    surface_ring,
    verify_explicit_table,
)
from unproj.coeff import FieldSpec, UnsupportedFieldError
from unproj.polyring import format_poly, weighted_degree


def test_pfaffians_match_the_explicit_table():
    result = verify_explicit_table()
    assert result.passed, result.details
    assert result.details["generators"] == len(EXPLICIT_TABLE) == 14


def test_params_need_eight_values():
    with pytest.raises(ValueError):
        CampedelliParams.from_strings(["1"] * 7)


def test_params_reject_vanishing_quartic():
    with pytest.raises(GenericityError):
        CampedelliParams.from_strings(["0", "0", "0", "0", "1", "1", "0", "0"])


def test_params_coerce_into_the_field():
    params = CampedelliParams.from_strings(["1", "2", "3", "5", "107", "-1", "0", "0"], FieldSpec.prime_field(103))
    assert params.to_dict() == {"r": ["1", "2", "3", "5", "4", "102", "0", "0"], "field": "GF(103)"}
    assert not params.needs_zeta


def test_load_accepts_array_and_object(tmp_path):
    array = tmp_path / "array.json"
    array.write_text(json.dumps(["1", "2", "3", "5", "7", "11", "0", "0"]), encoding="utf-8")
    wrapped = tmp_path / "wrapped.json"
    wrapped.write_text(json.dumps({"r": ["1", "2", "3", "5", "7", "11", "0", "0"]}), encoding="utf-8")
    assert CampedelliParams.load(array).r == CampedelliParams.load(wrapped).r

    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({"params": []}), encoding="utf-8")
    with pytest.raises(ValueError):
        CampedelliParams.load(broken)


def test_sample_drops_zeta_terms_without_sixth_roots():
    params = CampedelliParams.sample(FieldSpec.prime_field(31991), random.Random(3))
    assert params.r[6] == params.r[7] == 0
    assert all(v != 0 for v in params.r[:6])
    with_roots = CampedelliParams.sample(FieldSpec.prime_field(103), random.Random(3))
    assert all(v != 0 for v in with_roots.r)


def test_symbolic_surface_over_cyclotomic_field():
    surface = build_surface_ideal()
    assert surface.symbolic
    assert surface.ring.field_spec == FieldSpec.cyclotomic6()
    assert len(surface.I) == 14
    assert len(surface.T) == 18
    assert sorted(surface.forms) == ["m0_1", "m0_2", "m1_1", "m2_1", "m3_1", "m3_2", "m4_1", "m5_1"]
    assert [weighted_degree(h) for h in surface.sections.values()] == [1, 1, 1, 2]
    assert weighted_degree(surface.Qs) == 4
    assert surface.ring.to_dict()["grading"] == [1] * 8 + [2] * 4 + [0] * 8


def test_concrete_surface_over_rationals():
    params = CampedelliParams.from_strings(DIMENSION_ANCHOR)
    surface = build_surface_ideal(params)
    assert surface.ring.ngens == 12
    assert sorted(surface.forms) == ["m0_1", "m0_2", "m3_1", "m3_2"]
    assert format_poly(surface.Qs) == "x1*x2*x3*x4"
    assert format_poly(surface.sections["h3"]) == "x4"
    assert format_poly(surface.sections["h4"]) == "y4"


def test_zeta_terms_need_a_sixth_root():
    params = CampedelliParams.from_strings(["1", "2", "3", "5", "7", "11", "13", "0"])
    with pytest.raises(UnsupportedFieldError):
        build_surface_ideal(params)
    over_gf103 = CampedelliParams.from_strings(["1", "2", "3", "5", "7", "11", "13", "0"], FieldSpec.prime_field(103))
    assert len(build_surface_ideal(over_gf103).T) == 18


def test_params_field_must_match():
    params = CampedelliParams.from_strings(DIMENSION_ANCHOR)
    with pytest.raises(ValueError):
        build_surface_ideal(params, field=FieldSpec.prime_field(103))


def test_custom_sections_are_validated():
    ring = surface_ring(FieldSpec.rationals())
    sections = parse_sections(ring, ["z1 + z2 + z3", "z4", "x4", "y4 + x1^2"])
    assert format_poly(sections["h4"]) == "x1^2 + y4"
    with pytest.raises(ValueError):
        parse_sections(ring, ["z1", "z4", "x4"])
    with pytest.raises(ValueError):
        parse_sections(ring, ["z1", "z4", "x4", "y4 + x1"])


def test_reduction_to_A_at_the_anchor():
    params = CampedelliParams.from_strings(REDUCTION_ANCHOR)
    L = reduce_to_A(build_surface_ideal(params))
    assert tuple(L.ring.variables) == REDUCED_VARIABLES
    assert len(L) == 14
    assert L.names[:2] == ["e_sxy_1", "e_szy_1"]
    assert len(reference_L(FieldSpec.rationals())) == 14


def test_reduction_needs_concrete_params():
    with pytest.raises(ValueError):
        reduce_to_A(build_surface_ideal())


def test_eigenvalue_exponent_from_name():
    assert form_eigenvalue_exponent("m4_1") == 4
    assert form_eigenvalue_exponent("m0_2") == 0


def test_genericity_flags_the_fixed_locus_conditions():
    bad = CampedelliParams.from_strings(["1", "1", "1", "9", "1", "0", "0", "0"])
    failing = [e.condition for e in evaluate_genericity(bad) if not e.ok]
    assert failing == ["r1*r4 - 9*r2*r3 != 0"]
    with pytest.raises(GenericityError) as info:
        require_generic(bad)
    assert info.value.condition == "r1*r4 - 9*r2*r3 != 0"


def test_genericity_reports_first_failure():
    params = CampedelliParams.from_strings(["0", "1", "1", "0", "1", "0", "0", "0"])
    failing = [e.condition for e in evaluate_genericity(params) if not e.ok]
    assert failing[0] == "r1 != 0"
    assert "r4 != 0" in failing
    with pytest.raises(GenericityError, match="r1 != 0"):
        require_generic(params)


def test_default_params_are_generic():
    params = CampedelliParams.from_strings(["1", "2", "3", "5", "7", "11", "0", "0"])
    assert all(entry.ok for entry in require_generic(params))


def test_characteristic_three_is_rejected():
    params = CampedelliParams.from_strings(["1", "2", "1", "2", "1", "1", "0", "0"], FieldSpec.prime_field(3))
    entries = {e.condition: e for e in evaluate_genericity(params)}
    assert not entries["characteristic != 3"].ok
