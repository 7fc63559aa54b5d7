import random

import pytest
import sympy

from unproj.campedelli import CampedelliParams, build_surface_ideal
from unproj.campedelli_checks import (
    EXPECTED_SERIES,
    betti_numerator,
    betti_self_dual,
    cone_lemma_check,
    dimension_L_check,
    dimension_R_check,
    genericity_conditions,
    hilbert_and_betti_check,
    monomial_quotient_check,
    reference_L_check,
    surface_invariants,
    surface_quotient,
    verify_group_invariance,
    verify_surface_identities,
    w2_dimension,
)
from unproj.coeff import FieldSpec
from unproj.hilbert import t
from unproj.report import CheckStatus
from unproj.runner import generic_sample
from unproj.symmetry import GroupAction

GF103 = FieldSpec.prime_field(103)
DEFAULT = ["1", "2", "3", "5", "7", "11", "0", "0"]
WITH_ZETA = ["1", "2", "3", "5", "7", "11", "13", "17"]


def test_identities_with_symbolic_r():
    result = verify_surface_identities()
    assert result.check_id == "campedelli.identities.symbolic"
    assert result.status is CheckStatus.PASS, result.details
    assert set(result.details["degrees"].values()) == {3, 4}


def test_identities_and_degrees_for_concrete_r():
    result = verify_surface_identities(CampedelliParams.from_strings(WITH_ZETA, GF103))
    assert result.check_id == "campedelli.identities.concrete"
    assert result.passed, result.details
    assert set(result.details["degrees"].values()) == {3, 4}


def test_invariance_with_symbolic_r():
    result = verify_group_invariance()
    assert result.check_id == "campedelli.invariance.symbolic"
    assert result.status is CheckStatus.PASS, result.details
    assert result.details["W2_dimension"] == 4
    assert result.details["unmatched_generators"] == []
    assert result.notes == ["printed point formula differs at y2, y3"]


def test_invariants_of_the_multilinear_block():
    surface = build_surface_ideal(CampedelliParams.from_strings(DEFAULT))
    assert w2_dimension(surface, GroupAction.surface()) == 4


def test_monomial_quotient_has_dimension_three():
    result = monomial_quotient_check()
    assert result.passed, result.details
    assert result.details["monomial_dimension"] == 3


def test_betti_numerator():
    assert betti_numerator() == sympy.expand(
        1 - 8 * t**3 - 3 * t**4 + 24 * t**5 - 24 * t**7 + 3 * t**8 + 8 * t**9 - t**12
    )
    assert betti_self_dual()


def test_invariants_from_the_expected_series():
    invariants = surface_invariants(EXPECTED_SERIES)
    assert invariants["p_g"] == 5
    assert invariants["P2"] == 18
    assert invariants["K2"] == 12
    assert invariants["chi"] == 6
    assert invariants["P2_matches_K2_plus_chi"]
    assert invariants["quotient_K2"] == 2
    assert invariants["quotient_chi"] == 1


def test_genericity_summary():
    assert genericity_conditions(CampedelliParams.from_strings(DEFAULT)).passed
    bad = genericity_conditions(CampedelliParams.from_strings(["1", "1", "1", "9", "1", "0", "0", "0"]))
    assert bad.status is CheckStatus.FAIL
    assert bad.details["failures"] == [{"condition": "r1*r4 - 9*r2*r3 != 0", "value": "0"}]


def test_custom_sections_keep_the_full_ring():
    params = CampedelliParams.from_strings(DEFAULT, GF103)
    ideal = surface_quotient(params, ["z1 + z2 + z3", "z4", "x4 + x1 + x2 + x3", "y4"])
    assert ideal.ring.ngens == 12
    assert len(ideal) == 18


@pytest.mark.slow
def test_invariance_of_the_concrete_ideal():
    result = verify_group_invariance(CampedelliParams.from_strings(WITH_ZETA, GF103))
    assert result.passed, result.details
    assert result.details["ideal_invariance"] is True


@pytest.mark.slow
def test_dimension_of_R():
    result = dimension_R_check()
    assert result.passed, result.details
    assert result.details["dimension"] == 7


@pytest.mark.slow
def test_reduced_ideal_matches_reference():
    assert reference_L_check().passed


@pytest.mark.slow
def test_dimension_and_hilbert_series_of_L():
    params = CampedelliParams.from_strings(DEFAULT, GF103)
    dim = dimension_L_check(params)
    assert dim.passed, dim.details
    series = hilbert_and_betti_check(params)
    assert series.status is CheckStatus.PASS, series.details
    assert series.details["h_vector"] == [1, 2, 6, 2, 1]
    assert series.details["a_invariant"] == 1
    assert series.details["degree"] == "12"


@pytest.mark.slow
@pytest.mark.parametrize("prime", [103, 31991])
def test_hilbert_series_at_seeded_generic_parameters(prime):
    rng = random.Random(prime)
    field = FieldSpec.prime_field(prime)
    for k in range(1, 4):
        params = generic_sample(field, rng)
        label = f"p{prime}.s{k}"
        series = hilbert_and_betti_check(params, label=label)
        assert series.status is CheckStatus.PASS, series.details
        assert series.details["h_vector"] == [1, 2, 6, 2, 1]
        assert series.primes == [prime]
        assert dimension_L_check(params, label=label).passed


@pytest.mark.slow
def test_cone_lemma():
    result = cone_lemma_check(CampedelliParams.from_strings(DEFAULT, GF103))
    assert result.passed, result.details
    assert result.details["dimension"] == 0
