import random

import pytest

from unproj.coeff import FieldSpec
from unproj.polyring import format_poly, weighted_degree
from unproj.report import CheckStatus
from unproj.unprojection import (
    GenericConfig,
    base_change_regular_sequence_check,
    build_ambient,
    build_I,
    build_J,
    build_Q,
    expected_generator_count,
    linear_forms_regular_check,
    mixed_r_labels,
    r_labels,
    random_r_values,
    regular_sequence_xi_xj,
    regular_sequence_xp_zp,
    second_partials,
    specialization_check,
    verify_codimension,
    verify_generators,
    verify_identities,
    verify_unprojection_pair,
    verify_unprojection_variable,
)


def test_config_rejects_small_n():
    with pytest.raises(ValueError):
        GenericConfig(1)


def test_r_labels_are_lexicographic():
    assert r_labels(2) == ["r00", "r01", "r10", "r11"]
    assert mixed_r_labels(3) == ["r001", "r010", "r011", "r100", "r101", "r110"]


def test_ambient_ring_weights():
    ring = build_ambient(GenericConfig(3))
    assert ring.ngens == 6 + 8 + 3
    assert ring.weight("x1") == 1
    assert ring.weight("r101") == 1
    assert ring.weight("y2") == 2
    assert build_ambient(GenericConfig(3), 1).variables[-1] == "y1"
    with pytest.raises(ValueError):
        build_ambient(GenericConfig(3), 4)


def test_Q_for_two_stages():
    Q = build_Q(GenericConfig(2))
    assert format_poly(Q) == "x1*x2*r00 + x1*z2*r01 + x2*z1*r10 + z1*z2*r11"
    assert weighted_degree(Q) == 3


def test_second_partials_pick_out_the_r_coefficients():
    partials = second_partials(GenericConfig(2), 1, 2)
    assert [format_poly(p) for p in partials] == ["r00", "r01", "r10", "r11"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generator_counts_and_degrees(n):
    config = GenericConfig(n)
    result = verify_generators(config)
    assert result.status is CheckStatus.PASS, result.details
    assert result.details["counts"] == {p: expected_generator_count(p) for p in range(n + 1)}


def test_generator_names_for_three_stages():
    ideal = build_I(GenericConfig(3), 3)
    assert ideal.names == [
        "e_xy_1",
        "e_zy_1",
        "e_xy_2",
        "e_zy_2",
        "e_xy_3",
        "e_zy_3",
        "e_y_12",
        "e_y_13",
        "e_y_23",
    ]
    assert list(build_I(GenericConfig(3), 0).generators) == ["Q"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_identities_hold(n):
    config = GenericConfig(n)
    for p in range(1, n + 1):
        result = verify_identities(config, p)
        assert result.status is CheckStatus.PASS, result.details


def test_identities_hold_over_a_prime_field():
    config = GenericConfig(3, FieldSpec.prime_field(31991))
    assert verify_identities(config, 3).passed


def test_J_is_generated_by_variables():
    J = build_J(GenericConfig(3), 2)
    assert J.names == ["x3", "z3", "y1", "y2"]
    with pytest.raises(ValueError):
        build_J(GenericConfig(3), 3)


@pytest.mark.parametrize("n,p", [(2, 1), (2, 2), (3, 1), (3, 3), (4, 2)])
def test_specialization_matches_closed_forms(n, p):
    result = specialization_check(GenericConfig(n), p)
    assert result.status is CheckStatus.PASS, result.details
    assert result.details["monomial_dimension"] == result.details["expected"] == 2 * n - 2


def test_specialization_rejects_a_smaller_dimension(monkeypatch):
    monkeypatch.setattr("unproj.unprojection.monomial_dimension", lambda monomials, nvars: 1)
    result = specialization_check(GenericConfig(3), 2)
    assert result.status is CheckStatus.FAIL
    assert result.details["failures"] == [{"monomial_dimension": 1, "expected": 4}]


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (4, 4)])
def test_base_change_sequence(n, p):
    result = base_change_regular_sequence_check(GenericConfig(n), p)
    assert result.status is CheckStatus.PASS, result.details


def test_codimension_two_stages_symbolic():
    result = verify_codimension(GenericConfig(2), 2)
    assert result.check_id == "structural.n2.codimension.p2.symbolic"
    assert result.status is CheckStatus.PASS, result.details
    assert result.details["codimension"] == 3


def test_codimension_with_random_r_over_prime_field():
    config = GenericConfig(3, FieldSpec.prime_field(31991))
    values = random_r_values(config, random.Random(7))
    result = verify_codimension(config, 3, values, label="s1")
    assert result.check_id == "structural.n3.codimension.p3.s1"
    assert result.passed, result.details
    assert result.primes == [31991]
    assert result.details["prime"] == 31991


def test_unprojection_pair_and_variable_for_two_stages():
    config = GenericConfig(2)
    assert verify_unprojection_pair(config, 1).passed
    assert verify_unprojection_pair(config, 2).passed
    assert verify_unprojection_variable(config, 2).passed
    with pytest.raises(ValueError):
        verify_unprojection_variable(config, 1)


def test_regular_sequences_for_two_stages():
    config = GenericConfig(2)
    assert regular_sequence_xp_zp(config, 2).passed
    assert regular_sequence_xi_xj(config, 2, 1, 2).passed


@pytest.mark.slow
def test_three_stage_groebner_checks():
    config = GenericConfig(3)
    assert verify_codimension(config, 3).passed
    assert verify_unprojection_variable(config, 3).passed
    assert linear_forms_regular_check(config, 2, 3, random.Random(1)).passed


def test_linear_forms_count_is_bounded():
    with pytest.raises(ValueError):
        linear_forms_regular_check(GenericConfig(2), 1, 4, random.Random(0))
