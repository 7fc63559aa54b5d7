import pytest

from unproj.campedelli import CampedelliParams, GenericityError, build_surface_ideal
from unproj.coeff import FieldSpec
from unproj.fixed_locus import (
    EXPECTED_ADMISSIBLE,
    REPLAYS,
    eigen_prefilter,
    fixed_locus_check,
    fixed_locus_ideal,
    replay_identities,
    stage4_resolution,
)
from unproj.report import CheckStatus

GF103 = FieldSpec.prime_field(103)
DEFAULT = ["1", "2", "3", "5", "7", "11", "0", "0"]


@pytest.mark.parametrize("t", [2, 3])
def test_eigen_prefilter(t):
    assert eigen_prefilter(t, GF103) == EXPECTED_ADMISSIBLE[t]
    assert eigen_prefilter(t, FieldSpec.cyclotomic6()) == EXPECTED_ADMISSIBLE[t]


@pytest.mark.parametrize("t", [2, 3])
def test_replays_hold_with_symbolic_r(t):
    results = replay_identities(t)
    assert len(results) == sum(1 for replay in REPLAYS if replay.t == t)
    assert [r["replay"] for r in results if not r["ok"]] == []


def test_replays_hold_over_gf103():
    assert all(r["ok"] for r in replay_identities(2, GF103))


def test_derived_relation_matches_the_earlier_print():
    resolution = stage4_resolution()
    assert set(resolution) == {"zeta^2", "zeta^4"}
    for entry in resolution.values():
        assert entry["matches_stage3_print"]
        assert not entry["matches_stage4_print"]


def test_fixed_locus_ideal_adds_the_moved_coordinates():
    surface = build_surface_ideal(CampedelliParams.from_strings(DEFAULT, GF103))
    ideal = fixed_locus_ideal(surface, 3, 1)
    fixed = [name for name in ideal.names if name.startswith("fix_")]
    # g^3 moves only the x and y coordinates by a sign
    assert fixed == ["fix_x1", "fix_x2", "fix_x3", "fix_x4", "fix_y1", "fix_y2", "fix_y3", "fix_y4"]
    assert len(ideal) == 18 + 8


def test_fixed_locus_rejects_other_powers():
    with pytest.raises(ValueError):
        fixed_locus_check(1, CampedelliParams.from_strings(DEFAULT, GF103))


def test_fixed_locus_requires_generic_params():
    bad = CampedelliParams.from_strings(["1", "1", "1", "9", "1", "0", "0", "0"], GF103)
    with pytest.raises(GenericityError):
        fixed_locus_check(2, bad)


@pytest.mark.slow
@pytest.mark.parametrize("t", [2, 3])
def test_action_is_free_over_gf103(t):
    result = fixed_locus_check(t, CampedelliParams.from_strings(DEFAULT, GF103))
    assert result.status is CheckStatus.PASS, result.details
    assert result.check_id == f"fixed_locus.g{t}.params"
    assert set(result.details["dimensions"].values()) == {0}
    assert result.primes == [103]
