from math import comb

import pytest

from unproj.campedelli import CampedelliParams, build_surface_ideal, reduce_to_A
from unproj.coeff import FieldSpec
from unproj.groebner import EngineBudget
from unproj.report import CheckStatus
from unproj.smoothness import CODIMENSION, jacobian, minor, minor_indices, smoothness_probe

GF103 = FieldSpec.prime_field(103)
DEFAULT = ["1", "2", "3", "5", "7", "11", "0", "0"]


def test_jacobian_shape_and_minor_count():
    L = reduce_to_A(build_surface_ideal(CampedelliParams.from_strings(DEFAULT, GF103)))
    J = jacobian(L)
    assert (len(J), len(J[0])) == (14, 8)
    indices = minor_indices(len(J), len(J[0]), CODIMENSION)
    assert len(indices) == comb(14, 5) * comb(8, 5) == 112112


def test_minor_of_a_diagonal_block(xyz_ring):
    x, y, z = (xyz_ring.gen(v) for v in "xyz")
    zero = xyz_ring.zero()
    matrix = [[x, zero, zero], [zero, y, zero], [zero, zero, z]]
    assert minor(matrix, (0, 2), (0, 2)) == x * z
    assert minor(matrix, (0, 1), (1, 2)).is_zero()


def test_probe_needs_a_prime_field():
    with pytest.raises(ValueError):
        smoothness_probe(CampedelliParams.from_strings(DEFAULT))


def test_probe_needs_vanishing_zeta_terms():
    params = CampedelliParams.from_strings(["1", "2", "3", "5", "7", "11", "13", "0"], GF103)
    with pytest.raises(ValueError):
        smoothness_probe(params)


def test_probe_reports_resource_limit():
    result = smoothness_probe(CampedelliParams.from_strings(DEFAULT, GF103), EngineBudget(max_pairs=3))
    assert result.status is CheckStatus.RESOURCE_LIMIT
    assert result.check_id == "campedelli.smoothness.params"
    assert "budget exceeded" in result.details["error"]


@pytest.mark.slow
def test_surface_is_smooth_away_from_the_vertex():
    result = smoothness_probe(CampedelliParams.from_strings(DEFAULT, GF103), seed=1)
    assert result.status is CheckStatus.PASS, result.details
    assert result.details["dimension_L"] == 3
    assert result.details["dimension_bound"] <= 0
