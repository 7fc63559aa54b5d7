import pytest
import sympy

from unproj.groebner import Ideal
from unproj.hilbert import (
    HilbertSeries,
    InhomogeneousIdealError,
    hilbert_series,
    hilbert_series_of_monomials,
    t,
)
from unproj.polyring import make_ring, parse_poly


def _exponents(weights, degree):
    if not weights:
        if degree == 0:
            yield ()
        return
    for e in range(degree // weights[0] + 1):
        for rest in _exponents(weights[1:], degree - e * weights[0]):
            yield (e,) + rest


def _standard_monomials(gens, weights, degree):
    count = 0
    for exps in _exponents(weights, degree):
        if any(all(e >= g for e, g in zip(exps, gen)) for gen in gens):
            continue
        count += 1
    return count


def test_matches_brute_force_on_random_monomial_ideals(rng):
    for _ in range(20):
        nvars = rng.randint(1, 6)
        weights = tuple(rng.choice([1, 1, 2]) for _ in range(nvars))
        gens = [tuple(rng.randint(0, 3) for _ in range(nvars)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)] or [tuple([1] + [0] * (nvars - 1))]
        series = hilbert_series_of_monomials(gens, weights)
        expected = [_standard_monomials(gens, weights, d) for d in range(13)]
        assert series.coefficients(12) == expected


def test_polynomial_ring_series():
    series = hilbert_series_of_monomials([], (1, 1, 1))
    assert series == HilbertSeries((1,), (1, 1, 1))
    assert series.pole_order() == 3
    assert series.coefficients(3) == [1, 3, 6, 10]


def test_equality_is_by_cross_multiplication():
    # (1 + t) / (1 - t^2) == 1 / (1 - t)
    assert HilbertSeries((1, 1), (2,)) == HilbertSeries((1,), (1,))
    assert HilbertSeries((1, 1), (2,)) != HilbertSeries((1,), (1, 1))


def test_reduced_numerator_degree_and_pole():
    series = HilbertSeries((1, 2, 6, 2, 1), (1, 1, 1))
    assert series.reduced_numerator() == [1, 2, 6, 2, 1]
    assert series.degree() == 12
    assert series.pole_order() == 3
    assert series.coefficients(2) == [1, 5, 18]


def test_from_expr_with_negative_coefficients():
    numerator = sympy.expand((1 - t) ** 2)
    series = HilbertSeries.from_expr(numerator, (1, 1, 1))
    assert series == HilbertSeries((1,), (1,))


def test_hilbert_series_of_ideal(qq):
    ring = make_ring(["x", "y", "z"], [1, 1, 1], qq)
    ideal = Ideal.from_polys(ring, [parse_poly("x*y - z^2", ring)])
    series = hilbert_series(ideal)
    # hypersurface of degree 2 in P^2
    assert series == HilbertSeries((1, 0, -1), (1, 1, 1))
    assert series.degree() == 2


def test_inhomogeneous_ideal_is_rejected(xyz_ring):
    with pytest.raises(InhomogeneousIdealError):
        hilbert_series(Ideal.from_polys(xyz_ring, [parse_poly("x^2 - y", xyz_ring)]))


def test_ring_with_parameters_is_rejected(qq):
    ring = make_ring(["x", "y", "r"], [1, 1, 1], qq, grading=[1, 1, 0])
    with pytest.raises(ValueError, match="parameter"):
        hilbert_series(Ideal.from_polys(ring, [parse_poly("r*x^2 - y^2", ring)]))
