import pytest

from unproj.groebner import (
    EngineBudget,
    Ideal,
    NonMonomialError,
    ResourceLimitError,
    buchberger,
    buchberger_criterion_holds,
    dimension,
    ideals_equal,
    monomial_dimension,
    normal_form,
)
from unproj.polyring import make_ring, parse_poly


@pytest.fixture
def p3(qq):
    return make_ring(["x", "y", "z", "w"], [1, 1, 1, 1], qq)


def _ideal(ring, *texts):
    return Ideal.from_polys(ring, [parse_poly(t, ring) for t in texts])


def test_twisted_cubic(p3):
    ideal = _ideal(p3, "x*z - y^2", "y*w - z^2", "x*w - y*z")
    basis = ideal.groebner()
    assert buchberger_criterion_holds(basis.elements)
    assert all(g.leading_coefficient == p3.field.one for g in basis)
    assert dimension(ideal) == 2
    assert ideal.contains(parse_poly("x*z*w - y^2*w", p3))
    assert not ideal.contains(parse_poly("x*y", p3))


def test_unit_ideal_and_zero_ideal(xyz_ring):
    unit = _ideal(xyz_ring, "x", "x - 1")
    assert unit.groebner().is_unit()
    assert dimension(unit) == -1
    assert len(buchberger([xyz_ring.zero()])) == 0


def test_normal_form_against_basis(xyz_ring):
    basis = buchberger(_ideal(xyz_ring, "x^2 - y", "x*y - z"))
    f = parse_poly("x^3 - x*y + y^2 - x*z", xyz_ring)
    remainder = normal_form(f, basis)
    assert normal_form(remainder, basis) == remainder
    assert normal_form(f - remainder, basis).is_zero()


def test_basis_is_reduced_and_deterministic(xyz_ring, rng):
    gens = ["x^2*y - z", "x*y^2 - x", "y*z - x^2"]
    first = buchberger(_ideal(xyz_ring, *gens))
    second = buchberger(_ideal(xyz_ring, *reversed(gens)))
    assert first.elements == second.elements
    lms = first.leading_monomials()
    for i, a in enumerate(lms):
        for j, g in enumerate(first.elements):
            if i != j:
                assert a not in g.terms


def test_ideals_equal_reports_missing(xyz_ring):
    a = _ideal(xyz_ring, "x", "y")
    b = _ideal(xyz_ring, "x + y", "x - y")
    c = _ideal(xyz_ring, "x")
    assert ideals_equal(a, b) == (True, [])
    equal, missing = ideals_equal(c, a)
    assert not equal
    assert missing == ["g2"]


def test_monomial_dimension():
    # k[x,y,z]/(xy, xz) has dimension 2
    assert monomial_dimension([(1, 1, 0), (1, 0, 1)], 3) == 2
    assert monomial_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == 0
    assert monomial_dimension([(0, 0, 0)], 3) == -1


def test_monomial_dimension_rejects_binomials(xyz_ring):
    with pytest.raises(NonMonomialError):
        monomial_dimension(_ideal(xyz_ring, "x - y"))


def test_budget_overrun(p3):
    ideal = _ideal(p3, "x*z - y^2", "y*w - z^2", "x*w - y*z")
    with pytest.raises(ResourceLimitError) as info:
        buchberger(ideal, budget=EngineBudget(max_pairs=0))
    assert info.value.limit == "max_pairs"


def test_budget_from_env():
    budget = EngineBudget.from_env({"UNPROJ_BUDGET": "1234", "UNPROJ_VERIFY_GB": "1"})
    assert budget.max_pairs == 1234
    assert budget.verify
    assert EngineBudget.from_env({}).verify is False


def test_redundant_generator_is_dropped(xyz_ring):
    x = xyz_ring.gen("x")
    basis = buchberger([x * x, x])
    assert basis.elements == (x,)
    assert dimension(_ideal(xyz_ring, "x*y + z^2", "x")) == 1


@pytest.mark.parametrize(
    "gens",
    [
        ["x^2 - y", "x", "x*y + z^2"],
        ["x*y + z^2", "x^2 - y", "x"],
        ["x", "x*y + z^2", "x^2 - y", "2*x"],
    ],
)
def test_divisible_generators_give_the_same_reduced_basis(xyz_ring, gens):
    basis = buchberger(_ideal(xyz_ring, *gens))
    assert sorted(str(g) for g in basis) == ["x", "y", "z^2"]
    assert buchberger_criterion_holds(basis.elements)
    lms = basis.leading_monomials()
    for i, a in enumerate(lms):
        for j, g in enumerate(basis.elements):
            if i != j:
                assert not any(all(u <= v for u, v in zip(a, m)) for m in g.terms)
