from fractions import Fraction

import pytest

from unproj.coeff import (
    Cyc6,
    FieldError,
    FieldSpec,
    UnsupportedFieldError,
    make_field,
    multiplicative_order,
    primitive_sixth_root,
    sixth_roots_of_unity,
)


def test_parse_field_specs():
    assert FieldSpec.parse("QQ") == FieldSpec.rationals()
    assert FieldSpec.parse("GF(103)") == FieldSpec.prime_field(103)
    assert FieldSpec.parse("31991") == FieldSpec.prime_field(31991)
    assert FieldSpec.parse("cyclotomic6") == FieldSpec.cyclotomic6()
    with pytest.raises(FieldError):
        FieldSpec.parse("GF(100)")
    with pytest.raises(FieldError):
        FieldSpec.parse("reals")


def test_prime_field_arithmetic(gf31):
    fld = make_field(gf31)
    assert fld.add(30, 5) == 4
    assert fld.neg(1) == 30
    assert fld.mul(fld.inv(7), 7) == 1
    assert fld.parse("1/2") == 16
    with pytest.raises(ZeroDivisionError):
        fld.inv(0)


def test_rational_to_prime_needs_invertible_denominator():
    fld = make_field(FieldSpec.prime_field(7))
    with pytest.raises(UnsupportedFieldError):
        fld.from_fraction(Fraction(1, 14))


def test_cyclotomic_w_is_primitive_sixth_root():
    fld = make_field(FieldSpec.cyclotomic6())
    w = primitive_sixth_root(fld)
    assert w == Cyc6(Fraction(0), Fraction(1))
    assert fld.mul(w, w) == fld.sub(w, fld.one)
    assert fld.pow(w, 3) == fld.neg(fld.one)
    assert multiplicative_order(fld, w) == 6
    assert fld.mul(w, fld.inv(w)) == fld.one


def test_cyclotomic_parse_and_format():
    fld = make_field(FieldSpec.cyclotomic6())
    assert fld.parse("2-3*w") == Cyc6(Fraction(2), Fraction(-3))
    assert fld.parse("w") == Cyc6(Fraction(0), Fraction(1))
    assert fld.parse("-w") == Cyc6(Fraction(0), Fraction(-1))
    assert fld.format(fld.parse("1/2+w")) == "1/2+1*w"


def test_sixth_roots_over_prime_fields(gf103):
    fld = make_field(gf103)
    roots = sixth_roots_of_unity(fld)
    assert len(set(roots)) == 6
    assert multiplicative_order(fld, roots[1]) == 6
    assert all(fld.pow(r, 6) == 1 for r in roots)
    with pytest.raises(UnsupportedFieldError):
        primitive_sixth_root(make_field(FieldSpec.prime_field(31991)))


def test_random_inverse_round_trips(gf31, rng):
    for spec in (gf31, FieldSpec.rationals(), FieldSpec.cyclotomic6()):
        fld = make_field(spec)
        for _ in range(50):
            x = fld.random_element(rng)
            if fld.is_zero(x):
                continue
            assert fld.mul(x, fld.inv(x)) == fld.one
