"""Coefficient field: exact ratios of integer polynomials in v (v^2 = q-base)."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hecke.qfield import (VR_ONE, VR_ZERO, VRat, pdiv_exact, pgcd, pmul,
                          pnorm, pparse, pstr)


def test_poly_str_parse_roundtrip():
    for coeffs in [(), (1,), (-4, 1, 0, -1), (0, 2), (5,), (0, 0, 7), (0, -1)]:
        p = pnorm(coeffs)
        assert pparse(pstr(p)) == p


def test_poly_div_exact():
    assert pdiv_exact(pnorm((-1, 0, 1)), pnorm((1, 1))) == pnorm((-1, 1))
    with pytest.raises(ArithmeticError):
        pdiv_exact(pnorm((1, 1)), pnorm((0, 1)))
    with pytest.raises(ArithmeticError):
        pdiv_exact(pnorm((1, 0, 1)), pnorm((2,)))  # 1/2 coefficients


def test_poly_gcd_primitive():
    a = pmul(pnorm((-1, 1)), pnorm((1, 1)))
    b = pmul(pnorm((-1, 1)), pnorm((2, 1)))
    assert pgcd(a, b) == pnorm((-1, 1))
    assert pgcd(pnorm((2, 2)), pnorm((4,))) == pnorm((1,))


def test_vrat_cancellation():
    a = VRat(pnorm((-1, 0, 1)), pnorm((1, 1)))  # (v^2-1)/(v+1)
    assert a == VRat(pnorm((-1, 1)))
    # sign normalization: denominator keeps a positive leading coefficient
    b = VRat(pnorm((1,)), pnorm((0, -1)))
    assert str(b) == "(-1)/(v)"


def test_vrat_parse_str_roundtrip():
    for s in ["(v^2-1)/(1)", "(1)/(v^2)", "(-v^3+v-4)/(v-1)", "(0)/(1)", "(2*v)/(1)"]:
        assert str(VRat.parse(s)) == s
    assert VRat.parse("v^2-1") == VRat.parse("(v^2-1)/(1)")


def test_vrat_powers_eval():
    a = VRat.parse("(v^2-1)/(1)")
    assert a * VRat.v_pow(-2) == VRat.parse("(v^2-1)/(v^2)")
    assert VRat.v_pow(-2) * VRat.v_pow(2) == VR_ONE
    assert a.eval(Fraction(3)) == 8
    assert VRat.v_pow(-2).eval(Fraction(2)) == Fraction(1, 4)
    assert (VRat.v_pow(2) ** -1) == VRat.v_pow(-2)


def test_vrat_constants():
    assert VRat.from_fraction(Fraction(3, 4)).as_fraction() == Fraction(3, 4)
    assert VRat.from_fraction(Fraction(0)) == VR_ZERO
    assert not VR_ZERO
    assert VR_ONE.is_one()


_coef = st.integers(min_value=-4, max_value=4)
_poly = st.lists(_coef, min_size=0, max_size=4).map(lambda c: pnorm(tuple(c)))


@given(_poly, _poly, _poly)
def test_vrat_field_axioms(a, b, c):
    x, y, z = VRat(a), VRat(b), VRat(c)
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert x - x == VR_ZERO
    assert x + VR_ZERO == x
    if y:
        assert (x / y) * y == x
