"""Laurent polynomials in X over the v-field: exact division, shaped roots."""
import pytest

from hecke.qfield import VRat
from hecke.xlaurent import (L_ONE, Laurent, LaurentRatio, div_exact,
                            shaped_roots, synth_div)


def _x(e, c=1):
    return Laurent.x_pow(e, c)


def test_arithmetic_and_inversion():
    f = _x(1) + Laurent.const(2) + _x(-1)
    assert f.inv_x() == f
    assert (f - f).is_zero()
    assert f * L_ONE == f
    g = _x(1) - _x(-1)
    assert g.inv_x() == -g


def test_div_exact():
    # x^2 - x^{-2} = (1 - x^{-2}) (x^2 + 1)
    f = _x(2) - _x(-2)
    g = L_ONE - _x(-2)
    assert div_exact(f, g) == _x(2) + L_ONE
    with pytest.raises(ArithmeticError):
        div_exact(_x(1) - Laurent.const(3), g)


def test_synth_div():
    q = VRat.v_pow(2)
    f = (_x(1) - Laurent.const(q)) * (_x(1) - Laurent.const(q ** -1))
    quot, rem = synth_div(f, q)
    assert rem.is_zero()
    quot2, rem2 = synth_div(f, VRat.from_fraction(3))
    assert not rem2.is_zero()


def test_shaped_roots():
    one = VRat.v_pow(0)
    f = ((L_ONE - _x(1)) * (L_ONE + _x(1))
         * (L_ONE - _x(1, VRat.v_pow(-2))) * (L_ONE - _x(1, VRat.v_pow(-2))))
    roots, leftover = shaped_roots(f)
    assert roots == {(1, 0): 1, (-1, 0): 1, (1, 2): 2}
    assert len(leftover.terms()) == 1  # pure monomial, no further roots
    assert shaped_roots(Laurent.const(5))[0] == {}


def test_ratio_equality_cross_multiplied():
    a = LaurentRatio(_x(1) - L_ONE, _x(1) + L_ONE)
    b = LaurentRatio(_x(2) - _x(1), _x(2) + _x(1))
    assert a == b
    assert a * LaurentRatio(_x(1) + L_ONE) == LaurentRatio(_x(1) - L_ONE)
    assert (a - b).is_zero()


def test_ratio_inversion_symmetry():
    f = LaurentRatio(_x(1) + _x(-1), _x(2) + _x(-2))
    assert f.inv_x() == f
