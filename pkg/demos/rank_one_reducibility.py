#!/usr/bin/env python3
"""Rank-one walkthrough: mu-factor poles, J-matrix composition, and the
reducibility points they pin down."""
from fractions import Fraction

from hecke.intertwiner_rank1 import (compose, composite_scalar,
                                     is_scalar_identity, j_matrix,
                                     reciprocal_scalar_profile,
                                     reducibility_points)
from hecke.label_params import q_power_str
from hecke.mu_function import mu_factor, poles_zeros, q_from_poles

print("== mu-factor for (q_alpha, q_alpha*) = (q^2, q) ==")
f = mu_factor(Fraction(2), Fraction(1))
print("numerator  :", f.num.to_str())
print("denominator:", f.den.to_str())

prof = poles_zeros(f)
print("profile    :", prof.to_json())

pair = q_from_poles(prof)
print("recovered  :", pair.to_json())
assert pair == f.pair

print()
print("== J-matrices of the split rank-one case ==")
a, b = j_matrix("P->Pop"), j_matrix("Pop->P")
for name, m in (("P->Pop", a), ("Pop->P", b)):
    print(name)
    for row in m.to_json()["entries"]:
        print("   ", row)

s = composite_scalar()
print("composite scalar:", s.to_str("z"))
print("scalar x identity, both orders:",
      is_scalar_identity(compose(a, b), s) and
      is_scalar_identity(compose(b, a), s))

print()
print("== reducibility points ==")
rp = reducibility_points()
print("points     :", rp.to_json())
print("1/scalar   :", reciprocal_scalar_profile().to_json())
print("so the induced representation reduces at X_alpha =",
      q_power_str(rp.e_alpha), "and", q_power_str(-rp.e_alpha))
