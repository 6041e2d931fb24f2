#!/usr/bin/env python3
"""Feed classical-family and principal-series labels through the bound
table and the Jordan-block inequality."""
from hecke.param_catalog import (ClassicalFamily, classical_bound_check,
                                 classical_labels, descriptor_csv,
                                 table1_csv, table1_match,
                                 unitary_ps_descriptor)

print("== the bound table ==")
print(table1_csv())

print("== a classical family, case b: f=1, a=3, a_-=1, torsion t=2 ==")
fam = ClassicalFamily("b", t=2, f=1, a=3, a_minus=1)
lab = classical_labels(fam)
print("component         :", lab.component)
print("q-parameters      :", lab.q_pair.to_json())
print("labels at base q^t:", lab.alpha_base_t, "(integral:", lab.integral_at_t, ")")
print("labels at base q  :", lab.alpha_base_1)
m = table1_match(*lab.triple())
print("table row         :", m.to_json())

print()
print("== Jordan-block bound at N^v/d_rho = 6 ==")
chk = classical_bound_check(ClassicalFamily("b", a=3, a_minus=1, n_dual=6, d_rho=1))
print(chk.to_json())
chk = classical_bound_check(ClassicalFamily("b", a=5, a_minus=-1, n_dual=8, d_rho=1))
print(chk.to_json(), "<- floor((5+1)/2)^2 = 9 exceeds the cap")

print()
print("== unramified unitary principal series, N = 9 ==")
comps = unitary_ps_descriptor(9, False, [("not-skew", 2), ("skew-trivial", 1),
                                         ("trivial", 1)])
print(descriptor_csv(comps))
for c in comps:
    print(c.system + str(c.rank), "->", c.match().to_json())
