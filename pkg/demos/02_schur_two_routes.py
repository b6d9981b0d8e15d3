"""Schur polynomials by two routes, and the power-sum expansion.

The determinant ratio is fast but refuses near-coincident points; the
semistandard-tableau sum is singularity-free and serves as its oracle.
The n-th power of t1 + ... + tl expands in the Schur basis with the
standard-tableau counts as coefficients.
"""

import numpy as np

from symwiener.rng import make_rng
from symwiener.schur import (
    SchurDegenerateError,
    frobenius_expansion,
    schur_bialternant,
    schur_tableau_sum,
)

rng = make_rng(2, 0)
t = rng.standard_normal(3) + 1j * rng.standard_normal(3)

for lam in [(1,), (2,), (2, 1), (3, 1)]:
    det_route = schur_bialternant(lam, t)
    tab_route = schur_tableau_sum(lam, t)
    print(f"s_{lam}: determinant {det_route:.12f}  tableaux {tab_route:.12f}  "
          f"gap {abs(det_route - tab_route):.2e}")

print("\nnear-coincident points are refused by the determinant route:")
try:
    schur_bialternant((2,), [1.0, 1.0 + 1e-12])
except SchurDegenerateError as exc:
    print("  ", exc)
print("tableau route there:", schur_tableau_sum((2,), [1.0, 1.0 + 1e-12]))

n = 4
print(f"\n(t1+t2+t3)^{n} in the Schur basis (coefficient = tableau count):")
total = 0.0 + 0.0j
for lam, mult in frobenius_expansion(n).items():
    if len(lam) <= 3:
        total += mult * schur_tableau_sum(lam, t)
        print(f"  {mult} * s_{lam}")
direct = complex(np.sum(t)) ** n
print(f"expansion {total:.12f} vs direct power {direct:.12f}")
