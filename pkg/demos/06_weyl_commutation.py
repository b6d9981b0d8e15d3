"""Weyl systems and the Heisenberg group acting on entire functions.

Everything is exact operator algebra on exponential-polynomial forms, so
the canonical commutation phases come out at machine precision: the
exchange relation W(p)W(q) = exp(-Im<p|q>) W(q)W(p), its additive form,
the generator commutator [h_p, h_q] = -Im<p|q>, and the Heisenberg
representation X(a,b,t) -> exp(t) M_{b#} T_a as an exact homomorphism.
"""

import numpy as np

from symwiener.hardy import epf_constant, evaluate, plain_context
from symwiener.hs_algebra import HsElement, QuaternionPair
from symwiener.rng import make_rng
from symwiener.weyl import (
    HeisenbergElement,
    generator_commutator_defect,
    heisenberg_mul,
    im_pairing_ctx,
    random_label,
    random_points,
    schrodinger_rep,
    standard_test_battery,
    weyl_additivity_defect,
    weyl_commutation_defect,
)

d = 2
ctx = plain_context(d)
rng = make_rng(6, 0)
pts = random_points(ctx, rng, 8)
battery = standard_test_battery(ctx, rng)

e1 = HsElement.basis(d, 1)
p = QuaternionPair(e1, HsElement.zero(d))           # pure shift label
q = QuaternionPair(HsElement.zero(d), e1)           # pure multiplier label
print(f"Im<p|q> for the crossed single-letter pair: {im_pairing_ctx(ctx, p, q):.1f}")
defect, phase = weyl_commutation_defect(p, q, pts, epf_constant(ctx))
print(f"exchange defect {defect:.2e}, reported phase datum e^Im = {phase:.6f}")

for name, f in zip(["1", "chi_1", "chi_1 chi_2", "exp"], battery):
    pp, qq = random_label(ctx, rng), random_label(ctx, rng)
    dd, _ = weyl_commutation_defect(pp, qq, pts, f)
    aa = weyl_additivity_defect(pp, qq, pts, f)
    gg = generator_commutator_defect(pp, qq, pts, f)
    print(f"test function {name:<12} exchange {dd:.2e}  additivity {aa:.2e}  generators {gg:.2e}")

x = HeisenbergElement(e1, HsElement.zero(d), 0.0)
y = HeisenbergElement(HsElement.zero(d), e1, 0.0)
xy = heisenberg_mul(x, y)
print(f"\nblock law puts the pairing in the centre: t component of xy = {xy.t:.1f}")
f = battery[3]
lhs = schrodinger_rep(xy, f)
rhs = schrodinger_rep(x, schrodinger_rep(y, f))
gap = max(abs(evaluate(lhs, c) - evaluate(rhs, c)) for c in pts)
print(f"representation homomorphism defect on the exponential test function: {gap:.2e}")
