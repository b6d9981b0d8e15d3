"""The diagonal one-parameter Weyl group and its Gaussian average.

Over the geometrically weighted letters, W_t is an exact one-parameter
group whose quadratic prefactor carries the truncated weight sum
S_d = 2 - 2^-d.  Averaging W_t against the heat kernel exp(-t^2/4r) by
Gauss-Hermite quadrature yields a semigroup in r that solves
dw/dr = h^2 w, which the script checks by composition, kernel moments
and a central-difference residual.
"""

from symwiener.hardy import evaluate
from symwiener.rng import make_rng
from symwiener.schrodinger import (
    WeightedContext,
    expected_gaussian_moment,
    gauss_hermite_rule,
    gaussian_moment,
    gaussian_semigroup_apply,
    schrodinger_residual,
    weyl_group_element,
)
from symwiener.weyl import random_points, standard_test_battery

wctx = WeightedContext(2)
ctx = wctx.hardy()
rng = make_rng(7, 0)
pts = random_points(ctx, rng, 5, scale=0.4)
f = standard_test_battery(ctx, rng)[1]

print(f"letter weight sum at d = {wctx.d}: {wctx.weight_sum():.4f} "
      f"(tail {wctx.weight_tail():.4f}, untruncated value 2)")

lhs = weyl_group_element(0.8, f, wctx)
rhs = weyl_group_element(0.5, weyl_group_element(0.3, f, wctx), wctx)
print("one-parameter group defect W_{0.8} vs W_{0.5}W_{0.3}:",
      f"{max(abs(evaluate(lhs, c) - evaluate(rhs, c)) for c in pts):.2e}")

rule = gauss_hermite_rule(0.1, 64)
for n in range(1, 5):
    print(f"kernel moment t^{2*n}: quadrature {gaussian_moment(rule, n):.10f} "
          f"closed form {expected_gaussian_moment(0.1, n):.10f}")

inner, _ = gaussian_semigroup_apply(f, 0.1, wctx, q=64, estimate_error=False)
twice, _ = gaussian_semigroup_apply(inner, 0.1, wctx, q=64, estimate_error=False)
once, err = gaussian_semigroup_apply(f, 0.2, wctx, q=64)
print(f"\nsemigroup composition defect: "
      f"{max(abs(evaluate(twice, c) - evaluate(once, c)) for c in pts):.2e} "
      f"(node-doubling estimate {err:.1e})")

res, scale = schrodinger_residual(f, 0.1, 1e-4, wctx, q=64, points=pts)
print(f"evolution residual |dw/dr - h^2 w| = {res:.2e} against scale {scale:.3f}")
for eps in (1e-3, 5e-4, 2.5e-4):
    r_eps, _ = schrodinger_residual(f, 0.1, eps, wctx, q=48, points=pts)
    print(f"  eps = {eps:.1e}: residual {r_eps:.3e}")
