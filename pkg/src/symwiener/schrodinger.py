"""Geometrically weighted coordinates, the diagonal one-parameter Weyl
group, the Gaussian semigroup obtained by averaging it against a heat
kernel, and residual checks for the associated Cauchy problem.

Everything here runs over the weighted context in which the letter k
carries pairing weight 2^-k.  Writing e = sum_{k<=d} e_k and
S_d = sum_{k<=d} 2^-k = 2 - 2^-d, the one-parameter group is

    W_t = exp(-i (S_d/2) t^2) M_{(i t e)#} T_{t e},

whose quadratic prefactor is exactly what makes W_{t+s} = W_t W_s an
identity at truncation d (the weight sum replaces its limit value 2, so
the infinite-dimensional prefactor exp(-i t^2) is recovered as d grows).
Its generator is h = d_e - i e#, and the Gaussian average

    G_r f = (4 pi r)^(-1/2) Integral exp(-t^2/(4r)) W_t f dt

solves dw/dr = h^2 w with w(0) = f.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .hardy import (
    ExpPolyForm,
    HardyContext,
    add,
    derivative,
    epf_zero,
    evaluate,
    mult_linear,
    weighted_context,
)
from .hs_algebra import HsElement, QuaternionPair
from .weyl import weyl_apply


@dataclass(frozen=True)
class WeightedContext:
    """Truncation dimension with the geometric letter weights baked in."""

    d: int

    def hardy(self) -> HardyContext:
        return weighted_context(self.d)

    def ladder_element(self) -> HsElement:
        """e = sum of all basis letters 0..d (unit plus every diagonal unit)."""
        return HsElement.diagonal(self.d, np.ones(self.d), unit=1.0)

    def weight_sum(self) -> float:
        """S_d = 2 - 2^-d; tends to 2, the untruncated weight sum."""
        return 2.0 - 0.5**self.d

    def weight_tail(self) -> float:
        """Mass 2^-d of the discarded letters (geometric, ratio 1/2)."""
        return 0.5**self.d


def weyl_group_element(t: float, f: ExpPolyForm, wctx: WeightedContext) -> ExpPolyForm:
    """W_t f for real t, as an exact exponential-polynomial form."""
    e = wctx.ladder_element()
    label = QuaternionPair(float(t) * e, 1j * float(t) * e)
    return weyl_apply(label, f)


def hamiltonian_apply(f: ExpPolyForm, order: int = 1, wctx: WeightedContext | None = None) -> ExpPolyForm:
    """h f (order 1) or h^2 f (order 2) with h = d_e - i e#."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    if wctx is None:
        wctx = WeightedContext(f.ctx.d)
    e = wctx.ladder_element()
    out = f
    for _ in range(order):
        out = add(derivative(out, e), mult_linear(out, e), gs=-1j)
    return out


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights for the probability average against exp(-t^2/4r).

    Gauss-Hermite under the substitution t = 2 sqrt(r) x: positive weights
    summing to one, exact for polynomial integrands of degree <= 2q - 1.
    """

    r: float
    q: int
    nodes: tuple[float, ...]
    weights: tuple[float, ...]


def gauss_hermite_rule(r: float, q: int) -> QuadratureRule:
    if r <= 0:
        raise ValueError("diffusion time must be positive")
    if q < 1:
        raise ValueError("need at least one node")
    x, w = np.polynomial.hermite.hermgauss(q)
    return QuadratureRule(
        r=float(r),
        q=int(q),
        nodes=tuple(2.0 * np.sqrt(r) * x),
        weights=tuple(w / np.sqrt(np.pi)),
    )


def gaussian_moment(rule: QuadratureRule, n: int) -> float:
    """Quadrature value of the even moment Integral t^{2n} against the kernel."""
    t = np.asarray(rule.nodes)
    w = np.asarray(rule.weights)
    return float(np.sum(w * t ** (2 * n)))


def expected_gaussian_moment(r: float, n: int) -> float:
    """Closed form 2 (2n-1)!/(n-1)! r^n of the even kernel moments (1 at n=0)."""
    if n == 0:
        return 1.0
    return 2.0 * factorial(2 * n - 1) / factorial(n - 1) * r**n


def gaussian_semigroup_apply(
    f: ExpPolyForm,
    r: float,
    wctx: WeightedContext,
    q: int = 64,
    error_probe: list[HsElement] | None = None,
    estimate_error: bool = True,
) -> tuple[ExpPolyForm, float]:
    """G_r f by quadrature; returns (result, node-doubling error estimate).

    The error estimate is the max pointwise difference between the q-node
    and 2q-node results over the probe points (a small default probe is
    used when none is supplied); pass estimate_error=False to skip the
    doubled pass and get nan in its place.
    """
    if r <= 0:
        raise ValueError("diffusion time must be positive")
    if q < 16:
        raise ValueError("need at least 16 quadrature nodes")
    coarse = _semigroup_sum(f, gauss_hermite_rule(r, q), wctx)
    if not estimate_error:
        return coarse, float("nan")
    fine = _semigroup_sum(f, gauss_hermite_rule(r, 2 * q), wctx)
    if error_probe is None:
        error_probe = _default_probe(wctx)
    err = max(abs(evaluate(coarse, c) - evaluate(fine, c)) for c in error_probe)
    return coarse, err


def _semigroup_sum(f: ExpPolyForm, rule: QuadratureRule, wctx: WeightedContext) -> ExpPolyForm:
    acc = epf_zero(f.ctx)
    for t, w in zip(rule.nodes, rule.weights):
        acc = add(acc, weyl_group_element(t, f, wctx), gs=w)
    return acc


def _default_probe(wctx: WeightedContext) -> list[HsElement]:
    d = wctx.d
    probe = [
        HsElement.zero(d),
        HsElement.diagonal(d, 0.3 * np.ones(d), unit=0.2),
        HsElement.diagonal(d, np.linspace(-0.4, 0.4, d), unit=-0.3 + 0.1j),
    ]
    return probe


def schrodinger_residual(
    f: ExpPolyForm,
    r: float,
    eps: float,
    wctx: WeightedContext,
    q: int = 64,
    points: list[HsElement] | None = None,
) -> tuple[float, float]:
    """Max pointwise residual of dw/dr = h^2 w along the Gaussian semigroup.

    Central difference in r with step eps against the symbolic h^2 G_r f;
    returns (residual, scale) with scale = max(1, max |h^2 G_r f|) over
    the points.
    """
    if not 0 < eps < r:
        raise ValueError("need 0 < eps < r")
    if points is None:
        points = _default_probe(wctx)
    plus = _semigroup_sum(f, gauss_hermite_rule(r + eps, q), wctx)
    minus = _semigroup_sum(f, gauss_hermite_rule(r - eps, q), wctx)
    center = _semigroup_sum(f, gauss_hermite_rule(r, q), wctx)
    h2 = hamiltonian_apply(center, order=2, wctx=wctx)
    residual = 0.0
    scale = 1.0
    for c in points:
        dnum = (evaluate(plus, c) - evaluate(minus, c)) / (2.0 * eps)
        h2val = evaluate(h2, c)
        residual = max(residual, abs(dnum - h2val))
        scale = max(scale, abs(h2val))
    return residual, scale
