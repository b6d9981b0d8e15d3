"""Heisenberg group elements, the Weyl system realised on exponential-
polynomial forms, its generators, and commutation-relation defect checks.

The Weyl operator attached to a pair p = (a, b) acts as

    W(p) f = exp(<a|b>/2) * (multiply by exp(<.|b>)) (f shifted by a),

with the pairing taken in the form's context.  With this composition
order the operator algebra gives, writing Im<p|p'> = <a'|b> - <a|b'>:

    W(p + p') = exp(+Im<p|p'>/2) W(p) W(p'),
    W(p) W(p') = exp(-Im<p|p'>) W(p') W(p),
    [h_p, h_p'] = -Im<p|p'>   for the generators h_p = b# + d_a.

The phases on the first two lines are forced by the third (the group
relations are the exponentiated commutator), and all three are verified
pointwise by the test suite.  The Heisenberg representation that is an
exact homomorphism for the block multiplication law
t'' = t + t' + <a|b'> is  X(a, b, t) |-> exp(t) M_{b#} T_a,  i.e. the Weyl
operator stripped of its symmetric prefactor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import FockIndex, idx_degree
from .hardy import (
    ExpPolyForm,
    HardyContext,
    add,
    derivative,
    epf_constant,
    epf_exponential,
    epf_monomial,
    evaluate,
    idx_from_dict,
    mult_exp,
    mult_linear,
    scale_exp,
    shift,
    taylor_coefficients,
)
from .hs_algebra import HsElement, QuaternionPair

WeylLabel = QuaternionPair


@dataclass(frozen=True)
class HeisenbergElement:
    """Block data X(a, b, t) of an upper-triangular Heisenberg matrix."""

    a: HsElement
    b: HsElement
    t: complex

    @property
    def d(self) -> int:
        return self.a.d


def heisenberg_mul(x: HeisenbergElement, y: HeisenbergElement, ctx: HardyContext | None = None) -> HeisenbergElement:
    """(a, b, t)(a', b', t') = (a + a', b + b', t + t' + <a|b'>)."""
    pairing = _pairing(x.a, y.b, ctx)
    return HeisenbergElement(x.a + y.a, x.b + y.b, x.t + y.t + pairing)


def heisenberg_inv(x: HeisenbergElement, ctx: HardyContext | None = None) -> HeisenbergElement:
    """Inverse (-a, -b, -t + <a|b>)."""
    pairing = _pairing(x.a, x.b, ctx)
    return HeisenbergElement(-x.a, -x.b, -x.t + pairing)


def heisenberg_identity(d: int) -> HeisenbergElement:
    return HeisenbergElement(HsElement.zero(d), HsElement.zero(d), 0.0)


def _pairing(a: HsElement, b: HsElement, ctx: HardyContext | None) -> complex:
    if ctx is None:
        from .hs_algebra import hs_inner

        return hs_inner(a, b)
    return ctx.pair(ctx.coords_of(a), ctx.coords_of(b))


def im_pairing_ctx(ctx: HardyContext, p: WeylLabel, q: WeylLabel) -> complex:
    """Im<p|p'> = <a'|b> - <a|b'> in the context's pairing."""
    return _pairing(q.a, p.b, ctx) - _pairing(p.a, q.b, ctx)


def weyl_apply(p: WeylLabel, f: ExpPolyForm) -> ExpPolyForm:
    """W(p) f = exp(<a|b>/2) M_{b#} T_a f, exactly."""
    half = 0.5 * _pairing(p.a, p.b, f.ctx)
    return scale_exp(mult_exp(shift(f, p.a), p.b), half)


def schrodinger_rep(x: HeisenbergElement, f: ExpPolyForm) -> ExpPolyForm:
    """Heisenberg representation exp(t) M_{b#} T_a; an exact homomorphism.

    Relative to the Weyl operator this drops the exp(<a|b>/2) prefactor,
    which is what the twisted t-composition of the block law absorbs.
    """
    return scale_exp(mult_exp(shift(f, x.a), x.b), complex(x.t))


def generator_apply(p: WeylLabel, f: ExpPolyForm) -> ExpPolyForm:
    """h_p f = b# f + d_a f (the derivative of t -> W(tp) f at zero)."""
    return add(mult_linear(f, p.b), derivative(f, p.a))


def weyl_commutation_defect(
    p: WeylLabel,
    q: WeylLabel,
    points: list[HsElement],
    f: ExpPolyForm,
) -> tuple[float, complex]:
    """Max pointwise defect of W(p)W(q) = exp(-Im<p|q>) W(q)W(p) on ``f``.

    Returns (max |lhs - rhs| over the points, exp(Im<p|q>)); the second
    entry is the canonical phase datum of the pair.
    """
    im = im_pairing_ctx(f.ctx, p, q)
    lhs = weyl_apply(p, weyl_apply(q, f))
    rhs = scale_exp(weyl_apply(q, weyl_apply(p, f)), -im)
    defect = max(abs(evaluate(lhs, c) - evaluate(rhs, c)) for c in points)
    return defect, complex(np.exp(im))


def weyl_additivity_defect(
    p: WeylLabel,
    q: WeylLabel,
    points: list[HsElement],
    f: ExpPolyForm,
) -> float:
    """Max pointwise defect of W(p + q) = exp(+Im<p|q>/2) W(p)W(q) on ``f``."""
    im = im_pairing_ctx(f.ctx, p, q)
    lhs = weyl_apply(p + q, f)
    rhs = scale_exp(weyl_apply(p, weyl_apply(q, f)), 0.5 * im)
    return max(abs(evaluate(lhs, c) - evaluate(rhs, c)) for c in points)


def generator_commutator_defect(
    p: WeylLabel,
    q: WeylLabel,
    points: list[HsElement],
    f: ExpPolyForm,
) -> float:
    """Max pointwise defect of [h_p, h_q] f = -Im<p|q> f."""
    im = im_pairing_ctx(f.ctx, p, q)
    comm = add(
        generator_apply(p, generator_apply(q, f)),
        generator_apply(q, generator_apply(p, f)),
        gs=-1.0,
    )
    return max(abs(evaluate(comm, c) + im * evaluate(f, c)) for c in points)


def standard_test_battery(ctx: HardyContext, rng: np.random.Generator) -> list[ExpPolyForm]:
    """Constant, linear monomial, quadratic monomial, and a random exponential."""
    battery = [
        epf_constant(ctx),
        epf_monomial(ctx, idx_from_dict({1: 1})),
    ]
    if ctx.d >= 2:
        battery.append(epf_monomial(ctx, idx_from_dict({1: 1, 2: 1})))
    else:
        battery.append(epf_monomial(ctx, idx_from_dict({0: 1, 1: 1})))
    v = HsElement.diagonal(
        ctx.d,
        0.4 * (rng.standard_normal(ctx.d) + 1j * rng.standard_normal(ctx.d)),
        unit=0.4 * complex(rng.standard_normal(), rng.standard_normal()),
    )
    battery.append(epf_exponential(ctx, v))
    return battery


def random_points(ctx: HardyContext, rng: np.random.Generator, count: int, scale: float = 0.6) -> list[HsElement]:
    return [
        HsElement.diagonal(
            ctx.d,
            scale * (rng.standard_normal(ctx.d) + 1j * rng.standard_normal(ctx.d)),
            unit=scale * complex(rng.standard_normal(), rng.standard_normal()),
        )
        for _ in range(count)
    ]


def random_label(ctx: HardyContext, rng: np.random.Generator, scale: float = 0.5) -> WeylLabel:
    pts = random_points(ctx, rng, 2, scale)
    return QuaternionPair(pts[0], pts[1])


def monomial_escapes_span(idx: FockIndex, p: WeylLabel, ctx: HardyContext, tol: float = 1e-12) -> bool:
    """Whether W(p) applied to the monomial has support outside its own line.

    Used as a finite-truncation spot check that no single monomial spans an
    invariant subspace.
    """
    f = epf_monomial(ctx, idx)
    image = weyl_apply(p, f)
    coeffs = taylor_coefficients(image, idx_degree(idx) + 2)
    return any(key != idx and abs(c) > tol for key, c in coeffs.items())
