"""Hardy-side function algebra: exact exponential-polynomial forms closed
under argument shifts, linear and exponential multipliers, and directional
derivatives, together with the conjugate-linear transport between the
graded Fock coefficients and Hardy monomial coefficients.

Weight-and-conjugate map (the single source of truth for every
cross-representation test):

    Fock coefficient c on the monomial index with multiplicity pattern
    lambda, degree n
        -> Hardy coefficient  conj(c) * (lambda!/n!)^2 / lambda!
           on the coordinate monomial chi^lambda,
    inverse transport
        -> Fock coefficient   conj(h) * n!^2 / lambda!,
    squared Hardy norm of the coordinate monomial chi^lambda = (n!)^2.

The third line is forced by the first two together with the Fock grading
<e_lam|e_lam> = (lambda!/n!)^2: transporting a unit basis vector and
dividing out its image coefficient leaves exactly n!.

A form is a finite sum of terms  c |-> exp(<c|v> + kappa) * P(chi(c + w)),
with the pairing <.|.> taken in the context's letter weights.  All
operators act term by term in closed form, so operator identities can be
tested pointwise with zero truncation error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

import numpy as np

from .fock import (
    FockIndex,
    FockVector,
    basis_weight,
    idx_degree,
    idx_from_dict,
    idx_lambda_factorial,
    idx_lower,
)
from .hs_algebra import HsElement
from .unitary import VirtualUnitary

Coords = tuple[complex, ...]
Poly = dict[FockIndex, complex]


@dataclass(frozen=True)
class HardyContext:
    """Truncation dimension plus per-letter pairing weights (letters 0..d)."""

    d: int
    letter_weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.letter_weights) != self.d + 1:
            raise ValueError("need one weight per letter 0..d")

    def pair(self, x: Coords, y: Coords) -> complex:
        """<x|y> = sum_k w_k x_k conj(y_k); linear in x."""
        return complex(
            sum(w * xk * np.conj(yk) for w, xk, yk in zip(self.letter_weights, x, y))
        )

    def zero_coords(self) -> Coords:
        return (0.0 + 0.0j,) * (self.d + 1)

    def coords_of(self, a: HsElement) -> Coords:
        if a.d != self.d:
            raise ValueError(f"dimension mismatch: element d={a.d}, context d={self.d}")
        return a.coords()


def plain_context(d: int) -> HardyContext:
    return HardyContext(d, (1.0,) * (d + 1))


def weighted_context(d: int) -> HardyContext:
    """Geometric letter weights 2^-k used by the Gelfand-triple coordinates."""
    return HardyContext(d, tuple(0.5**k for k in range(d + 1)))


# -- sparse polynomial helpers over the coordinate letters ---------------


def poly_add_into(target: Poly, src: Poly, scale: complex = 1.0) -> None:
    for idx, c in src.items():
        target[idx] = target.get(idx, 0.0 + 0.0j) + scale * c


def poly_scale(p: Poly, z: complex) -> Poly:
    return {idx: z * c for idx, c in p.items()}


def poly_mul(p: Poly, q: Poly, max_degree: int | None = None) -> Poly:
    out: Poly = {}
    for i1, c1 in p.items():
        for i2, c2 in q.items():
            if max_degree is not None and idx_degree(i1) + idx_degree(i2) > max_degree:
                continue
            merged = dict(i1)
            for k, m in i2:
                merged[k] = merged.get(k, 0) + m
            key = idx_from_dict(merged)
            out[key] = out.get(key, 0.0 + 0.0j) + c1 * c2
    return out


def poly_eval(p: Poly, values: Coords) -> complex:
    total = 0.0 + 0.0j
    for idx, c in p.items():
        term = c
        for k, m in idx:
            term *= values[k] ** m
        total += term
    return complex(total)


def poly_directional_derivative(p: Poly, chi: Coords) -> Poly:
    """sum_k chi_k d/dx_k applied to ``p``."""
    out: Poly = {}
    for idx, c in p.items():
        for k, m in idx:
            if chi[k] == 0:
                continue
            down = idx_lower(idx, k)
            out[down] = out.get(down, 0.0 + 0.0j) + c * m * chi[k]
    return out


def poly_shift_variables(p: Poly, w: Coords) -> Poly:
    """Substitute x_k -> x_k + w_k (binomial expansion per letter)."""
    if all(z == 0 for z in w):
        return dict(p)
    out: Poly = {}
    for idx, c in p.items():
        expanded: Poly = {(): c}
        for k, m in idx:
            factor: Poly = {}
            for j in range(m + 1):
                binom = factorial(m) // (factorial(j) * factorial(m - j))
                key = idx_from_dict({k: j})
                factor[key] = binom * w[k] ** (m - j)
            expanded = poly_mul(expanded, factor)
        poly_add_into(out, expanded)
    return out


# -- exponential-polynomial forms ----------------------------------------


@dataclass
class ExpTerm:
    kappa: complex
    v: Coords
    w: Coords
    poly: Poly


@dataclass
class ExpPolyForm:
    """Finite sum of terms c |-> exp(<c|v> + kappa) P(chi(c + w))."""

    ctx: HardyContext
    terms: list[ExpTerm] = field(default_factory=list)

    def to_json(self) -> list[dict]:
        return [
            {
                "kappa": [t.kappa.real, t.kappa.imag],
                "v": [[z.real, z.imag] for z in t.v],
                "w": [[z.real, z.imag] for z in t.w],
                "poly": [
                    {"exponents": {str(k): m for k, m in idx}, "coeff": [c.real, c.imag]}
                    for idx, c in sorted(t.poly.items())
                ],
            }
            for t in self.terms
        ]


def _merged(ctx: HardyContext, terms: list[ExpTerm]) -> ExpPolyForm:
    by_key: dict[tuple[Coords, Coords], ExpTerm] = {}
    for t in terms:
        if not t.poly:
            continue
        key = (t.v, t.w)
        held = by_key.get(key)
        if held is None:
            by_key[key] = ExpTerm(t.kappa, t.v, t.w, dict(t.poly))
        elif held.kappa == t.kappa:
            poly_add_into(held.poly, t.poly)
        else:
            poly_add_into(held.poly, t.poly, scale=np.exp(t.kappa - held.kappa))
    out = [t for t in by_key.values() if any(c != 0 for c in t.poly.values())]
    return ExpPolyForm(ctx, out)


def epf_zero(ctx: HardyContext) -> ExpPolyForm:
    return ExpPolyForm(ctx, [])


def epf_constant(ctx: HardyContext, value: complex = 1.0) -> ExpPolyForm:
    if value == 0:
        return epf_zero(ctx)
    return ExpPolyForm(ctx, [ExpTerm(0.0 + 0.0j, ctx.zero_coords(), ctx.zero_coords(), {(): complex(value)})])


def epf_polynomial(ctx: HardyContext, poly: Poly) -> ExpPolyForm:
    return _merged(ctx, [ExpTerm(0.0 + 0.0j, ctx.zero_coords(), ctx.zero_coords(), dict(poly))])


def epf_monomial(ctx: HardyContext, idx: FockIndex, coeff: complex = 1.0) -> ExpPolyForm:
    return epf_polynomial(ctx, {idx: complex(coeff)})


def epf_exponential(ctx: HardyContext, v: HsElement, coeff: complex = 1.0) -> ExpPolyForm:
    """The pure exponential c |-> coeff * exp(<c|v>)."""
    return ExpPolyForm(
        ctx, [ExpTerm(0.0 + 0.0j, ctx.coords_of(v), ctx.zero_coords(), {(): complex(coeff)})]
    )


def evaluate(f: ExpPolyForm, c: HsElement) -> complex:
    """Exact term-wise evaluation at a diagonal-plus-unit argument."""
    coords = f.ctx.coords_of(c)
    total = 0.0 + 0.0j
    for t in f.terms:
        shifted = tuple(x + y for x, y in zip(coords, t.w))
        total += np.exp(f.ctx.pair(coords, t.v) + t.kappa) * poly_eval(t.poly, shifted)
    return complex(total)


def add(f: ExpPolyForm, g: ExpPolyForm, fs: complex = 1.0, gs: complex = 1.0) -> ExpPolyForm:
    if f.ctx != g.ctx:
        raise ValueError("cannot add forms over different contexts")
    terms = [ExpTerm(t.kappa, t.v, t.w, poly_scale(t.poly, fs)) for t in f.terms]
    terms += [ExpTerm(t.kappa, t.v, t.w, poly_scale(t.poly, gs)) for t in g.terms]
    return _merged(f.ctx, terms)


def scale(f: ExpPolyForm, z: complex) -> ExpPolyForm:
    return _merged(f.ctx, [ExpTerm(t.kappa, t.v, t.w, poly_scale(t.poly, z)) for t in f.terms])


def scale_exp(f: ExpPolyForm, kappa_delta: complex) -> ExpPolyForm:
    """Multiply by exp(kappa_delta), tracked in the exponent to avoid overflow."""
    return ExpPolyForm(
        f.ctx, [ExpTerm(t.kappa + kappa_delta, t.v, t.w, dict(t.poly)) for t in f.terms]
    )


def shift(f: ExpPolyForm, a: HsElement) -> ExpPolyForm:
    """(shift f)(c) = f(c + a), exactly."""
    ca = f.ctx.coords_of(a)
    terms = [
        ExpTerm(
            t.kappa + f.ctx.pair(ca, t.v),
            t.v,
            tuple(x + y for x, y in zip(t.w, ca)),
            dict(t.poly),
        )
        for t in f.terms
    ]
    return _merged(f.ctx, terms)


def mult_exp(f: ExpPolyForm, b: HsElement) -> ExpPolyForm:
    """Pointwise product with exp(<c|b>)."""
    cb = f.ctx.coords_of(b)
    terms = [
        ExpTerm(t.kappa, tuple(x + y for x, y in zip(t.v, cb)), t.w, dict(t.poly))
        for t in f.terms
    ]
    return _merged(f.ctx, terms)


def mult_linear(f: ExpPolyForm, b: HsElement) -> ExpPolyForm:
    """Pointwise product with <c|b>."""
    cb = f.ctx.coords_of(b)
    beta = [w * np.conj(z) for w, z in zip(f.ctx.letter_weights, cb)]
    terms = []
    for t in f.terms:
        linear: Poly = {(): -f.ctx.pair(t.w, cb)}
        for k, bk in enumerate(beta):
            if bk != 0:
                linear[idx_from_dict({k: 1})] = bk
        terms.append(ExpTerm(t.kappa, t.v, t.w, poly_mul(t.poly, linear)))
    return _merged(f.ctx, terms)


def derivative(f: ExpPolyForm, a: HsElement) -> ExpPolyForm:
    """Directional derivative d/dt f(c + t a) at t = 0 (product + chain rule)."""
    ca = f.ctx.coords_of(a)
    terms = []
    for t in f.terms:
        poly = poly_directional_derivative(t.poly, ca)
        lam = f.ctx.pair(ca, t.v)
        if lam != 0:
            poly_add_into(poly, t.poly, scale=lam)
        terms.append(ExpTerm(t.kappa, t.v, t.w, poly))
    return _merged(f.ctx, terms)


def taylor_coefficients(f: ExpPolyForm, up_to: int) -> Poly:
    """Exact expansion of the form in the plain coordinate monomials.

    Each term's exponential factor is expanded as a truncated series of
    the linear form sum_k w_k conj(v_k) x_k and multiplied into the
    variable-shifted polynomial part.
    """
    out: Poly = {}
    for t in f.terms:
        plain = poly_shift_variables(t.poly, t.w)
        beta = [w * np.conj(vk) for w, vk in zip(f.ctx.letter_weights, t.v)]
        linear: Poly = {
            idx_from_dict({k: 1}): bk for k, bk in enumerate(beta) if bk != 0
        }
        expseries: Poly = {(): 1.0 + 0.0j}
        power: Poly = {(): 1.0 + 0.0j}
        for j in range(1, up_to + 1):
            if not linear:
                break
            power = poly_mul(power, linear, max_degree=up_to)
            if not power:
                break
            poly_add_into(expseries, power, scale=1.0 / factorial(j))
        total = poly_mul(expseries, plain, max_degree=up_to)
        poly_add_into(out, total, scale=np.exp(t.kappa))
    return {idx: c for idx, c in out.items() if c != 0}


# -- transport between Fock coefficients and Hardy coefficients ----------


def fock_to_hardy_coeff(idx: FockIndex, c: complex) -> complex:
    """conj(c) (lambda!/n!)^2 / lambda!  (see the module docstring)."""
    return np.conj(c) * basis_weight(idx) / idx_lambda_factorial(idx)


def hardy_to_fock_coeff(idx: FockIndex, h: complex) -> complex:
    """Inverse transport: conj(h) n!^2 / lambda!."""
    n = idx_degree(idx)
    return np.conj(h) * factorial(n) ** 2 / idx_lambda_factorial(idx)


def hardy_monomial_weight(idx: FockIndex) -> float:
    """Squared Hardy norm (n!)^2 of the coordinate monomial chi^lambda."""
    return float(factorial(idx_degree(idx))) ** 2


def hardy_from_fock(psi: FockVector, ctx: HardyContext | None = None) -> ExpPolyForm:
    """Conjugate-linear image of a Fock vector: the function <exp(.)|psi>."""
    if ctx is None:
        ctx = plain_context(psi.d)
    poly: Poly = {
        idx: fock_to_hardy_coeff(idx, c) for idx, c in psi.coeffs.items() if c != 0
    }
    return epf_polynomial(ctx, poly)


def fock_from_hardy(f: ExpPolyForm, d: int, degree_cut: int) -> FockVector:
    """Invert the transport on a form's exact expansion up to the cut."""
    coeffs = {
        idx: hardy_to_fock_coeff(idx, h)
        for idx, h in taylor_coefficients(f, degree_cut).items()
    }
    return FockVector(d, degree_cut, coeffs)


def hardy_norm(f: ExpPolyForm, up_to: int) -> float:
    """Norm through the monomial expansion and the (n!)^2 basis weights."""
    total = 0.0
    for idx, h in taylor_coefficients(f, up_to).items():
        total += abs(h) ** 2 * hardy_monomial_weight(idx)
    return float(np.sqrt(total))


# -- Wiener-side elements -------------------------------------------------


@dataclass
class WienerElement:
    """A square-integrable group-side function, stored by its Fock coefficients.

    The transport to group-side functions sends the basis monomial with
    coefficient c to conj(c) times the product of diagonal coordinate
    functions, so scaling the stored coefficients by z scales the function
    by conj(z).
    """

    fock: FockVector

    def norm(self) -> float:
        return self.fock.norm()


def fourier_transform(f: WienerElement, ctx: HardyContext | None = None) -> ExpPolyForm:
    """The entire-function transform of a group-side element."""
    return hardy_from_fock(f.fock, ctx)


def wiener_evaluate(f: WienerElement, vu: VirtualUnitary) -> complex:
    """Evaluate at a virtual unitary: sum conj(c_idx) prod_k phi_k^{m_k}.

    phi_0 is the constant 1 and phi_k reads the k-th diagonal entry of the
    tracked top block; requires level >= d.
    """
    d = f.fock.d
    if vu.level < d:
        raise ValueError(f"level {vu.level} too small for dimension {d}")
    u = vu.top.entries
    phi = np.concatenate(([1.0 + 0.0j], np.diagonal(u)[:d]))
    total = 0.0 + 0.0j
    for idx, c in f.fock.coeffs.items():
        term = np.conj(c)
        for k, m in idx:
            term *= phi[k] ** m
        total += term
    return complex(total)
