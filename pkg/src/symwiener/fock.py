"""Truncated symmetric Fock space over the unit-extended Hilbert-Schmidt
algebra, in the graded normalisation where the basis monomial indexed by a
multiplicity pattern lambda of total degree n has norm lambda!/n!.

Basis indices are exponent patterns over the letters 0..d (letter 0 is the
unit coordinate), stored as sorted tuples of (letter, multiplicity) pairs.
Creation is coefficient-free symmetric multiplication in this monomial
basis; annihilation is its literal adjoint with respect to the weighted
inner product, with the weight ratio computed from the grading rather than
a hand-derived formula, so adjointness holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

import numpy as np

from .hs_algebra import HsElement

FockIndex = tuple[tuple[int, int], ...]

VACUUM_INDEX: FockIndex = ()


def idx_from_dict(exponents: dict[int, int]) -> FockIndex:
    """Canonical index: zero multiplicities dropped, letters sorted."""
    items = tuple(sorted((k, m) for k, m in exponents.items() if m))
    for k, m in items:
        if k < 0 or m < 0:
            raise ValueError(f"invalid exponent pattern {exponents!r}")
    return items


def idx_degree(idx: FockIndex) -> int:
    return sum(m for _, m in idx)


def idx_letters(idx: FockIndex) -> tuple[int, ...]:
    return tuple(k for k, _ in idx)


def idx_partition(idx: FockIndex) -> tuple[int, ...]:
    """Multiplicities sorted non-increasingly (the shape attached to the index)."""
    return tuple(sorted((m for _, m in idx), reverse=True))


def idx_raise(idx: FockIndex, letter: int) -> FockIndex:
    d = dict(idx)
    d[letter] = d.get(letter, 0) + 1
    return idx_from_dict(d)


def idx_lower(idx: FockIndex, letter: int) -> FockIndex:
    d = dict(idx)
    if d.get(letter, 0) < 1:
        raise ValueError(f"letter {letter} absent from index {idx!r}")
    d[letter] -= 1
    return idx_from_dict(d)


@lru_cache(maxsize=None)
def idx_lambda_factorial(idx: FockIndex) -> int:
    out = 1
    for _, m in idx:
        out *= factorial(m)
    return out


@lru_cache(maxsize=None)
def basis_norm(idx: FockIndex) -> float:
    """lambda!/n!, the norm of the basis monomial."""
    return idx_lambda_factorial(idx) / factorial(idx_degree(idx))


def basis_weight(idx: FockIndex) -> float:
    """(lambda!/n!)^2, the squared norm entering the inner product."""
    return basis_norm(idx) ** 2


def all_indices(d: int, max_degree: int) -> list[FockIndex]:
    """Every exponent pattern over letters 0..d with total degree <= max_degree."""
    out: list[FockIndex] = []
    letters = range(d + 1)
    for n in range(max_degree + 1):
        for combo in combinations_with_replacement(letters, n):
            exps: dict[int, int] = {}
            for k in combo:
                exps[k] = exps.get(k, 0) + 1
            out.append(idx_from_dict(exps))
    return out


@dataclass
class FockVector:
    """Sparse graded coefficient map, truncated at total degree ``degree_cut``.

    ``dropped_mass`` accumulates the norm mass pushed past the cut by the
    producing operations, so truncation error is observable instead of
    silent.
    """

    d: int
    degree_cut: int
    coeffs: dict[FockIndex, complex] = field(default_factory=dict)
    dropped_mass: float = 0.0

    def copy(self) -> "FockVector":
        return FockVector(self.d, self.degree_cut, dict(self.coeffs), self.dropped_mass)

    def __getitem__(self, idx: FockIndex) -> complex:
        return self.coeffs.get(idx, 0.0 + 0.0j)

    def norm(self) -> float:
        return float(np.sqrt(fock_inner(self, self).real))

    def degree(self) -> int:
        return max((idx_degree(i) for i in self.coeffs), default=0)

    def scale(self, z: complex) -> "FockVector":
        return FockVector(
            self.d,
            self.degree_cut,
            {i: z * c for i, c in self.coeffs.items()},
            self.dropped_mass * abs(z),
        )

    def add(self, other: "FockVector") -> "FockVector":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0.0 + 0.0j) + c
        cut = max(self.degree_cut, other.degree_cut)
        return FockVector(self.d, cut, out, self.dropped_mass + other.dropped_mass)

    def prune(self, tol: float = 0.0) -> "FockVector":
        kept = {i: c for i, c in self.coeffs.items() if abs(c) > tol}
        return FockVector(self.d, self.degree_cut, kept, self.dropped_mass)

    def to_json(self) -> list[dict]:
        return [
            {"exponents": {str(k): m for k, m in idx}, "coeff": [c.real, c.imag]}
            for idx, c in sorted(self.coeffs.items())
        ]


def vacuum(d: int, degree_cut: int) -> FockVector:
    return FockVector(d, degree_cut, {VACUUM_INDEX: 1.0 + 0.0j})


def basis_vector(d: int, degree_cut: int, idx: FockIndex) -> FockVector:
    if idx_degree(idx) > degree_cut:
        raise ValueError("basis index exceeds the degree cut")
    if any(k > d for k, _ in idx):
        raise ValueError("letter exceeds the truncation dimension")
    return FockVector(d, degree_cut, {idx: 1.0 + 0.0j})


def fock_inner(psi: FockVector, phi: FockVector) -> complex:
    """Sum over shared indices of c_psi conj(c_phi) (lambda!/n!)^2."""
    if psi.d != phi.d:
        raise ValueError("dimension mismatch")
    small, large = (psi.coeffs, phi.coeffs) if len(psi.coeffs) <= len(phi.coeffs) else (phi.coeffs, psi.coeffs)
    total = 0.0 + 0.0j
    for idx, c in small.items():
        other = large.get(idx)
        if other is not None:
            a = c if small is psi.coeffs else other
            b = other if small is psi.coeffs else c
            total += a * np.conj(b) * basis_weight(idx)
    return complex(total)


def _diag_coords(a: HsElement) -> tuple[complex, ...]:
    if not a.is_diagonal:
        raise ValueError("basis-coordinate operations need a diagonal-plus-unit element")
    return a.coords()


def coherent_state(a: HsElement, degree_cut: int) -> FockVector:
    """Exponential vector of ``a``: coefficient chi^lambda(a)/lambda! per index."""
    chi = _diag_coords(a)
    d = a.d
    coeffs: dict[FockIndex, complex] = {}
    support = [k for k in range(d + 1) if chi[k] != 0]

    def grow(pos: int, idx: dict[int, int], value: complex, degree: int) -> None:
        coeffs[idx_from_dict(idx)] = coeffs.get(idx_from_dict(idx), 0.0) + value
        for i in range(pos, len(support)):
            k = support[i]
            if degree < degree_cut:
                idx2 = dict(idx)
                idx2[k] = idx2.get(k, 0) + 1
                grow(i, idx2, value * chi[k] / idx2[k], degree + 1)

    grow(0, {}, 1.0 + 0.0j, 0)
    return FockVector(d, degree_cut, coeffs)


def tensor_power_vector(a: HsElement, n: int, degree_cut: int) -> FockVector:
    """The degree-n tensor power of ``a``: coefficient (n!/lambda!) chi^lambda."""
    if n > degree_cut:
        raise ValueError("tensor power exceeds the degree cut")
    cs = coherent_state(a, min(n, degree_cut))
    coeffs = {
        idx: c * factorial(n)
        for idx, c in cs.coeffs.items()
        if idx_degree(idx) == n
    }
    return FockVector(a.d, degree_cut, coeffs)


def creation_apply(a: HsElement, psi: FockVector) -> FockVector:
    """Symmetric multiplication by ``a`` in the monomial basis (degree +1)."""
    chi = _diag_coords(a)
    out: dict[FockIndex, complex] = {}
    dropped = psi.dropped_mass
    for idx, c in psi.coeffs.items():
        deg = idx_degree(idx)
        for k in range(psi.d + 1):
            if chi[k] == 0:
                continue
            val = chi[k] * c
            if deg + 1 > psi.degree_cut:
                up = idx_raise(idx, k)
                dropped += abs(val) * basis_norm(up)
                continue
            up = idx_raise(idx, k)
            out[up] = out.get(up, 0.0 + 0.0j) + val
    return FockVector(psi.d, psi.degree_cut, out, dropped)


def annihilation_apply(a: HsElement, psi: FockVector) -> FockVector:
    """Adjoint of creation_apply with respect to fock_inner (degree -1).

    The coefficient transported from an index to its lowering is scaled by
    the ratio of the squared basis norms, which is exactly what makes
    <creation psi | phi> = <psi | annihilation phi> an identity of the
    implementation rather than a separate formula.
    """
    chi = _diag_coords(a)
    out: dict[FockIndex, complex] = {}
    for idx, c in psi.coeffs.items():
        for k, mult in idx:
            if chi[k] == 0:
                continue
            down = idx_lower(idx, k)
            ratio = basis_weight(idx) / basis_weight(down)
            val = np.conj(chi[k]) * ratio * c
            out[down] = out.get(down, 0.0 + 0.0j) + val
    return FockVector(psi.d, psi.degree_cut, out, psi.dropped_mass)


def exp_creation(a: HsElement, psi: FockVector) -> FockVector:
    """sum_m creation^m / m! applied to ``psi``; exact on every kept degree."""
    acc = psi.copy()
    term = psi
    for m in range(1, psi.degree_cut + 1):
        term = creation_apply(a, term).scale(1.0 / m)
        if not term.coeffs:
            acc.dropped_mass += term.dropped_mass
            break
        acc = acc.add(term)
    return acc


def exp_annihilation(a: HsElement, psi: FockVector) -> FockVector:
    """sum_m annihilation^m / m!; a finite sum since annihilation lowers degree."""
    acc = psi.copy()
    term = psi
    for m in range(1, psi.degree() + 1):
        term = annihilation_apply(a, term).scale(1.0 / m)
        if not term.coeffs:
            break
        acc = acc.add(term)
    return acc


def sigma_norm(n: int, m: int) -> Fraction:
    """Norm m!(n-m)!/n! of the symmetrising projector between split tensor degrees."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    return Fraction(factorial(m) * factorial(n - m), factorial(n))


def random_vector(
    d: int, degree_cut: int, rng: np.random.Generator, scale: float = 1.0
) -> FockVector:
    """Dense random vector over all indices up to the cut (test utility)."""
    coeffs: dict[FockIndex, complex] = {}
    for idx in all_indices(d, degree_cut):
        coeffs[idx] = scale * complex(rng.standard_normal(), rng.standard_normal())
    return FockVector(d, degree_cut, coeffs)
