"""Schur polynomial evaluation by two independent routes, plus the Frobenius
expansion of the n-th power of the first power sum in the Schur basis.

Route one is the bialternant ratio det[t_i^(lam_j + l - j)] / Vandermonde(t),
which is fast but degenerates at coincident points.  Route two is the
monomial sum over semistandard tableaux, which is slower but has no
singularities; it doubles as the correctness oracle for route one.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .partitions import (
    Partition,
    PartitionSizeError,
    enumerate_partitions,
    hook_dimension,
    semistandard_tableaux,
    validate_partition,
    weight,
)

#: Relative pairwise-separation threshold below which the bialternant refuses.
COINCIDENCE_THRESHOLD = 1e-6


class SchurDegenerateError(ValueError):
    """Bialternant denominator too close to zero; use the tableau route instead."""


def schur_bialternant(lam: Partition, t: np.ndarray | list[complex]) -> complex:
    """Evaluate the Schur polynomial s_lam(t) as a ratio of alternants.

    ``lam`` is zero-padded to len(t).  Raises SchurDegenerateError when the
    minimal pairwise separation of the points falls below
    COINCIDENCE_THRESHOLD * max|t_i|.
    """
    lam = validate_partition(lam)
    t = np.asarray(t, dtype=complex)
    l = t.shape[0]
    if len(lam) > l:
        raise ValueError(f"need at least {len(lam)} variables for shape {lam!r}")
    if l == 0:
        return 1.0 + 0.0j
    if l > 1:
        diffs = t[:, None] - t[None, :]
        seps = np.abs(diffs[np.triu_indices(l, k=1)])
        scale = float(np.max(np.abs(t)))
        if float(np.min(seps)) <= COINCIDENCE_THRESHOLD * max(scale, 1e-30):
            raise SchurDegenerateError(
                "points too close for the bialternant; fall back to schur_tableau_sum"
            )
    padded = tuple(lam) + (0,) * (l - len(lam))
    exponents = np.array([padded[j] + l - 1 - j for j in range(l)])
    alternant = t[:, None] ** exponents[None, :]
    det = np.linalg.det(alternant)
    vandermonde = 1.0 + 0.0j
    for i in range(l):
        for j in range(i + 1, l):
            vandermonde *= t[i] - t[j]
    return complex(det / vandermonde)


@lru_cache(maxsize=None)
def _monomial_table(lam: Partition, nvars: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Monomial expansion of s_lam in ``nvars`` variables: (exponents, multiplicity)."""
    counts: dict[tuple[int, ...], int] = {}
    for tab in semistandard_tableaux(lam, nvars):
        key = tab.content(nvars)
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


def schur_tableau_sum(lam: Partition, t: np.ndarray | list[complex]) -> complex:
    """Evaluate s_lam(t) as the content-monomial sum over semistandard tableaux.

    Exact polynomial evaluation with no singular points.  Size-guarded by
    the tableau enumerator (|lam| <= 8, len(t) <= 6).
    """
    lam = validate_partition(lam)
    t = np.asarray(t, dtype=complex)
    if t.shape[0] > 6:
        raise PartitionSizeError("tableau-sum route limited to 6 variables")
    total = 0.0 + 0.0j
    for exponents, mult in _monomial_table(lam, t.shape[0]):
        term = mult + 0.0j
        for tk, ek in zip(t, exponents):
            if ek:
                term *= tk**ek
        total += term
    return complex(total)


def schur_tableau_sum_batch(lam: Partition, t: np.ndarray) -> np.ndarray:
    """Vectorised tableau-sum evaluation on a batch of points, shape (n, l)."""
    lam = validate_partition(lam)
    t = np.asarray(t, dtype=complex)
    out = np.zeros(t.shape[0], dtype=complex)
    for exponents, mult in _monomial_table(lam, t.shape[1]):
        term = np.full(t.shape[0], float(mult), dtype=complex)
        for k, ek in enumerate(exponents):
            if ek:
                term = term * t[:, k] ** ek
        out += term
    return out


def schur_eval(lam: Partition, t: np.ndarray | list[complex]) -> complex:
    """Bialternant evaluation with automatic fallback to the tableau sum."""
    try:
        return schur_bialternant(lam, t)
    except SchurDegenerateError:
        return schur_tableau_sum(lam, t)


def schur_eval_batch(lam: Partition, t: np.ndarray) -> np.ndarray:
    """Batched bialternant over points of shape (n, l), tableau fallback per row.

    Rows whose minimal pairwise separation is below the coincidence
    threshold are recomputed by the singularity-free route.
    """
    lam = validate_partition(lam)
    t = np.asarray(t, dtype=complex)
    n, l = t.shape
    if len(lam) > l:
        raise ValueError(f"need at least {len(lam)} variables for shape {lam!r}")
    if l == 1:
        return t[:, 0] ** (lam[0] if lam else 0)
    padded = tuple(lam) + (0,) * (l - len(lam))
    exponents = np.array([padded[j] + l - 1 - j for j in range(l)])
    alternant = t[:, :, None] ** exponents[None, None, :]
    dets = np.linalg.det(alternant)
    iu, ju = np.triu_indices(l, k=1)
    diffs = t[:, iu] - t[:, ju]
    vandermonde = np.prod(diffs, axis=1)
    scale = np.maximum(np.max(np.abs(t), axis=1), 1e-30)
    degenerate = np.min(np.abs(diffs), axis=1) <= COINCIDENCE_THRESHOLD * scale
    out = np.empty(n, dtype=complex)
    good = ~degenerate
    out[good] = dets[good] / vandermonde[good]
    if np.any(degenerate):
        out[degenerate] = schur_tableau_sum_batch(lam, t[degenerate])
    return out


def frobenius_expansion(n: int) -> dict[Partition, int]:
    """Coefficients of (t_1 + ... + t_l)^n in the Schur basis.

    The coefficient of s_lam is the standard-tableau count of shape lam,
    so the returned map is {lam: hook_dimension(lam)} over all lam of
    weight n.  Shapes longer than the number of variables drop out on
    evaluation because their Schur polynomial vanishes there.
    """
    if n > 8:
        raise PartitionSizeError("Frobenius expansion limited to degree 8")
    if n < 0:
        raise ValueError("degree must be non-negative")
    return {lam: hook_dimension(lam) for lam in enumerate_partitions(n)}


def power_sum_via_frobenius(n: int, t: np.ndarray | list[complex]) -> complex:
    """Evaluate (sum t_i)^n through the Schur-basis expansion (identity check)."""
    t = np.asarray(t, dtype=complex)
    total = 0.0 + 0.0j
    for lam, mult in frobenius_expansion(n).items():
        if len(lam) <= t.shape[0]:
            total += mult * schur_tableau_sum(lam, t)
    return complex(total)
