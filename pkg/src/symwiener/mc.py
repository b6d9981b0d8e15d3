"""Seeded Monte-Carlo estimation of group-average identities with CLT error
bars, deterministic chunked accumulation, and experiment reports.

Estimates accumulate per fixed-size chunk through an associative mean and
second-moment merge, so the result is bit-reproducible for a given
(seed, stream) pair and chunk size, and a parallel reduction over the
same chunk boundaries would produce the identical value.

Verdict policy: classically guaranteed facts (Haar entry moments, descent
pushforward, invariances, eigenvalue-mode character orthogonality, CLT
scaling) are pass/fail; group-average identities whose sampling
realisation is itself under investigation are emitted as diagnostics with
their expected values and sigma distances, never failing a run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Callable

import numpy as np

from .hs_algebra import HsElement, hs_inner
from .partitions import Alphabet, Partition, factorial_product, validate_alphabet, validate_partition, weight
from .schur import schur_eval_batch
from .unitary import (
    diagonal_coordinates_batch,
    haar_abs4_moment,
    haar_batch,
    haar_disjoint_moment,
    haar_pair_moment,
    haar_same_row_moment,
    livsic_chain_batch,
    paley_wiener_eval_batch,
)

DEFAULT_CHUNK = 8192
MIN_SAMPLES = 1000
SIGMA_BAND = 4.0

#: Floor used when a sigma distance divides by a vanishing standard error.
_SE_FLOOR = 1e-15

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass
class _Accumulator:
    """Associative streaming mean/M2 for complex samples (component-wise)."""

    n: int = 0
    mean: complex = 0.0 + 0.0j
    m2_re: float = 0.0
    m2_im: float = 0.0

    def update_chunk(self, values: np.ndarray) -> None:
        chunk = _Accumulator(
            n=values.size,
            mean=complex(np.mean(values)),
            m2_re=float(np.sum((values.real - np.mean(values.real)) ** 2)),
            m2_im=float(np.sum((values.imag - np.mean(values.imag)) ** 2)),
        )
        merged = merge_accumulators(self, chunk)
        self.n, self.mean, self.m2_re, self.m2_im = merged.n, merged.mean, merged.m2_re, merged.m2_im


def merge_accumulators(a: _Accumulator, b: _Accumulator) -> _Accumulator:
    """Chan-style parallel merge; associative with fixed operand order."""
    if a.n == 0:
        return _Accumulator(b.n, b.mean, b.m2_re, b.m2_im)
    if b.n == 0:
        return _Accumulator(a.n, a.mean, a.m2_re, a.m2_im)
    n = a.n + b.n
    delta = b.mean - a.mean
    mean = a.mean + delta * (b.n / n)
    m2_re = a.m2_re + b.m2_re + delta.real**2 * a.n * b.n / n
    m2_im = a.m2_im + b.m2_im + delta.imag**2 * a.n * b.n / n
    return _Accumulator(n, mean, m2_re, m2_im)


@dataclass
class Estimate:
    """Sample mean with component-wise standard errors."""

    mean: complex
    stderr: float
    n_samples: int
    mode: str
    stderr_re: float = 0.0
    stderr_im: float = 0.0

    def sigma_distance(self, expected: complex) -> float:
        """Component-wise distance to ``expected`` in standard-error units."""
        out = 0.0
        for delta, se in (
            (self.mean.real - expected.real, self.stderr_re),
            (self.mean.imag - expected.imag, self.stderr_im),
        ):
            if delta == 0.0:
                continue
            out = max(out, abs(delta) / max(se, _SE_FLOOR))
        return out

    def to_json(self) -> dict:
        return {
            "mean": [self.mean.real, self.mean.imag],
            "stderr": self.stderr,
            "stderr_re": self.stderr_re,
            "stderr_im": self.stderr_im,
            "n_samples": self.n_samples,
            "mode": self.mode,
        }


def _finalize(acc: _Accumulator, mode: str) -> Estimate:
    n = acc.n
    var_re = acc.m2_re / (n - 1) if n > 1 else 0.0
    var_im = acc.m2_im / (n - 1) if n > 1 else 0.0
    return Estimate(
        mean=acc.mean,
        stderr=float(np.sqrt((var_re + var_im) / n)),
        n_samples=n,
        mode=mode,
        stderr_re=float(np.sqrt(var_re / n)),
        stderr_im=float(np.sqrt(var_im / n)),
    )


@dataclass
class ExperimentReport:
    """One experiment row: estimate, optional expectation, verdict."""

    name: str
    parameters: dict
    estimate: Estimate
    expected: complex | None = None
    sigma_distance: float | None = None
    verdict: str = "diagnostic"
    samples: np.ndarray | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "estimate": self.estimate.to_json(),
            "expected": None if self.expected is None else [self.expected.real, self.expected.imag],
            "sigma_distance": self.sigma_distance,
            "verdict": self.verdict,
        }


def estimate_gamma_integral(
    fn: Integrand,
    m: int,
    n_samples: int,
    mode: str = "embed",
    rng: np.random.Generator | None = None,
    chain_from: int | None = None,
    chunk_size: int = DEFAULT_CHUNK,
    collect_samples: bool = False,
    enforce_min: bool = True,
) -> Estimate | tuple[Estimate, np.ndarray]:
    """Mean and standard error of a vectorised integrand over group samples.

    ``fn`` receives a stack of matrices of shape (chunk, m, m) in embed and
    chain modes, or a stack of eigenvalue rows of shape (chunk, m) in eigen
    mode, and returns one complex value per sample.  Chain mode draws at
    level ``chain_from`` (default m + 3) and descends to level m.
    """
    if rng is None:
        raise ValueError("an explicit seeded generator is required for reproducibility")
    if m < 1:
        raise ValueError("level must be >= 1")
    if enforce_min and n_samples < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
    if mode not in ("embed", "chain", "eigen"):
        raise ValueError(f"unknown sampling mode {mode!r}")
    src_level = m
    if mode == "chain":
        src_level = chain_from if chain_from is not None else m + 3
        if src_level <= m:
            raise ValueError("chain mode must start above the target level")
    acc = _Accumulator()
    kept: list[np.ndarray] = []
    remaining = n_samples
    while remaining > 0:
        take = min(chunk_size, remaining)
        batch = haar_batch(src_level, take, rng)
        if mode == "chain":
            batch = livsic_chain_batch(batch, m)
        if mode == "eigen":
            values = fn(np.linalg.eigvals(batch))
        else:
            values = fn(batch)
        values = np.asarray(values, dtype=complex)
        acc.update_chunk(values)
        if collect_samples:
            kept.append(values)
        remaining -= take
    est = _finalize(acc, mode)
    if collect_samples:
        return est, np.concatenate(kept)
    return est


def _verdict_within(est: Estimate, expected: complex, band: float = SIGMA_BAND) -> tuple[float, str]:
    sigma = est.sigma_distance(expected)
    return sigma, ("pass" if sigma <= band else "fail")


# -- prebuilt integrands ---------------------------------------------------


def pw_integrand(a: HsElement) -> Integrand:
    """The trace functional of ``a`` as a vectorised integrand."""
    return lambda tops: paley_wiener_eval_batch(a, tops)


def abs_sq_pw_integrand(a: HsElement) -> Integrand:
    return lambda tops: np.abs(paley_wiener_eval_batch(a, tops)) ** 2


def diagonal_monomial_integrand(lam: Partition, letters: Alphabet) -> Integrand:
    """prod_j phi_{letter_j}^{lam_j} over the diagonal coordinates."""
    lam = validate_partition(lam)
    letters = validate_alphabet(letters, length=len(lam))

    def fn(tops: np.ndarray) -> np.ndarray:
        coords = diagonal_coordinates_batch(tops, letters)
        out = np.ones(tops.shape[0], dtype=complex)
        for j, lj in enumerate(lam):
            out = out * coords[:, j] ** lj
        return out

    return fn


# -- experiments -----------------------------------------------------------


def experiment_schur_orthonormality(
    lam: Partition,
    mu: Partition,
    letters: Alphabet,
    m: int,
    n_samples: int,
    mode: str,
    rng: np.random.Generator,
) -> ExperimentReport:
    """Estimate <s_lam, s_mu> and compare with the Kronecker delta.

    Eigen mode evaluates the Schur polynomials at the eigenvalues of a
    Haar unitary of size len(letters); there the character orthogonality
    is classical and the row is pass/fail.  Diag mode evaluates at the
    diagonal entries named by the alphabet and is reported as diagnostic.
    """
    lam, mu = validate_partition(lam), validate_partition(mu)
    letters = validate_alphabet(letters)
    if weight(lam) > 5 or weight(mu) > 5 or len(letters) > 3:
        raise ValueError("orthonormality experiment limited to weight 5, alphabet 3")
    l = len(letters)
    expected = 1.0 + 0.0j if lam == mu else 0.0 + 0.0j

    if mode == "eigen":
        def fn(eigs: np.ndarray) -> np.ndarray:
            return schur_eval_batch(lam, eigs) * np.conj(schur_eval_batch(mu, eigs))

        est = estimate_gamma_integral(fn, l, n_samples, mode="eigen", rng=rng)
        sigma, verdict = _verdict_within(est, expected)
    elif mode == "diag":
        def fn(tops: np.ndarray) -> np.ndarray:
            coords = diagonal_coordinates_batch(tops, letters)
            return schur_eval_batch(lam, coords) * np.conj(schur_eval_batch(mu, coords))

        est = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)
        sigma, verdict = est.sigma_distance(expected), "diagnostic"
    else:
        raise ValueError(f"unknown orthonormality mode {mode!r}")
    return ExperimentReport(
        name="schur_orthonormality",
        parameters={"lam": list(lam), "mu": list(mu), "letters": list(letters), "m": m, "mode": mode},
        estimate=est,
        expected=expected,
        sigma_distance=sigma,
        verdict=verdict,
    )


def experiment_pw_norm(
    a: HsElement, m: int, n_samples: int, rng: np.random.Generator
) -> list[ExperimentReport]:
    """Squared-norm estimate of the trace functional, plus conjugation invariance.

    The norm-value row is diagnostic (its expected value is the squared
    algebra norm of ``a``); the invariance row compares the estimate for a
    against the estimate for w* a w and is pass/fail, since it follows
    from Haar invariance alone.
    """
    est, samples = estimate_gamma_integral(
        abs_sq_pw_integrand(a), m, n_samples, mode="embed", rng=rng, collect_samples=True
    )
    expected = complex(hs_inner(a, a).real)
    norm_row = ExperimentReport(
        name="pw_norm",
        parameters={"m": m, "d": a.d},
        estimate=est,
        expected=expected,
        sigma_distance=est.sigma_distance(expected),
        verdict="diagnostic",
        samples=samples,
    )
    w = haar_batch(a.d, 1, rng)[0]
    conjugated = HsElement(a.d, unit=a.unit, matrix=w.conj().T @ a.matrix @ w)
    est_c = estimate_gamma_integral(abs_sq_pw_integrand(conjugated), m, n_samples, mode="embed", rng=rng)
    delta = abs(est.mean - est_c.mean)
    combined = float(np.hypot(est.stderr, est_c.stderr))
    sigma = delta / max(combined, _SE_FLOOR)
    inv_row = ExperimentReport(
        name="pw_norm_conjugation_invariance",
        parameters={"m": m, "d": a.d},
        estimate=est_c,
        expected=est.mean,
        sigma_distance=sigma,
        verdict="pass" if sigma <= SIGMA_BAND else "fail",
    )
    return [norm_row, inv_row]


def experiment_ggauss(
    a: HsElement, m: int, n_samples: int, rng: np.random.Generator
) -> ExperimentReport:
    """Estimate the exponential average E exp(Re phi_a) against exp(|a|^2/4)."""
    def fn(tops: np.ndarray) -> np.ndarray:
        return np.exp(paley_wiener_eval_batch(a, tops).real).astype(complex)

    est, samples = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng, collect_samples=True)
    expected = complex(np.exp(0.25 * hs_inner(a, a).real))
    return ExperimentReport(
        name="ggauss",
        parameters={"m": m, "d": a.d},
        estimate=est,
        expected=expected,
        sigma_distance=est.sigma_distance(expected),
        verdict="diagnostic",
        samples=samples,
    )


def experiment_power_identity(
    a: HsElement, b: HsElement, n_pow: int, m: int, n_samples: int, rng: np.random.Generator
) -> ExperimentReport:
    """Compare E[phi_a^k conj(phi_b)^k] against (E[phi_a conj(phi_b)])^k.

    Error on the powered side is propagated to first order.  Degree one is
    a tautology (pass); higher degrees are diagnostic.
    """
    if n_pow > 4:
        raise ValueError("power identity limited to fourth powers")

    def fn_pow(tops: np.ndarray) -> np.ndarray:
        va = paley_wiener_eval_batch(a, tops)
        vb = paley_wiener_eval_batch(b, tops)
        return va**n_pow * np.conj(vb) ** n_pow

    def fn_base(tops: np.ndarray) -> np.ndarray:
        return paley_wiener_eval_batch(a, tops) * np.conj(paley_wiener_eval_batch(b, tops))

    est_pow = estimate_gamma_integral(fn_pow, m, n_samples, mode="embed", rng=rng)
    est_base = estimate_gamma_integral(fn_base, m, n_samples, mode="embed", rng=rng)
    powered = est_base.mean**n_pow
    prop_err = n_pow * abs(est_base.mean) ** max(n_pow - 1, 0) * est_base.stderr
    combined = float(np.hypot(est_pow.stderr, prop_err))
    sigma = abs(est_pow.mean - powered) / max(combined, _SE_FLOOR)
    verdict = "pass" if n_pow == 1 else "diagnostic"
    if n_pow == 1 and sigma > SIGMA_BAND:
        verdict = "fail"
    return ExperimentReport(
        name="power_identity",
        parameters={"m": m, "k": n_pow, "d": a.d},
        estimate=est_pow,
        expected=complex(powered),
        sigma_distance=sigma,
        verdict=verdict,
    )


def experiment_schur_norms(
    lam: Partition, letters: Alphabet, m: int, n_samples: int, rng: np.random.Generator
) -> ExperimentReport:
    """Estimate E|prod phi_{letter}^{lam}|^2 against (lambda!/n!)^2 (diagnostic)."""
    lam = validate_partition(lam)
    letters = validate_alphabet(letters, length=len(lam))
    if weight(lam) > 5 or len(letters) > 3:
        raise ValueError("norm experiment limited to weight 5, alphabet 3")
    mono = diagonal_monomial_integrand(lam, letters)

    def fn(tops: np.ndarray) -> np.ndarray:
        vals = mono(tops)
        return (np.abs(vals) ** 2).astype(complex)

    est = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)
    n = weight(lam)
    expected = complex((factorial_product(lam) / factorial(n)) ** 2)
    return ExperimentReport(
        name="schur_basis_norm",
        parameters={"lam": list(lam), "letters": list(letters), "m": m},
        estimate=est,
        expected=expected,
        sigma_distance=est.sigma_distance(expected),
        verdict="diagnostic",
    )


# -- classically guaranteed checks ----------------------------------------


def haar_moment_rows(m: int, n_samples: int, rng: np.random.Generator) -> list[ExperimentReport]:
    """Entry-moment sanity rows against the closed-form second/fourth moments."""
    cases: list[tuple[str, Integrand, complex]] = [
        ("E|u11|^2", lambda u: np.abs(u[:, 0, 0]) ** 2 + 0j, complex(haar_pair_moment(m, 1, 1, 1, 1))),
        ("E u11 conj(u12)", lambda u: u[:, 0, 0] * np.conj(u[:, 0, 1]), complex(haar_pair_moment(m, 1, 1, 1, 2))),
        ("E|u11|^4", lambda u: np.abs(u[:, 0, 0]) ** 4 + 0j, complex(haar_abs4_moment(m))),
    ]
    if m >= 2:
        cases.append(
            ("E|u11 u12|^2", lambda u: (np.abs(u[:, 0, 0]) * np.abs(u[:, 0, 1])) ** 2 + 0j,
             complex(haar_same_row_moment(m)))
        )
        cases.append(
            ("E|u11 u22|^2", lambda u: (np.abs(u[:, 0, 0]) * np.abs(u[:, 1, 1])) ** 2 + 0j,
             complex(haar_disjoint_moment(m)))
        )
    rows = []
    for name, fn, expected in cases:
        est = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)
        sigma, verdict = _verdict_within(est, expected)
        rows.append(
            ExperimentReport(
                name=f"haar_moment[{name}]",
                parameters={"m": m},
                estimate=est,
                expected=expected,
                sigma_distance=sigma,
                verdict=verdict,
            )
        )
    return rows


def chain_vs_embed_row(
    fn: Integrand, name: str, m: int, n_samples: int, rng: np.random.Generator, chain_from: int | None = None
) -> ExperimentReport:
    """Descent-sampling consistency: chain-mode estimate against embed mode."""
    emb = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)
    chn = estimate_gamma_integral(fn, m, n_samples, mode="chain", rng=rng, chain_from=chain_from)
    delta = abs(emb.mean - chn.mean)
    combined = float(np.hypot(emb.stderr, chn.stderr))
    sigma = delta / max(combined, _SE_FLOOR)
    return ExperimentReport(
        name=f"chain_vs_embed[{name}]",
        parameters={"m": m, "chain_from": chain_from if chain_from is not None else m + 3},
        estimate=chn,
        expected=emb.mean,
        sigma_distance=sigma,
        verdict="pass" if sigma <= SIGMA_BAND else "fail",
    )


def rotation_invariance_row(
    fn: Integrand, name: str, m: int, n_samples: int, rng: np.random.Generator
) -> ExperimentReport:
    """Invariance of an estimate under an independent global phase per sample."""
    plain = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)

    def rotated(tops: np.ndarray) -> np.ndarray:
        theta = rng.uniform(-np.pi, np.pi, size=tops.shape[0])
        return fn(np.exp(1j * theta)[:, None, None] * tops)

    rot = estimate_gamma_integral(rotated, m, n_samples, mode="embed", rng=rng)
    delta = abs(plain.mean - rot.mean)
    combined = float(np.hypot(plain.stderr, rot.stderr))
    sigma = delta / max(combined, _SE_FLOOR)
    return ExperimentReport(
        name=f"rotation_invariance[{name}]",
        parameters={"m": m},
        estimate=rot,
        expected=plain.mean,
        sigma_distance=sigma,
        verdict="pass" if sigma <= SIGMA_BAND else "fail",
    )


def stderr_scaling_row(
    fn: Integrand, name: str, m: int, n_samples: int, rng: np.random.Generator, tolerance: float = 0.2
) -> ExperimentReport:
    """CLT self-test: doubling the samples shrinks stderr by sqrt(2) within tolerance."""
    est1 = estimate_gamma_integral(fn, m, n_samples, mode="embed", rng=rng)
    est2 = estimate_gamma_integral(fn, m, 2 * n_samples, mode="embed", rng=rng)
    ratio = est1.stderr / max(est2.stderr, _SE_FLOOR)
    ok = abs(ratio / np.sqrt(2.0) - 1.0) <= tolerance
    return ExperimentReport(
        name=f"stderr_scaling[{name}]",
        parameters={"m": m, "n": n_samples, "ratio": ratio},
        estimate=est2,
        expected=complex(est1.mean),
        sigma_distance=None,
        verdict="pass" if ok else "fail",
    )
