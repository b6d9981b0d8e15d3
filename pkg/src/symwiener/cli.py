"""Command-line orchestration: run identity suites and Monte-Carlo
experiments, emit machine-readable JSON reports (plus optional per-sample
CSV sidecars), and reflect pass/fail rows in the exit status.

Exit codes: 0 all pass/fail rows pass, 1 some failed, 2 usage error,
3 report I/O failure.  Diagnostic rows never change the exit status.
Identical configuration and seed produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, fields
from math import factorial
from pathlib import Path

import numpy as np

from . import __version__
from . import fock, hardy, mc, partitions, schrodinger, schur, weyl
from .hs_algebra import HsElement, hs_inner
from .rng import make_rng
from .unitary import haar_batch, livsic_chain_batch, livsic_project_batch, unitarity_defect

SUITES = ("combinatorics", "haar", "fock", "weyl", "schrodinger", "mc")

USAGE_ERROR = 2
IO_ERROR = 3


@dataclass
class RunConfig:
    suite: str
    seed: int = 42
    level: int = 6
    dim: int = 3
    degree: int = 8
    samples: int = 100_000
    quadrature: int = 64
    mode: str = "embed"
    out: str = "report.json"
    csv: bool = False

    def validate(self) -> None:
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.dim > self.level:
            raise ValueError(f"dim {self.dim} must not exceed level {self.level}")
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        if self.quadrature < 16:
            raise ValueError("quadrature must be >= 16")
        if self.mode not in ("embed", "chain", "eigen"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.suite == "mc" and self.samples < mc.MIN_SAMPLES:
            raise ValueError(f"mc suite needs at least {mc.MIN_SAMPLES} samples")


def _row(
    name: str,
    params: dict,
    value,
    expected=None,
    tolerance_or_sigma=None,
    verdict: str = "pass",
) -> dict:
    return {
        "name": name,
        "params": params,
        "value": _jsonable(value),
        "expected": _jsonable(expected),
        "tolerance_or_sigma": _jsonable(tolerance_or_sigma),
        "verdict": verdict,
    }


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    return value


def _check(name: str, params: dict, value: float, tol: float) -> dict:
    return _row(name, params, value, expected=0.0, tolerance_or_sigma=tol,
                verdict="pass" if value <= tol else "fail")


def _report_from_experiments(rows: list[mc.ExperimentReport]) -> list[dict]:
    out = []
    for r in rows:
        out.append(
            _row(
                r.name,
                r.parameters,
                r.estimate.mean,
                expected=r.expected,
                tolerance_or_sigma=r.sigma_distance,
                verdict=r.verdict,
            )
        )
    return out


# -- suites ----------------------------------------------------------------


def suite_combinatorics(cfg: RunConfig) -> list[dict]:
    rows = []
    worst = 0
    for n in range(8):
        for lam in partitions.enumerate_partitions(n):
            worst = max(worst, abs(partitions.hook_dimension(lam)
                                   - partitions.count_standard_tableaux_bruteforce(lam)))
    rows.append(_check("hook_vs_bruteforce", {"max_n": 7}, worst, 0))
    worst = 0
    for n in range(9):
        total = sum(partitions.hook_dimension(lam) ** 2 for lam in partitions.enumerate_partitions(n))
        worst = max(worst, abs(total - factorial(n)))
    rows.append(_check("dimension_identity", {"max_n": 8}, worst, 0))
    worst = 0
    for n in range(9):
        for lam in partitions.enumerate_partitions(n):
            if partitions.conjugate(partitions.conjugate(lam)) != lam:
                worst += 1
    rows.append(_check("conjugate_involution", {"max_n": 8}, worst, 0))

    rng = make_rng(cfg.seed, 100)
    worst_rel = 0.0
    for _ in range(120):
        l = int(rng.integers(1, 5))
        t = _separated_points(rng, l)
        for n in range(0, 7):
            for lam in partitions.enumerate_partitions(n, max_len=l):
                b = schur.schur_bialternant(lam, t)
                s = schur.schur_tableau_sum(lam, t)
                worst_rel = max(worst_rel, abs(b - s) / (1.0 + abs(s)))
    rows.append(_check("schur_route_agreement", {"points": 120}, worst_rel, 1e-9))

    worst_rel = 0.0
    for _ in range(120):
        l = int(rng.integers(1, 5))
        t = rng.standard_normal(l) + 1j * rng.standard_normal(l)
        for n in range(0, 7):
            lhs = complex(np.sum(t)) ** n
            rhs = schur.power_sum_via_frobenius(n, t)
            worst_rel = max(worst_rel, abs(lhs - rhs) / (1.0 + abs(lhs)))
    rows.append(_check("frobenius_identity", {"points": 120}, worst_rel, 1e-9))
    ok = (schur.frobenius_expansion(2) == {(2,): 1, (1, 1): 1}
          and schur.frobenius_expansion(3) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
          and schur.frobenius_expansion(0) == {(): 1})
    rows.append(_row("frobenius_small_tables", {}, bool(ok), expected=True,
                     verdict="pass" if ok else "fail"))
    return rows


def _separated_points(rng: np.random.Generator, l: int, min_sep: float = 0.05) -> np.ndarray:
    while True:
        t = rng.standard_normal(l) + 1j * rng.standard_normal(l)
        t = t * (2.0 / max(2.0, float(np.max(np.abs(t)))))
        if l == 1:
            return t
        seps = [abs(t[i] - t[j]) for i in range(l) for j in range(i + 1, l)]
        if min(seps) >= min_sep:
            return t


def suite_haar(cfg: RunConfig) -> list[dict]:
    rows = []
    n = min(cfg.samples, 100_000)
    for k, m in enumerate((2, 3)):
        rows += _report_from_experiments(mc.haar_moment_rows(m, n, make_rng(cfg.seed, 200 + k)))
    rng = make_rng(cfg.seed, 210)
    worst = 0.0
    for m in range(1, 7):
        u = haar_batch(m + 1, 2000, rng)
        worst = max(worst, unitarity_defect(livsic_project_batch(u)))
    rows.append(_check("livsic_unitarity", {"m": "1..6", "samples": 2000}, worst, 1e-10))
    u = haar_batch(5, 2000, rng)
    inv = np.max(np.abs(livsic_project_batch(np.swapaxes(u, 1, 2).conj())
                        - np.swapaxes(livsic_project_batch(u), 1, 2).conj()))
    rows.append(_check("livsic_involution", {"m": 4}, float(inv), 1e-10))
    rows += _pushforward_rows((2,), n, make_rng(cfg.seed, 211))
    return rows


def _pushforward_rows(levels: tuple[int, ...], n: int, rng: np.random.Generator) -> list[dict]:
    rows = []
    for m in levels:
        down = livsic_chain_batch(haar_batch(m + 1, n, rng), m)
        direct = haar_batch(m, n, rng)
        worst_sigma = 0.0
        for moment in (1, 2):
            a = np.abs(down) ** moment
            b = np.abs(direct) ** moment
            se = np.sqrt(np.var(a, axis=0, ddof=1) / n + np.var(b, axis=0, ddof=1) / n)
            sig = np.abs(a.mean(axis=0) - b.mean(axis=0)) / np.maximum(se, 1e-15)
            worst_sigma = max(worst_sigma, float(np.max(sig)))
        rows.append(
            _row("livsic_pushforward", {"m": m, "samples": n}, worst_sigma,
                 expected=0.0, tolerance_or_sigma=mc.SIGMA_BAND,
                 verdict="pass" if worst_sigma <= mc.SIGMA_BAND else "fail")
        )
    return rows


def suite_fock(cfg: RunConfig) -> list[dict]:
    rows = []
    d, N = min(cfg.dim, 3), min(cfg.degree, 5)
    rng = make_rng(cfg.seed, 300)
    a = HsElement.diagonal(d, 0.6 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)),
                           unit=0.4 + 0.2j)
    b = HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)),
                           unit=-0.3j)
    idxs = fock.all_indices(d, N)
    worst = 0.0
    for i in idxs:
        ci = fock.creation_apply(a, fock.basis_vector(d, N, i))
        for j in idxs:
            lhs = fock.fock_inner(ci, fock.basis_vector(d, N, j))
            rhs = fock.fock_inner(fock.basis_vector(d, N, i),
                                  fock.annihilation_apply(a, fock.basis_vector(d, N, j)))
            worst = max(worst, abs(lhs - rhs))
    rows.append(_check("adjointness_basis_pairs", {"d": d, "N": N}, worst, 1e-12))

    lhs = fock.exp_creation(b, fock.coherent_state(a, N))
    rhs = fock.coherent_state(a + b, N)
    worst = max(abs(lhs[i] - rhs[i]) for i in idxs)
    rows.append(_check("coherent_shift", {"d": d, "N": N}, worst, 1e-10))

    psi = fock.coherent_state(a, N)
    one = fock.exp_creation(a, fock.exp_creation(b, psi))
    two = fock.exp_creation(a + b, psi)
    worst = max(abs(one[i] - two[i]) for i in idxs)
    rows.append(_check("exp_creation_group_law", {"d": d, "N": N}, worst, 1e-10))

    violations = 0
    for _ in range(1000):
        v = fock.random_vector(2, 4, rng)
        g = HsElement.diagonal(2, rng.standard_normal(2) + 1j * rng.standard_normal(2))
        if g.norm() > 2.0:
            g = g * (2.0 / g.norm())
        if fock.exp_creation(g, v).norm() > np.exp(g.norm()) * v.norm() + 1e-10:
            violations += 1
    rows.append(_check("exp_creation_norm_bound", {"trials": 1000}, violations, 0))

    ok = (fock.sigma_norm(2, 1) == 0.5 and fock.sigma_norm(5, 0) == 1
          and fock.sigma_norm(4, 2) == fock.sigma_norm(4, 2).__class__(1, 6))
    rows.append(_row("symmetrizer_norms", {}, bool(ok), expected=True,
                     verdict="pass" if ok else "fail"))

    ctx = hardy.plain_context(d)
    psi = fock.random_vector(d, min(N, 4), rng)
    n_f = psi.norm()
    n_h = hardy.hardy_norm(hardy.hardy_from_fock(psi, ctx), min(N, 4))
    rows.append(_check("fock_hardy_isometry", {"d": d}, abs(n_f - n_h) / max(1.0, n_f), 1e-12))
    back = hardy.fock_from_hardy(hardy.hardy_from_fock(psi, ctx), d, min(N, 4))
    worst = max(abs(back[i] - psi[i]) for i in fock.all_indices(d, min(N, 4)))
    rows.append(_check("taylor_round_trip", {"d": d}, worst, 1e-12))
    return rows


def _label_json(p) -> dict:
    return {
        "a": [[z.real, z.imag] for z in p.a.coords()],
        "b": [[z.real, z.imag] for z in p.b.coords()],
    }


def suite_weyl(cfg: RunConfig) -> list[dict]:
    rows = []
    d = min(cfg.dim, 3)
    ctx = hardy.plain_context(d)
    rng = make_rng(cfg.seed, 400)
    pts = weyl.random_points(ctx, rng, 10)
    battery = weyl.standard_test_battery(ctx, rng)
    worst_add = worst_gen = 0.0
    for k, f in enumerate(battery):
        for _ in range(3):
            p, q = weyl.random_label(ctx, rng), weyl.random_label(ctx, rng)
            defect, phase = weyl.weyl_commutation_defect(p, q, pts, f)
            rows.append(
                _row(
                    "weyl_exchange_relation",
                    {"d": d, "test_fn": k, "p": _label_json(p), "q": _label_json(q),
                     "phase": _jsonable(phase)},
                    defect,
                    expected=0.0,
                    tolerance_or_sigma=1e-10,
                    verdict="pass" if defect <= 1e-10 else "fail",
                )
            )
            worst_add = max(worst_add, weyl.weyl_additivity_defect(p, q, pts, f))
            worst_gen = max(worst_gen, weyl.generator_commutator_defect(p, q, pts, f))
    rows.append(_check("weyl_additivity_relation", {"d": d}, worst_add, 1e-10))
    rows.append(_check("generator_commutator", {"d": d}, worst_gen, 1e-10))

    worst = 0.0
    for _ in range(5):
        xs = [
            weyl.HeisenbergElement(
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                complex(0.4 * rng.standard_normal()),
            )
            for _ in range(3)
        ]
        left = weyl.heisenberg_mul(weyl.heisenberg_mul(xs[0], xs[1]), xs[2])
        right = weyl.heisenberg_mul(xs[0], weyl.heisenberg_mul(xs[1], xs[2]))
        worst = max(worst, (left.a - right.a).norm(), (left.b - right.b).norm(), abs(left.t - right.t))
        for f in battery[:2]:
            lhs = weyl.schrodinger_rep(weyl.heisenberg_mul(xs[0], xs[1]), f)
            rhs = weyl.schrodinger_rep(xs[0], weyl.schrodinger_rep(xs[1], f))
            worst = max(worst, max(abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)) for c in pts))
    rows.append(_check("heisenberg_homomorphism", {"d": d}, worst, 1e-10))

    p = weyl.random_label(ctx, rng)
    worst = 0.0
    for f in battery[:2]:
        lhs = weyl.weyl_apply(p.scale(0.3), weyl.weyl_apply(p.scale(0.45), f))
        rhs = weyl.weyl_apply(p.scale(0.75), f)
        worst = max(worst, max(abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)) for c in pts))
    rows.append(_check("one_parameter_group", {"d": d}, worst, 1e-10))

    gen = weyl.QuaternionPair(
        HsElement.diagonal(d, 0.3 * np.ones(d), unit=0.2),
        HsElement.diagonal(d, 0.25 * np.ones(d), unit=0.15),
    )
    escaped = all(weyl.monomial_escapes_span(idx, gen, ctx) for idx in fock.all_indices(d, 3))
    rows.append(_row("irreducibility_spot_check", {"d": d, "max_degree": 3}, bool(escaped),
                     expected=True, verdict="pass" if escaped else "fail"))
    return rows


def suite_schrodinger(cfg: RunConfig) -> list[dict]:
    rows = []
    d = min(cfg.dim, 2)
    wctx = schrodinger.WeightedContext(d)
    ctx = wctx.hardy()
    rng = make_rng(cfg.seed, 500)
    pts = weyl.random_points(ctx, rng, 5, scale=0.4)
    battery = weyl.standard_test_battery(ctx, rng)

    worst = 0.0
    for f in battery:
        for t, s in ((-0.5, 0.3), (0.3, 1.0)):
            lhs = schrodinger.weyl_group_element(t + s, f, wctx)
            rhs = schrodinger.weyl_group_element(t, schrodinger.weyl_group_element(s, f, wctx), wctx)
            worst = max(worst, max(abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)) for c in pts))
    rows.append(_check("weyl_group_law", {"d": d}, worst, 1e-10))

    q = cfg.quadrature
    worst = 0.0
    for f in battery[:2]:
        inner, _ = schrodinger.gaussian_semigroup_apply(f, 0.1, wctx, q=q, estimate_error=False)
        two_step, _ = schrodinger.gaussian_semigroup_apply(inner, 0.1, wctx, q=q, estimate_error=False)
        one_step, _ = schrodinger.gaussian_semigroup_apply(f, 0.2, wctx, q=q, estimate_error=False)
        worst = max(worst, max(abs(hardy.evaluate(two_step, c) - hardy.evaluate(one_step, c)) for c in pts))
    rows.append(_check("semigroup_property", {"d": d, "r": 0.1, "s": 0.1, "q": q}, worst, 1e-8))

    rule = schrodinger.gauss_hermite_rule(0.31, q)
    worst = 0.0
    for n in range(5):
        expected = schrodinger.expected_gaussian_moment(0.31, n)
        worst = max(worst, abs(schrodinger.gaussian_moment(rule, n) - expected) / max(1.0, expected))
    rows.append(_check("gaussian_moments", {"r": 0.31, "q": q, "n_max": 4}, worst, 1e-10))

    res, scl = schrodinger.schrodinger_residual(battery[1], 0.1, 1e-4, wctx, q=q, points=pts)
    rows.append(_check("evolution_residual", {"d": d, "r": 0.1, "eps": 1e-4, "q": q}, res / scl, 1e-4))
    res_seq = [schrodinger.schrodinger_residual(battery[1], 0.1, e, wctx, q=48, points=pts)[0]
               for e in (1e-3, 5e-4, 2.5e-4)]
    ratios = [res_seq[i] / max(res_seq[i + 1], 1e-300) for i in range(2)]
    ok = all(2.5 <= r <= 6.0 for r in ratios)
    rows.append(_row("residual_quadratic_convergence", {"ratios": [float(r) for r in ratios]},
                     bool(ok), expected=True, verdict="pass" if ok else "fail"))
    rows.append(_row("weight_sum_truncation", {"d": d}, wctx.weight_sum(), expected=2.0,
                     tolerance_or_sigma=wctx.weight_tail(), verdict="diagnostic"))
    return rows


def suite_mc(cfg: RunConfig) -> list[dict]:
    n = cfg.samples
    m = cfg.level
    d = cfg.dim
    rows: list[dict] = []
    reports: list[mc.ExperimentReport] = []
    for k, mm in enumerate((2, 3)):
        reports += mc.haar_moment_rows(mm, n, make_rng(cfg.seed, 600 + k))

    reports.append(mc.experiment_schur_orthonormality((1,), (1,), (1,), 1, n, "eigen", make_rng(cfg.seed, 610)))
    reports.append(mc.experiment_schur_orthonormality((2,), (1, 1), (1, 2), 2, n, "eigen", make_rng(cfg.seed, 611)))
    reports.append(mc.experiment_schur_orthonormality((2, 1), (2, 1), (1, 2, 3), 3, n, "eigen", make_rng(cfg.seed, 612)))
    reports.append(mc.experiment_schur_orthonormality((1,), (1,), (1,), m, n, cfg.mode if cfg.mode == "diag" else "diag", make_rng(cfg.seed, 613)))

    e1 = HsElement.basis(d, 1)
    reports += mc.experiment_pw_norm(e1, m, n, make_rng(cfg.seed, 620))
    g_level = min(m, 2)
    reports.append(mc.experiment_ggauss(HsElement.basis(g_level, 1), g_level, n, make_rng(cfg.seed, 621)))
    p_level = min(m, 3)
    p1 = HsElement.basis(p_level, 1)
    reports.append(mc.experiment_power_identity(p1, p1, 1, p_level, n, make_rng(cfg.seed, 622)))
    reports.append(mc.experiment_power_identity(p1, p1, 2, p_level, n, make_rng(cfg.seed, 623)))
    b2 = HsElement.basis(d, 2) if d >= 2 else e1
    reports.append(mc.experiment_power_identity(e1, b2, 2, m, n, make_rng(cfg.seed, 624)))
    reports.append(mc.experiment_schur_norms((1,), (1,), m, n, make_rng(cfg.seed, 630)))
    reports.append(mc.experiment_schur_norms((2, 1), (1, 2), m, n, make_rng(cfg.seed, 631)))
    reports.append(mc.chain_vs_embed_row(mc.abs_sq_pw_integrand(p1), "pw_sq", p_level, n, make_rng(cfg.seed, 640)))
    reports.append(mc.rotation_invariance_row(mc.abs_sq_pw_integrand(p1), "pw_sq", p_level, n, make_rng(cfg.seed, 645)))
    reports.append(mc.stderr_scaling_row(
        lambda u: np.exp(u[:, 0, 0].real).astype(complex), "exp_re_u11", min(m, 3), n, make_rng(cfg.seed, 642)))

    rows += _report_from_experiments(reports)
    if cfg.csv:
        _write_csv_sidecars(cfg, reports)
    return rows


def _write_csv_sidecars(cfg: RunConfig, reports: list[mc.ExperimentReport]) -> None:
    stem = Path(cfg.out).with_suffix("")
    for r in reports:
        if r.samples is None:
            continue
        path = Path(f"{stem}_{r.name}.csv")
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["sample_index", "re", "im"])
            for i, z in enumerate(r.samples):
                writer.writerow([i, repr(float(z.real)), repr(float(z.imag))])


SUITE_RUNNERS = {
    "combinatorics": suite_combinatorics,
    "haar": suite_haar,
    "fock": suite_fock,
    "weyl": suite_weyl,
    "schrodinger": suite_schrodinger,
    "mc": suite_mc,
}


def run_suite(cfg: RunConfig) -> tuple[int, dict]:
    """Execute a suite; returns (exit_code, report dict) and writes the report."""
    cfg.validate()
    rows = SUITE_RUNNERS[cfg.suite](cfg)
    report = {
        "suite": cfg.suite,
        "rows": rows,
        "seed": cfg.seed,
        "version": __version__,
    }
    failed = any(r["verdict"] == "fail" for r in rows)
    emit_report(Path(cfg.out), report)
    return (1 if failed else 0), report


def emit_report(path: Path, report: dict) -> None:
    try:
        path.write_text(json.dumps(report, indent=2) + "\n")
    except OSError as exc:
        raise ReportWriteError(str(exc)) from exc


class ReportWriteError(RuntimeError):
    pass


def _load_config_file(path: str) -> dict:
    """Flat key=value file; unknown keys are a usage error."""
    allowed = {f.name for f in fields(RunConfig) if f.name != "suite"}
    out: dict = {}
    for line_no, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{line_no}: expected key=value, got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in allowed:
            raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
        if key in ("seed", "level", "dim", "degree", "samples", "quadrature"):
            out[key] = int(value)
        elif key == "csv":
            out[key] = value.lower() in ("1", "true", "yes")
        else:
            out[key] = value
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symwiener",
        description="Run identity suites and Monte-Carlo experiments; write a JSON report.",
    )
    parser.add_argument("suite", choices=SUITES, help="which suite to run")
    parser.add_argument("--seed", type=int, default=None, help="64-bit base seed (default 42)")
    parser.add_argument("--level", type=int, default=None, help="matrix level m (default 6)")
    parser.add_argument("--dim", type=int, default=None, help="truncation dimension d (default 3)")
    parser.add_argument("--degree", type=int, default=None, help="degree cut N (default 8)")
    parser.add_argument("--samples", type=int, default=None, help="MC sample count (default 100000)")
    parser.add_argument("--quadrature", type=int, default=None, help="quadrature nodes (default 64)")
    parser.add_argument("--mode", choices=("embed", "chain", "eigen"), default=None,
                        help="sampling mode (default embed)")
    parser.add_argument("--out", default=None, help="report path (default report.json)")
    parser.add_argument("--csv", action="store_true", default=None,
                        help="also write per-sample CSV sidecars where available")
    parser.add_argument("--config", default=None, help="flat key=value config file (flags win)")
    parser.add_argument("--version", action="version", version=__version__)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings: dict = {}
    try:
        if args.config:
            settings.update(_load_config_file(args.config))
        for key in ("seed", "level", "dim", "degree", "samples", "quadrature", "mode", "out", "csv"):
            value = getattr(args, key)
            if value is not None:
                settings[key] = value
        cfg = RunConfig(suite=args.suite, **settings)
        cfg.validate()
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        code, report = run_suite(cfg)
    except ReportWriteError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return IO_ERROR
    passed = sum(1 for r in report["rows"] if r["verdict"] == "pass")
    failed = sum(1 for r in report["rows"] if r["verdict"] == "fail")
    diag = sum(1 for r in report["rows"] if r["verdict"] == "diagnostic")
    print(f"{cfg.suite}: {passed} pass, {failed} fail, {diag} diagnostic -> {cfg.out}")
    return code


if __name__ == "__main__":
    sys.exit(main())
