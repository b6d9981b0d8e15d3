"""Top-level verification battery.

One test per headline guarantee, run at its stated tolerance and printed
as a single PASS/FAIL line (run with ``pytest tests/test_acceptance.py -v -s``
to see every line).  Sampling checks use fixed seeds so the battery is
deterministic.

One check is expected to fail and is left failing on purpose:
``test_07_transform_intertwining_dictionary`` pins all four transport
identities between the graded raising/lowering groups and the Hardy-side
shift/multiplier groups.  Under the squared grading (basis monomial norm
lambda!/n!) only the lowering-side transports hold; the raising-side
transports would require the classical n! grading, and the defect is
order one, not a tolerance issue.  See that test's docstring for the
two-line counterexample.
"""

from math import factorial

import numpy as np
import pytest

from symwiener import cli, fock, hardy, mc, partitions, schrodinger, schur, weyl
from symwiener.hs_algebra import HsElement, QuaternionPair
from symwiener.rng import make_rng
from symwiener.unitary import (
    haar_abs4_moment,
    haar_batch,
    livsic_chain_batch,
    livsic_project_batch,
    unitarity_defect,
)


def _line(number: int, label: str, ok: bool, detail: str) -> bool:
    status = "PASS" if ok else "FAIL"
    print(f"[ACCEPTANCE] {number:02d} {label}: {status} ({detail})")
    return ok


def test_01_hook_formula_exact():
    worst = 0
    for n in range(9):
        for lam in partitions.enumerate_partitions(n):
            worst = max(
                worst,
                abs(partitions.hook_dimension(lam) - partitions.count_standard_tableaux_bruteforce(lam)),
            )
    ok = _line(1, "hook counts vs exhaustive fillings (n <= 8)", worst == 0, f"max diff {worst}")
    assert ok


def test_02_schur_routes_and_power_expansion():
    rng = make_rng(1001, 0)
    worst_route = 0.0
    worst_power = 0.0
    configs = 0
    while configs < 110:
        l = int(rng.integers(1, 5))
        t = rng.standard_normal(l) + 1j * rng.standard_normal(l)
        m = float(np.max(np.abs(t)))
        if m > 2.0:
            t *= 2.0 / m
        if l > 1 and min(abs(t[i] - t[j]) for i in range(l) for j in range(i + 1, l)) < 5e-2:
            continue
        configs += 1
        for n in range(7):
            for lam in partitions.enumerate_partitions(n, max_len=l):
                b = schur.schur_bialternant(lam, t)
                s = schur.schur_tableau_sum(lam, t)
                worst_route = max(worst_route, abs(b - s) / (1.0 + abs(s)))
            lhs = complex(np.sum(t)) ** n
            rhs = schur.power_sum_via_frobenius(n, t)
            worst_power = max(worst_power, abs(lhs - rhs) / (1.0 + abs(lhs)))
    ok = _line(
        2,
        "schur two-route agreement and power-sum expansion",
        worst_route <= 1e-9 and worst_power <= 1e-9,
        f"route {worst_route:.2e}, power {worst_power:.2e}, configs {configs}",
    )
    assert ok


def test_03_haar_entry_moments():
    n = 100_000
    worst_pair = 0.0
    worst_fourth = 0.0
    for m in (2, 3, 5):
        u = haar_batch(m, n, make_rng(1003, m))
        for j in range(m):
            for k in range(m):
                for l in range(m):
                    for p in range(m):
                        x = u[:, j, k] * np.conj(u[:, l, p])
                        mu = x.mean()
                        expected = (1.0 / m) if (j == l and k == p) else 0.0
                        se_re = x.real.std(ddof=1) / np.sqrt(n)
                        se_im = x.imag.std(ddof=1) / np.sqrt(n)
                        sig = max(
                            abs(mu.real - expected) / max(se_re, 1e-15),
                            abs(mu.imag) / max(se_im, 1e-15),
                        )
                        worst_pair = max(worst_pair, sig)
        x4 = np.abs(u[:, 0, 0]) ** 4
        se = x4.std(ddof=1) / np.sqrt(n)
        worst_fourth = max(worst_fourth, abs(x4.mean() - haar_abs4_moment(m)) / se)
    ok = _line(
        3,
        "haar sampler second and fourth entry moments",
        worst_pair <= 4.0 and worst_fourth <= 4.0,
        f"pair {worst_pair:.2f} sigma, fourth {worst_fourth:.2f} sigma",
    )
    assert ok


def test_04_descent_transform():
    rng = make_rng(1004, 0)
    worst_unit = 0.0
    for m in range(1, 7):
        u = haar_batch(m + 1, 10_000, rng)
        worst_unit = max(worst_unit, unitarity_defect(livsic_project_batch(u)))
    u = haar_batch(5, 10_000, rng)
    invol = float(
        np.max(
            np.abs(
                livsic_project_batch(np.swapaxes(u, 1, 2).conj())
                - np.swapaxes(livsic_project_batch(u), 1, 2).conj()
            )
        )
    )
    n = 100_000
    worst_sigma = 0.0
    for m in (1, 2, 4):
        down = livsic_chain_batch(haar_batch(m + 1, n, rng), m)
        direct = haar_batch(m, n, rng)
        for moment in (1, 2):
            a = np.abs(down) ** moment
            b = np.abs(direct) ** moment
            se = np.sqrt(np.var(a, axis=0, ddof=1) / n + np.var(b, axis=0, ddof=1) / n)
            worst_sigma = max(worst_sigma, float(np.max(np.abs(a.mean(axis=0) - b.mean(axis=0)) / se)))
    ok = _line(
        4,
        "descent transform unitarity, pushforward, involution",
        worst_unit <= 1e-10 and worst_sigma <= 4.0 and invol <= 1e-10,
        f"unitarity {worst_unit:.1e}, pushforward {worst_sigma:.2f} sigma, involution {invol:.1e}",
    )
    assert ok


def test_05_fock_adjointness_shift_contraction():
    rng = make_rng(1005, 0)
    d, N = 3, 5
    a = HsElement.diagonal(d, 0.6 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)), unit=0.3 - 0.2j)
    b = HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)), unit=0.1j)
    idxs = fock.all_indices(d, N)
    worst_adj = 0.0
    basis = {i: fock.basis_vector(d, N, i) for i in idxs}
    raised = {i: fock.creation_apply(a, basis[i]) for i in idxs}
    lowered = {i: fock.annihilation_apply(a, basis[i]) for i in idxs}
    for i in idxs:
        for j in idxs:
            lhs = fock.fock_inner(raised[i], basis[j])
            rhs = fock.fock_inner(basis[i], lowered[j])
            worst_adj = max(worst_adj, abs(lhs - rhs))
    lhs = fock.exp_creation(b, fock.coherent_state(a, N))
    rhs = fock.coherent_state(a + b, N)
    worst_shift = max(abs(lhs[i] - rhs[i]) for i in idxs)
    violations = 0
    for _ in range(1000):
        psi = fock.random_vector(2, 4, rng)
        g = HsElement.diagonal(2, rng.standard_normal(2) + 1j * rng.standard_normal(2))
        if g.norm() > 2.0:
            g = g * (2.0 / g.norm())
        if fock.exp_creation(g, psi).norm() > np.exp(g.norm()) * psi.norm() + 1e-10:
            violations += 1
    ok = _line(
        5,
        "graded adjointness, coherent shift, contraction bound",
        worst_adj <= 1e-12 and worst_shift <= 1e-10 and violations == 0,
        f"adjoint {worst_adj:.1e}, shift {worst_shift:.1e}, violations {violations}/1000",
    )
    assert ok


def test_06_isometry_chain_and_round_trip():
    rng = make_rng(1006, 0)
    d, N = 3, 4
    ctx = hardy.plain_context(d)
    worst_norm = 0.0
    worst_rt = 0.0
    for _ in range(10):
        psi = fock.random_vector(d, N, rng)
        nf = psi.norm()
        nh = hardy.hardy_norm(hardy.hardy_from_fock(psi, ctx), N)
        worst_norm = max(worst_norm, abs(nf - nh) / max(1.0, nf))
        back = hardy.fock_from_hardy(hardy.hardy_from_fock(psi, ctx), d, N)
        worst_rt = max(worst_rt, max(abs(back[i] - psi[i]) for i in fock.all_indices(d, N)))
    ok = _line(
        6,
        "norm equality by two routes and coefficient round trip",
        worst_norm <= 1e-12 and worst_rt <= 1e-12,
        f"norm {worst_norm:.1e}, round trip {worst_rt:.1e}",
    )
    assert ok


def test_07_transform_intertwining_dictionary():
    """Four transport identities at tolerance 1e-10 over 20 random setups.

    (a) lowering-generator transport: F(mult-generator . mult-group f)
        equals d_a T_a F(f); holds exactly by adjoint construction.
    (b) lowering-group transport: the image of the exp-annihilation group
        is the argument shift; holds exactly.
    (c) raising side, generator level: a# M_{a#} F(f) vs the image of the
        raising generator applied after the raising group.
    (d) raising-group transport: the image of the exp-creation group vs
        the multiplier exp(<.|b>).

    (c) and (d) FAIL for the squared grading and are left failing.
    Counterexample for (d): psi the single-letter basis vector, b the same
    letter.  The transported image is sum_j x^(1+j)/(j!(1+j)!) while the
    multiplier side is x e^x = sum_j x^(1+j)/j!; at x = 1/2 the gap is
    already 0.19.  (c) is its generator-level shadow.  Both would need
    basis weights n! instead of (lambda!/n!)^2, which the graded norms
    pinned by the fifth and sixth checks exclude.
    """
    rng = make_rng(1007, 0)
    d, N = 2, 12
    ctx = hardy.plain_context(d)
    defects = {"lower_gen": 0.0, "lower_group": 0.0, "raise_gen": 0.0, "raise_group": 0.0}
    for _ in range(20):
        a = HsElement.diagonal(d, 0.4 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)), unit=0.2)
        c = HsElement.diagonal(d, 0.4 * (rng.standard_normal(d) + 1j * rng.standard_normal(d)), unit=0.1)
        psi = fock.random_vector(d, 2, rng, scale=0.5)
        psi = fock.FockVector(d, N, dict(psi.coeffs))
        F = hardy.hardy_from_fock(psi, ctx)

        lhs = hardy.derivative(hardy.shift(F, a), a)
        rhs = hardy.hardy_from_fock(fock.annihilation_apply(a, fock.exp_annihilation(a, psi)), ctx)
        defects["lower_gen"] = max(defects["lower_gen"], abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)))

        lhs = hardy.shift(F, a)
        rhs = hardy.hardy_from_fock(fock.exp_annihilation(a, psi), ctx)
        defects["lower_group"] = max(defects["lower_group"], abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)))

        lhs = hardy.mult_linear(hardy.mult_exp(F, a), a)
        rhs = hardy.hardy_from_fock(fock.creation_apply(a, fock.exp_creation(a, psi)), ctx)
        defects["raise_gen"] = max(defects["raise_gen"], abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)))

        lhs = hardy.mult_exp(F, a)
        rhs = hardy.hardy_from_fock(fock.exp_creation(a, psi), ctx)
        defects["raise_group"] = max(defects["raise_group"], abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)))

    ok = all(v <= 1e-10 for v in defects.values())
    detail = ", ".join(f"{k} {v:.2e}" for k, v in defects.items())
    _line(7, "transform intertwining dictionary", ok, detail)
    assert defects["lower_gen"] <= 1e-10
    assert defects["lower_group"] <= 1e-10
    assert defects["raise_gen"] <= 1e-10, (
        "raising-side generator transport fails under the squared grading; "
        f"defect {defects['raise_gen']:.3e}"
    )
    assert defects["raise_group"] <= 1e-10, (
        "raising-side group transport fails under the squared grading; "
        f"defect {defects['raise_group']:.3e}"
    )


def test_08_commutation_relations():
    rng = make_rng(1008, 0)
    d = 2
    ctx = hardy.plain_context(d)
    pts = weyl.random_points(ctx, rng, 10)
    battery = weyl.standard_test_battery(ctx, rng)
    worst_gen = worst_weyl = worst_add = worst_hom = worst_pairwise = 0.0
    for f in battery:
        for _ in range(3):
            p, q = weyl.random_label(ctx, rng), weyl.random_label(ctx, rng)
            worst_gen = max(worst_gen, weyl.generator_commutator_defect(p, q, pts, f))
            dd, _ = weyl.weyl_commutation_defect(p, q, pts, f)
            worst_weyl = max(worst_weyl, dd)
            worst_add = max(worst_add, weyl.weyl_additivity_defect(p, q, pts, f))
        # one-sided specialisation: multiplier label against shift label
        a, b = weyl.random_points(ctx, rng, 2)
        p = QuaternionPair(a, HsElement.zero(d))
        q = QuaternionPair(HsElement.zero(d), b)
        worst_pairwise = max(worst_pairwise, weyl.generator_commutator_defect(p, q, pts, f))
        for _ in range(2):
            x = weyl.HeisenbergElement(
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                complex(0.4 * rng.standard_normal()),
            )
            y = weyl.HeisenbergElement(
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                HsElement.diagonal(d, 0.5 * (rng.standard_normal(d) + 1j * rng.standard_normal(d))),
                complex(0.4 * rng.standard_normal()),
            )
            lhs = weyl.schrodinger_rep(weyl.heisenberg_mul(x, y), f)
            rhs = weyl.schrodinger_rep(x, weyl.schrodinger_rep(y, f))
            worst_hom = max(worst_hom, max(abs(hardy.evaluate(lhs, c) - hardy.evaluate(rhs, c)) for c in pts))
    ok = _line(
        8,
        "generator commutators, Weyl exchange/additivity, Heisenberg homomorphism",
        max(worst_gen, worst_weyl, worst_add, worst_hom, worst_pairwise) <= 1e-10,
        f"gen {worst_gen:.1e}, weyl {worst_weyl:.1e}, add {worst_add:.1e}, "
        f"hom {worst_hom:.1e}, one-sided {worst_pairwise:.1e}",
    )
    assert ok


def test_09_gaussian_semigroup_evolution():
    rng = make_rng(1009, 0)
    worst_semi = 0.0
    for d in (1, 2):
        wctx = schrodinger.WeightedContext(d)
        ctx = wctx.hardy()
        pts = weyl.random_points(ctx, rng, 5, scale=0.4)
        battery = weyl.standard_test_battery(ctx, rng)
        for f in battery[:2]:
            inner, _ = schrodinger.gaussian_semigroup_apply(f, 0.1, wctx, q=64, estimate_error=False)
            twice, _ = schrodinger.gaussian_semigroup_apply(inner, 0.1, wctx, q=64, estimate_error=False)
            once, _ = schrodinger.gaussian_semigroup_apply(f, 0.2, wctx, q=64, estimate_error=False)
            worst_semi = max(worst_semi, max(abs(hardy.evaluate(twice, c) - hardy.evaluate(once, c)) for c in pts))
    worst_moment = 0.0
    for r in (0.1, 0.31):
        rule = schrodinger.gauss_hermite_rule(r, 64)
        for n in range(5):
            expected = schrodinger.expected_gaussian_moment(r, n)
            worst_moment = max(
                worst_moment, abs(schrodinger.gaussian_moment(rule, n) - expected) / max(1.0, expected)
            )
    wctx = schrodinger.WeightedContext(1)
    ctx = wctx.hardy()
    pts = weyl.random_points(ctx, make_rng(1009, 1), 5, scale=0.4)
    battery = weyl.standard_test_battery(ctx, make_rng(1009, 1))
    res, scale_ = schrodinger.schrodinger_residual(battery[1], 0.1, 1e-4, wctx, q=64, points=pts)
    seq = [
        schrodinger.schrodinger_residual(battery[1], 0.1, eps, wctx, q=48, points=pts)[0]
        for eps in (1e-3, 5e-4, 2.5e-4)
    ]
    ratios_ok = all(2.5 <= seq[k] / seq[k + 1] <= 6.0 for k in range(2))
    ok = _line(
        9,
        "semigroup composition, kernel moments, evolution residual",
        worst_semi <= 1e-8 and worst_moment <= 1e-10 and res <= 1e-4 * scale_ and ratios_ok,
        f"semigroup {worst_semi:.1e}, moments {worst_moment:.1e}, residual {res:.1e} "
        f"(scale {scale_:.2f}), halving ratios {[round(seq[k]/seq[k+1], 2) for k in range(2)]}",
    )
    assert ok


def test_10_mc_diagnostics_report(tmp_path):
    cfg = cli.RunConfig(suite="mc", samples=100_000, out=str(tmp_path / "mc.json"))
    code, report = cli.run_suite(cfg)
    rows = report["rows"]
    names = [r["name"] for r in rows]
    required = [
        "schur_orthonormality",
        "pw_norm",
        "pw_norm_conjugation_invariance",
        "ggauss",
        "power_identity",
        "schur_basis_norm",
        "chain_vs_embed[pw_sq]",
        "rotation_invariance[pw_sq]",
        "stderr_scaling[exp_re_u11]",
    ]
    missing = [n for n in required if n not in names]
    eigen_rows = [r for r in rows if r["name"] == "schur_orthonormality" and r["params"]["mode"] == "eigen"]
    eigen_ok = eigen_rows and all(r["verdict"] == "pass" for r in eigen_rows)
    diag_rows = [r for r in rows if r["verdict"] == "diagnostic"]
    diag_complete = all(
        r["expected"] is not None and r["tolerance_or_sigma"] is not None for r in diag_rows
    )
    scaling_ok = all(
        r["verdict"] == "pass" for r in rows if r["name"].startswith("stderr_scaling")
    )
    hard_fail = [r["name"] for r in rows if r["verdict"] == "fail"]
    ok = _line(
        10,
        "monte-carlo diagnostics report",
        code == 0 and not missing and bool(eigen_ok) and diag_complete and scaling_ok and not hard_fail,
        f"rows {len(rows)}, diagnostics {len(diag_rows)}, missing {missing}, failed {hard_fail}",
    )
    assert ok
