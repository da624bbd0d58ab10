"""Acceptance criteria 1-11.

Each test records one PASS/FAIL line (printed in the pytest terminal
summary, or directly when this file is run as a script).  Every check is
asserted at its stated tolerance and runtime budget; a report whose own
tolerance is looser than the stated one counts as a failure.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from twistreg import classify
from twistreg.cli import load_document
from twistreg.errors import DomainError
from twistreg.operators import CoeffTable, DeltaCase, TwistedFrame
from twistreg.verify import plane, sampling, suites
from twistreg.verify.report import CheckReport

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE = {}

FRAME = TwistedFrame(-1, -0.5, 1, -0.5)
SEED = suites.DEFAULT_SEED


def record(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def run_reports(n: int, tasks, tol_for, budget: float) -> None:
    """Run tasks, check residual <= stated tolerance and wall time <= budget."""
    t0 = time.perf_counter()
    reports = [t.run() for t in tasks]
    elapsed = time.perf_counter() - t0
    bad = []
    worst = 0.0
    for r in reports:
        stated = tol_for(r)
        if r.tolerance > stated * (1 + 1e-12):
            bad.append(f"{r.name}: tolerance {r.tolerance:g} looser than {stated:g}")
        elif not r.passed:
            bad.append(f"{r.name}: residual {r.residual:.3g} > {r.tolerance:g} {r.metadata.get('error', '')}")
        worst = max(worst, r.residual / r.tolerance if r.tolerance else math.inf)
    ok = not bad and elapsed <= budget
    detail = (f"{len(reports) - len(bad)}/{len(reports)} checks, worst residual/tol {worst:.3g}, "
              f"{elapsed:.1f}s (budget {budget:g}s)")
    if bad:
        detail += "; " + "; ".join(bad[:5])
    record(n, ok, detail)


def tasks_named(suite: str, pred) -> list[suites.Task]:
    return [t for t in suites.suite_tasks(suite, SEED) if pred(t.name)]


def const(tol):
    return lambda r: tol


# ---------------------------------------------------------------- 1


def test_criterion_01_verdict_regression():
    t0 = time.perf_counter()
    fails = []

    def expect(name, v, **want):
        got = {
            "regular": v.twisted_regular,
            "condition": v.matched_condition,
            "source_regular": v.source.regular,
            "injective": v.source.injective,
        }
        for k, w in want.items():
            if got[k] != w:
                fails.append(f"{name}: {k}={got[k]!r}, want {w!r}")

    doc = load_document("builtin:twisted-laplacian")
    tl = classify.classify_twisted(doc.table, doc.frame_obj)
    expect("twisted Laplacian", tl, regular=True, condition=833)
    if tl.disc.lam != 0:
        fails.append(f"twisted Laplacian: lambda={tl.disc.lam}")
    expect("xi^2+1", classify.classify_twisted(CoeffTable(a20=1, a00=1), FRAME), regular=True, condition=832)
    expect("B2", classify.classify_twisted(CoeffTable(a20=1, a10=1j, a02=-1), FRAME), regular=True, condition=832)
    expect("D^2-1", classify.classify_table(CoeffTable(a20=1, a00=-1)), regular=False, source_regular=False)
    expect("D^2-M", classify.classify_table(CoeffTable(a20=1, a01=-1)), regular=False, source_regular=False)
    for mu in (1, 3):
        expect(f"mu={mu}", classify.classify_table(CoeffTable(a20=1, a02=1, a00=-mu)),
               source_regular=True, injective=False, regular=False)
    for mu in (0, 2, 4.2):
        expect(f"mu={mu}", classify.classify_table(CoeffTable(a20=1, a02=1, a00=-mu)),
               source_regular=True, injective=True, regular=True)
    elapsed = time.perf_counter() - t0
    record(1, not fails and elapsed <= 1.0,
           f"11 operators, {len(fails)} mismatches, {elapsed:.2f}s (budget 1s)" + ("; " + "; ".join(fails) if fails else ""))


# ---------------------------------------------------------------- 2


def _random_operators(rng: np.random.Generator, n: int) -> list[CoeffTable]:
    ops = []
    for i in range(n):
        kind = i % 4
        if kind == 0:
            ops.append(sampling.random_table(rng))
        elif kind == 3:
            # oscillator family, half of them on the odd lattice
            mu = float(rng.integers(0, 6)) if rng.random() < 0.5 else float(rng.uniform(-2, 10))
            ops.append(CoeffTable(a20=1, a02=1, a00=-mu).scaled(complex(*rng.normal(size=2))))
        else:
            case = (DeltaCase.D1_NONZERO, DeltaCase.ALL_ZERO)[kind - 1]
            b = sampling.random_symbol(rng, case)
            ops.append(CoeffTable(b.b20, b.b11, b.b02, b.b10, b.b01, b.b00))
    return ops


def test_criterion_02_shift_and_scale_invariance():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    ops = _random_operators(rng, 200)
    compared = mismatches = 0
    notes = []
    for i, t in enumerate(ops):
        ref = classify.classify_table(t)
        key = (ref.twisted_regular, ref.matched_condition, ref.source.regular, ref.source.injective)
        scalings = (1.0, complex(*rng.uniform(-3, 3, size=2)), -0.1j)
        for theta in (0.0, 1.0, 2.0):
            for c in scalings:
                try:
                    v = classify.classify_table(t.scaled(c), theta)
                except DomainError as exc:
                    mismatches += 1
                    notes.append(f"op {i} theta={theta}: {exc}")
                    continue
                compared += 1
                if (v.twisted_regular, v.matched_condition, v.source.regular, v.source.injective) != key:
                    mismatches += 1
                    notes.append(f"op {i} theta={theta} c={c:.3g}")
    elapsed = time.perf_counter() - t0
    record(2, mismatches == 0 and elapsed <= 10.0,
           f"200 operators x 3 shifts x 3 scalings, {compared} agree, {mismatches} mismatches, "
           f"{elapsed:.1f}s (budget 10s)" + ("; " + "; ".join(notes[:5]) if notes else ""))


# ---------------------------------------------------------------- 3-5


def test_criterion_03_wronskian():
    run_reports(3, tasks_named("identities", lambda n: n == "wronskian"), const(1e-9), 1.0)


def test_criterion_04_kummer_and_recurrences():
    tasks = tasks_named("identities", lambda n: n == "kummer_and_recurrences")
    assert tasks[0].kwargs.get("samples", 500) >= 500
    run_reports(4, tasks, const(1e-9), 5.0)


def test_criterion_05_gamma_identity():
    run_reports(5, tasks_named("identities", lambda n: n == "gamma_identity"), const(1e-10), 1.0)


# ---------------------------------------------------------------- 6


def test_criterion_06_asymptotic_orders():
    tasks = tasks_named("asymptotic", lambda n: "_order_" in n)
    names = {t.name for t in tasks}
    assert {f"{f}_order_N{N}" for f in ("phi", "theta") for N in (0, 1, 2)} <= names
    run_reports(6, tasks, const(4.0), 10.0)


# ---------------------------------------------------------------- 7


def test_criterion_07_ode_cross_check():
    tasks = suites.suite_tasks("ode", SEED)
    per_case = {c.value: sum(t.name.startswith(f"ode[{c.value}#") for t in tasks) for c in sampling.CASES}
    assert all(k >= 50 for k in per_case.values()), per_case
    run_reports(7, tasks, const(1e-6), 60.0)


# ---------------------------------------------------------------- 8


def _asym_tol(r: CheckReport) -> float:
    stated = {8.0: 0.25, 16.0: 0.13}[r.metadata["R"]]
    # ratio tolerances are doubled (and flagged) only next to Arg = 0
    return 2 * stated if r.metadata.get("relaxed_near_arg0") else stated


def test_criterion_08_solution_asymptotics():
    tasks = tasks_named("asymptotic", lambda n: n.startswith("solution_asym"))
    ops = {t.kwargs["op"] for t in tasks}
    assert ops == set(suites.REGRESSION_OPERATORS)
    run_reports(8, tasks, _asym_tol, 10.0)


# ---------------------------------------------------------------- 9


def test_criterion_09_transform():
    tasks = suites.suite_tasks("transform", SEED)

    def tol(r):
        return 1e-6 if "roundtrip" in r.name else 1e-5

    run_reports(9, tasks, tol, 30.0)


# ---------------------------------------------------------------- 10


def test_criterion_10_never_hypoelliptic():
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED + 10)
    worst = 0.0
    tables = list(suites.REGRESSION_OPERATORS.values()) + [sampling.random_table(rng) for _ in range(100)]
    for t in tables:
        rep = plane.plane_constancy(t, sampling.random_frame(rng), rng)
        worst = max(worst, rep.residual)
    elapsed = time.perf_counter() - t0
    record(10, worst <= 1e-10 and elapsed <= 1.0,
           f"{len(tables)} frames/tables (incl. regression operators), worst {worst:.3g} <= 1e-10, "
           f"{elapsed:.2f}s (budget 1s)")


# ---------------------------------------------------------------- 11


def test_criterion_11_quadrature():
    tasks = suites.suite_tasks("quadrature", SEED)
    tails = [t for t in tasks if t.name.startswith("tail")]
    assert tails

    def tol(r):
        if r.name.startswith("tail"):
            # remainder predicted by the 10/20 fit, validated at |z| = 40
            assert r.metadata["radius"] == 40
            return 1.5
        return 1e-8

    run_reports(11, tasks, tol, 10.0)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
