"""Named verification suites and a small parallel runner.

A suite is a list of tasks; each task is a module-level function plus
keyword arguments (so it can be shipped to worker processes) that returns a
CheckReport.  Random inputs derive from one integer seed per task, spawned
from the suite seed, which keeps results independent of the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .. import weber
from ..operators.symbols import CoeffTable, DeltaCase, TwistedFrame, weyl_symbol
from ..specfun import confluent
from . import asymptotic, ode, plane, quadrature, sampling, transform
from .report import CheckReport

DEFAULT_SEED = 20240517
REFERENCE_FRAME = TwistedFrame(-1.0, -0.5, 1.0, -0.5)

# operators with known verdicts, reused by several suites
REGRESSION_OPERATORS: dict[str, CoeffTable] = {
    "harmonic_oscillator": CoeffTable(a20=1, a02=1),
    "xi2_plus_1": CoeffTable(a20=1, a00=1),
    "B2": CoeffTable(a20=1, a10=1j, a02=-1),
    "D2_minus_1": CoeffTable(a20=1, a00=-1),
    "D2_minus_M": CoeffTable(a20=1, a01=-1),
    "oscillator_mu1": CoeffTable(a20=1, a02=1, a00=-1),
    "oscillator_mu3": CoeffTable(a20=1, a02=1, a00=-3),
}


@dataclass(frozen=True)
class Task:
    name: str
    func: Callable[..., CheckReport]
    kwargs: dict[str, Any] = field(default_factory=dict)

    def run(self) -> CheckReport:
        try:
            rep = self.func(**self.kwargs)
        except Exception as exc:  # a crashing check is a failed check, not a crashed suite
            return CheckReport(self.name, math.inf, 0.0, {"error": f"{type(exc).__name__}: {exc}"})
        return CheckReport(self.name, rep.residual, rep.tolerance, rep.metadata)


# ------------------------------------------------------------- task bodies


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def check_wronskian(seed: int, samples: int = 100, tol: float = 1e-9) -> CheckReport:
    rng = _rng(seed)
    worst = raw = 0.0
    for _ in range(samples):
        lam = sampling.disc_point(rng, 6.0)
        z = sampling.disc_point(rng, 3.0)
        worst = max(worst, weber.wronskian_defect(lam, z))
        raw = max(raw, abs(weber.wronskian(lam, z) - 1))
    return CheckReport("wronskian", worst, tol, {"samples": samples, "seed": seed, "max_abs_defect": raw})


def check_kummer_recurrences(seed: int, samples: int = 500, tol: float = 1e-9) -> CheckReport:
    rng = _rng(seed)
    worst = 0.0
    kinds = ("kummer", "contiguous_q", "contiguous_pq", "theta_recurrence")
    per = {k: 0.0 for k in kinds}
    for i in range(samples):
        p = sampling.disc_point(rng, 3.0)
        q = complex(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0))
        z = sampling.disc_point(rng, 4.0)
        kind = kinds[i % 4]
        if kind == "kummer":
            r = confluent.kummer_residual(p, q, z)
        elif kind == "contiguous_q":
            r = confluent.contiguous_q_residual(p, q, z)
        elif kind == "contiguous_pq":
            r = confluent.contiguous_pq_residual(p, q, z)
        else:
            r = confluent.theta_recurrence_residual(p, sampling.disc_point(rng, 3.0))
        per[kind] = max(per[kind], r)
        worst = max(worst, r)
    return CheckReport("kummer_and_recurrences", worst, tol,
                       {"samples": samples, "seed": seed, "per_identity": per})


def check_gamma_identity(seed: int, samples: int = 100, tol: float = 1e-10) -> CheckReport:
    rng = _rng(seed)
    worst = 0.0
    for _ in range(samples):
        lam = sampling.disc_point(rng, 5.0)
        for s in (1, -1):
            worst = max(worst, confluent.gamma_identity_residual(lam, s))
    return CheckReport("gamma_identity", worst, tol, {"samples": samples, "seed": seed})


def check_theta_identities(seed: int, samples: int = 40, tol: float = 1e-9) -> CheckReport:
    rng = _rng(seed)
    worst = 0.0
    for _ in range(samples):
        lam = sampling.disc_point(rng, 4.0)
        z = sampling.disc_point(rng, 3.0)
        for which in weber.IDENTITIES:
            for s in (1, -1):
                worst = max(worst, weber.theta_identity_residual(lam, z, which, s))
    return CheckReport("theta_identities", worst, tol, {"samples": samples, "seed": seed})


def check_ode_random(seed: int, case: str, tol: float = ode.ODE_TOL) -> CheckReport:
    rng = _rng(seed)
    b = sampling.random_symbol(rng, DeltaCase(case))
    c1, c2 = sampling.disc_point(rng), sampling.disc_point(rng)
    rep = ode.ode_cross_check(b, c1, c2, tol=tol)
    return CheckReport(rep.name, rep.residual, rep.tolerance, dict(rep.metadata, seed=seed))


def check_ode_regression(op: str, c1: complex, c2: complex) -> CheckReport:
    return ode.ode_cross_check(weyl_symbol(REGRESSION_OPERATORS[op]), c1, c2)


def check_solution_asym(op: str, c1: complex, c2: complex, R: float) -> CheckReport:
    return asymptotic.solution_asym_check(weyl_symbol(REGRESSION_OPERATORS[op]), c1, c2, R)


def check_transform(kind: str, hermite: bool) -> CheckReport:
    grid = transform.Grid()
    f = transform.gaussian(grid, hermite)
    if kind == "roundtrip":
        return transform.roundtrip_check(f, REFERENCE_FRAME, grid)
    return transform.intertwining_check(f, REFERENCE_FRAME, grid, kind)


def check_plane(seed: int, samples: int = 100, tol: float = plane.PLANE_TOL) -> CheckReport:
    rng = _rng(seed)
    worst = 0.0
    for i in range(samples):
        frame = sampling.random_frame(rng)
        if i < len(REGRESSION_OPERATORS):
            table = list(REGRESSION_OPERATORS.values())[i]
        else:
            table = sampling.random_table(rng)
        worst = max(worst, plane.plane_constancy(table, frame, rng).residual)
    return CheckReport("plane_constancy", worst, tol, {"samples": samples, "seed": seed})


def check_beta(p: complex, q: complex, theta: float) -> CheckReport:
    return quadrature.quad_beta_invariance(p, q, theta)


def check_laplace(p: complex, z: complex) -> CheckReport:
    return quadrature.quad_laplace(p, z)


def check_tail(p: complex, eps: float) -> CheckReport:
    return quadrature.tail_remainder(p, eps)


# ------------------------------------------------------------------ suites


def _seeds(seed: int, n: int) -> list[int]:
    return [int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(n)]


def _identities(seed: int) -> list[Task]:
    s = _seeds(seed, 4)
    return [
        Task("wronskian", check_wronskian, {"seed": s[0]}),
        Task("kummer_and_recurrences", check_kummer_recurrences, {"seed": s[1]}),
        Task("gamma_identity", check_gamma_identity, {"seed": s[2]}),
        Task("theta_identities", check_theta_identities, {"seed": s[3]}),
    ]


def _asymptotic(seed: int) -> list[Task]:
    tasks = []
    for N in (0, 1, 2):
        tasks.append(Task(f"phi_order_N{N}", asymptotic.phi_order_check, {"N": N}))
        tasks.append(Task(f"theta_order_N{N}", asymptotic.theta_order_check, {"N": N}))
    for which in ("ai", "bi"):
        for regime in ("right", "left"):
            tasks.append(Task(f"airy_order_{which}_{regime}", asymptotic.airy_order_check,
                              {"which": which, "regime": regime}))
    coeffs = {"harmonic_oscillator": [(1, 0), (0, 1), (1, 1)], "B2": [(1, 1), (1, 0)],
              "D2_minus_M": [(1, 0), (0, 1)], "xi2_plus_1": [(1, 1)], "D2_minus_1": [(1, 1)],
              "oscillator_mu1": [(1, 0), (1, 1)], "oscillator_mu3": [(0, 1), (1, 1)]}
    for op, cs in coeffs.items():
        for c1, c2 in cs:
            for R in (8.0, 16.0):
                tasks.append(Task(f"solution_asym[{op},{c1},{c2},R={R:g}]", check_solution_asym,
                                  {"op": op, "c1": c1, "c2": c2, "R": R}))
    return tasks


def _ode(seed: int, per_case: int = 50) -> list[Task]:
    tasks = [
        Task("ode[harmonic_oscillator]", check_ode_regression, {"op": "harmonic_oscillator", "c1": 1, "c2": 0}),
        Task("ode[D2_minus_M]", check_ode_regression, {"op": "D2_minus_M", "c1": 0, "c2": 1}),
    ]
    for case, s in zip(sampling.CASES, _seeds(seed, len(sampling.CASES))):
        for i, sub in enumerate(_seeds(s, per_case)):
            tasks.append(Task(f"ode[{case.value}#{i:02d}]", check_ode_random,
                              {"seed": sub, "case": case.value}))
    return tasks


def _transform(seed: int) -> list[Task]:
    return [Task(f"transform_{k}[{'hermite' if h else 'gaussian'}]", check_transform,
                 {"kind": k, "hermite": h})
            for k in ("roundtrip", "M", "D") for h in (False, True)]


def _quadrature(seed: int) -> list[Task]:
    return [
        Task("beta[1,1,0]", check_beta, {"p": 1, "q": 1, "theta": 0.0}),
        Task("beta[1/2,1/2,0]", check_beta, {"p": 0.5, "q": 0.5, "theta": 0.0}),
        Task("beta[1+i/3,2,pi/5]", check_beta, {"p": 1 + 1j / 3, "q": 2, "theta": math.pi / 5}),
        Task("beta[0.3+0.5i,0.7,-2.5]", check_beta, {"p": 0.3 + 0.5j, "q": 0.7, "theta": -2.5}),
        Task("laplace[1,1]", check_laplace, {"p": 1, "z": 1}),
        Task("laplace[1/2,2+i]", check_laplace, {"p": 0.5, "z": 2 + 1j}),
        Task("laplace[0.2+i,0.1+5i]", check_laplace, {"p": 0.2 + 1j, "z": 0.1 + 5j}),
        Task("tail[3/4,0.3]", check_tail, {"p": 0.75, "eps": 0.3}),
        Task("tail[0.3+0.4i,0.1]", check_tail, {"p": 0.3 + 0.4j, "eps": 0.1}),
    ]


def _plane(seed: int) -> list[Task]:
    return [Task("plane_constancy", check_plane, {"seed": _seeds(seed, 1)[0]})]


SUITES: dict[str, Callable[[int], list[Task]]] = {
    "identities": _identities,
    "asymptotic": _asymptotic,
    "ode": _ode,
    "transform": _transform,
    "quadrature": _quadrature,
    "plane": _plane,
}


def suite_tasks(name: str, seed: int = DEFAULT_SEED) -> list[Task]:
    if name in ("default", "all"):
        return [t for key in SUITES for t in SUITES[key](seed)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['default']}")
    return SUITES[name](seed)


def _run(task: Task) -> CheckReport:
    return task.run()


def run_tasks(tasks: list[Task], jobs: int = 1) -> list[CheckReport]:
    """Run tasks (in worker processes when ``jobs > 1``); reports come back sorted by name."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run, tasks))
    else:
        reports = [t.run() for t in tasks]
    return sorted(reports, key=lambda r: r.name)


def run_suite(name: str = "default", seed: int = DEFAULT_SEED, jobs: int = 1) -> list[CheckReport]:
    return run_tasks(suite_tasks(name, seed), jobs)
