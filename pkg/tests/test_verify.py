import math

import numpy as np
import pytest

from twistreg.errors import CaseError
from twistreg.operators import CoeffTable, DeltaCase, discriminants, weyl_symbol
from twistreg.verify import asymptotic, ode, quadrature, sampling, suites, transform
from twistreg.verify.report import CheckReport


def test_report_pass_rules():
    assert CheckReport("a", 1e-10, 1e-9).passed
    assert not CheckReport("a", 2e-9, 1e-9).passed
    assert not CheckReport("a", math.nan, 1.0).passed
    assert CheckReport("a", math.inf, 1.0).to_dict()["residual"] == "inf"


def test_task_turns_exception_into_failure():
    def boom():
        raise RuntimeError("nope")

    rep = suites.Task("boom", boom).run()
    assert not rep.passed and "nope" in rep.metadata["error"]


@pytest.mark.parametrize("case", sampling.CASES)
def test_random_symbol_hits_case(case):
    rng = np.random.default_rng(11)
    for _ in range(20):
        b = sampling.random_symbol(rng, case)
        assert discriminants(b).case is case


def test_random_frame_admissible():
    rng = np.random.default_rng(5)
    for _ in range(50):
        sampling.random_frame(rng).validate()


def test_ode_cross_check_oscillator():
    rep = ode.ode_cross_check(weyl_symbol(CoeffTable(a20=1, a02=1, a00=-0.5)), 1, 0.3j)
    assert rep.passed, rep


def test_solution_asym_oscillator():
    b = weyl_symbol(CoeffTable(a20=1, a02=1))
    for R in (8.0, 16.0):
        rep = asymptotic.solution_asym_check(b, 1, 0, R)
        assert rep.passed, rep


def test_asym_tolerances():
    assert asymptotic.asym_tolerance(8) == 0.25
    assert asymptotic.asym_tolerance(16) == 0.13


@pytest.mark.parametrize("N", [0, 1, 2])
def test_phi_order(N):
    rep = asymptotic.phi_order_check(N)
    assert rep.passed and rep.residual < 1.2


def test_airy_order():
    assert asymptotic.airy_order_check("ai", "right").passed


def test_beta_integral_trivial():
    # p = q = 1 at theta = 0 is the integral of e^(-t): Gamma(1)
    assert quadrature.quad_beta_invariance(1, 1, 0.0).passed


def test_laplace_check():
    assert quadrature.quad_laplace(0.5, 2 + 1j).passed


def test_tail_fit_validates():
    rep = quadrature.tail_remainder(0.75, 0.3)
    assert rep.passed, rep


def test_transform_small_grid_roundtrip():
    grid = transform.Grid(10.0, 128)
    rep = transform.roundtrip_check(transform.gaussian(grid), suites.REFERENCE_FRAME, grid, tol=1e-4)
    assert rep.passed, rep


def test_intertwining_rejects_unknown():
    grid = transform.Grid(10.0, 64)
    with pytest.raises(ValueError):
        transform.intertwining_check(transform.gaussian(grid), suites.REFERENCE_FRAME, grid, "Q")


def test_suite_names_unique_and_deterministic():
    a = [t.name for t in suites.suite_tasks("default")]
    b = [t.name for t in suites.suite_tasks("default")]
    assert a == b and len(a) == len(set(a))
    with pytest.raises(ValueError):
        suites.suite_tasks("no-such-suite")


def test_runner_order_independent_of_jobs():
    tasks = suites.suite_tasks("identities")
    one = suites.run_tasks(tasks, 1)
    two = suites.run_tasks(tasks, 2)
    assert [r.name for r in one] == sorted(r.name for r in one)
    assert [(r.name, r.residual) for r in one] == [(r.name, r.residual) for r in two]
    assert all(r.passed for r in one)
