"""Analytic solution bases against an adaptive Runge-Kutta integration of ``B u = 0``."""

from __future__ import annotations

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import DomainError, IntegrationError
from ..operators.solutions import eval_solution_jet, solution_basis
from ..operators.symbols import WeylSymbol
from .report import CheckReport

RTOL = 1e-10
ATOL = 1e-12
ODE_TOL = 1e-6


def _rhs(b: WeylSymbol):
    # b20 (-u'') - i (b11 x + b10) u' + (b02 x^2 + b01 x + b00) u = 0
    def f(x, y):
        u, du = y
        d2 = (-1j * (b.b11 * x + b.b10) * du + (b.b02 * x * x + b.b01 * x + b.b00) * u) / b.b20
        return np.array([du, d2])

    return f


def ode_cross_check(b: WeylSymbol, c1: complex, c2: complex, interval=(-6.0, 6.0),
                    rtol: float = RTOL, atol: float = ATOL, npts: int = 41,
                    tol: float = ODE_TOL, name: str = "ode_cross_check") -> CheckReport:
    """Max over the interval of ``|(u, u')_ode - (u, u')_exact| / |(u, u')_exact|``."""
    if b.b20 == 0:
        raise DomainError("b20 = 0: shift the symbol first")
    basis = solution_basis(b)
    y0 = np.array(eval_solution_jet(basis, c1, c2, 0.0), dtype=complex)
    a, c = interval
    worst = 0.0
    f = _rhs(b)
    for end in (a, c):
        if end == 0:
            continue
        xs = np.linspace(0.0, end, npts)
        sol = solve_ivp(f, (0.0, end), y0, method="DOP853", t_eval=xs, rtol=rtol, atol=atol)
        if sol.status != 0:
            raise IntegrationError(f"integration towards {end} stopped at x = {sol.t[-1]:.4g}: {sol.message}")
        for x, u, du in zip(sol.t, sol.y[0], sol.y[1]):
            eu, edu = eval_solution_jet(basis, c1, c2, float(x))
            ref = np.hypot(abs(eu), abs(edu))
            if ref == 0:
                continue
            worst = max(worst, float(np.hypot(abs(u - eu), abs(du - edu)) / ref))
    return CheckReport(name, worst, tol, {"case": basis.case.value, "interval": list(interval),
                                          "rtol": rtol, "atol": atol})
