"""Integral representations of Beta and Gamma checked by adaptive quadrature.

Integrals over ``(0, inf)`` are taken in the variable ``u = log t``, which
removes the ``t^(p-1)`` endpoint singularity; the ``u``-range is cut where the
integrand's analytic tail bound drops below ``TAIL``.
"""

from __future__ import annotations

import cmath
import math
import warnings

from scipy import integrate

from .. import branchcut
from ..specfun.gamma import gamma
from .report import CheckReport

TAIL = 1e-14
QUAD_TOL = 1e-8
LAPLACE_TOL = 1e-9
TAIL_SLACK = 1.5


def _cquad(f, a: float, b: float, pieces: int = 8) -> complex:
    """Complex integral of ``f`` over ``[a, b]`` (QUADPACK on each part)."""
    edges = [a + (b - a) * k / pieces for k in range(pieces + 1)]
    total = 0j
    for lo, hi in zip(edges, edges[1:]):
        for part in (0, 1):
            g = (lambda u: f(u).real) if part == 0 else (lambda u: f(u).imag)
            with warnings.catch_warnings():
                # roundoff notices near 1e-15 are expected and harmless here
                warnings.simplefilter("ignore", integrate.IntegrationWarning)
                v = integrate.quad(g, lo, hi, epsabs=0.0, epsrel=1e-13, limit=400)[0]
            total += v if part == 0 else 1j * v
    return total


def _lower_cut(re_p: float) -> float:
    # int_{-inf}^{-U} e^(u Re p) du = e^(-U Re p) / Re p <= TAIL
    return (math.log(1 / TAIL) + max(0.0, math.log(1 / re_p))) / re_p


def beta_integral(p: complex, q: complex, theta: float) -> complex:
    """``e^(i theta p) int_0^inf t^(p-1) (1 + e^(i theta) t)^(-(p+q)) dt``."""
    if not (p.real > 0 and q.real > 0):
        raise ValueError("need Re p > 0 and Re q > 0")
    if abs(theta) >= math.pi:
        raise ValueError("need |theta| < pi")
    rot = cmath.exp(1j * theta)
    lo = -_lower_cut(p.real)
    hi = _lower_cut(q.real) + 1.0

    def f(u):
        t = math.exp(u)
        return cmath.exp(u * p) * branchcut.cpow(1 + rot * t, -(p + q))

    return cmath.exp(1j * theta * p) * _cquad(f, lo, hi, 16)


def quad_beta_invariance(p: complex, q: complex, theta: float, tol: float = QUAD_TOL) -> CheckReport:
    p, q = complex(p), complex(q)
    lhs = beta_integral(p, q, theta)
    rhs = gamma(p) * gamma(q) / gamma(p + q)
    return CheckReport("quad_beta_invariance", abs(lhs - rhs) / max(1.0, abs(rhs)), tol,
                       {"p": [p.real, p.imag], "q": [q.real, q.imag], "theta": theta})


def laplace_integral(p: complex, z: complex, upper: float | None = None) -> complex:
    """``z^p int_0^upper t^(p-1) e^(-t z) dt`` (``upper=None`` means infinity)."""
    if p.real <= 0:
        raise ValueError("need Re p > 0")
    lo = -_lower_cut(p.real) - max(0.0, math.log(abs(z)))
    if upper is None:
        if z.real <= 0:
            raise ValueError("need Re z > 0")
        # e^(-t Re z) with t = e^u: stop where t Re z exceeds log(1/TAIL) comfortably
        hi = math.log((math.log(1 / TAIL) + 10 + abs(p)) / z.real) + 1.0
    else:
        hi = math.log(upper)

    def f(u):
        t = math.exp(u)
        return cmath.exp(u * p - t * z)

    return branchcut.cpow(z, p) * _cquad(f, lo, hi, 16)


def quad_laplace(p: complex, z: complex, tol: float = LAPLACE_TOL) -> CheckReport:
    p, z = complex(p), complex(z)
    lhs = laplace_integral(p, z)
    rhs = gamma(p)
    return CheckReport("quad_laplace", abs(lhs - rhs) / max(1.0, abs(rhs)), tol,
                       {"p": [p.real, p.imag], "z": [z.real, z.imag]})


def truncation_remainder(p: complex, z: complex) -> float:
    """``|z^p int_0^1 t^(p-1) e^(-t z) dt - Gamma(p)|``."""
    return abs(laplace_integral(p, z, upper=1.0) - gamma(p))


def tail_remainder(p: complex, eps: float, arg_z: float | None = None,
                   fit_radii=(10.0, 20.0), check_radius: float = 40.0,
                   slack: float = TAIL_SLACK) -> CheckReport:
    """Exponential smallness of the truncated Laplace integral in ``|Arg z| <= pi/2 - eps``.

    The constant ``C`` in ``C |z|^(Re p - 1) e^(-sin(eps)|z|)`` is fitted at
    ``fit_radii`` and the bound is validated at ``check_radius``; the reported
    residual is the measured remainder over the fitted bound there.
    """
    p = complex(p)
    phi = (math.pi / 2 - eps) if arg_z is None else arg_z
    if abs(phi) > math.pi / 2 - eps + 1e-15:
        raise ValueError("Arg z outside the sector")

    def bound(r):
        return r ** (p.real - 1) * math.exp(-math.sin(eps) * r)

    c = max(truncation_remainder(p, cmath.rect(r, phi)) / bound(r) for r in fit_radii)
    rem = truncation_remainder(p, cmath.rect(check_radius, phi))
    resid = rem / (c * bound(check_radius))
    return CheckReport("tail_remainder", resid, slack,
                       {"p": [p.real, p.imag], "eps": eps, "arg_z": phi, "C": c,
                        "remainder": rem, "radius": check_radius})
