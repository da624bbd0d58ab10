"""Kummer's confluent function Phi(p, q; z) and the companion Theta(p; z).

Phi is summed from its Maclaurin series.  When the summands are much larger
than the result (negative or strongly complex arguments) the same series is
re-summed in extended precision, so the returned double is accurate to about
1e-12 relative wherever the series converges inside the term cap.

Theta(p; z) is built from two Phi values and cancels heavily for large
``Re z``; it always goes through the cancellation-aware path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from .. import branchcut
from ..errors import AccuracyError, DomainError
from . import _hp
from .gamma import gamma, nearest_nonpositive_integer, pochhammer, recip_gamma

SERIES_TOL = 1e-16
MAX_TERMS = 2000
SWITCH_RADIUS = 25.0
ASYM_ORDER = 6
DEFAULT_EPS = 0.1
Q_POLE_TOL = 1e-10
# digits we are willing to lose in double before re-summing
LOSS_LIMIT = 1e3

SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class AsymptoticEval:
    value: complex
    terms_used: int
    sector_ok: bool
    est_remainder: float
    degenerate: bool = False


def _check_q(q: complex) -> None:
    n = nearest_nonpositive_integer(q, Q_POLE_TOL)
    if n is not None:
        raise DomainError(f"Phi is undefined for q = {q} (near {n})")


def _phi_double(p: complex, q: complex, z: complex, tol: float, max_terms: int):
    term = 1.0 + 0j
    total = 1.0 + 0j
    big = 1.0
    kmin = int(max(abs(p), abs(q))) + 2
    for k in range(max_terms):
        ratio = (p + k) * z / ((k + 1) * (q + k))
        term *= ratio
        total += term
        try:
            a = abs(term)
        except OverflowError:
            return total, math.inf
        if a > big:
            big = a
        if not math.isfinite(big):
            return total, math.inf
        if k >= kmin:
            r = abs(ratio)
            if a == 0 or (r < 1 and a * r / (1 - r) <= tol * abs(total)):
                return total, big
    raise AccuracyError(f"Kummer series did not converge within {max_terms} terms")


def _to_complex(v) -> complex:
    return complex(v)


def phi_series(p: complex, q: complex, z: complex, tol: float = SERIES_TOL,
               max_terms: int = MAX_TERMS) -> complex:
    """Phi(p, q; z) from the Maclaurin series.

    Raises DomainError for q at a nonpositive integer and AccuracyError if
    the series does not settle within ``max_terms`` terms.
    """
    p, q, z = complex(p), complex(q), complex(z)
    _check_q(q)
    if z == 0:
        return 1.0 + 0j
    total, big = _phi_double(p, q, z, tol, max_terms)
    if math.isfinite(big) and big <= LOSS_LIMIT * abs(total):
        return total
    return _to_complex(_hp.phi(p, q, z, max_terms))


def phi_derivatives(p: complex, q: complex, z: complex) -> tuple[complex, complex, complex]:
    """Phi and its first two z-derivatives, from the termwise derivative."""
    p, q = complex(p), complex(q)
    f0 = phi_series(p, q, z)
    f1 = p / q * phi_series(p + 1, q + 1, z)
    f2 = p * (p + 1) / (q * (q + 1)) * phi_series(p + 2, q + 2, z)
    return f0, f1, f2


def _sector_ok(z: complex, half_width: float) -> bool:
    return abs(branchcut.arg(z)) <= half_width


def phi_asym(p: complex, q: complex, z: complex, N: int = ASYM_ORDER,
             eps: float = DEFAULT_EPS) -> AsymptoticEval:
    """Large-|z| form ``e^z z^(p-q) Gamma(q)/Gamma(p) sum_k (q-p)_k (1-p)_k z^-k / k!``.

    Valid for ``|Arg z| <= pi/2 - eps``; ``sector_ok`` reports whether ``z``
    is inside.  For p at a nonpositive integer the prefactor vanishes and the
    result is flagged degenerate.
    """
    p, q, z = complex(p), complex(q), complex(z)
    _check_q(q)
    ok = _sector_ok(z, math.pi / 2 - eps)
    rp = recip_gamma(p)
    if rp == 0:
        return AsymptoticEval(0j, N + 1, ok, 0.0, degenerate=True)
    pre = cmath.exp(z) * branchcut.cpow(z, p - q) * gamma(q) * rp
    s = 0j
    term = 1.0 + 0j
    for k in range(N + 1):
        if k:
            term *= (q - p + k - 1) * (k - p) / (k * z)
        s += term
    nxt = term * (q - p + N) * (N + 1 - p) / ((N + 1) * z)
    return AsymptoticEval(pre * s, N + 1, ok, abs(pre * nxt))


def phi(p: complex, q: complex, z: complex, eps: float = DEFAULT_EPS) -> complex:
    """Phi with automatic route selection.

    The series is used up to the switch radius.  Beyond it the asymptotic
    form (N = 6) is used when z is in its sector and the first omitted term
    is below 1e-14 of the value; otherwise the series is used anyway.
    """
    z = complex(z)
    if abs(z) > SWITCH_RADIUS:
        a = phi_asym(p, q, z, ASYM_ORDER, eps)
        if a.sector_ok and not a.degenerate and a.est_remainder <= 1e-14 * abs(a.value):
            return a.value
    return phi_series(p, q, z)


def phi_route(p: complex, q: complex, z: complex, eps: float = DEFAULT_EPS) -> str:
    z = complex(z)
    if abs(z) > SWITCH_RADIUS:
        a = phi_asym(p, q, z, ASYM_ORDER, eps)
        if a.sector_ok and not a.degenerate and a.est_remainder <= 1e-14 * abs(a.value):
            return "asymptotic"
    return "series"


# ---------------------------------------------------------------- Theta


def _theta_polynomial(p: complex, z: complex) -> complex | None:
    # p = -n or p = -1/2 - n make Theta a polynomial in z
    n = nearest_nonpositive_integer(p, 1e-14)
    if n is not None:
        n = -n
        a, b, lead = -n, 0.5 - n, 2 * n
    else:
        n = nearest_nonpositive_integer(p + 0.5, 1e-14)
        if n is None:
            return None
        n = -n
        a, b, lead = -n, -0.5 - n, 2 * n + 1
    if z == 0:
        # constant term of the polynomial
        c = (-1) ** n * pochhammer(a, n) * pochhammer(b, n) / math.factorial(n)
        return c if lead == 2 * n else 0j
    z2 = z * z
    s = 0j
    term = 1.0 + 0j
    for k in range(n + 1):
        if k:
            term *= -(a + k - 1) * (b + k - 1) / (k * z2)
        s += term
    return z ** lead * s


def theta_series(p: complex, z: complex, max_terms: int = MAX_TERMS) -> complex:
    """Theta(p; z) from its two-Phi representation, cancellation-aware."""
    p, z = complex(p), complex(z)
    poly = _theta_polynomial(p, z)
    if poly is not None:
        return poly
    z2 = z * z
    try:
        s1, b1 = _phi_double(p, 0.5, z2, SERIES_TOL, max_terms)
        s2, b2 = _phi_double(p + 0.5, 1.5, z2, SERIES_TOL, max_terms)
    except AccuracyError:
        s1 = b1 = math.inf
    if math.isfinite(b1) and math.isfinite(b2):
        r1, r2 = recip_gamma(p + 0.5), recip_gamma(p)
        value = SQRT_PI * (s1 * r1 - 2 * z * s2 * r2)
        scale = SQRT_PI * (b1 * abs(r1) + 2 * abs(z) * b2 * abs(r2))
        if scale <= LOSS_LIMIT * abs(value):
            return value
    return _to_complex(_hp.theta(p, z, max_terms))


def theta_asym(p: complex, z: complex, N: int = ASYM_ORDER,
               eps: float = DEFAULT_EPS) -> AsymptoticEval:
    """``z^(-2p) sum_k (-1)^k (p)_k (p+1/2)_k z^(-2k) / k!`` for ``|Arg z| <= pi/2 - eps``."""
    p, z = complex(p), complex(z)
    ok = _sector_ok(z, math.pi / 2 - eps)
    pre = branchcut.cpow(z, -2 * p)
    z2 = z * z
    s = 0j
    term = 1.0 + 0j
    for k in range(N + 1):
        if k:
            term *= -(p + k - 1) * (p + k - 0.5) / (k * z2)
        s += term
    nxt = -term * (p + N) * (p + N + 0.5) / ((N + 1) * z2)
    return AsymptoticEval(pre * s, N + 1, ok, abs(pre * nxt))


def theta(p: complex, z: complex, eps: float = DEFAULT_EPS) -> complex:
    """Theta with automatic route selection (same rule as :func:`phi`)."""
    z = complex(z)
    if abs(z) > SWITCH_RADIUS:
        a = theta_asym(p, z, ASYM_ORDER, eps)
        if a.sector_ok and a.est_remainder <= 1e-14 * abs(a.value):
            return a.value
    return theta_series(p, z)


# ------------------------------------------------------- identity residuals


def _rel(diff: complex, *scale: complex) -> float:
    s = max(abs(v) for v in scale)
    return abs(diff) / s if s > 0 else abs(diff)


def kummer_residual(p: complex, q: complex, z: complex) -> float:
    """Relative defect of ``Phi(p,q;z) = e^z Phi(q-p,q;-z)``."""
    lhs = phi_series(p, q, z)
    rhs = cmath.exp(z) * phi_series(q - p, q, -z)
    return _rel(lhs - rhs, lhs, rhs)


def contiguous_q_residual(p: complex, q: complex, z: complex) -> float:
    """Relative defect of the three-term relation stepping q by one and two."""
    p, q, z = complex(p), complex(q), complex(z)
    f0 = phi_series(p, q, z)
    t1 = (q + z) / q * phi_series(p, q + 1, z)
    t2 = (q + 1 - p) * z / (q * (q + 1)) * phi_series(p, q + 2, z)
    return _rel(f0 - t1 + t2, f0, t1, t2)


def contiguous_pq_residual(p: complex, q: complex, z: complex) -> float:
    """Relative defect of ``Phi(p,q) = Phi(p+1,q) - (z/q) Phi(p+1,q+1)``."""
    p, q, z = complex(p), complex(q), complex(z)
    f0 = phi_series(p, q, z)
    t1 = phi_series(p + 1, q, z)
    t2 = z / q * phi_series(p + 1, q + 1, z)
    return _rel(f0 - t1 + t2, f0, t1, t2)


def theta_recurrence_residual(p: complex, z: complex) -> float:
    """Relative defect of the three-term recurrence of Theta in p."""
    p, z = complex(p), complex(z)
    f0 = theta_series(p, z)
    t1 = (2 * p + 1.5 + z * z) * theta_series(p + 1, z)
    t2 = (p + 1) * (p + 1.5) * theta_series(p + 2, z)
    return _rel(f0 - t1 + t2, f0, t1, t2)


def gamma_identity_residual(lam: complex, sign: int = 1) -> float:
    """Defect of the reciprocal-Gamma identity

    ``1/(G((1-l)/4) G((3+l)/4)) + s i/(G((1+l)/4) G((3-l)/4)) = e^(s i (1+l) pi/4)/pi``.
    """
    lam = complex(lam)
    lhs = (recip_gamma((1 - lam) / 4) * recip_gamma((3 + lam) / 4)
           + sign * 1j * recip_gamma((1 + lam) / 4) * recip_gamma((3 - lam) / 4))
    rhs = cmath.exp(sign * 1j * (1 + lam) * math.pi / 4) / math.pi
    return abs(lhs - rhs) / max(1.0, abs(rhs))


def theta_integral(p: complex, z: complex, angle: float | None = None) -> complex:
    """Theta(p; z) from its Laplace-type integral, for ``Re p > 0``.

    ``e^(i p t)/Gamma(p) int_0^inf s^(p-1) (1+e^(it) s)^-(p+1/2) e^(-e^(it) z^2 s) ds``
    with rotation ``t`` chosen so that ``|Arg z + t/2| < pi/4`` (default
    ``t = -2 Arg z``).  Uses the substitution ``s = e^u`` and mpmath's
    tanh-sinh quadrature; meant as an independent cross-check.
    """
    p, z = complex(p), complex(z)
    if p.real <= 0:
        raise DomainError("integral form needs Re p > 0")
    a = branchcut.arg(z) if z != 0 else 0.0
    if angle is None:
        # admissible angles: |angle| < pi and |Arg z + angle/2| < pi/4
        lo, hi = max(-math.pi, -2 * a - math.pi / 2), min(math.pi, -2 * a + math.pi / 2)
        if lo >= hi:
            raise DomainError("no admissible rotation for this Arg z")
        angle = 0.5 * (lo + hi)
    if abs(angle) >= math.pi or abs(a + angle / 2) >= math.pi / 4:
        raise DomainError("rotation angle outside the admissible range")
    with mp.workdps(30):
        pm, zm = mp.mpc(p), mp.mpc(z)
        rot = mp.expj(angle)
        z2 = zm * zm

        def f(u):
            s = mp.exp(u)
            return mp.exp(pm * u) * mp.power(1 + rot * s, -(pm + mp.mpf(1) / 2)) * mp.exp(-rot * z2 * s)

        # e^(p u) sets the decay as u -> -inf; e^(-Re(rot z^2) e^u) as u -> +inf
        lo = -80.0 / p.real
        damp = float(mp.re(rot * z2))
        hi = math.log(80.0 / damp) + 1.0 if damp > 0 else 12.0
        hi = max(hi, 1.0)
        nodes = [lo + (hi - lo) * j / 16 for j in range(17)]
        val = mp.quad(f, nodes)
        return complex(mp.expj(angle * pm) * val * mp.rgamma(pm))
