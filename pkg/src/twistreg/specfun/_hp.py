"""Extended-precision kernels for series that cancel in double precision.

The double routines sum a series once, compare the largest summand with the
result and, if too many digits were lost, re-run the same series here with
mpmath numbers at a working precision large enough to absorb the loss.
Only mpmath's arithmetic (and its reciprocal Gamma for high-precision
coefficients) is used; the series themselves are the ones in this package.
"""

from __future__ import annotations

from typing import Callable

import mpmath as mp

from ..errors import AccuracyError

# keep at least this many digits beyond the cancellation
GUARD_DIGITS = 20
MAX_PASSES = 10


def adaptive(evaluate: Callable[[], tuple], start_dps: int = 30):
    """Run ``evaluate`` at growing precision until the result is trustworthy.

    ``evaluate`` is called inside ``mp.workdps`` and returns ``(value, scale)``
    where ``scale`` bounds the magnitude of the quantities that were added.
    The digits lost are ``log10(scale / |value|)``; we retry with a larger
    precision until the working precision exceeds the loss by GUARD_DIGITS.
    The returned value is an mpmath number valid at the caller's precision.
    """
    dps = max(start_dps, mp.mp.dps + GUARD_DIGITS)
    for _ in range(MAX_PASSES):
        with mp.workdps(dps):
            value, scale = evaluate()
            parts = value if isinstance(value, tuple) else (value,)
            lost = 0.0
            if scale != 0:
                for v in parts:
                    # an exact zero is a genuine zero of a finite sum
                    if v != 0:
                        lost = max(lost, float(mp.log10(scale / abs(v))))
            if dps - lost >= GUARD_DIGITS:
                if isinstance(value, tuple):
                    return tuple(+v for v in value)
                return +value
        # a result that is pure rounding noise only tells us the loss is at
        # least the working precision, so grow geometrically as well
        dps = max(int(lost) + 2 * GUARD_DIGITS, 2 * dps)
    raise AccuracyError("extended precision did not settle")


def phi_terms(p, q, z, max_terms: int):
    """Sum the Kummer series at the current precision; returns (sum, scale).

    Magnitudes are measured with the cheap norm ``|re| + |im|`` (within a
    factor sqrt(2) of the modulus), which is all the loss estimate needs.
    """
    p, q, z = mp.mpc(p), mp.mpc(q), mp.mpc(z)
    term = mp.mpc(1)
    total = mp.mpc(1)
    big = mp.mpf(1)
    eps = mp.eps
    fabs = mp.fabs
    kmin = int(max(abs(p), abs(q))) + 2
    for k in range(max_terms):
        ratio = (p + k) * z / ((k + 1) * (q + k))
        term *= ratio
        total += term
        a = fabs(term.real) + fabs(term.imag)
        if a > big:
            big = a
        if k >= kmin:
            if a == 0:
                return total, big
            if a <= eps * (fabs(total.real) + fabs(total.imag)):
                r = abs(ratio)
                if r < 1 and a * r / (1 - r) <= eps * abs(total):
                    return total, big
    raise AccuracyError(f"Kummer series did not converge within {max_terms} terms")


def phi(p, q, z, max_terms: int):
    return adaptive(lambda: phi_terms(p, q, z, max_terms))


def theta_parts(p, z, max_terms: int):
    p, z = mp.mpc(p), mp.mpc(z)
    z2 = z * z
    s1, b1 = phi_terms(p, mp.mpf(1) / 2, z2, max_terms)
    s2, b2 = phi_terms(p + mp.mpf(1) / 2, mp.mpf(3) / 2, z2, max_terms)
    r1 = mp.rgamma(p + mp.mpf(1) / 2)
    r2 = mp.rgamma(p)
    root_pi = mp.sqrt(mp.pi)
    value = root_pi * (s1 * r1 - 2 * z * s2 * r2)
    scale = root_pi * (b1 * abs(r1) + 2 * abs(z) * b2 * abs(r2))
    return value, scale


def theta(p, z, max_terms: int):
    return adaptive(lambda: theta_parts(p, z, max_terms))


def airy_parts(z, max_terms: int = 2000):
    """Return the two Maclaurin pieces and their derivatives with a scale.

    ``A = sum z^(3k) / (3^(2k+2/3) k! Gamma(k+2/3))`` and
    ``B = sum z^(3k+1) / (3^(2k+4/3) k! Gamma(k+4/3))``.
    """
    z = mp.mpc(z)
    z3 = z ** 3
    a = mp.power(3, -mp.mpf(2) / 3) * mp.rgamma(mp.mpf(2) / 3)
    b = mp.power(3, -mp.mpf(4) / 3) * mp.rgamma(mp.mpf(4) / 3) * z
    A, dA = a, mp.mpc(0)
    B, dB = b, mp.power(3, -mp.mpf(4) / 3) * mp.rgamma(mp.mpf(4) / 3)
    big = abs(a) + abs(b) + abs(dB)
    eps = mp.eps
    for k in range(max_terms):
        a *= z3 / (9 * (k + 1) * (k + mp.mpf(2) / 3))
        b *= z3 / (9 * (k + 1) * (k + mp.mpf(4) / 3))
        A += a
        B += b
        # d/dz z^(3k) = 3k z^(3k-1); written with the term itself to stay entire
        da = 3 * (k + 1) * a / z if z != 0 else mp.mpc(0)
        db = (3 * (k + 1) + 1) * b / z if z != 0 else mp.mpc(0)
        dA += da
        dB += db
        m = abs(a) + abs(b) + abs(da) + abs(db)
        if m > big:
            big = m
        if k > abs(z) ** 1.5 and m <= eps * (abs(A) + abs(B) + abs(dA) + abs(dB)):
            return A, dA, B, dB, big
        if z == 0:
            return A, dA, B, dB, big
    raise AccuracyError("Airy series did not converge")
