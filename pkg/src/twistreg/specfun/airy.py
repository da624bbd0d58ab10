"""Airy functions from their Maclaurin series and leading-order sector forms."""

from __future__ import annotations

import cmath
import math

from .. import branchcut
from ..errors import SectorError
from . import _hp
from .confluent import LOSS_LIMIT, AsymptoticEval, DEFAULT_EPS
from .gamma import recip_gamma

SQRT3 = math.sqrt(3.0)
_A0 = 3.0 ** (-2.0 / 3.0) * recip_gamma(2.0 / 3.0).real
_B0 = 3.0 ** (-4.0 / 3.0) * recip_gamma(4.0 / 3.0).real


def _parts_double(z: complex, max_terms: int = 2000):
    z3 = z ** 3
    a = complex(_A0)
    b = _B0 * z
    A, dA = a, 0j
    B, dB = b, complex(_B0)
    big = abs(a) + abs(b) + abs(dB)
    if z == 0:
        return A, dA, B, dB, big
    for k in range(max_terms):
        a *= z3 / (9 * (k + 1) * (k + 2.0 / 3.0))
        b *= z3 / (9 * (k + 1) * (k + 4.0 / 3.0))
        da = 3 * (k + 1) * a / z
        db = (3 * (k + 1) + 1) * b / z
        A += a
        B += b
        dA += da
        dB += db
        m = abs(a) + abs(b) + abs(da) + abs(db)
        if m > big:
            big = m
        if not math.isfinite(big):
            return A, dA, B, dB, math.inf
        if k > abs(z) ** 1.5 and m <= 1e-17 * (abs(A) + abs(B) + abs(dA) + abs(dB)):
            return A, dA, B, dB, big
    return A, dA, B, dB, math.inf


def airy(z: complex) -> tuple[complex, complex, complex, complex]:
    """Return ``(Ai, Ai', Bi, Bi')`` at ``z`` from the Maclaurin series.

    ``Ai = A - B`` and ``Bi = sqrt(3) (A + B)`` with the two pieces
    ``A = sum z^(3k)/(3^(2k+2/3) k! Gamma(k+2/3))`` and
    ``B = sum z^(3k+1)/(3^(2k+4/3) k! Gamma(k+4/3))``.
    Accurate to about 1e-12 relative for ``|z| <= 8`` and beyond, since
    cancelling sums are redone in extended precision.
    """
    z = complex(z)
    A, dA, B, dB, big = _parts_double(z)
    vals = (A - B, dA - dB, SQRT3 * (A + B), SQRT3 * (dA + dB))
    if math.isfinite(big) and all(big <= LOSS_LIMIT * abs(v) for v in vals):
        return vals

    def evaluate():
        A, dA, B, dB, big = _hp.airy_parts(z)
        r3 = _hp.mp.sqrt(3)
        return (A - B, dA - dB, r3 * (A + B), r3 * (dA + dB)), big * 2

    out = _hp.adaptive(evaluate)
    return tuple(complex(v) for v in out)


def airy_ai(z: complex) -> complex:
    return airy(z)[0]


def airy_bi(z: complex) -> complex:
    return airy(z)[2]


def airy_asym(which: str, z: complex, regime: str, eps: float = DEFAULT_EPS) -> AsymptoticEval:
    """Leading-order large-|z| form of Ai or Bi.

    ``regime`` is ``"right"`` (exponential behaviour around the positive
    axis) or ``"left"`` (oscillatory behaviour around the negative axis).
    Sectors: Ai right ``|Arg z| <= pi - eps``; Bi right
    ``-pi/3 + eps <= Arg z <= pi/3 + eps``; left ``|Arg(-z)| <= 2pi/3 - eps``.
    A point outside the sector raises SectorError.
    """
    z = complex(z)
    if which not in ("ai", "bi"):
        raise ValueError("which must be 'ai' or 'bi'")
    if regime == "right":
        a = branchcut.arg(z)
        if which == "ai":
            ok = abs(a) <= math.pi - eps
        else:
            ok = -math.pi / 3 + eps <= a <= math.pi / 3 + eps
        if not ok:
            raise SectorError(f"Arg z = {a:.4f} outside the {which} right sector")
        zeta = 2.0 / 3.0 * branchcut.cpow(z, 1.5)
        q = branchcut.cpow(z, -0.25)
        if which == "ai":
            value = q / (2 * math.sqrt(math.pi)) * cmath.exp(-zeta)
            rem = abs(value) * 5.0 / 72.0 / abs(zeta)
        else:
            value = (cmath.exp(1j * math.pi / 4) * q / math.sqrt(2 * math.pi)
                     * ((1 - 1j) * cmath.exp(zeta) + (1 + 1j) / 2 * cmath.exp(-zeta)))
            rem = abs(value) * 5.0 / 72.0 / abs(zeta)
        return AsymptoticEval(value, 1, True, rem)
    if regime == "left":
        w = -z
        a = branchcut.arg(w)
        if abs(a) > 2 * math.pi / 3 - eps:
            raise SectorError(f"Arg(-z) = {a:.4f} outside the left sector")
        zeta = 2.0 / 3.0 * branchcut.cpow(w, 1.5)
        q = branchcut.cpow(w, -0.25) / (2 * math.sqrt(2 * math.pi))
        ep, em = cmath.exp(1j * zeta), cmath.exp(-1j * zeta)
        if which == "ai":
            value = q * ((1 - 1j) * ep + (1 + 1j) * em)
        else:
            value = q * ((1 + 1j) * ep + (1 - 1j) * em)
        envelope = abs(q) * 2 * math.sqrt(2) * max(abs(ep), abs(em))
        return AsymptoticEval(value, 1, True, envelope * 5.0 / 72.0 / abs(zeta))
    raise ValueError("regime must be 'right' or 'left'")


def airy_envelope(z: complex) -> float:
    """Amplitude scale ``|z|^(-1/4)/sqrt(pi)`` used to judge oscillatory errors."""
    return abs(z) ** -0.25 / math.sqrt(math.pi)
