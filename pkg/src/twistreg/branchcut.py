"""Principal argument, branch sign and principal complex powers.

All fractional powers in the package go through :func:`cpow` so that the
branch cut sits on the negative real axis with ``Arg z`` in ``(-pi, pi]``.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError

# imaginary parts at or below this are treated as an exact zero
REAL_AXIS_TOL = 1e-300


def arg(z: complex) -> float:
    """Principal argument in ``(-pi, pi]`` via the half-angle arctangent."""
    z = complex(z)
    x, y = z.real, z.imag
    if abs(y) <= REAL_AXIS_TOL:
        if x > 0:
            return 0.0
        if x < 0:
            return math.pi
        raise DomainError("Arg is undefined at z = 0")
    r = math.hypot(x, y)
    if x >= 0:
        return 2.0 * math.atan(y / (x + r))
    # same quantity, rewritten to avoid x + r cancelling near the cut
    return 2.0 * math.atan((r - x) / y)


def sigma(z: complex) -> int:
    """Branch sign: +1 when ``Arg z <= 0`` and -1 otherwise.

    It satisfies ``Arg(-z) = Arg z + sigma(z) * pi``.
    """
    return 1 if arg(z) <= 0 else -1


def log(z: complex) -> complex:
    z = complex(z)
    if z == 0:
        raise DomainError("log(0)")
    return complex(math.log(abs(z)), arg(z))


def cpow(z: complex, lam: complex) -> complex:
    """Principal power ``z**lam = exp(lam log|z| + i lam Arg z)``."""
    z = complex(z)
    lam = complex(lam)
    if z == 0:
        if lam.real > 0:
            return 0j
        raise DomainError("0 ** lam requires Re lam > 0")
    if lam.imag == 0 and lam.real == int(lam.real) and abs(lam.real) <= 64:
        # integer powers are branch free; repeated products keep negative
        # reals exactly real
        n = int(lam.real)
        if n >= 0:
            return z ** n
        return 1.0 / z ** (-n)
    return cmath.exp(lam * log(z))


def sqrt(z: complex) -> complex:
    return cpow(z, 0.5)
