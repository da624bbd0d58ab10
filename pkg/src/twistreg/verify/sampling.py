"""Random operators, frames and parameters for the property suites."""

from __future__ import annotations

import numpy as np

from ..operators.symbols import CoeffTable, DeltaCase, TwistedFrame, WeylSymbol, discriminants

CASES = (DeltaCase.D2_NONZERO, DeltaCase.D1_NONZERO, DeltaCase.ALL_ZERO)
MIN_B20 = 0.5
MAX_SHIFT = 3.0


def disc_point(rng: np.random.Generator, radius: float = 1.0) -> complex:
    """Uniform sample from the disc ``|z| <= radius``."""
    r = radius * np.sqrt(rng.uniform())
    return complex(r * np.exp(2j * np.pi * rng.uniform()))


def random_symbol(rng: np.random.Generator, case: DeltaCase, max_tries: int = 10000) -> WeylSymbol:
    """Symbol with coefficients in the unit disc belonging to ``case``.

    The lower-rank cases are reached by solving ``Delta2 = 0`` (and
    ``Delta1 = 0``) for b02 (and b01), then redrawing until the case test
    agrees.  Draws with ``|b20| < MIN_B20`` or a reduced-variable shift
    beyond ``MAX_SHIFT`` are rejected so solutions on ``[-6, 6]`` stay within
    double-precision range.
    """
    for _ in range(max_tries):
        c = [disc_point(rng) for _ in range(6)]
        if abs(c[0]) < MIN_B20:
            continue
        if case is not DeltaCase.D2_NONZERO:
            c[2] = c[1] ** 2 / (4 * c[0])
        if case is DeltaCase.ALL_ZERO:
            c[4] = c[1] * c[3] / (2 * c[0])
        b = WeylSymbol(*c)
        d = discriminants(b)
        if d.case is not case:
            continue
        if case is DeltaCase.D2_NONZERO and abs(d.d1 / (2 * d.d2)) > MAX_SHIFT:
            continue
        if case is DeltaCase.D1_NONZERO and abs(d.d0 / d.d1) > MAX_SHIFT:
            continue
        return b
    raise RuntimeError(f"could not draw a symbol in case {case.value}")


def random_table(rng: np.random.Generator) -> CoeffTable:
    return CoeffTable(*(disc_point(rng) for _ in range(6)))


def random_frame(rng: np.random.Generator) -> TwistedFrame:
    while True:
        al, be, ga = rng.uniform(-2, 2, size=3)
        if abs(al) < 0.3:
            continue
        de = (1 + be * ga) / al
        if abs(be * de) > 1e-3:
            return TwistedFrame(float(al), float(be), float(ga), float(de))
