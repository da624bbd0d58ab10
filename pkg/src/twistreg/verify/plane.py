"""Constancy of the twisted symbol along its characteristic plane directions."""

from __future__ import annotations

import numpy as np

from ..operators.symbols import CoeffTable, TwistedFrame, plane_directions, twisted_symbol
from .report import CheckReport

PLANE_TOL = 1e-10


def plane_constancy(table: CoeffTable, frame: TwistedFrame, rng: np.random.Generator,
                    samples: int = 5, tol: float = PLANE_TOL, name: str = "plane_constancy") -> CheckReport:
    """Max relative change of the symbol between a point and its translates along the plane."""
    frame.validate()
    v1, v2 = plane_directions(frame)
    worst = 0.0
    for _ in range(samples):
        p = rng.uniform(-3, 3, size=4)
        s1, s2 = rng.uniform(-3, 3, size=2)
        q = [p[i] + s1 * v1[i].real + s2 * v2[i].real for i in range(4)]
        a0 = twisted_symbol(table, frame, *p)
        a1 = twisted_symbol(table, frame, *q)
        scale = max(1.0, abs(a0), sum(abs(c) for *_, c in table.items()))
        worst = max(worst, abs(a1 - a0) / scale)
    return CheckReport(name, worst, tol, {"samples": samples})
