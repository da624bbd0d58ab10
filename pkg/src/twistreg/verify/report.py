"""Result record shared by all numerical checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckReport:
    name: str
    residual: float
    tolerance: float
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        # NaN never passes
        return bool(math.isfinite(self.residual) and self.residual <= self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "residual": self.residual if math.isfinite(self.residual) else str(self.residual),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "metadata": self.metadata,
        }
