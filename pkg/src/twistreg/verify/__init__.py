"""Independent numerical checks of the identities, representations and asymptotics."""

from .asymptotic import (
    airy_order_check,
    asym_tolerance,
    phi_order_check,
    solution_asym_check,
    theta_order_check,
)
from .ode import ode_cross_check
from .plane import plane_constancy
from .quadrature import quad_beta_invariance, quad_laplace, tail_remainder
from .report import CheckReport
from .suites import DEFAULT_SEED, REGRESSION_OPERATORS, SUITES, run_suite, suite_tasks
from .transform import (
    Grid,
    intertwining_check,
    roundtrip_check,
    transform_T,
    transform_T_inverse,
)

__all__ = [
    "CheckReport",
    "DEFAULT_SEED",
    "Grid",
    "REGRESSION_OPERATORS",
    "SUITES",
    "airy_order_check",
    "asym_tolerance",
    "intertwining_check",
    "ode_cross_check",
    "phi_order_check",
    "plane_constancy",
    "quad_beta_invariance",
    "quad_laplace",
    "roundtrip_check",
    "run_suite",
    "solution_asym_check",
    "suite_tasks",
    "tail_remainder",
    "theta_order_check",
    "transform_T",
    "transform_T_inverse",
]
