"""Special functions: Gamma, Kummer's Phi, Theta and the Airy pair."""

from .airy import airy, airy_ai, airy_asym, airy_bi, airy_envelope
from .confluent import (
    AsymptoticEval,
    contiguous_pq_residual,
    contiguous_q_residual,
    gamma_identity_residual,
    kummer_residual,
    phi,
    phi_asym,
    phi_derivatives,
    phi_route,
    phi_series,
    theta,
    theta_asym,
    theta_integral,
    theta_recurrence_residual,
    theta_series,
)
from .gamma import gamma, pochhammer, recip_gamma, sinpi

__all__ = [
    "AsymptoticEval",
    "airy",
    "airy_ai",
    "airy_asym",
    "airy_bi",
    "airy_envelope",
    "contiguous_pq_residual",
    "contiguous_q_residual",
    "gamma",
    "gamma_identity_residual",
    "kummer_residual",
    "phi",
    "phi_asym",
    "phi_derivatives",
    "phi_route",
    "phi_series",
    "pochhammer",
    "recip_gamma",
    "sinpi",
    "theta",
    "theta_asym",
    "theta_integral",
    "theta_recurrence_residual",
    "theta_series",
]
