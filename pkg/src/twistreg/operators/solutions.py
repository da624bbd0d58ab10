"""Analytic solutions of ``B u = 0`` for a quadratic operator B and their
leading behaviour at both ends of the line.

``u = G v`` with the Gaussian prefactor ``G = exp(-(i/4b20)(b11 x^2 + 2 b10 x))``
reduces ``B u = 0`` to ``v'' + (Delta2 x^2 + Delta1 x + Delta0) v / (4 b20^2) = 0``,
which is a Hermite-Weber, an Airy or a constant-coefficient equation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate

from .. import branchcut, weber
from ..errors import CaseError, DomainError
from ..specfun.airy import airy as airy_values
from .symbols import DeltaCase, Discriminants, WeylSymbol, discriminants, sigma_phase


@dataclass(frozen=True)
class SolutionBasis:
    """Everything needed to evaluate ``u1`` and ``u2``.

    ``scale`` and ``shift`` define the reduced variable ``z = scale (x + shift)``
    for the Hermite-Weber and Airy cases; ``rho = sigma(r) r^(1/2)`` with
    ``r = Delta0/b20^2`` is used in the constant-coefficient case.
    """

    b: WeylSymbol
    disc: Discriminants
    scale: complex = 0j
    shift: complex = 0j
    rho: complex = 0j
    lam: complex | None = None

    @property
    def case(self) -> DeltaCase:
        return self.disc.case

    def z(self, x: float) -> complex:
        return self.scale * (x + self.shift)

    def prefactor(self, x: float) -> tuple[complex, complex]:
        """``G(x)`` and ``G'(x)``."""
        b = self.b
        g = cmath.exp(-1j / (4 * b.b20) * (b.b11 * x * x + 2 * b.b10 * x))
        return g, g * (-1j / (4 * b.b20)) * (2 * b.b11 * x + 2 * b.b10)


LAMBDA_SNAP = 1e-12


def snap_lambda(lam: complex, tol: float = LAMBDA_SNAP) -> complex:
    """Put ``lam`` exactly on the odd integers when it is there up to rounding.

    On that lattice a polynomial-times-Gaussian solution exists, and a
    rounding-level offset would otherwise add an exponentially growing part.
    """
    m = round((lam.real - 1) / 2)
    target = 1 + 2 * m
    if abs(lam - target) <= tol * max(1.0, abs(lam)):
        return complex(target)
    return lam


def solution_basis(b: WeylSymbol, tol: float | None = None) -> SolutionBasis:
    if b.b20 == 0:
        raise DomainError("b20 = 0: shift the symbol before solving")
    disc = discriminants(b) if tol is None else discriminants(b, tol)
    b20sq = b.b20 ** 2
    if disc.case is DeltaCase.D2_NONZERO:
        s = branchcut.cpow(-disc.d2 / (4 * b20sq), 0.25)
        return SolutionBasis(b, disc, s, disc.d1 / (2 * disc.d2), lam=snap_lambda(disc.lam))
    if disc.case is DeltaCase.D1_NONZERO:
        s = branchcut.cpow(-disc.d1 / (4 * b20sq), 1.0 / 3.0)
        return SolutionBasis(b, disc, s, disc.d0 / disc.d1)
    rho = 0j
    if abs(disc.d0) > disc.tol:
        r = disc.d0 / b20sq
        rho = branchcut.sigma(r) * branchcut.sqrt(r)
    return SolutionBasis(b, disc, rho=rho)


def basis_jet(basis: SolutionBasis, x: float) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
    """``((u1, u1'), (u2, u2'))`` at real ``x``."""
    g, dg = basis.prefactor(x)
    case = basis.case
    if case is DeltaCase.ALL_ZERO:
        if basis.rho == 0:
            return (g, dg), (g * x, dg * x + g)
        out = []
        for sgn in (1, -1):
            k = sgn * 0.5j * basis.rho
            e = cmath.exp(k * x)
            out.append((g * e, (dg + k * g) * e))
        return out[0], out[1]
    z = basis.z(x)
    s = basis.scale
    if case is DeltaCase.D2_NONZERO:
        (w1, dw1), (w2, dw2) = weber.weber_jet(basis.lam, z, 1)
    else:
        w1, dw1, w2, dw2 = airy_values(z)
    return (g * w1, dg * w1 + g * s * dw1), (g * w2, dg * w2 + g * s * dw2)


def eval_solution_jet(basis: SolutionBasis, c1: complex, c2: complex, x: float) -> tuple[complex, complex]:
    (u1, du1), (u2, du2) = basis_jet(basis, x)
    return c1 * u1 + c2 * u2, c1 * du1 + c2 * du2


def eval_solution(basis: SolutionBasis, c1: complex, c2: complex, x: float) -> complex:
    """``c1 u1(x) + c2 u2(x)``."""
    if c1 == 0 and c2 == 0:
        return 0j
    if basis.case is DeltaCase.D2_NONZERO:
        g, _ = basis.prefactor(x)
        # the combination may be recessive; let weber control the cancellation
        return g * weber.weber_combo(basis.lam, c1, c2, basis.z(x))
    (u1, _), (u2, _) = basis_jet(basis, x)
    return c1 * u1 + c2 * u2


def eval_reduced(basis: SolutionBasis, c1: complex, c2: complex, x: float) -> complex:
    """``(c1 u1 + c2 u2)(x) / G(x)``, which stays finite where ``G`` overflows."""
    if c1 == 0 and c2 == 0:
        return 0j
    case = basis.case
    if case is DeltaCase.D2_NONZERO:
        return weber.weber_combo(basis.lam, c1, c2, basis.z(x))
    if case is DeltaCase.D1_NONZERO:
        ai, _, bi, _ = airy_values(basis.z(x))
        return c1 * ai + c2 * bi
    if basis.rho == 0:
        return c1 + c2 * x
    k = 0.5j * basis.rho * x
    return c1 * cmath.exp(k) + c2 * cmath.exp(-k)


def apply_operator(b: WeylSymbol, u: Callable[[float], complex], x: float, h: float = 1e-3) -> tuple[complex, float]:
    """``(B u)(x)`` by 5-point differences with ``D = -i d/dx``, and a magnitude scale.

    The scale is the sum of the moduli of the separate terms, for relative residuals.
    """
    f = [u(x + k * h) for k in (-2, -1, 0, 1, 2)]
    d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
    d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h * h)
    terms = (
        -b.b20 * d2,
        -1j * b.b11 * x * d1,
        b.b02 * x * x * f[2],
        -1j * b.b10 * d1,
        b.b01 * x * f[2],
        b.b00 * f[2],
    )
    return sum(terms, 0j), sum(abs(t) for t in terms)


def explicit_solve_degenerate(b: WeylSymbol, f: Callable[[float], complex] | None,
                              c0: complex, c1: complex, grid: Sequence[float]) -> np.ndarray:
    """Closed-form solution of ``B u = f`` when all three discriminants vanish.

    ``u = -e^(-h(x)) { (1/b20) int_0^x (x-t) e^(h(t)) f(t) dt + c0 x + c1 }``
    with ``h(x) = (i/4b20)(b11 x^2 + 2 b10 x)``; the integral is done by
    adaptive quadrature for each grid point.
    """
    disc = discriminants(b)
    if disc.case is not DeltaCase.ALL_ZERO or abs(disc.d0) > disc.tol:
        raise CaseError("explicit solution needs Delta2 = Delta1 = Delta0 = 0")

    def h(x):
        return 1j / (4 * b.b20) * (b.b11 * x * x + 2 * b.b10 * x)

    out = np.empty(len(grid), dtype=complex)
    for i, x in enumerate(grid):
        x = float(x)
        integral = 0j
        if f is not None and x != 0:
            def g(t, part):
                v = (x - t) * cmath.exp(h(t)) * f(t)
                return v.real if part == 0 else v.imag
            re = integrate.quad(g, 0.0, x, args=(0,), epsabs=1e-13, epsrel=1e-12, limit=200)[0]
            im = integrate.quad(g, 0.0, x, args=(1,), epsabs=1e-13, epsrel=1e-12, limit=200)[0]
            integral = complex(re, im)
        out[i] = -cmath.exp(-h(x)) * (integral / b.b20 + c0 * x + c1)
    return out


# ------------------------------------------------------------ leading forms


@dataclass(frozen=True)
class SolutionTerm:
    """``coef * e^(i Sigma_phase(x)) * |x|^power``.

    When ``poly`` is given the power factor is replaced by the polynomial
    (constant term first) evaluated at ``scale (x + shift)``; such terms are exact.
    """

    coef: complex
    phase: int
    power: complex
    poly: tuple[complex, ...] | None = None
    scale: complex = 1.0
    shift: complex = 0.0

    def value(self, b: WeylSymbol, x: float, disc: Discriminants | None = None,
              reduced: bool = False) -> complex:
        """Term value; ``reduced=True`` divides out the prefactor ``G(x)``."""
        ph = 1j * sigma_phase(b, x, self.phase, disc)
        if reduced:
            ph += 1j / (4 * b.b20) * (b.b11 * x * x + 2 * b.b10 * x)
        e = cmath.exp(ph)
        if self.poly is not None:
            z = self.scale * (x + self.shift)
            acc = 0j
            for c in reversed(self.poly):
                acc = acc * z + c
            return self.coef * e * acc
        return self.coef * e * abs(x) ** self.power


@dataclass(frozen=True)
class LeadingForm:
    """Leading behaviour of ``c1 u1 + c2 u2`` as ``x -> end * infinity``."""

    end: int
    case_id: str
    terms: tuple[SolutionTerm, ...]
    b: WeylSymbol
    disc: Discriminants
    exact: bool = False
    weber_case: weber.WeberCase | None = None

    def values(self, x: float, reduced: bool = False) -> list[complex]:
        return [t.value(self.b, x, self.disc, reduced) for t in self.terms]

    def value(self, x: float, reduced: bool = False) -> complex:
        return sum(self.values(x, reduced), 0j)

    def scale(self, x: float, reduced: bool = False) -> float:
        return sum(abs(v) for v in self.values(x, reduced))

    def deviation(self, x: float, actual: complex, reduced: bool = False) -> float:
        """``|actual - leading| / sum |term|``; with ``reduced`` both sides lack ``G``."""
        vals = self.values(x, reduced)
        return abs(actual - sum(vals, 0j)) / sum(abs(v) for v in vals)


def weber_sector(basis: SolutionBasis) -> str:
    """Sector of the reduced variable at either end: ``Arg(Delta2/b20^2) = 0`` is diagonal."""
    r = basis.disc.d2 / basis.b.b20 ** 2
    return "diagonal" if r.real > 0 and abs(r.imag) <= branchcut.REAL_AXIS_TOL * abs(r) else "real"


def leading_form(basis: SolutionBasis, c1: complex, c2: complex, end: int, **match_kw) -> LeadingForm:
    """Leading form at ``x -> end * infinity`` expressed with ``e^(i Sigma_+-)``."""
    if end not in (1, -1):
        raise ValueError("end must be +1 or -1")
    if c1 == 0 and c2 == 0:
        raise DomainError("the zero solution has no leading form")
    b, disc = basis.b, basis.disc
    case = basis.case
    if case is DeltaCase.D2_NONZERO:
        wc = weber.match_case(basis.lam, c1, c2, weber_sector(basis), end, **match_kw)
        terms = []
        for t in wc.terms:
            # G e^(+-z^2/2) = e^(i Sigma_-+) exactly
            phase = -t.exp_sign
            if t.poly is not None:
                terms.append(SolutionTerm(t.coef, phase, 0, t.poly, basis.scale, basis.shift))
            else:
                coef = t.coef * branchcut.cpow(t.rotation * end * basis.scale, t.power)
                terms.append(SolutionTerm(coef, phase, t.power))
        return LeadingForm(end, wc.case_id, tuple(terms), b, disc, wc.polynomial_degree is not None, wc)
    if case is DeltaCase.D1_NONZERO:
        d1 = -disc.d1 / (4 * b.b20 ** 2)
        root = 2 * math.sqrt(math.pi)
        if end == 1:
            k = branchcut.cpow(d1, -1.0 / 12.0) / root
            terms = (SolutionTerm(2 * c2 * k, -1, -0.25),
                     SolutionTerm((c1 + 1j * c2) * k, 1, -0.25))
        else:
            k = branchcut.cpow(d1, -1.0 / 12.0) / (root * math.sqrt(2))
            terms = (SolutionTerm(((1 - 1j) * c1 + (1 + 1j) * c2) * k, 1, -0.25),
                     SolutionTerm(((1 + 1j) * c1 + (1 - 1j) * c2) * k, -1, -0.25))
        terms = tuple(t for t in terms if t.coef != 0)
        return LeadingForm(end, "airy", terms, b, disc)
    if basis.rho == 0:
        return LeadingForm(end, "linear", (SolutionTerm(1.0, 1, 0, (c1, c2)),), b, disc, True)
    terms = tuple(t for t in (SolutionTerm(c1, -1, 0), SolutionTerm(c2, 1, 0)) if t.coef != 0)
    return LeadingForm(end, "exponential", terms, b, disc, True)


__all__ = [
    "LeadingForm",
    "SolutionBasis",
    "SolutionTerm",
    "apply_operator",
    "basis_jet",
    "eval_solution",
    "eval_solution_jet",
    "eval_reduced",
    "explicit_solve_degenerate",
    "leading_form",
    "snap_lambda",
    "solution_basis",
    "weber_sector",
]
