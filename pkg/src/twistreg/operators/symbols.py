"""Twisted operators, their source operators and quadratic Weyl symbols.

A twisted operator is given by a coefficient table ``a_kj`` (k = power of
the derivative, j = power of the multiplier, ``j + k <= 2``) and a frame
``(alpha, beta, gamma, delta)`` with ``alpha*delta - beta*gamma = 1`` and
``beta*delta != 0``.  Its source operator on the line is
``sum a_kj M^j D^k`` with ``D = -i d/dx``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .. import branchcut
from ..errors import CaseError, DomainError, FrameError

FRAME_TOL = 1e-12
ZERO_TOL = 1e-12

_KEYS = ("a20", "a11", "a02", "a10", "a01", "a00")


@dataclass(frozen=True)
class TwistedFrame:
    alpha: complex
    beta: complex
    gamma: complex
    delta: complex

    def validate(self, tol: float = FRAME_TOL) -> "TwistedFrame":
        det = self.alpha * self.delta - self.beta * self.gamma
        if abs(det - 1) > tol:
            raise FrameError(f"alpha*delta - beta*gamma = {det}, expected 1")
        if abs(self.beta * self.delta) <= tol:
            raise FrameError("beta*delta must be nonzero")
        return self


@dataclass(frozen=True)
class CoeffTable:
    """Coefficients ``a_kj`` of ``sum a_kj M^j D^k`` (k: derivative order)."""

    a20: complex = 0j
    a11: complex = 0j
    a02: complex = 0j
    a10: complex = 0j
    a01: complex = 0j
    a00: complex = 0j

    def __post_init__(self):
        for k in _KEYS:
            object.__setattr__(self, k, complex(getattr(self, k)))

    def items(self):
        """Yield ``(k, j, a_kj)`` triples."""
        for key in _KEYS:
            yield int(key[1]), int(key[2]), getattr(self, key)

    def scaled(self, c: complex) -> "CoeffTable":
        return CoeffTable(*(c * getattr(self, k) for k in _KEYS))


class DeltaCase(str, enum.Enum):
    D2_NONZERO = "D2nonzero"
    D1_NONZERO = "D1nonzero"
    ALL_ZERO = "AllZeroQuad"


@dataclass(frozen=True)
class WeylSymbol:
    """``b20 xi^2 + b11 x xi + b02 x^2 + b10 xi + b01 x + b00 + (i/2) b11``.

    The b's are also the coefficients of the operator
    ``b20 D^2 + b11 M D + b02 M^2 + b10 D + b01 M + b00``; ``theta`` records
    the accumulated shear applied so far.
    """

    b20: complex
    b11: complex
    b02: complex
    b10: complex
    b01: complex
    b00: complex
    theta: float = 0.0

    @property
    def full_const(self) -> complex:
        return self.b00 + 0.5j * self.b11

    @property
    def coeffs(self) -> tuple[complex, ...]:
        return (self.b20, self.b11, self.b02, self.b10, self.b01, self.b00)

    @property
    def norm(self) -> float:
        return max(abs(c) for c in self.coeffs)

    def __call__(self, x: complex, xi: complex) -> complex:
        return (self.b20 * xi * xi + self.b11 * x * xi + self.b02 * x * x
                + self.b10 * xi + self.b01 * x + self.full_const)

    def scaled(self, c: complex) -> "WeylSymbol":
        return WeylSymbol(*(c * v for v in self.coeffs), theta=self.theta)


@dataclass(frozen=True)
class Discriminants:
    d2: complex
    d1: complex
    d0: complex
    lam: complex | None
    case: DeltaCase
    tol: float


def source_of(table: CoeffTable, frame: TwistedFrame) -> CoeffTable:
    """Source operator of a twisted operator: the same coefficient table.

    The frame only has to be admissible.
    """
    frame.validate()
    return table


def weyl_symbol(table: CoeffTable) -> WeylSymbol:
    return WeylSymbol(table.a20, table.a11, table.a02, table.a10, table.a01, table.a00, 0.0)


def symplectic_shift(b: WeylSymbol, theta: float) -> WeylSymbol:
    """Compose the symbol with the shear ``(x, xi) -> (x + theta xi, xi)``."""
    t = theta
    b20 = b.b20 + t * b.b11 + t * t * b.b02
    b11 = b.b11 + 2 * t * b.b02
    b10 = b.b10 + t * b.b01
    const = b.full_const
    return WeylSymbol(b20, b11, b.b02, b10, b.b01, const - 0.5j * b11, b.theta + t)


def leading_coefficient(b: WeylSymbol, theta: float) -> complex:
    return b.b20 + theta * b.b11 + theta * theta * b.b02


def choose_theta(b: WeylSymbol, tol: float = ZERO_TOL) -> float:
    """Smallest theta in {0, 1, 2} giving a nonzero xi^2 coefficient."""
    scale = max(abs(b.b20), abs(b.b11), abs(b.b02))
    if scale == 0:
        raise DomainError("symbol has no second-order part")
    for t in (0.0, 1.0, 2.0):
        if abs(leading_coefficient(b, t)) > tol * scale:
            return t
    # a nonzero quadratic form cannot vanish at three points
    raise DomainError("no admissible shear found")


def zero_tolerance(b: WeylSymbol, tol: float = ZERO_TOL) -> float:
    return tol * max(1.0, b.norm ** 2)


def discriminants(b: WeylSymbol, tol: float = ZERO_TOL) -> Discriminants:
    """The three discriminants, the case they select and lambda when defined."""
    if b.b20 == 0:
        raise DomainError("b20 must be nonzero; apply a shear first")
    d2 = b.b11 ** 2 - 4 * b.b20 * b.b02
    d1 = 2 * b.b11 * b.b10 - 4 * b.b20 * b.b01
    d0 = b.b10 ** 2 - 4 * b.b20 * b.b00 - 2j * b.b20 * b.b11
    zt = zero_tolerance(b, tol)
    if abs(d2) > zt:
        case = DeltaCase.D2_NONZERO
        w = -d2 / b.b20 ** 2
        # w^(3/2) = w * w^(1/2) on the principal branch; sqrt is exact on squares
        lam = (d1 * d1 - 4 * d2 * d0) / (8 * b.b20 ** 4 * w * branchcut.sqrt(w))
    elif abs(d1) > zt:
        case, lam = DeltaCase.D1_NONZERO, None
    else:
        case, lam = DeltaCase.ALL_ZERO, None
    return Discriminants(d2, d1, d0, lam, case, zt)


def _root_factor(r: complex) -> complex:
    # sigma(r) r^(1/2); its imaginary part is never positive
    return branchcut.sigma(r) * branchcut.sqrt(r)


def xi_root(b: WeylSymbol, x: float, sign: int, disc: Discriminants | None = None) -> complex:
    """Root ``Xi_+`` (sign=+1) or ``Xi_-`` (sign=-1) of ``b(x, .) = 0``."""
    disc = disc or discriminants(b)
    b20 = b.b20
    lin = b.b11 / b20 * x + b.b10 / b20
    if disc.case is DeltaCase.D2_NONZERO:
        if x == 0:
            raise DomainError("root formula is written for x != 0")
        r = disc.d2 / b20 ** 2
        inner = 1 + disc.d1 / (disc.d2 * x) + disc.d0 / (disc.d2 * x * x)
        root = _root_factor(r) * x * branchcut.sqrt(inner)
    elif disc.case is DeltaCase.D1_NONZERO:
        if x == 0:
            raise DomainError("root formula is written for x != 0")
        r = disc.d1 / b20 ** 2
        root = (_root_factor(r) * branchcut.cpow(x, 0.5)
                * branchcut.sqrt(1 + disc.d0 / (disc.d1 * x)))
    else:
        r = disc.d0 / b20 ** 2
        root = 0j if abs(disc.d0) <= disc.tol else _root_factor(r)
    return -0.5 * (lin + sign * root)


def sigma_phase(b: WeylSymbol, x: float, sign: int, disc: Discriminants | None = None) -> complex:
    """Phase ``Sigma_+-(x)`` whose exponential ``e^(i Sigma)`` drives the solutions."""
    disc = disc or discriminants(b)
    b20 = b.b20
    quad = b.b11 / b20 * x * x + 2 * b.b10 / b20 * x
    if disc.case is DeltaCase.D2_NONZERO:
        r = disc.d2 / b20 ** 2
        shift = x + disc.d1 / (2 * disc.d2)
        extra = _root_factor(r) * shift * shift
    elif disc.case is DeltaCase.D1_NONZERO:
        if x == 0:
            raise DomainError("fractional phase is not evaluated at x = 0")
        r = disc.d1 / b20 ** 2
        extra = (4.0 / 3.0 * _root_factor(r) * branchcut.cpow(x, 1.5)
                 * branchcut.cpow(1 + disc.d0 / (disc.d1 * x), 1.5))
    else:
        r = disc.d0 / b20 ** 2
        extra = 0j if abs(disc.d0) <= disc.tol else 2 * _root_factor(r) * x
    return -0.25 * (quad + sign * extra)


def xi_pm(b: WeylSymbol, x: float, disc: Discriminants | None = None) -> tuple[complex, complex]:
    """``(Xi_+(x), Xi_-(x))``."""
    disc = disc or discriminants(b)
    return xi_root(b, x, 1, disc), xi_root(b, x, -1, disc)


def sigma_pm(b: WeylSymbol, x: float, disc: Discriminants | None = None) -> tuple[complex, complex]:
    """``(Sigma_+(x), Sigma_-(x))``."""
    disc = disc or discriminants(b)
    return sigma_phase(b, x, 1, disc), sigma_phase(b, x, -1, disc)


def adjoint_symbol(b: WeylSymbol) -> WeylSymbol:
    """Symbol of the formal adjoint: complex conjugate of the full symbol."""
    c = [v.conjugate() for v in (b.b20, b.b11, b.b02, b.b10, b.b01)]
    const = b.full_const.conjugate()
    return WeylSymbol(c[0], c[1], c[2], c[3], c[4], const - 0.5j * c[1], b.theta)


def twisted_symbol(table: CoeffTable, frame: TwistedFrame,
                   x: complex, y: complex, xi: complex, eta: complex) -> complex:
    """Full symbol of the twisted operator at ``(x, y, xi, eta)``.

    ``sum (-1)^(j+k) a_kj sum_n (i alpha delta)^n C(j,n) C(k,n) n!
    (alpha eta - beta x)^(j-n) (gamma xi - delta y)^(k-n)``.
    """
    al, be, ga, de = frame.alpha, frame.beta, frame.gamma, frame.delta
    u = al * eta - be * x
    v = ga * xi - de * y
    c = 1j * al * de
    total = 0j
    for k, j, a in table.items():
        if a == 0:
            continue
        inner = 0j
        for n in range(min(j, k) + 1):
            inner += c ** n * math.comb(j, n) * math.comb(k, n) * math.factorial(n) * u ** (j - n) * v ** (k - n)
        total += (-1) ** (j + k) * a * inner
    return total


def plane_directions(frame: TwistedFrame) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    """Two directions in ``(x, y, xi, eta)`` spanning ``alpha eta = beta x, gamma xi = delta y``."""
    return (frame.alpha, 0j, 0j, frame.beta), (0j, frame.gamma, frame.delta, 0j)


def require_case(disc: Discriminants, *cases: DeltaCase) -> None:
    if disc.case not in cases:
        raise CaseError(f"operation needs case {[c.value for c in cases]}, got {disc.case.value}")


def conditioned(b: WeylSymbol) -> WeylSymbol:
    """Same operator with the symbol divided by b20 (used for scale-free tests)."""
    return b.scaled(1 / b.b20) if b.b20 != 0 else b


__all__ = [
    "CoeffTable",
    "DeltaCase",
    "Discriminants",
    "TwistedFrame",
    "WeylSymbol",
    "adjoint_symbol",
    "choose_theta",
    "discriminants",
    "leading_coefficient",
    "require_case",
    "plane_directions",
    "sigma_phase",
    "sigma_pm",
    "source_of",
    "symplectic_shift",
    "twisted_symbol",
    "weyl_symbol",
    "xi_pm",
    "xi_root",
    "zero_tolerance",
]
