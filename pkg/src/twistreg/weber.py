"""Hermite-Weber equation ``w'' - (z^2 - lam) w = 0``.

The even/odd basis is normalised by ``w1(0) = 1, w1'(0) = 0`` and
``w2(0) = 0, w2'(0) = 1``::

    w1 = e^(-z^2/2) Phi((1-lam)/4, 1/2; z^2)
    w2 = e^(-z^2/2) z Phi((3-lam)/4, 3/2; z^2)

Besides evaluation this module matches a coefficient pair ``(c1, c2)`` to
the leading large-|z| behaviour of ``c1 w1 + c2 w2`` in two families of
sectors: around the real axis (``|Arg(+-z)| <= pi/4 - eps``) and around the
diagonal (``|Arg(+-z) - pi/4| <= eps``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import mpmath as mp

from . import branchcut
from .errors import AmbiguityError, DomainError
from .specfun import _hp
from .specfun.confluent import LOSS_LIMIT, MAX_TERMS, SERIES_TOL, _phi_double, phi_series, theta_series
from .specfun.gamma import pochhammer, recip_gamma

SQRT_PI = math.sqrt(math.pi)
MATCH_TOL = 1e-10
LATTICE_TOL = 1e-9


def _phi3(p: complex, q: complex, x: complex, order: int = 2):
    """Phi and its first ``order`` derivatives (unused slots are zero)."""
    f0 = phi_series(p, q, x)
    f1 = p / q * phi_series(p + 1, q + 1, x) if order >= 1 else 0j
    f2 = p * (p + 1) / (q * (q + 1)) * phi_series(p + 2, q + 2, x) if order >= 2 else 0j
    return f0, f1, f2


def _branch(p: complex, m: int, lam: complex, z: complex, order: int):
    """Value and derivatives of ``e^(-z^2/2) z^m Phi(p, m+1/2; z^2)``.

    When ``Re z^2 < 0`` the equivalent Kummer-transformed form
    ``e^(z^2/2) z^m Phi(m+1/2-p, m+1/2; -z^2)`` is summed instead, which keeps
    the series free of the exponential cancellation.
    """
    q = m + 0.5
    z2 = z * z
    s = 1.0
    if z2.real < 0:
        p, s = q - p, -1.0
    f0, f1, f2 = _phi3(p, q, s * z2, order)
    zm = z if m else 1.0
    H = zm * f0
    out = [H]
    if order >= 1:
        # H = z^m F(s z^2) with F' and F'' from the shifted-parameter series
        H1 = (f0 if m else 0.0) + 2 * s * z * zm * f1
        out.append(H1)
        if order >= 2:
            H2 = 2 * s * (2 * m + 1) * zm * f1 + 4 * z2 * zm * f2
            out.append(H2)
    E = cmath.exp(-s * z2 / 2)
    w = E * out[0]
    if order == 0:
        return (w,)
    w1 = E * (out[1] - s * z * out[0])
    if order == 1:
        return w, w1
    w2 = E * (out[2] - 2 * s * z * out[1] + (z2 - s) * out[0])
    return w, w1, w2


def weber_w(lam: complex, z: complex) -> tuple[complex, complex]:
    """The even and odd solutions ``(w1(z), w2(z))``."""
    lam, z = complex(lam), complex(z)
    return (_branch((1 - lam) / 4, 0, lam, z, 0)[0],
            _branch((3 - lam) / 4, 1, lam, z, 0)[0])


def weber_w_deriv(lam: complex, z: complex) -> tuple[complex, complex]:
    """``(w1'(z), w2'(z))`` via the termwise-differentiated series."""
    lam, z = complex(lam), complex(z)
    return (_branch((1 - lam) / 4, 0, lam, z, 1)[1],
            _branch((3 - lam) / 4, 1, lam, z, 1)[1])


def weber_jet(lam: complex, z: complex, order: int = 2):
    """Values and up to two derivatives of both solutions: ``((w1, w1', w1''), (w2, ...))``."""
    lam, z = complex(lam), complex(z)
    return (_branch((1 - lam) / 4, 0, lam, z, order),
            _branch((3 - lam) / 4, 1, lam, z, order))


def wronskian(lam: complex, z: complex) -> complex:
    (a, da), (b, db) = weber_jet(lam, z, 1)
    return a * db - da * b


def wronskian_defect(lam: complex, z: complex) -> float:
    """``|W - 1|`` relative to the size of the two products that make up W."""
    (a, da), (b, db) = weber_jet(lam, z, 1)
    w = a * db - da * b
    return abs(w - 1) / max(1.0, abs(a * db) + abs(da * b))


def equation_residual(lam: complex, z: complex) -> float:
    """Size of ``w'' - (z^2 - lam) w`` relative to the largest of ``|w''|``,
    ``|(z^2 - lam) w|`` and ``|w|``, worst over both basis functions."""
    lam, z = complex(lam), complex(z)
    worst = 0.0
    for w, _, w2 in weber_jet(lam, z, 2):
        r = w2 - (z * z - lam) * w
        worst = max(worst, abs(r) / max(abs(w2), abs((z * z - lam) * w), abs(w), 1e-300))
    return worst


def _combo_parts(lam, c1, c2, z, max_terms):
    lam, c1, c2, z = mp.mpc(lam), mp.mpc(c1), mp.mpc(c2), mp.mpc(z)
    z2 = z * z
    s1, b1 = _hp.phi_terms((1 - lam) / 4, mp.mpf(1) / 2, z2, max_terms)
    s2, b2 = _hp.phi_terms((3 - lam) / 4, mp.mpf(3) / 2, z2, max_terms)
    e = mp.exp(-z2 / 2)
    value = e * (c1 * s1 + c2 * z * s2)
    scale = abs(e) * (abs(c1) * b1 + abs(c2) * abs(z) * b2)
    return value, scale


def weber_combo(lam, c1, c2, z, max_terms: int = 20000) -> complex:
    """``c1 w1(z) + c2 w2(z)`` with the cancellation between the two terms controlled.

    ``lam``, ``c1`` and ``c2`` may be mpmath numbers; recessive combinations
    need coefficients more precise than a double to be resolved at large |z|.
    """
    exact = any(isinstance(v, (mp.mpf, mp.mpc)) for v in (lam, c1, c2))
    if not exact:
        lamc, zc = complex(lam), complex(z)
        c1c, c2c = complex(c1), complex(c2)
        try:
            w1, w2 = weber_w(lamc, zc)
            value = c1c * w1 + c2c * w2
            scale = abs(c1c * w1) + abs(c2c * w2)
            if math.isfinite(scale) and scale <= LOSS_LIMIT * abs(value):
                return value
        except (OverflowError, ArithmeticError):
            pass
    return complex(_hp.adaptive(lambda: _combo_parts(lam, c1, c2, z, max_terms)))


# ------------------------------------------------------------ Theta links

IDENTITIES = ("theta_real", "theta_rotated", "w1_from_theta", "w2_from_theta")


def theta_identity_sides(lam: complex, z: complex, which: str, sign: int = 1):
    """Both sides of one of the four identities tying w1, w2 to Theta.

    ``theta_real``:    w1/G((3-l)/4) -+ 2 w2/G((1-l)/4) = e^(-z^2/2)/sqrt(pi) Theta((1-l)/4; +-z)
    ``theta_rotated``: w1/G((3+l)/4) +- 2i w2/G((1+l)/4) = e^(z^2/2)/sqrt(pi) Theta((1+l)/4; -+iz)
    ``w1_from_theta`` and ``w2_from_theta`` express w1 and w2 through the
    two Theta values above.  ``sign`` selects the upper (+1) or lower (-1)
    signs.
    """
    lam, z = complex(lam), complex(z)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    w1, w2 = weber_w(lam, z)
    rg = recip_gamma
    ez_m, ez_p = cmath.exp(-z * z / 2), cmath.exp(z * z / 2)
    th_real = theta_series((1 - lam) / 4, sign * z)
    th_rot = theta_series((1 + lam) / 4, -sign * 1j * z)
    rot = cmath.exp(-1j * (1 + lam) * math.pi / 4)
    if which == "theta_real":
        lhs = w1 * rg((3 - lam) / 4) - sign * 2 * w2 * rg((1 - lam) / 4)
        rhs = ez_m / SQRT_PI * th_real
    elif which == "theta_rotated":
        lhs = w1 * rg((3 + lam) / 4) + sign * 2j * w2 * rg((1 + lam) / 4)
        rhs = ez_p / SQRT_PI * th_rot
    elif which == "w1_from_theta":
        lhs = w1
        rhs = SQRT_PI * rot * (1j * ez_m * rg((1 + lam) / 4) * th_real
                               + ez_p * rg((1 - lam) / 4) * th_rot)
    elif which == "w2_from_theta":
        lhs = w2
        rhs = -sign * SQRT_PI / 2 * rot * (ez_m * rg((3 + lam) / 4) * th_real
                                          - ez_p * rg((3 - lam) / 4) * th_rot)
    else:
        raise ValueError(f"unknown identity {which!r}")
    return lhs, rhs


def theta_identity_residual(lam: complex, z: complex, which: str, sign: int = 1) -> float:
    lhs, rhs = theta_identity_sides(lam, z, which, sign)
    s = max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) / s if s > 0 else 0.0


# ------------------------------------------------------ leading behaviour


@dataclass(frozen=True)
class WeberTerm:
    """``coef * e^(exp_sign z^2/2) * (rotation z)^power``, or a polynomial.

    When ``poly`` is set the power factor is replaced by the polynomial with
    those coefficients (constant term first) and the term is exact.
    """

    coef: complex
    exp_sign: int
    rotation: complex
    power: complex
    poly: tuple[complex, ...] | None = None

    def value(self, z: complex) -> complex:
        z = complex(z)
        e = cmath.exp(self.exp_sign * z * z / 2)
        if self.poly is not None:
            acc = 0j
            for c in reversed(self.poly):
                acc = acc * z + c
            return self.coef * e * acc
        return self.coef * e * branchcut.cpow(self.rotation * z, self.power)


@dataclass(frozen=True)
class WeberCase:
    sector: str
    direction: int
    case_id: str
    terms: tuple[WeberTerm, ...]
    polynomial_degree: int | None = None
    c: complex | None = field(default=None, compare=False)

    @property
    def prefactor(self) -> complex:
        return self.terms[0].coef

    @property
    def exp_sign(self) -> int:
        return self.terms[0].exp_sign

    @property
    def power(self) -> complex:
        return self.terms[0].power

    def value(self, z: complex) -> complex:
        return sum((t.value(z) for t in self.terms), 0j)

    def deviation(self, z: complex, actual: complex) -> float:
        """``|actual - leading| / sum |term|``, i.e. the relative O(1/z) defect."""
        vals = [t.value(z) for t in self.terms]
        scale = sum(abs(v) for v in vals)
        return abs(actual - sum(vals, 0j)) / scale


def lattice_index(lam: complex, offset: int, tol: float = LATTICE_TOL) -> int | None:
    """``n >= 0`` with ``lam = offset + 4n`` (offset may be negative), else None."""
    lam = complex(lam)
    if abs(lam.imag) > tol:
        return None
    if offset > 0:
        n = round((lam.real - offset) / 4)
        target = offset + 4 * n
    else:
        n = round((offset - lam.real) / 4)
        target = offset - 4 * n
    if n >= 0 and abs(lam.real - target) <= tol:
        return int(n)
    return None


def theta_polynomial_coeffs(n: int, odd: bool, rotation: complex = 1.0) -> tuple[complex, ...]:
    """Coefficients of ``Theta(p; rotation*z)`` in powers of z for ``p = -n`` (even)
    or ``p = -1/2 - n`` (odd)."""
    b = (-0.5 - n) if odd else (0.5 - n)
    lead = 2 * n + 1 if odd else 2 * n
    coeffs = [0j] * (lead + 1)
    for k in range(n + 1):
        c = (-1) ** k / math.factorial(k) * pochhammer(-n, k) * pochhammer(b, k)
        deg = lead - 2 * k
        coeffs[deg] += c * complex(rotation) ** deg
    return tuple(coeffs)


def _zero_state(value: complex, scale: float, tol: float) -> str:
    if scale == 0:
        return "zero"
    r = abs(value) / scale
    if r <= tol:
        return "zero"
    if r <= 10 * tol:
        return "boundary"
    return "nonzero"


def match_case(lam: complex, c1, c2, sector: str, direction: int = 1,
               tol: float = MATCH_TOL, lattice_tol: float = LATTICE_TOL) -> WeberCase:
    """Identify which leading-order case ``(c1, c2)`` falls into.

    ``sector`` is ``"real"`` or ``"diagonal"``; ``direction`` +1 means z runs
    out along the sector itself, -1 means -z does.  Polynomial cases are
    checked first; otherwise the vanishing pattern of the four connection
    coefficients decides.  Exactly one case is returned, or AmbiguityError
    is raised when a coefficient sits on the tolerance boundary.
    """
    lam, c1, c2 = complex(lam), complex(c1), complex(c2)
    if sector not in ("real", "diagonal"):
        raise ValueError("sector must be 'real' or 'diagonal'")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    size = abs(c1) + abs(c2)
    if size == 0:
        raise DomainError("c1 and c2 both vanish")
    rg = recip_gamma
    r1m, r3m = rg((1 - lam) / 4), rg((3 - lam) / 4)
    r1p, r3p = rg((1 + lam) / 4), rg((3 + lam) / 4)
    d = direction

    def small(v):
        return abs(v) <= tol * size

    # polynomial solutions
    n = lattice_index(lam, 1, lattice_tol)
    if n is not None and small(c2):
        c = c1 / r3m
        poly = theta_polynomial_coeffs(n, odd=False)
        t = WeberTerm(c / SQRT_PI, -1, 1.0, 2 * n, poly)
        return WeberCase(sector, d, "gaussian_even", (t,), 2 * n, c)
    n = lattice_index(lam, 3, lattice_tol)
    if n is not None and small(c1):
        c = -c2 / (2 * r1m)
        poly = theta_polynomial_coeffs(n, odd=True)
        t = WeberTerm(c / SQRT_PI, -1, 1.0, 2 * n + 1, poly)
        return WeberCase(sector, d, "gaussian_odd", (t,), 2 * n + 1, c)
    if sector == "diagonal":
        n = lattice_index(lam, -1, lattice_tol)
        if n is not None and small(c2):
            c = c1 / r3p
            poly = theta_polynomial_coeffs(n, odd=False, rotation=1j)
            t = WeberTerm(c / SQRT_PI, 1, 1.0, 2 * n, poly)
            return WeberCase(sector, d, "anti_gaussian_even", (t,), 2 * n, c)
        n = lattice_index(lam, -3, lattice_tol)
        if n is not None and small(c1):
            c = c2 / (2j * r1p)
            poly = theta_polynomial_coeffs(n, odd=True, rotation=-1j)
            t = WeberTerm(c / SQRT_PI, 1, 1.0, 2 * n + 1, poly)
            return WeberCase(sector, d, "anti_gaussian_odd", (t,), 2 * n + 1, c)

    a_scale = abs(c1 * r1m) + abs(c2 * r3m) / 2
    a_plus = c1 * r1m + c2 / 2 * r3m
    a_minus = c1 * r1m - c2 / 2 * r3m
    states = {
        "decay_plus": _zero_state(a_plus, a_scale, tol),
        "decay_minus": _zero_state(a_minus, a_scale, tol),
    }
    if sector == "diagonal":
        b_scale = abs(c1 * r1p) + abs(c2 * r3p) / 2
        b_plus = 1j * c1 * r1p + c2 / 2 * r3p
        b_minus = 1j * c1 * r1p - c2 / 2 * r3p
        states["grow_plus"] = _zero_state(b_minus, b_scale, tol)
        states["grow_minus"] = _zero_state(b_plus, b_scale, tol)
    boundary = [k for k, v in states.items() if v == "boundary"]
    zeros = [k for k, v in states.items() if v == "zero"]
    if boundary or len(zeros) > 1:
        raise AmbiguityError("coefficient pair sits on a case boundary",
                             sorted(set(boundary + zeros)) + ["generic"])
    case_id = zeros[0] if zeros else "generic"
    lead_m = -(1 + lam) / 2
    lead_p = -(1 - lam) / 2

    if sector == "real":
        a_d = a_plus if d == 1 else a_minus
        if case_id == ("decay_plus" if d == 1 else "decay_minus"):
            c = c1 / r3m
            t = WeberTerm(c / SQRT_PI, -1, d, lead_p)
            return WeberCase(sector, d, case_id, (t,), None, c)
        if case_id == "generic":
            t = WeberTerm(SQRT_PI * a_d, 1, d, lead_m)
            return WeberCase(sector, d, case_id, (t,), None, None)
        # the other end of a recessive pair still grows
        c = c1 / r3m
        t = WeberTerm(SQRT_PI * 2 * c * r1m * r3m, 1, d, lead_m)
        return WeberCase(sector, d, case_id, (t,), None, c)

    rot = cmath.exp(-1j * (1 + lam) * math.pi / 4)
    if d == 1:
        b_d, a_d, grow_rot = b_minus, a_plus, -1j
    else:
        b_d, a_d, grow_rot = b_plus, a_minus, 1j
    own_grow = "grow_plus" if d == 1 else "grow_minus"
    own_decay = "decay_plus" if d == 1 else "decay_minus"
    if case_id == own_grow:
        c = c1 / r3p
        t = WeberTerm(c / SQRT_PI, 1, grow_rot, lead_m)
        return WeberCase(sector, d, case_id, (t,), None, c)
    if case_id == own_decay:
        c = c1 / r3m
        t = WeberTerm(c / SQRT_PI, -1, d, lead_p)
        return WeberCase(sector, d, case_id, (t,), None, c)
    terms = (
        WeberTerm(SQRT_PI * rot * b_d, -1, d, lead_p),
        WeberTerm(SQRT_PI * rot * a_d, 1, grow_rot, lead_m),
    )
    return WeberCase(sector, d, case_id, terms, None, None)


def case_coefficients(lam: complex, case_id: str, c: complex = 1.0, dps: int = 250):
    """``(c1, c2)`` as mpmath numbers realising a named non-generic case.

    Extended precision matters: recessive combinations are only resolved
    at large |z| if the connection coefficient cancels beyond double
    precision.  The numbers keep ``dps`` digits.
    """
    with mp.workdps(dps):
        return _case_coefficients(mp.mpc(lam), case_id, mp.mpc(c))


def _case_coefficients(lm, case_id: str, cm):
    rg = mp.rgamma
    r1m, r3m = rg((1 - lm) / 4), rg((3 - lm) / 4)
    r1p, r3p = rg((1 + lm) / 4), rg((3 + lm) / 4)
    table = {
        "decay_plus": (cm * r3m, -2 * cm * r1m),
        "decay_minus": (cm * r3m, 2 * cm * r1m),
        "grow_plus": (cm * r3p, 2j * cm * r1p),
        "grow_minus": (cm * r3p, -2j * cm * r1p),
        "gaussian_even": (cm * r3m, mp.mpc(0)),
        "gaussian_odd": (mp.mpc(0), -2 * cm * r1m),
        "anti_gaussian_even": (cm * r3p, mp.mpc(0)),
        "anti_gaussian_odd": (mp.mpc(0), 2j * cm * r1p),
    }
    if case_id not in table:
        raise ValueError(f"no canonical coefficients for {case_id!r}")
    return table[case_id]
