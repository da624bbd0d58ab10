"""Global regularity verdicts from the growth of ``Im(x Xi_+-)`` at both ends."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import branchcut
from .errors import AnomalyError, DomainError
from .operators.symbols import (
    ZERO_TOL,
    CoeffTable,
    DeltaCase,
    Discriminants,
    TwistedFrame,
    WeylSymbol,
    choose_theta,
    discriminants,
    source_of,
    symplectic_shift,
    weyl_symbol,
)

IM_TOL = 1e-12
LAMBDA_TOL = 1e-9
NEAR_FACTOR = 10.0

# value of x^p / |x|^p on the negative half-line, principal branches
_LEFT_FACTOR = {2.0: 1.0, 1.5: -1j, 1.0: -1.0, 0.5: 1j}


class EndBehavior(str, enum.Enum):
    PLUS_INF = "PlusInf"
    MINUS_INF = "MinusInf"
    BOUNDED = "Bounded"


class SchwartzClass(str, enum.Enum):
    IN_S = "InS"
    IN_SPRIME_NOT_S = "InSprimeNotS"
    NOT_IN_SPRIME = "NotInSprime"


@dataclass(frozen=True)
class GrowthSignature:
    """Leading terms of ``x Xi(x)`` as ``coef * |x|^exponent`` at one end."""

    end: int
    root: int
    terms: tuple[tuple[float, complex], ...]


def _near(value: float, threshold: float) -> bool:
    return threshold / NEAR_FACTOR < value <= threshold * NEAR_FACTOR


def _rho(r: complex) -> complex:
    return branchcut.sigma(r) * branchcut.sqrt(r)


def growth_signature(b: WeylSymbol, root: int, end: int,
                     disc: Discriminants | None = None) -> GrowthSignature:
    if b.b20 == 0:
        raise DomainError("b20 = 0: shift the symbol first")
    if root not in (1, -1) or end not in (1, -1):
        raise ValueError("root and end must be +1 or -1")
    disc = disc or discriminants(b)
    b20, s = b.b20, root
    if disc.case is DeltaCase.D2_NONZERO:
        rho = _rho(disc.d2 / b20 ** 2)
        raw = [(2.0, -0.5 * (b.b11 / b20 + s * rho)),
               (1.0, -0.5 * (b.b10 / b20 + s * 0.5 * rho * disc.d1 / disc.d2))]
    elif disc.case is DeltaCase.D1_NONZERO:
        rho = _rho(disc.d1 / b20 ** 2)
        raw = [(2.0, -0.5 * b.b11 / b20),
               (1.5, -s * 0.5 * rho),
               (1.0, -0.5 * b.b10 / b20),
               (0.5, -s * 0.25 * rho * disc.d0 / disc.d1)]
    else:
        rho = 0j if abs(disc.d0) <= disc.tol else _rho(disc.d0 / b20 ** 2)
        raw = [(2.0, -0.5 * b.b11 / b20), (1.0, -0.5 * (b.b10 / b20 + s * rho))]
    if end == -1:
        raw = [(p, c * _LEFT_FACTOR[p]) for p, c in raw]
    return GrowthSignature(end, root, tuple((p, complex(c)) for p, c in raw))


def end_behavior(sig: GrowthSignature, tol: float = IM_TOL,
                 warnings: list[str] | None = None) -> EndBehavior:
    """Sign of the dominant nonvanishing ``Im`` coefficient decides the limit of ``Im(x Xi)``."""
    scale = max((abs(c) for _, c in sig.terms), default=0.0)
    if scale == 0:
        return EndBehavior.BOUNDED
    threshold = tol * scale
    for p, c in sig.terms:
        if warnings is not None and _near(abs(c.imag), threshold):
            warnings.append(f"Im coefficient of |x|^{p:g} at end {sig.end:+d} for root "
                            f"{'+' if sig.root > 0 else '-'} is {c.imag:.3e}, near tolerance {threshold:.1e}")
        if abs(c.imag) > threshold:
            return EndBehavior.PLUS_INF if c.imag > 0 else EndBehavior.MINUS_INF
    return EndBehavior.BOUNDED


def combine_ends(plus: EndBehavior, minus: EndBehavior) -> SchwartzClass:
    # |e^(i x Xi)| = e^(-Im(x Xi))
    if plus is EndBehavior.MINUS_INF or minus is EndBehavior.MINUS_INF:
        return SchwartzClass.NOT_IN_SPRIME
    if plus is EndBehavior.PLUS_INF and minus is EndBehavior.PLUS_INF:
        return SchwartzClass.IN_S
    return SchwartzClass.IN_SPRIME_NOT_S


def schwartz_class(b: WeylSymbol, root: int, tol: float = IM_TOL,
                   disc: Discriminants | None = None,
                   warnings: list[str] | None = None) -> SchwartzClass:
    disc = disc or discriminants(b)
    ends = [end_behavior(growth_signature(b, root, e, disc), tol, warnings) for e in (1, -1)]
    return combine_ends(*ends)


def lambda_is_odd_positive(lam: complex, tol: float = LAMBDA_TOL) -> bool:
    """True when ``lam`` is within ``tol`` of ``1 + 2n`` for some ``n >= 0``."""
    lam = complex(lam)
    return _lattice_distance(lam) <= tol


def _lattice_distance(lam: complex) -> float:
    n = max(0, round((lam.real - 1) / 2))
    return max(abs(lam.real - (1 + 2 * n)), abs(lam.imag))


@dataclass
class SourceVerdict:
    regular: bool
    injective: bool | None
    matched_condition: int | None
    classes: dict[str, SchwartzClass]
    end_behaviors: dict[str, dict[str, EndBehavior]]
    lambda_odd_positive: bool | None
    disc: Discriminants
    warnings: list[str] = field(default_factory=list)


def classify_source(b: WeylSymbol, tol_zero: float = ZERO_TOL, tol_im: float = IM_TOL,
                    tol_lambda: float = LAMBDA_TOL) -> SourceVerdict:
    """Regularity and injectivity of the quadratic operator with Weyl symbol ``b``.

    Raises AnomalyError if the root pattern is the mirror image of the
    injective one (``Xi_+`` outside S', ``Xi_-`` in S), which is not covered.
    """
    if b.b20 == 0:
        raise DomainError("b20 = 0: shift the symbol first")
    disc = discriminants(b, tol_zero)
    warnings: list[str] = []
    for name, v in (("Delta2", disc.d2), ("Delta1", disc.d1), ("Delta0", disc.d0)):
        if _near(abs(v), disc.tol):
            warnings.append(f"|{name}| = {abs(v):.3e} is near the zero tolerance {disc.tol:.1e}")
    classes, ends = {}, {}
    for key, root in (("+", 1), ("-", -1)):
        e = {}
        for ename, end in (("+inf", 1), ("-inf", -1)):
            e[ename] = end_behavior(growth_signature(b, root, end, disc), tol_im, warnings)
        ends[key] = e
        classes[key] = combine_ends(e["+inf"], e["-inf"])
    odd = None
    if disc.lam is not None:
        dist = _lattice_distance(disc.lam)
        odd = dist <= tol_lambda
        if _near(dist, tol_lambda):
            warnings.append(f"lambda = {disc.lam} is within {dist:.3e} of an odd positive integer")

    cp, cm = classes["+"], classes["-"]
    if cp is SchwartzClass.NOT_IN_SPRIME and cm is SchwartzClass.IN_S:
        warnings.append("anomaly: Xi_+ is not in S' while Xi_- is in S")
        raise AnomalyError("mirrored root pattern; no verdict", warnings)

    good = (SchwartzClass.IN_S, SchwartzClass.NOT_IN_SPRIME)
    regular = cp in good and cm in good
    injective, cond = None, None
    if regular:
        if cp is SchwartzClass.NOT_IN_SPRIME and cm is SchwartzClass.NOT_IN_SPRIME:
            cond = 832
        elif cm is SchwartzClass.NOT_IN_SPRIME and cp is SchwartzClass.IN_S:
            if disc.case is DeltaCase.D2_NONZERO:
                cond = None if odd else 833
            else:
                cond = 834
        injective = cond is not None
    return SourceVerdict(regular, injective, cond, classes, ends, odd, disc, warnings)


@dataclass
class Verdict:
    theta_used: float
    symbol: WeylSymbol
    source: SourceVerdict
    twisted_regular: bool

    @property
    def disc(self) -> Discriminants:
        return self.source.disc

    @property
    def matched_condition(self) -> int | None:
        return self.source.matched_condition

    @property
    def source_regular(self) -> bool:
        return self.source.regular

    @property
    def source_injective(self) -> bool | None:
        return self.source.injective

    @property
    def warnings(self) -> list[str]:
        return self.source.warnings

    def to_dict(self) -> dict:
        def cx(z):
            return None if z is None else [float(complex(z).real), float(complex(z).imag)]

        d = self.disc
        b = self.symbol
        return {
            "theta_used": self.theta_used,
            "b_coefficients": {k: cx(v) for k, v in zip(
                ("b20", "b11", "b02", "b10", "b01", "b00"), b.coeffs)},
            "deltas": {"d2": cx(d.d2), "d1": cx(d.d1), "d0": cx(d.d0)},
            "delta_case": d.case.value,
            "lambda": cx(d.lam),
            "lambda_odd_positive": self.source.lambda_odd_positive,
            "roots": [
                {"root": key, "class": self.source.classes[key].value,
                 "end_behaviors": {e: v.value for e, v in self.source.end_behaviors[key].items()}}
                for key in ("+", "-")
            ],
            "matched_condition": self.matched_condition,
            "source_regular": self.source_regular,
            "source_injective": self.source_injective,
            "twisted_regular": self.twisted_regular,
            "warnings": list(self.warnings),
        }


def shifted_symbol(table: CoeffTable, theta: float | None = None,
                   tol_zero: float = ZERO_TOL) -> tuple[float, WeylSymbol]:
    if abs(table.a20) + abs(table.a11) + abs(table.a02) == 0:
        raise DomainError("operator is not of order 2")
    b = weyl_symbol(table)
    if theta is None:
        theta = choose_theta(b, tol_zero)
    shifted = symplectic_shift(b, theta)
    if shifted.b20 == 0:
        raise DomainError(f"theta = {theta} leaves a vanishing xi^2 coefficient")
    return theta, shifted


def classify_table(table: CoeffTable, theta: float | None = None, tol_zero: float = ZERO_TOL,
                   tol_im: float = IM_TOL, tol_lambda: float = LAMBDA_TOL) -> Verdict:
    """Classify the source operator ``sum a_kj M^j D^k`` directly."""
    theta, b = shifted_symbol(table, theta, tol_zero)
    src = classify_source(b, tol_zero, tol_im, tol_lambda)
    return Verdict(theta, b, src, bool(src.regular and src.injective))


def classify_twisted(table: CoeffTable, frame: TwistedFrame, theta: float | None = None,
                     tol_zero: float = ZERO_TOL, tol_im: float = IM_TOL,
                     tol_lambda: float = LAMBDA_TOL) -> Verdict:
    """The twisted operator is globally regular iff its source is regular and one-to-one."""
    return classify_table(source_of(table, frame), theta, tol_zero, tol_im, tol_lambda)


__all__ = [
    "EndBehavior",
    "GrowthSignature",
    "SchwartzClass",
    "SourceVerdict",
    "Verdict",
    "classify_source",
    "classify_table",
    "classify_twisted",
    "combine_ends",
    "end_behavior",
    "growth_signature",
    "lambda_is_odd_positive",
    "schwartz_class",
    "shifted_symbol",
]
