import cmath
import math

import mpmath as mp
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from twistreg.errors import DomainError, SectorError
from twistreg.specfun import (
    airy,
    airy_asym,
    contiguous_pq_residual,
    contiguous_q_residual,
    gamma,
    gamma_identity_residual,
    kummer_residual,
    phi,
    phi_asym,
    phi_route,
    pochhammer,
    recip_gamma,
    theta,
    theta_asym,
    theta_integral,
    theta_recurrence_residual,
    theta_series,
)


def cplx(radius):
    return st.builds(complex, st.floats(-radius, radius), st.floats(-radius, radius))


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


# ---------------------------------------------------------------- Gamma


def test_gamma_small_integers():
    for n in range(1, 10):
        assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-14)
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_pole():
    with pytest.raises(DomainError):
        gamma(-3)
    assert recip_gamma(-3) == 0
    assert recip_gamma(0) == 0


@given(cplx(20))
def test_gamma_vs_mpmath(z):
    assume(min(abs(z + n) for n in range(0, 25)) > 1e-3)
    want = complex(mp.gamma(mp.mpc(z)))
    assert rel(gamma(z), want) < 1e-12


@given(cplx(30))
def test_recip_gamma_vs_mpmath(z):
    want = complex(mp.rgamma(mp.mpc(z)))
    assert abs(recip_gamma(z) - want) <= 1e-12 * max(abs(want), 1e-300) + 1e-300


@given(cplx(5), st.integers(0, 12))
def test_pochhammer(p, k):
    want = complex(mp.rf(mp.mpc(p), k))
    assert abs(pochhammer(p, k) - want) <= 1e-12 * max(1.0, abs(want))


# ----------------------------------------------------------------- Phi


def test_phi_elementary():
    assert phi(1, 1, 2.0) == pytest.approx(math.e ** 2, rel=1e-14)
    assert phi(1, 2, 1.0) == pytest.approx(math.e - 1, rel=1e-13)
    assert phi(0, 2, 5 + 1j) == 1


@given(cplx(3), cplx(3).filter(lambda q: min(abs(q + n) for n in range(10)) > 0.1), cplx(20))
def test_phi_vs_mpmath(p, q, z):
    want = complex(mp.hyp1f1(mp.mpc(p), mp.mpc(q), mp.mpc(z)))
    assume(abs(want) > 1e-200 and math.isfinite(abs(want)))
    got = phi(p, q, z)
    assert rel(got, want) < 1e-9


def test_phi_route_switch():
    assert phi_route(0.5, 1.5, 5) == "series"
    assert phi_route(0.5, 1.5, 400) == "asymptotic"
    assert phi_route(0.5, 1.5, -400) == "series"


def test_phi_asym_sector_flag():
    assert not phi_asym(0.5, 1.5, -40).sector_ok
    assert phi_asym(0.5, 1.5, 40).sector_ok
    assert phi_asym(-2, 1.5, 40).degenerate


@given(cplx(2), cplx(2).filter(lambda q: min(abs(q + n) for n in range(10)) > 0.2), cplx(4))
def test_kummer_property(p, q, z):
    assert kummer_residual(p, q, z) < 1e-9


@given(cplx(2), cplx(2).filter(lambda q: min(abs(q + n) for n in range(10)) > 0.2), cplx(4))
def test_contiguous_relations(p, q, z):
    assert contiguous_q_residual(p, q, z) < 1e-9
    assert contiguous_pq_residual(p, q, z) < 1e-9


# --------------------------------------------------------------- Theta


def test_theta_constant_at_p0():
    assert theta(0, 3 + 1j) == pytest.approx(1)


def test_theta_polynomial_cases():
    # p = -1: z^2 - 1/2 ; p = -1/2: z
    assert theta(-1, 2.0) == pytest.approx(3.5)
    assert theta(-0.5, 1.5 + 2j) == pytest.approx(1.5 + 2j)


@given(cplx(2), st.floats(0.2, 6), st.floats(-1.2, 1.2))
def test_theta_is_tricomi_u(p, r, a):
    # Theta(p; z) = U(p, 1/2, z^2) for Re z > 0
    z = cmath.rect(r, a)
    want = complex(mp.hyperu(mp.mpc(p), 0.5, mp.mpc(z) ** 2))
    assume(abs(want) > 1e-250)
    assert rel(theta_series(p, z), want) < 1e-8


@given(cplx(2), cplx(3))
def test_theta_recurrence(p, z):
    assert theta_recurrence_residual(p, z) < 1e-9


@pytest.mark.parametrize("p,z", [(0.6 + 0.1j, 2.0 + 0.5j), (1.2, 1.0 - 1.0j), (0.3 - 0.4j, 3.0)])
def test_theta_integral_route(p, z):
    assert rel(theta_integral(p, z), theta_series(p, z)) < 1e-9


def test_theta_integral_domain():
    with pytest.raises(DomainError):
        theta_integral(-0.5 + 0.1j, 1.0)


def test_theta_asym_large_z():
    p, z = 0.6 + 0.1j, 30 * cmath.exp(0.3j)
    want = complex(mp.hyperu(mp.mpc(p), 0.5, mp.mpc(z) ** 2))
    a = theta_asym(p, z, 6)
    assert a.sector_ok
    assert abs(a.value - want) <= 2 * a.est_remainder + 1e-15 * abs(want)


@given(st.floats(-3, 3))
def test_gamma_identity_real(lam):
    assert gamma_identity_residual(lam, 1) < 1e-10
    assert gamma_identity_residual(lam, -1) < 1e-10


# ---------------------------------------------------------------- Airy


def test_airy_at_zero():
    ai, dai, bi, dbi = airy(0)
    assert ai == pytest.approx(0.3550280538878172, rel=1e-14)
    assert bi == pytest.approx(0.6149266274460007, rel=1e-14)
    assert dai == pytest.approx(-0.2588194037928068, rel=1e-14)


@given(cplx(6))
def test_airy_vs_mpmath(z):
    ai, dai, bi, dbi = airy(z)
    zm = mp.mpc(z)
    for got, want in ((ai, mp.airyai(zm)), (dai, mp.airyai(zm, 1)), (bi, mp.airybi(zm)), (dbi, mp.airybi(zm, 1))):
        want = complex(want)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))


def test_airy_asym_sectors():
    with pytest.raises(SectorError):
        airy_asym("bi", -20 + 0.1j, "right")
    with pytest.raises(SectorError):
        airy_asym("ai", 20, "left")
    with pytest.raises(ValueError):
        airy_asym("ci", 20, "right")


@pytest.mark.parametrize("which,regime,z", [("ai", "right", 20.0), ("bi", "right", 20.0),
                                            ("ai", "left", -20.0), ("bi", "left", -20.0 + 1j)])
def test_airy_asym_leading(which, regime, z):
    f = mp.airyai if which == "ai" else mp.airybi
    want = complex(f(mp.mpc(z)))
    a = airy_asym(which, z, regime)
    assert abs(a.value - want) <= 2 * a.est_remainder
