import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistreg.errors import CaseError, DomainError, FrameError
from twistreg.operators import (
    CoeffTable,
    DeltaCase,
    TwistedFrame,
    WeylSymbol,
    adjoint_symbol,
    apply_operator,
    choose_theta,
    discriminants,
    eval_solution,
    explicit_solve_degenerate,
    leading_form,
    plane_directions,
    sigma_pm,
    solution_basis,
    symplectic_shift,
    twisted_symbol,
    weyl_symbol,
    xi_pm,
)
from twistreg.verify.sampling import random_symbol


def cplx(radius):
    return st.builds(complex, st.floats(-radius, radius), st.floats(-radius, radius))


symbols = st.builds(WeylSymbol, cplx(2).filter(lambda c: abs(c) > 0.3), cplx(2), cplx(2), cplx(2), cplx(2), cplx(2))


def test_frame_validation():
    TwistedFrame(-1, -0.5, 1, -0.5).validate()
    with pytest.raises(FrameError):
        TwistedFrame(1, 0, 0, 1).validate()  # beta delta = 0
    with pytest.raises(FrameError):
        TwistedFrame(1, 1, 1, 1).validate()  # det 0


def test_discriminants_harmonic_oscillator():
    d = discriminants(weyl_symbol(CoeffTable(a20=1, a02=1)))
    assert d.case is DeltaCase.D2_NONZERO
    assert (d.d2, d.d1, d.d0) == (-4, 0, 0)
    assert d.lam == 0


@pytest.mark.parametrize("mu", [0, 1, 2, 3, 4.2])
def test_lambda_is_mu_for_oscillator(mu):
    d = discriminants(weyl_symbol(CoeffTable(a20=1, a02=1, a00=-mu)))
    assert d.lam == pytest.approx(mu, abs=1e-14)


def test_cases():
    assert discriminants(weyl_symbol(CoeffTable(a20=1, a01=-1))).case is DeltaCase.D1_NONZERO
    assert discriminants(weyl_symbol(CoeffTable(a20=1, a00=1))).case is DeltaCase.ALL_ZERO
    with pytest.raises(DomainError):
        discriminants(weyl_symbol(CoeffTable(a02=1)))


@given(symbols, st.floats(-2, 2))
def test_shift_preserves_symbol(b, t):
    # b'(x, xi) = b(x + t xi, xi)
    s = symplectic_shift(b, t)
    for x, xi in ((0.3, -1.1), (2.0, 0.5)):
        assert abs(s(x, xi) - b(x + t * xi, xi)) <= 1e-11 * max(1.0, abs(b(x + t * xi, xi)))


@given(symbols, st.floats(-2, 2))
def test_shift_preserves_delta2_and_lambda(b, t):
    s = symplectic_shift(b, t)
    assert abs(s.b11 ** 2 - 4 * s.b20 * s.b02 - (b.b11 ** 2 - 4 * b.b20 * b.b02)) < 1e-10 * max(1, b.norm ** 2)


def test_choose_theta():
    assert choose_theta(weyl_symbol(CoeffTable(a20=1))) == 0
    assert choose_theta(weyl_symbol(CoeffTable(a02=1))) == 1
    assert choose_theta(weyl_symbol(CoeffTable(a11=1, a02=-1))) == 2


@given(symbols, st.floats(0.5, 5).flatmap(lambda r: st.sampled_from([r, -r])))
def test_roots_solve_symbol(b, x):
    disc = discriminants(b)
    for xi in xi_pm(b, x, disc):
        assert abs(b(x, xi)) <= 1e-8 * max(1.0, b.norm * (1 + abs(x)) ** 2)


def _well_separated(b):
    d = discriminants(b)
    if d.case is not DeltaCase.D2_NONZERO or abs(d.d2 / b.b20 ** 2) < 0.5:
        return False
    return abs(d.d1 / d.d2) < 2 and abs(d.d0 / d.d2) < 4


@given(symbols.filter(_well_separated))
def test_sigma_derivative_tracks_root(b):
    # Sigma' = Xi + O(1/x) with matching branches
    disc = discriminants(b)
    h = 1e-4
    errs = []
    for x in (20.0, 40.0):
        sp, sm = sigma_pm(b, x + h, disc), sigma_pm(b, x - h, disc)
        xi = xi_pm(b, x, disc)
        errs.append(max(abs((sp[k] - sm[k]) / (2 * h) - xi[k]) for k in range(2)))
    assert errs[1] <= 0.65 * errs[0] + 1e-6


def test_adjoint_of_selfadjoint():
    b = weyl_symbol(CoeffTable(a20=1, a02=1, a00=-2))
    assert adjoint_symbol(b) == b


def test_plane_directions_annihilate():
    fr = TwistedFrame(-1, -0.5, 1, -0.5)
    t = CoeffTable(1, 0.3, 1, 0.2j, -0.5, 2)
    p0 = (0.4, -0.2, 1.3, 0.7)
    v0 = twisted_symbol(t, fr, *p0)
    for d in plane_directions(fr):
        for s in (-2.0, 0.5, 3.0):
            p = [a + s * c for a, c in zip(p0, d)]
            assert abs(twisted_symbol(t, fr, *p) - v0) < 1e-12 * max(1, abs(v0))


@pytest.mark.parametrize("case", list(DeltaCase))
def test_basis_solves_equation(case):
    rng = np.random.default_rng(7)
    for _ in range(5):
        b = random_symbol(rng, case)
        basis = solution_basis(b)
        for c1, c2 in ((1, 0), (0, 1), (0.3, -1j)):
            for x in (-1.3, 0.4, 2.2):
                bu, scale = apply_operator(b, lambda s: eval_solution(basis, c1, c2, s), x)
                assert abs(bu) <= 1e-6 * scale


def test_d2_plus_one_exponential():
    basis = solution_basis(weyl_symbol(CoeffTable(a20=1, a00=1)))
    for x in (0.0, 1.0, 2.5):
        assert abs(eval_solution(basis, 1, 0, x)) == pytest.approx(math.exp(x), rel=1e-14)


def test_degenerate_explicit_solver():
    b = weyl_symbol(CoeffTable(a20=1))
    grid = np.linspace(-2, 2, 9)
    u = explicit_solve_degenerate(b, lambda x: 1.0, 0, 0, grid)
    assert np.allclose(u, -grid ** 2 / 2)
    with pytest.raises(CaseError):
        explicit_solve_degenerate(weyl_symbol(CoeffTable(a20=1, a02=1)), None, 1, 0, grid)


def test_airy_leading_forms():
    basis = solution_basis(weyl_symbol(CoeffTable(a20=1, a01=-1)))
    right = leading_form(basis, 1, 0, 1)
    # oscillatory side: |x|^(-1/4) envelope
    assert right.scale(40.0) / right.scale(80.0) == pytest.approx(2 ** 0.25, rel=1e-12)
    for x in (40.0, 80.0):
        assert abs(eval_solution(basis, 1, 0, x) - right.value(x)) < 1e-3 * right.scale(x)
    left = leading_form(basis, 1, 0, -1)
    for x in (-10.0, -40.0):
        assert abs(eval_solution(basis, 1, 0, x) / left.value(x) - 1) < 0.01


def test_harmonic_oscillator_leading_form():
    basis = solution_basis(weyl_symbol(CoeffTable(a20=1, a02=1)))
    lf = leading_form(basis, 1, 0, 1)
    ratios = [abs(eval_solution(basis, 1, 0, x) / lf.value(x) - 1) for x in (8.0, 16.0)]
    assert ratios[1] < ratios[0] < 0.25
