import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistreg import classify
from twistreg.classify import EndBehavior, SchwartzClass
from twistreg.operators import CoeffTable, TwistedFrame, weyl_symbol
from twistreg.verify.sampling import random_table

FRAME = TwistedFrame(-1, -0.5, 1, -0.5)


def verdict(table, **kw):
    return classify.classify_twisted(table, FRAME, **kw)


def test_twisted_laplacian():
    v = verdict(CoeffTable(a20=-1, a02=-1))
    assert v.twisted_regular and v.matched_condition == 833
    assert v.disc.lam == 0


def test_xi2_plus_1():
    v = verdict(CoeffTable(a20=1, a00=1))
    assert v.twisted_regular and v.matched_condition == 832


def test_b2():
    v = verdict(CoeffTable(a20=1, a10=1j, a02=-1))
    assert v.source.regular and v.source.injective and v.matched_condition == 832


@pytest.mark.parametrize("table", [CoeffTable(a20=1, a00=-1), CoeffTable(a20=1, a01=-1)])
def test_not_regular(table):
    v = verdict(table)
    assert not v.source.regular and not v.twisted_regular


@pytest.mark.parametrize("mu,injective", [(0, True), (1, False), (2, True), (3, False), (4.2, True), (5, False)])
def test_oscillator_family(mu, injective):
    v = verdict(CoeffTable(a20=1, a02=1, a00=-mu))
    assert v.source.regular
    assert v.source.injective is injective
    assert v.twisted_regular is injective


def test_growth_signature_oscillator():
    b = weyl_symbol(CoeffTable(a20=1, a02=1))
    ends = {e: classify.end_behavior(classify.growth_signature(b, 1, e)) for e in (1, -1)}
    assert ends[1] is ends[-1]
    assert classify.schwartz_class(b, 1) is not classify.schwartz_class(b, -1)


def test_combine_ends_table():
    P, M, B = EndBehavior.PLUS_INF, EndBehavior.MINUS_INF, EndBehavior.BOUNDED
    assert classify.combine_ends(P, P) is SchwartzClass.IN_S
    assert classify.combine_ends(P, B) is SchwartzClass.IN_SPRIME_NOT_S
    assert classify.combine_ends(B, B) is SchwartzClass.IN_SPRIME_NOT_S
    assert classify.combine_ends(M, P) is SchwartzClass.NOT_IN_SPRIME
    assert classify.combine_ends(B, M) is SchwartzClass.NOT_IN_SPRIME


@given(st.integers(0, 50), st.floats(-1e-10, 1e-10), st.floats(-1e-10, 1e-10))
def test_lambda_lattice_hit(n, dr, di):
    assert classify.lambda_is_odd_positive(complex(1 + 2 * n + dr, di))


@given(st.floats(-50, 120))
def test_lambda_lattice_miss(x):
    n = round((x - 1) / 2)
    if n >= 0 and abs(x - (1 + 2 * n)) <= 1e-9:
        return
    assert not classify.lambda_is_odd_positive(x)
    assert not classify.lambda_is_odd_positive(complex(1, 1e-6))
    assert not classify.lambda_is_odd_positive(-1)


def test_near_threshold_warns():
    v = verdict(CoeffTable(a20=1, a02=1, a00=-(3 + 5e-9)))
    assert v.warnings


def test_verdict_dict_is_json():
    d = verdict(CoeffTable(a20=1, a10=1j, a02=-1)).to_dict()
    json.dumps(d)
    assert {"theta_used", "b_coefficients", "deltas", "lambda", "roots", "matched_condition",
            "source_regular", "source_injective", "twisted_regular", "warnings"} <= set(d)
    assert len(d["lambda"]) == 2
    assert {r["root"] for r in d["roots"]} == {"+", "-"}


def test_explicit_theta_used():
    t = CoeffTable(a11=1, a02=1, a00=0.5)
    auto = classify.classify_table(t)
    assert auto.theta_used == 1
    forced = classify.classify_table(t, theta=2.0)
    assert forced.theta_used == 2
    assert forced.twisted_regular == auto.twisted_regular


@given(st.integers(0, 2 ** 32 - 1), st.sampled_from([0.0, 1.0, 2.0]),
       st.complex_numbers(min_magnitude=0.1, max_magnitude=10, allow_nan=False, allow_infinity=False))
def test_verdict_invariant_under_shift_and_scale(seed, theta, c):
    t = random_table(np.random.default_rng(seed))
    ref = classify.classify_table(t)
    other = classify.classify_table(t.scaled(c), theta)
    assert (other.twisted_regular, other.matched_condition, other.source.regular) == \
        (ref.twisted_regular, ref.matched_condition, ref.source.regular)
