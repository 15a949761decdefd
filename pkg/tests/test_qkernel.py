import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcompass import qkernel
from qcompass.errors import InvalidArgumentError
from oracles import hermite_recurrence, phi32_loop, q_binomial_by_expansion, rogers_szego_by_binomial

bases = st.floats(0.05, 0.95)
orders = st.integers(0, 8)


def test_pochhammer_empty_product():
    assert qkernel.q_pochhammer(0.3, 0.7, 0) == 1


def test_pochhammer_frozen_complex_value():
    # (q^i; q)_1 with q = 1/2 is 1 - exp(i ln 1/2)
    q = 0.5
    v = qkernel.q_pochhammer(np.exp(1j * math.log(q)), q, 1)
    assert v == pytest.approx(0.2307610986360279 + 0.6389612763136348j, abs=1e-15)


@given(a=st.floats(-2, 2), q=bases, n=orders)
def test_pochhammer_recursion(a, q, n):
    lhs = qkernel.q_pochhammer(a, q, n + 1)
    rhs = qkernel.q_pochhammer(a, q, n) * (1 - a * q**n)
    assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-14)


def test_pochhammer_vectorizes():
    a = np.array([0.1, 0.2, 0.3])
    v = qkernel.q_pochhammer(a, 0.5, 3)
    assert v.shape == (3,)
    assert v[1] == pytest.approx(qkernel.q_pochhammer(0.2, 0.5, 3))


def test_q_binomial_frozen():
    assert qkernel.q_binomial(2, 1, 0.5) == pytest.approx(1.5)
    assert qkernel.q_binomial(4, 2, 0.3) == pytest.approx(1.5151, rel=1e-14)


@given(n=orders, q=bases, data=st.data())
def test_q_binomial_matches_expansion(n, q, data):
    k = data.draw(st.integers(0, n))
    assert qkernel.q_binomial(n, k, q) == pytest.approx(q_binomial_by_expansion(n, k, q), rel=1e-10)


def test_rogers_szego_frozen():
    assert qkernel.rogers_szego(1, 1.0, 0.25) == pytest.approx(-1.0)
    assert qkernel.rogers_szego(0, 3.7, 0.25) == pytest.approx(1.0)


@settings(max_examples=60)
@given(n=orders, q=bases, re=st.floats(-2, 2), im=st.floats(-2, 2))
def test_rogers_szego_literal_vs_binomial(n, q, re, im):
    arg = re + 1j * im
    ref = rogers_szego_by_binomial(n, arg, q)
    got = qkernel.rogers_szego(n, arg, q)
    assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref))


def test_rogers_szego_inverse_base():
    # base > 1 is used by the p-model states
    for n in range(6):
        arg = 0.3 - 0.8j
        ref = rogers_szego_by_binomial(n, arg, 1 / 0.4)
        assert abs(qkernel.rogers_szego(n, arg, 1 / 0.4) - ref) <= 1e-10 * max(1, abs(ref))


def test_scaled_form_agrees_in_safe_range():
    arg = np.array([0.5, -1.5 + 2j, 40.0])
    mant, scale = qkernel.rogers_szego_scaled(3, arg, 0.6)
    direct = qkernel.rogers_szego(3, arg, 0.6)
    np.testing.assert_allclose(mant * np.exp(scale), direct, rtol=1e-12)


def test_scaled_form_survives_huge_argument():
    mant, scale = qkernel.rogers_szego_scaled(4, np.exp(400.0), 0.5)
    assert np.isfinite(mant) and scale > 300
    # the k = n term dominates; its coefficient is (-1)^n base^(-n/2)
    expected_log = 4 * 400.0 - 2 * math.log(0.5)
    assert math.log(abs(mant)) + scale == pytest.approx(expected_log, rel=1e-9)


@given(n=st.integers(0, 12), x=st.floats(-4, 4))
def test_hermite_vs_recurrence(n, x):
    ref = hermite_recurrence(n, x)
    assert qkernel.hermite(n, x) == pytest.approx(float(ref), rel=1e-10, abs=1e-8)


def test_hermite_cubic():
    x = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(qkernel.hermite(3, x), 8 * x**3 - 12 * x, atol=1e-12)


@settings(max_examples=40)
@given(n=st.integers(0, 5), q=bases, u=st.floats(-1.5, 1.5), v=st.floats(-1.5, 1.5))
def test_phi32_vs_loop(n, q, u, v):
    a1, a2 = q**n * np.exp(1j * u), q**n * np.exp(v)
    got = qkernel.phi32_terminating(n, a1, a2, q, 0.0, q, q)
    ref, size = phi32_loop(n, a1, a2, q, 0.0, q, q, with_size=True)
    # terms cancel heavily, so compare against the largest term
    assert abs(got - ref) <= 1e-12 * max(1.0, size)


def test_basic_number():
    q = 0.43
    assert qkernel.basic_number(0, q) == 0
    assert qkernel.basic_number(3, q) == pytest.approx(1 + q + q**2)


@pytest.mark.parametrize("n", [-1, 1.5, "2"])
def test_bad_orders_rejected(n):
    with pytest.raises(InvalidArgumentError):
        qkernel.q_pochhammer(0.1, 0.5, n)


def test_rogers_szego_overflow_raises():
    with pytest.raises(Exception):
        qkernel.rogers_szego(6, np.exp(700.0), 0.5)
