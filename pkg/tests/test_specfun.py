import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schwinger_dunkl.numerics import SingularParameterError
from schwinger_dunkl.specfun import (
    CBIParams,
    HeunParams,
    cbi_hypergeometric,
    cbi_monic,
    cbi_recurrence_coeff,
    heun_series,
    hyp_terminating,
    krawtchouk_monic,
    mu_number,
    pochhammer,
)


def test_pochhammer():
    assert pochhammer(2.7, 0) == 1
    assert pochhammer(1, 4) == 24
    assert pochhammer(-3, 5) == 0
    assert pochhammer(0.5, 3) == pytest.approx(0.5 * 1.5 * 2.5)


def test_mu_number():
    assert mu_number(4, 0.9) == 4
    assert mu_number(3, 0.5) == 4
    assert mu_number(0, 0.3) == 0


def test_hyp_terminating():
    assert hyp_terminating([0, 2.5], [1.5], 0.7) == 1
    b, c, z = 2.5, 1.5, 0.7
    assert hyp_terminating([-1, b], [c], z) == pytest.approx(1 - b * z / c)
    assert hyp_terminating([-2, 1], [1], 1) == pytest.approx(0)


def test_hyp_terminating_errors():
    with pytest.raises(ValueError):
        hyp_terminating([0.5, 1.5], [2.0], 0.1)
    with pytest.raises(SingularParameterError):
        hyp_terminating([-3, 1], [-1], 1.0)


def test_krawtchouk_examples():
    assert krawtchouk_monic(0, 1.3, 5) == 1
    assert krawtchouk_monic(1, 1.3, 5) == pytest.approx(1.3 - 2.5)
    assert krawtchouk_monic(2, 0, 4) == pytest.approx(3)
    with pytest.raises(ValueError):
        krawtchouk_monic(5, 0, 4)


def test_krawtchouk_symmetry():
    for N in range(13):
        for n in range(N + 1):
            for x in range(N + 1):
                a = krawtchouk_monic(n, N - x, N)
                b = (-1) ** n * krawtchouk_monic(n, x, N)
                assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


P0 = CBIParams(-0.5, 0.0, 2.5, 0.0)


def test_cbi_params_g():
    assert P0.g == -3


def test_cbi_recurrence_examples():
    assert cbi_recurrence_coeff(1, P0) == pytest.approx(-0.5)
    assert cbi_recurrence_coeff(0, P0) == 0
    with pytest.raises(SingularParameterError):
        cbi_recurrence_coeff(2, P0)


def test_cbi_monic_examples():
    x = 0.37
    assert cbi_monic(0, x, P0) == 1
    assert cbi_monic(1, x, P0) == pytest.approx(x)
    assert cbi_monic(2, x, P0) == pytest.approx(x * x + 0.5)


def test_cbi_odd_degree_has_rho2_root():
    p = CBIParams(0.3, 0.45, -0.2, 0.1)
    for n in (1, 3, 5):
        assert abs(cbi_monic(n, p.rho2, p)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_cbi_recurrence_matches_4f3(seed):
    rng = np.random.default_rng(seed)
    p = CBIParams(*rng.uniform(-0.3, 2.0, 4))
    x = rng.uniform(-2, 2)
    for n in range(9):
        try:
            a = cbi_monic(n, x, p)
            b = cbi_hypergeometric(n, x, p)
        except SingularParameterError:
            continue
        assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


def test_heun_degree_zero_and_first_step():
    p = HeunParams(a=-1.0, q=0.8, alpha=-4, beta=1.0, gamma=-2.3, delta=1.4)
    assert heun_series(p, 0) == [1.0]
    c = heun_series(p, 1)
    assert c[1] == pytest.approx(p.q / (p.a * p.gamma))
    assert p.epsilon == pytest.approx(p.alpha + p.beta + 1 - p.gamma - p.delta)


def _heun_exact(a, q, al, be, ga, de, n_max):
    """Rational-arithmetic recurrence, polynomial tail set to zero."""
    ep = al + be + 1 - ga - de
    c = [Fraction(1)]
    prev = Fraction(0)
    for n in range(n_max):
        R = a * (n + 1) * (n + ga)
        Q = n * ((n - 1 + ga) * (1 + a) + a * de + ep)
        P = (n - 1 + al) * (n - 1 + be)
        rhs = (Q + q) * c[n] - P * prev
        nxt = Fraction(0) if R == 0 and rhs == 0 else rhs / R
        prev = c[n]
        c.append(nxt)
    return c


def test_heun_truncates_at_polynomial_degree():
    # k = 2, zeta = 1, xi = -0.4 in the even-case parameters: gamma = -4 hits R_4 = 0
    k, mx, my = 2, Fraction(3, 10), Fraction(7, 10)
    z = mx + my
    args = (-1, 2 * k * (my - mx), -2 * k, z, 1 - 2 * k - z, 2 * my)
    c = heun_series(HeunParams(*map(float, args)), 9)
    exact = _heun_exact(*args, 9)
    assert np.allclose(c, [float(v) for v in exact], atol=1e-12)
    assert all(v == 0 for v in c[2 * k + 1:])
    assert c[:5] == pytest.approx([1, 0.4, 0.72, 0.4, 1])


def test_heun_singular_raises():
    p = HeunParams(a=-1.0, q=1.0, alpha=0.5, beta=1.0, gamma=-1.0, delta=0.3)
    with pytest.raises(SingularParameterError, match="n=1"):
        heun_series(p, 4)


def test_heun_polynomial_even_parameters():
    for k in range(1, 5):
        mx, my = 0.3, 1.5
        z = mx + my
        c = heun_series(HeunParams(-1.0, 2 * k * (my - mx), -2.0 * k, z, 1 - 2 * k - z, 2 * my), 2 * k + 4)
        assert max(abs(v) for v in c[2 * k + 1:]) < 1e-12
        assert math.isclose(c[2 * k], c[0], rel_tol=1e-9)
