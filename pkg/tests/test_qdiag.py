import itertools
import math
from fractions import Fraction as F

import numpy as np
import pytest

from schwinger_dunkl.numerics import SingularParameterError
from schwinger_dunkl.params import OscParams
from schwinger_dunkl.qdiag import (
    assemble_q_eigvecs,
    closed_form_even,
    closed_form_odd,
    heun_coeffs_even,
    heun_coeffs_odd,
    isotropic_coeffs,
    j2_eigenbasis,
    link_coeffs,
    para_krawtchouk_odd,
    q_to_j2,
    solve_recurrence_even,
    solve_recurrence_odd,
)
from schwinger_dunkl.repmat import build_circular, build_q
from schwinger_dunkl.verify import GRID_VALUES

P = OscParams(4, 0.3, 0.7)


def exact_even(k, mx, my, n_max):
    """Even recurrence in rational arithmetic."""
    z = mx + my
    a, b = [F(1)], [F(1)]
    for n in range(1, n_max + 1):
        s = 2 * sum(((-1) ** (n + al) * mx + my) * b[al] for al in range(n))
        a.append(k * s / (n * (2 * k - n + z)))
        b.append(F(k - n, k) * a[-1])
    return a, b


def exact_odd(k, mx, my, n_max):
    """Odd coupled recurrence with each 2x2 step solved by Cramer's rule."""
    h = F(1, 2)
    a, b = [F(1)], [F(1)]
    for n in range(1, n_max + 1):
        r1 = 2 * my * sum(b)
        r2 = 2 * mx * (-1) ** n * sum((-1) ** j * a[j] for j in range(n))
        m11, m12 = k + my + h, -(k - n + my + h)
        m21, m22 = -(k - n + mx + h), k + mx + h
        det = m11 * m22 - m12 * m21
        a.append((r1 * m22 - m12 * r2) / det)
        b.append((m11 * r2 - m21 * r1) / det)
    return a, b


RATIONAL_MU = [F(-2, 5), F(0), F(3, 10), F(7, 10), F(3, 2)]


def test_even_recurrence_against_exact():
    for mx, my in itertools.product(RATIONAL_MU, repeat=2):
        p = OscParams(0, float(mx), float(my))
        for k in range(1, 7):
            if mx + my == 0 and k > 0:
                continue
            ea, eb = exact_even(k, mx, my, k)
            co = solve_recurrence_even(k, p)
            assert np.allclose(co.a_seq, [float(v) for v in ea], rtol=1e-10, atol=1e-12)
            assert np.allclose(co.b_seq, [float(v) for v in eb], rtol=1e-10, atol=1e-12)


def test_odd_recurrence_against_exact():
    for mx, my in itertools.product(RATIONAL_MU, repeat=2):
        p = OscParams(1, float(mx), float(my))
        for k in range(7):
            ea, eb = exact_odd(k, mx, my, k)
            co = solve_recurrence_odd(k, p)
            assert np.allclose(co.a_seq, [float(v) for v in ea], rtol=1e-10, atol=1e-12)
            assert np.allclose(co.b_seq, [float(v) for v in eb], rtol=1e-10, atol=1e-12)


def test_frozen_recurrence_values():
    co = solve_recurrence_even(2, P)
    assert np.allclose(co.a_seq, [1, 0.4, 0.72]) and np.allclose(co.b_seq, [1, 0.2, 0])
    co = solve_recurrence_odd(1, OscParams(3, 0.3, 0.7))
    assert np.allclose(co.a_seq, [1, 0.6]) and np.allclose(co.b_seq, [1, -1 / 15])
    assert para_krawtchouk_odd(1, OscParams(3, 0.3, 0.7), 1) == pytest.approx(-0.4)


def test_recurrence_k0():
    co = solve_recurrence_even(0, P, n_max=3)
    assert np.array_equal(co.a_seq, [1, 0, 0, 0])
    co = solve_recurrence_odd(0, OscParams(1, 0.3, 0.7))
    assert np.array_equal(co.a_seq, [1]) and np.array_equal(co.b_seq, [1])
    with pytest.raises(ValueError):
        solve_recurrence_even(-1, P)


def test_even_recurrence_singular():
    # past n = k the denominator 2k - n + zeta vanishes at n = 2 when k = 1, zeta = 0
    with pytest.raises(SingularParameterError):
        solve_recurrence_even(1, OscParams(2, 0.3, -0.3), n_max=2)


@pytest.mark.parametrize("mx,my", list(itertools.product(GRID_VALUES, repeat=2)))
def test_closed_forms_match_recurrence(mx, my):
    p = OscParams(0, mx, my)
    for k in range(1, 7):
        if abs(mx + my) < 1e-12 or mx == my:
            continue
        co = solve_recurrence_even(k, p, n_max=2 * k)
        cf = [closed_form_even(k, p, n) for n in range(2 * k + 1)]
        assert np.allclose(cf, co.a_seq, rtol=1e-10, atol=1e-10)
        assert np.allclose(heun_coeffs_even(k, p), co.a_seq, rtol=1e-10, atol=1e-10)
    if mx == my:
        return
    for k in range(7):
        co = solve_recurrence_odd(k, OscParams(1, mx, my))
        pairs = [closed_form_odd(k, p, n) for n in range(k + 1)]
        assert np.allclose([q[0] for q in pairs], co.a_seq, rtol=1e-10, atol=1e-10)
        assert np.allclose([q[1] for q in pairs], co.b_seq, rtol=1e-10, atol=1e-10)
        ha, hb = heun_coeffs_odd(k, p)
        assert np.allclose(ha, co.a_seq, rtol=1e-10, atol=1e-10)
        assert np.allclose(hb, co.b_seq, rtol=1e-10, atol=1e-10)


def test_closed_form_even_mirror():
    for k in range(1, 6):
        for n in range(2 * k + 1):
            assert closed_form_even(k, P, n) == closed_form_even(k, P, 2 * k - n)
    with pytest.raises(ValueError):
        closed_form_even(2, P, 5)


def test_para_krawtchouk_support():
    p = OscParams(3, 0.3, 0.7)
    assert para_krawtchouk_odd(2, p, -1) == 0 and para_krawtchouk_odd(2, p, 6) == 0
    for r in range(6):
        assert para_krawtchouk_odd(2, p, r) == para_krawtchouk_odd(2, p, 5 - r)


def test_isotropic_matches_recurrence():
    for mu in (0.0, 0.3, 0.7, 1.5):
        for k in range(1, 7):
            co = solve_recurrence_even(k, OscParams(0, mu, mu))
            iso = isotropic_coeffs(k, mu, "even")
            assert np.allclose(iso.a_seq, co.a_seq, atol=1e-10)
            assert np.allclose(iso.b_seq, co.b_seq, atol=1e-10)
        for k in range(7):
            co = solve_recurrence_odd(k, OscParams(1, mu, mu))
            iso = isotropic_coeffs(k, mu, "odd")
            assert np.allclose(iso.a_seq, co.a_seq, atol=1e-10)
            assert np.allclose(iso.b_seq, co.b_seq, atol=1e-10)
    with pytest.raises(ValueError):
        isotropic_coeffs(1, 0.3, "neither")


@pytest.mark.parametrize("N", range(12))
def test_q_eigenvectors(N):
    for mx, my in itertools.product(GRID_VALUES, repeat=2):
        p = OscParams(N, mx, my)
        Q = build_q(p)
        table = assemble_q_eigvecs(p)
        assert len(table.vectors) == N + 1
        for key, v in table.vectors.items():
            lam = table.eigenvalues[key]
            assert np.linalg.norm(Q @ v - lam * v) <= 1e-10 * max(1.0, np.linalg.norm(v))
            assert np.linalg.norm(v) > 0


def test_frozen_q_vectors():
    table = assemble_q_eigvecs(OscParams(1, 0.3, 0.7))
    assert np.allclose(table.vectors[(0, "-")], [-1j, 1])
    assert table.eigenvalues[(0, "-")] == pytest.approx(-1.5)
    assert table.eigenvalues[(0, "+")] == pytest.approx(2.5)


def test_link_coeffs():
    lk = link_coeffs(1, OscParams(2, 0.3, 0.7))
    assert lk.c == pytest.approx((1 - 2j * math.sqrt(2)) / 3)
    assert lk.lambda_plus == pytest.approx(math.sqrt(2)) and lk.lambda_minus == -lk.lambda_plus
    for N in range(1, 12):
        for mx, my in itertools.product(GRID_VALUES, repeat=2):
            p = OscParams(N, mx, my)
            for k in range(1 - N % 2, p.m + 1):
                assert abs(abs(link_coeffs(k, p).c) - 1) <= 1e-12


def test_relative_scale_t():
    t = q_to_j2(assemble_q_eigvecs(OscParams(2, 0.3, 0.7)), OscParams(2, 0.3, 0.7))
    assert t.scales[1] == pytest.approx(-(3 + 1j) / (2 * math.sqrt(2)))
    p = OscParams(4, 0.0, 0.0)
    t = q_to_j2(assemble_q_eigvecs(p), p)
    assert all(v == pytest.approx(-1) for v in t.scales.values())


@pytest.mark.parametrize("N", range(12))
def test_j2_eigenvectors(N):
    for mx, my in itertools.product(GRID_VALUES, repeat=2):
        p = OscParams(N, mx, my)
        J2 = build_circular(p).J2
        E, lam = j2_eigenbasis(p)
        assert np.linalg.norm(J2 @ E - E * lam) <= 1e-10 * max(1.0, np.linalg.norm(E))
        assert np.allclose(np.sort(lam), np.sort(np.linalg.eigvals(J2).real), atol=1e-9)
        assert abs(np.linalg.det(E)) > 1e-12


def test_j2_eigenvector_keys_order():
    p = OscParams(3, 0.3, 0.7)
    t = q_to_j2(assemble_q_eigvecs(p), p)
    assert t.keys() == [(0, "+"), (0, "-"), (1, "+"), (1, "-")]
    assert t.components(0, "+")[(0, "+")] == t.vectors[(0, "+")][0]
