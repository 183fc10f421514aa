import itertools

import numpy as np
import pytest

from schwinger_dunkl.numerics import DEFAULT_TOL, dense_eigen, is_block_upper_triangular
from schwinger_dunkl.params import OscParams
from schwinger_dunkl.repmat import (
    BasisOrdering,
    b2_block_sizes,
    b2_labels,
    build_cartesian,
    build_circular,
    build_from_fock,
    build_q,
    block_j2_b2,
    block_q_b2,
    spectrum_closed_form,
    su2_matrices,
    su2_scaling,
    su2_standard,
)
from schwinger_dunkl.verify import GRID_VALUES, relation_residuals


def builders(p):
    yield build_cartesian(p)
    yield build_circular(p, BasisOrdering.CIRCULAR_B1)
    yield build_circular(p, BasisOrdering.CIRCULAR_B2)


def test_params_validation():
    with pytest.raises(ValueError):
        OscParams(2, -0.5, 0.0)
    with pytest.raises(ValueError):
        OscParams(-1, 0.0, 0.0)
    p = OscParams(5, 0.3, 0.7)
    assert p.dim == 6 and p.m == 2
    assert p.energy == pytest.approx(7.0)


def test_level_zero():
    gs = build_cartesian(OscParams(0, 0.3, 0.7))
    assert np.allclose(gs.J3, [[0.5 * (0.3 - 0.7)]])
    assert np.allclose(gs.Rx, [[1]]) and np.allclose(gs.Ry, [[1]])


def test_casimir_value():
    p = OscParams(2, 0.3, 0.7)
    for gs in builders(p):
        assert np.allclose(gs.Casimir, 3.75 * np.eye(3))


def test_cartesian_matches_fock_words():
    for N in range(7):
        for mx, my in [(0.3, 0.7), (-0.4, 1.5), (0.0, 0.0)]:
            p = OscParams(N, mx, my)
            a, b = build_cartesian(p), build_from_fock(p, BasisOrdering.CARTESIAN)
            for name in ("J1", "J2", "J3", "Rx", "Ry"):
                assert np.allclose(getattr(a, name), getattr(b, name), atol=1e-12)


@pytest.mark.parametrize("N", range(9))
def test_relations_on_grid(N):
    for mx, my in itertools.product(GRID_VALUES, repeat=2):
        for gs in builders(OscParams(N, mx, my)):
            assert max(relation_residuals(gs).values()) <= 1e-11


def test_reflections_cartesian_diagonal():
    gs = build_cartesian(OscParams(3, 0.3, 0.7))
    assert np.allclose(gs.Rx, np.diag([1, -1, 1, -1]))
    assert np.allclose(gs.Ry, np.diag([-1, 1, -1, 1]))


def test_b2_labels():
    assert b2_labels(4) == [(0, "-"), (1, "+"), (1, "-"), (2, "+"), (2, "-")]
    assert b2_labels(3) == [(0, "+"), (0, "-"), (1, "+"), (1, "-")]
    assert b2_block_sizes(4) == [1, 2, 2]
    assert b2_block_sizes(5) == [2, 2, 2]


@pytest.mark.parametrize("which", ["J2", "J3", "H"])
def test_spectra_match_closed_forms(which):
    for N in range(10):
        for mx, my in [(0.3, 0.7), (-0.4, 1.5), (1.5, 0.0)]:
            p = OscParams(N, mx, my)
            for gs in builders(p):
                vals, _ = dense_eigen(getattr(gs, which))
                assert np.max(np.abs(vals.imag)) < 1e-9
                assert np.allclose(np.sort(vals.real), spectrum_closed_form(p, which), atol=1e-9)


def test_frozen_spectra():
    assert np.allclose(spectrum_closed_form(OscParams(2, 0.3, 0.7), "J3"), [-1.2, -0.2, 0.8])
    assert np.allclose(spectrum_closed_form(OscParams(4, 0.3, 0.7), "Q"), [-5.5, -3.5, -1.5, 2.5, 4.5])
    assert np.allclose(spectrum_closed_form(OscParams(2, 0.3, 0.7), "J2"), [-np.sqrt(2), 0, np.sqrt(2)])
    with pytest.raises(ValueError):
        spectrum_closed_form(OscParams(2, 0.3, 0.7), "J1")


def test_q_spectrum():
    for N in range(10):
        p = OscParams(N, 0.3, 1.5)
        vals, _ = dense_eigen(build_q(p))
        assert np.allclose(np.sort(vals.real), spectrum_closed_form(p, "Q"), atol=1e-9)


def test_block_forms_match_built():
    for N in range(10):
        for mx, my in [(0.3, 0.7), (-0.4, 1.5), (0.0, 0.0), (1.5, 1.5)]:
            p = OscParams(N, mx, my)
            b2 = build_circular(p, BasisOrdering.CIRCULAR_B2)
            assert np.allclose(b2.J2, block_j2_b2(p), atol=1e-12)
            assert np.allclose(build_q(p), block_q_b2(p), atol=1e-12)
            assert is_block_upper_triangular(b2.J2, b2_block_sizes(N))


def test_su2_reduction():
    for N in range(8):
        gs = build_cartesian(OscParams(N, 0.0, 0.0))
        ref = su2_matrices(N)
        std = su2_standard(N)
        D = su2_scaling(N)
        for name in ("J1", "J2", "J3"):
            assert np.allclose(getattr(gs, name), ref[name], atol=1e-12)
            assert np.allclose(D @ ref[name] @ np.linalg.inv(D), std[name], atol=1e-12)


def test_generator_set_replace():
    gs = build_cartesian(OscParams(1, 0.3, 0.7))
    other = gs.replace(J3=np.zeros((2, 2)))
    assert np.array_equal(other.J3, np.zeros((2, 2)))
    assert other.ordering == gs.ordering and np.array_equal(other.J1, gs.J1)
    assert set(gs.matrices()) == {"J1", "J2", "J3", "Rx", "Ry", "H", "Casimir"}


def test_eigen_failure_not_triggered_on_grid():
    for N in range(13):
        p = OscParams(N, -0.4, 1.5)
        dense_eigen(build_circular(p).J2, DEFAULT_TOL)
