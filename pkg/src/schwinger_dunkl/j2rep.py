"""J3 in the eigenbasis of J2: block tridiagonal with 2x2 blocks.

Basis order is (0,+),(0,-),(1,+),... for odd N and (0,-),(1,+),(1,-),... for
even N.  A gauge sequence g_1..g_m of nonzero numbers scales the upper blocks
by g_k and the lower blocks by 1/g_k.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .numerics import DEFAULT_TOL, EigenFailure, SingularParameterError, Tolerances, dense_eigen
from .params import OscParams
from .qdiag import j2_eigenbasis
from .repmat import BasisOrdering, GeneratorSet, _finish, build_circular, spectrum_closed_form
from .specfun import pochhammer

_SX = np.array([[0.0, 1.0], [1.0, 0.0]])


def _gauge(params: OscParams, gauge: Sequence[float] | None) -> list[float]:
    m = params.m
    if gauge is None:
        return [1.0] * (m + 1)
    g = [float(v) for v in gauge]
    if len(g) != m:
        raise ValueError(f"gauge needs {m} entries (one per k = 1..{m}), got {len(g)}")
    if any(v == 0 for v in g):
        raise ValueError("gauge entries must be nonzero")
    return [1.0] + g


def _sqrt(v: float) -> float:
    if v < 0:
        raise SingularParameterError(f"negative square-root argument {v}")
    return math.sqrt(v)


def block_sizes(params: OscParams) -> list[int]:
    if params.n % 2:
        return [2] * (params.m + 1)
    return [1] + [2] * params.m


def _j3_odd(params: OscParams, g: list[float]) -> np.ndarray:
    N, mx, my, z, x = params.n, params.mu_x, params.mu_y, params.zeta, params.xi
    m = params.m
    J3 = np.zeros((N + 1, N + 1))
    for k in range(m + 1):
        if k == 0:
            X = (N + z + 1) / (2 * (z + 2))  # zeta cancelled
        else:
            X = z * (N + z + 1) / (2 * (2 * k + z) * (2 * k + z + 2))
        J3[2 * k:2 * k + 2, 2 * k:2 * k + 2] = [[x * X, X], [X, x * X]]
    for k in range(1, m + 1):
        root = _sqrt(pochhammer(k + mx - 0.5, 2) * pochhammer(k + my - 0.5, 2))
        M = (1 - 4 * (k + mx) * (k + my) - 4 * root) / (2 * x)
        J3[2 * k - 2:2 * k, 2 * k:2 * k + 2] = g[k] * np.array([[M, 1.0], [1.0, M]])
    for k in range(m):
        Mk = x * (k + 1) * (2 * k - N + 1) * (k + 1 + z) * (2 * k + 2 * z + N + 3) / (
            4 * (2 * k + z + 2) * pochhammer(2 * k + z + 1, 3)
        )
        root = _sqrt(pochhammer(k + mx + 0.5, 2) * pochhammer(k + my + 0.5, 2))
        E = (1 - 4 * (k + mx + 1) * (k + my + 1) + 4 * root) / (2 * x)
        J3[2 * k + 2:2 * k + 4, 2 * k:2 * k + 2] = np.array([[Mk, E * Mk], [E * Mk, Mk]]) / g[k + 1]
    return J3


def _j3_even(params: OscParams, g: list[float], tol: Tolerances) -> np.ndarray:
    N, mx, my, z, x = params.n, params.mu_x, params.mu_y, params.zeta, params.xi
    m = params.m
    if m >= 2 and abs(z) <= tol.degeneracy_tol:
        raise SingularParameterError("upper blocks divide by mu_x + mu_y, which vanishes")
    J3 = np.zeros((N + 1, N + 1))
    J3[0, 0] = x * (N + z + 1) / (2 * (1 + z))
    if m >= 1:
        w = (N / 2) * (1 + 2 * mx) * (1 + 2 * my) * (N / 2 + z + 1) / (2 * (1 + z) ** 2 * (2 + z))
        J3[0, 1:3] = g[1]
        J3[1:3, 0] = w / g[1]

    def at(k):
        return 2 * k - 1

    for k in range(1, m + 1):
        D = 2 * (2 * k - 1 + z) * (2 * k + 1 + z)
        M, Nn = x * z * (N + z + 1) / D, -x * (N + z + 1) / D
        J3[at(k):at(k) + 2, at(k):at(k) + 2] = [[M, Nn], [Nn, M]]
    for k in range(2, m + 1):
        root = _sqrt(pochhammer(k - 1, 2) * pochhammer(k - 1 + z, 2))
        Nu = (z + 2 * (k - 1) * (k + z) - 2 * root) / z
        J3[at(k - 1):at(k - 1) + 2, at(k):at(k) + 2] = g[k] * np.array([[1.0, Nu], [Nu, 1.0]])
    for k in range(1, m):
        root = _sqrt(pochhammer(k, 2) * pochhammer(k + z, 2))
        sq = z + 2 * k * (k + z + 1) + 2 * root
        common = (N / 2 - k) * (N / 2 + k + 1 + z) * (2 * k + 1 + 2 * mx) * (2 * k + 1 + 2 * my) / (
            4 * (2 * k + 1 + z) * pochhammer(2 * k + z, 3)
        )
        Mk, Nk = common * sq, common * z
        J3[at(k + 1):at(k + 1) + 2, at(k):at(k) + 2] = np.array([[Mk, Nk], [Nk, Mk]]) / g[k + 1]
    return J3


def reflections_j2basis(params: OscParams) -> tuple[np.ndarray, np.ndarray]:
    m = params.m
    if params.n % 2:
        Ry = np.kron(np.eye(m + 1), _SX)
        return -Ry, Ry
    R = np.zeros((params.dim, params.dim))
    R[0, 0] = 1.0
    R[1:, 1:] = np.kron(np.eye(m), _SX)
    return R, R.copy()


def j2_diagonal(params: OscParams) -> np.ndarray:
    mx, my, z = params.mu_x, params.mu_y, params.zeta
    if params.n % 2:
        lams = [math.sqrt((k + mx + 0.5) * (k + my + 0.5)) for k in range(params.m + 1)]
        return np.diag([v for lam in lams for v in (lam, -lam)])
    lams = [math.sqrt(k * (k + z)) for k in range(1, params.m + 1)]
    return np.diag([0.0] + [v for lam in lams for v in (lam, -lam)])


def build_j3_j2basis(params: OscParams, gauge: Sequence[float] | None = None, tol: Tolerances = DEFAULT_TOL) -> GeneratorSet:
    """Generators in the J2 eigenbasis from the closed-form block entries; J1 = -i[J2, J3]."""
    if abs(params.xi) <= tol.degeneracy_tol:
        raise ValueError("closed-form blocks need mu_x != mu_y")
    g = _gauge(params, gauge)
    J3 = _j3_odd(params, g) if params.n % 2 else _j3_even(params, g, tol)
    J2 = j2_diagonal(params)
    Rx, Ry = reflections_j2basis(params)
    J1 = -1j * (J2 @ J3 - J3 @ J2)
    return _finish(J1, J2, J3, Rx, Ry, BasisOrdering.J2_EIGEN, params)


def gauge_matrix(params: OscParams, gauge: Sequence[float]) -> np.ndarray:
    """Block-diagonal G with G^-1 J3(unit gauge) G = J3(gauge)."""
    g = _gauge(params, gauge)
    scale, diag = 1.0, []
    for k, size in enumerate(block_sizes(params)):
        if k:
            scale *= g[k]
        diag += [scale] * size
    return np.diag(diag)


def build_j2_eigen(params: OscParams) -> GeneratorSet:
    """All generators transported to the J2 eigenbasis built from Q-eigenvectors.

    Valid for every parameter point, including mu_x = mu_y.
    """
    E, _ = j2_eigenbasis(params)
    gs = build_circular(params, BasisOrdering.CIRCULAR_B2)
    conj = {n: np.linalg.solve(E, getattr(gs, n) @ E) for n in ("J1", "J2", "J3", "Rx", "Ry")}
    return _finish(conj["J1"], conj["J2"], conj["J3"], conj["Rx"], conj["Ry"], BasisOrdering.J2_EIGEN, params)


def j3_spectrum_check(gs: GeneratorSet, tol: Tolerances = DEFAULT_TOL) -> dict:
    """Compare the eigenvalues of gs.J3 with the lattice n + (xi - N)/2."""
    expected = spectrum_closed_form(gs.params, "J3")
    report = {"check": "j3_spectrum", "n": gs.params.n, "mu_x": gs.params.mu_x, "mu_y": gs.params.mu_y}
    if abs(gs.params.xi) <= tol.degeneracy_tol:
        report.update(applicable=False, passed=True, max_deviation=0.0,
                      note="closed-form blocks exclude mu_x = mu_y")
        return report
    try:
        vals, _ = dense_eigen(gs.J3, tol)
    except EigenFailure as exc:
        report.update(applicable=True, passed=False, max_deviation=math.inf, note=str(exc))
        return report
    dev = float(max(np.max(np.abs(vals.imag)), np.max(np.abs(np.sort(vals.real) - expected))))
    report.update(applicable=True, passed=dev <= tol.eig_match_tol, max_deviation=dev, note="")
    return report
