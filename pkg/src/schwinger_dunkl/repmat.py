"""Generator matrices of sd(2) on the level-N module in several bases.

Matrices follow the column-action convention: column j holds the image of
basis vector j.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import fock
from .fock import CircularState, StateSum
from .params import OscParams
from .specfun import mu_number


class BasisOrdering(str, Enum):
    CARTESIAN = "cartesian"
    CIRCULAR_B1 = "circular-b1"
    CIRCULAR_B2 = "circular-b2"
    J2_EIGEN = "j2-eigen"


GENERATOR_NAMES = ("J1", "J2", "J3", "Rx", "Ry", "H", "Casimir")


@dataclass(frozen=True)
class GeneratorSet:
    J1: np.ndarray
    J2: np.ndarray
    J3: np.ndarray
    Rx: np.ndarray
    Ry: np.ndarray
    H: np.ndarray
    Casimir: np.ndarray
    ordering: BasisOrdering
    params: OscParams

    def matrices(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in GENERATOR_NAMES}

    def replace(self, **mats) -> "GeneratorSet":
        d = self.matrices()
        d.update(mats)
        return GeneratorSet(**d, ordering=self.ordering, params=self.params)


def casimir(J1, J2, J3, Rx, Ry, params: OscParams) -> np.ndarray:
    mx, my = params.mu_x, params.mu_y
    return J1 @ J1 + J2 @ J2 + J3 @ J3 + mx * Rx / 2 + my * Ry / 2 + mx * my * Rx @ Ry


def _finish(J1, J2, J3, Rx, Ry, ordering, params) -> GeneratorSet:
    mats = [np.asarray(m, dtype=complex) for m in (J1, J2, J3, Rx, Ry)]
    H = params.energy * np.eye(params.dim, dtype=complex)
    C = casimir(*mats, params)
    return GeneratorSet(*mats, H, C, ordering=BasisOrdering(ordering), params=params)


def build_cartesian(params: OscParams) -> GeneratorSet:
    """Generators on v_n = |n, N-n>, from the module actions."""
    N, mx, my = params.n, params.mu_x, params.mu_y
    d = params.dim
    up = np.zeros((d, d))
    down = np.zeros((d, d))
    for n in range(d):
        if n < N:
            up[n + 1, n] = mu_number(N - n, my)
        if n > 0:
            down[n - 1, n] = mu_number(n, mx)
    J1 = (up + down) / 2
    J2 = (up - down) / 2j
    J3 = np.diag([n + (params.xi - N) / 2 for n in range(d)])
    Rx = np.diag([(-1.0) ** n for n in range(d)])
    Ry = np.diag([(-1.0) ** (N - n) for n in range(d)])
    return _finish(J1, J2, J3, Rx, Ry, BasisOrdering.CARTESIAN, params)


# Generators as sums of weighted operator words.
def _anti(a, b, w):
    return [(w, [a, b]), (w, [b, a])]


CARTESIAN_WORDS = {
    "J1": [(0.5, ["A+x", "A-y"]), (0.5, ["A-x", "A+y"])],
    "J2": [(-0.5j, ["A+x", "A-y"]), (0.5j, ["A-x", "A+y"])],
    "J3": _anti("A-x", "A+x", 0.25) + _anti("A-y", "A+y", -0.25),
    "H": _anti("A-x", "A+x", 0.5) + _anti("A-y", "A+y", 0.5),
    "Rx": [(1.0, ["Rx"])],
    "Ry": [(1.0, ["Ry"])],
}

CIRCULAR_WORDS = {
    "J1": _anti("A+L", "A-R", 0.25j) + _anti("A-L", "A+R", -0.25j),
    "J2": _anti("A-R", "A+R", 0.25) + _anti("A-L", "A+L", -0.25),
    "J3": _anti("A-L", "A+R", 0.25) + _anti("A+L", "A-R", 0.25),
    "H": _anti("A-L", "A+L", 0.5) + _anti("A-R", "A+R", 0.5),
    "Rx": [(1.0, ["Rx"])],
    "Ry": [(1.0, ["Ry"])],
}


def word_matrix(terms, basis: list, params: OscParams) -> np.ndarray:
    """Matrix of a weighted sum of operator words on the given state list."""
    index = {s: i for i, s in enumerate(basis)}
    M = np.zeros((len(basis), len(basis)), dtype=complex)
    for j, s in enumerate(basis):
        total = StateSum()
        for w, ops in terms:
            total = total + fock.apply_word(ops, s, params).scale(w)
        for c, st in total:
            M[index[st], j] += c
    return M


def cartesian_states(N: int) -> list:
    return [fock.CartesianState(n, N - n) for n in range(N + 1)]


def b1_states(N: int) -> list:
    return [CircularState(n, N - n) for n in range(N + 1)]


def b2_labels(N: int) -> list[tuple[int, str]]:
    """(l, sign) labels in B2 order; sign '+' precedes '-' within each l."""
    labs = []
    for nL in range(N + 1):
        nR = N - nL
        labs.append((abs(nL - nR) // 2, "+" if nR > nL else "-"))
    return sorted(labs)


def b2_states(N: int) -> list:
    out = []
    for nL in range(N + 1):
        nR = N - nL
        key = (abs(nL - nR) // 2, 0 if nR > nL else 1)
        out.append((key, CircularState(nL, nR)))
    return [s for _, s in sorted(out)]


def states_for(ordering, N: int) -> list:
    ordering = BasisOrdering(ordering)
    if ordering is BasisOrdering.CARTESIAN:
        return cartesian_states(N)
    if ordering is BasisOrdering.CIRCULAR_B1:
        return b1_states(N)
    if ordering is BasisOrdering.CIRCULAR_B2:
        return b2_states(N)
    raise ValueError(f"{ordering.value} has no Fock-state basis")


def build_from_fock(params: OscParams, ordering) -> GeneratorSet:
    """Generators computed by pushing ladder-operator words through Fock actions."""
    ordering = BasisOrdering(ordering)
    basis = states_for(ordering, params.n)
    words = CARTESIAN_WORDS if ordering is BasisOrdering.CARTESIAN else CIRCULAR_WORDS
    m = {name: word_matrix(words[name], basis, params) for name in ("J1", "J2", "J3", "Rx", "Ry")}
    return _finish(m["J1"], m["J2"], m["J3"], m["Rx"], m["Ry"], ordering, params)


def build_circular(params: OscParams, ordering=BasisOrdering.CIRCULAR_B2) -> GeneratorSet:
    ordering = BasisOrdering(ordering)
    if ordering not in (BasisOrdering.CIRCULAR_B1, BasisOrdering.CIRCULAR_B2):
        raise ValueError("build_circular needs circular-b1 or circular-b2")
    return build_from_fock(params, ordering)


def hamiltonian_from_fock(params: OscParams, ordering) -> np.ndarray:
    basis = states_for(ordering, params.n)
    words = CARTESIAN_WORDS if BasisOrdering(ordering) is BasisOrdering.CARTESIAN else CIRCULAR_WORDS
    return word_matrix(words["H"], basis, params)


def q_operator(J2, Rx, Ry, params: OscParams) -> np.ndarray:
    mx, my = params.mu_x, params.mu_y
    return -2j * J2 @ Rx - mx * Ry - my * Rx - 0.5 * Rx @ Ry


def build_q(params: OscParams) -> np.ndarray:
    """Q = -2i J2 Rx - mu_x Ry - mu_y Rx - Rx Ry / 2 in ordering B2."""
    g = build_circular(params, BasisOrdering.CIRCULAR_B2)
    return q_operator(g.J2, g.Rx, g.Ry, params)


# Closed-form block matrices in ordering B2, used as an independent construction.
def _block_layout(N):
    """Start index and width of each diagonal block in B2."""
    if N % 2:
        return [(2 * k, 2) for k in range((N + 1) // 2)]
    return [(0, 1)] + [(2 * k - 1, 2) for k in range(1, N // 2 + 1)]


def _assemble(N, diag_blocks, off_block):
    d = N + 1
    M = np.zeros((d, d), dtype=complex)
    lay = _block_layout(N)
    for i, (si, wi) in enumerate(lay):
        M[si:si + wi, si:si + wi] = diag_blocks[i]
        for j in range(i + 1, len(lay)):
            sj, wj = lay[j]
            M[si:si + wi, sj:sj + wj] = off_block(j - i)[:wi]
    return M


def block_j2_b2(params: OscParams) -> np.ndarray:
    """[J2] in B2 assembled from the Gamma/Omega block formulas."""
    N, z, x = params.n, params.zeta, params.xi
    if N % 2 == 0:
        diag = [np.array([[0.0]])] + [
            np.array([[k + z / 2, -z / 2], [z / 2, -k - z / 2]]) for k in range(1, N // 2 + 1)
        ]

        def off(k):
            return np.array([[-x, x], [-x, x]]) if k % 2 else np.array([[z, -z], [z, -z]])
    else:
        diag = [
            np.array([[(2 * k + 1 + z) / 2, x / 2], [-x / 2, -(2 * k + 1 + z) / 2]])
            for k in range((N + 1) // 2)
        ]

        def off(k):
            return np.array([[-x, -z], [z, x]]) if k % 2 else np.array([[z, x], [-x, -z]])
    return _assemble(N, diag, off)


def block_q_b2(params: OscParams) -> np.ndarray:
    """[Q] in B2 assembled from the Phi/Delta block formulas."""
    N, z, x = params.n, params.zeta, params.xi
    if N % 2 == 0:
        diag = [np.array([[-z - 0.5]])] + [
            np.array([[1j * z - 0.5, -2j * k - (1 + 1j) * z], [2j * k - (1 - 1j) * z, -1j * z - 0.5]])
            for k in range(1, N // 2 + 1)
        ]

        def off(k):
            if k % 2:
                return np.array([[-2j * x, 2j * x], [-2j * x, 2j * x]])
            return np.array([[2j * z, -2j * z], [2j * z, -2j * z]])
    else:
        diag = [
            np.array([[0.5 + 1j * x, 1j * (2 * k + z + 1) - x], [-1j * (2 * k + z + 1) - x, 0.5 - 1j * x]])
            for k in range((N + 1) // 2)
        ]

        def off(k):
            if k % 2:
                return np.array([[-2j * z, -2j * x], [2j * x, 2j * z]])
            return np.array([[2j * x, 2j * z], [-2j * z, -2j * x]])
    return _assemble(N, diag, off)


def b2_block_sizes(N: int) -> list[int]:
    return [w for _, w in _block_layout(N)]


def spectrum_closed_form(params: OscParams, which: str) -> np.ndarray:
    """Sorted eigenvalues of J2, J3, Q or H from their closed forms."""
    N, mx, my, z = params.n, params.mu_x, params.mu_y, params.zeta
    if which == "J2":
        if N % 2 == 0:
            vals = [0.0] + [s * np.sqrt(k * (k + z)) for k in range(1, N // 2 + 1) for s in (1, -1)]
        else:
            vals = [s * np.sqrt((k + mx + 0.5) * (k + my + 0.5)) for k in range((N + 1) // 2) for s in (1, -1)]
    elif which == "J3":
        vals = [n + (params.xi - N) / 2 for n in range(N + 1)]
    elif which == "Q":
        if N % 2 == 0:
            vals = [-z - 0.5] + [v for k in range(1, N // 2 + 1) for v in (2 * k + z - 0.5, -2 * k - z - 0.5)]
        else:
            vals = [v for k in range((N + 1) // 2) for v in (2 * k + z + 1.5, -2 * k - z - 0.5)]
    elif which == "H":
        vals = [params.energy] * (N + 1)
    else:
        raise ValueError(f"no closed-form spectrum for {which!r}")
    return np.sort(np.array(vals, dtype=float))


def su2_matrices(N: int) -> dict[str, np.ndarray]:
    """Spin-N/2 matrices on the unnormalized basis with J+ v_n = (N-n) v_{n+1}."""
    d = N + 1
    jp = np.zeros((d, d))
    jm = np.zeros((d, d))
    for n in range(d):
        if n < N:
            jp[n + 1, n] = N - n
        if n > 0:
            jm[n - 1, n] = n
    return {
        "J1": (jp + jm).astype(complex) / 2,
        "J2": (jp - jm) / 2j,
        "J3": np.diag([n - N / 2 for n in range(d)]).astype(complex),
    }


def su2_standard(N: int) -> dict[str, np.ndarray]:
    """Textbook spin-N/2 matrices in the orthonormal |j, m> basis, m ascending."""
    j = N / 2
    ms = np.arange(N + 1) - j
    jp = np.zeros((N + 1, N + 1))
    for i in range(N):
        jp[i + 1, i] = np.sqrt((j - ms[i]) * (j + ms[i] + 1))
    jm = jp.T
    return {
        "J1": (jp + jm).astype(complex) / 2,
        "J2": (jp - jm) / 2j,
        "J3": np.diag(ms).astype(complex),
    }


def su2_scaling(N: int) -> np.ndarray:
    """Diagonal D with D su2_matrices(N) D^-1 = su2_standard(N)."""
    c = [1.0]
    for n in range(N):
        c.append(c[-1] * np.sqrt((n + 1) / (N - n)))
    return np.diag(c)
