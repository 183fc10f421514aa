"""Cartesian/circular transition matrix built from Krawtchouk polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import OscParams
from .specfun import krawtchouk_monic


@dataclass(frozen=True)
class TransitionMatrix:
    T: np.ndarray
    column_convention: str = (
        "column j is the Cartesian vector v_j expanded in B1, scaled to unit norm "
        "with a positive first nonzero entry"
    )

    @property
    def condition_number(self) -> float:
        return float(np.linalg.cond(self.T))


def transition_coeff(n: int, j: int, N: int) -> float:
    """P_n(j) = 2^n Khat_n(j; N) / n!, so that P_0 = 1 and P_1 = 2j - N.

    Satisfies (2j - N) P_n = (n+1) P_{n+1} + (N-n+1) P_{n-1}.
    """
    if not (0 <= n <= N and 0 <= j <= N):
        raise ValueError(f"indices (n={n}, j={j}) outside 0..{N}")
    return 2.0 ** n * krawtchouk_monic(n, j, N) / math.factorial(n)


def build_transition(params: OscParams) -> TransitionMatrix:
    N = params.n
    T = np.array([[transition_coeff(n, j, N) for j in range(N + 1)] for n in range(N + 1)])
    T /= np.linalg.norm(T, axis=0)
    for j in range(N + 1):
        lead = T[np.flatnonzero(np.abs(T[:, j]) > 1e-14)[0], j]
        if lead < 0:
            T[:, j] *= -1
    return TransitionMatrix(T)


def transition_eigenvalues(params: OscParams) -> np.ndarray:
    """The J3 eigenvalue j + (xi - N)/2 carried by column j."""
    return np.array([j + (params.xi - params.n) / 2 for j in range(params.dim)])
