"""Dense complex linear algebra helpers and the shared tolerance policy."""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np


class SingularParameterError(ValueError):
    """A recurrence or hypergeometric denominator vanished for the given parameters."""


class EigenFailure(RuntimeError):
    """The dense eigensolver did not produce acceptable eigenpairs."""


@dataclass(frozen=True)
class Tolerances:
    residual_tol: float = 1e-9
    eig_match_tol: float = 1e-8
    degeneracy_tol: float = 1e-7

    def __post_init__(self):
        for name in ("residual_tol", "eig_match_tol", "degeneracy_tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be strictly positive")

    @classmethod
    def from_env(cls, **overrides) -> "Tolerances":
        """Default tolerances, with ``SD2_TOL`` overriding ``residual_tol``."""
        env = os.environ.get("SD2_TOL")
        if env is not None and "residual_tol" not in overrides:
            overrides["residual_tol"] = float(env)
        return cls(**overrides)

    def as_dict(self) -> dict:
        return {
            "residual_tol": self.residual_tol,
            "eig_match_tol": self.eig_match_tol,
            "degeneracy_tol": self.degeneracy_tol,
        }


DEFAULT_TOL = Tolerances()


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def _square_pair(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ValueError(f"need equal square matrices, got {a.shape} and {b.shape}")
    return a, b


def commutator(a, b) -> np.ndarray:
    a, b = _square_pair(a, b)
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    a, b = _square_pair(a, b)
    return a @ b + b @ a


def relative_residual(lhs, rhs) -> float:
    """Frobenius distance scaled by the larger operand norm (floored at one)."""
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    scale = max(1.0, float(np.linalg.norm(lhs)), float(np.linalg.norm(rhs)))
    return float(np.linalg.norm(lhs - rhs)) / scale


def dense_eigen(m, tol: Tolerances = DEFAULT_TOL):
    """Eigenvalues sorted by (real, imag) and the matching right eigenvectors.

    Every pair is checked against ``||M v - lam v|| <= residual_tol * ||M||_F``;
    a violation raises :class:`EigenFailure`.
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"dense_eigen needs a square matrix, got {m.shape}")
    try:
        vals, vecs = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure(str(exc)) from exc
    order = np.lexsort((vals.imag, vals.real))
    vals, vecs = vals[order], vecs[:, order]
    bound = tol.residual_tol * max(1.0, float(np.linalg.norm(m)))
    res = np.linalg.norm(m @ vecs - vecs * vals, axis=0)
    if res.size and res.max() > bound:
        raise EigenFailure(f"eigen residual {res.max():.3e} exceeds {bound:.3e}")
    return vals, vecs


def is_block_upper_triangular(m, blocks) -> bool:
    """True when every entry below the block diagonal is exactly zero.

    ``blocks`` lists the block sizes along the diagonal.
    """
    m = np.asarray(m)
    start = 0
    for size in blocks:
        stop = start + size
        if np.any(m[stop:, start:stop] != 0):
            return False
        start = stop
    return True


def is_block_tridiagonal(m, blocks) -> bool:
    """True when all entries outside the three central block diagonals are exactly zero."""
    m = np.asarray(m)
    edges = np.cumsum([0, *blocks])
    nb = len(blocks)
    for i in range(nb):
        for j in range(nb):
            if abs(i - j) > 1:
                if np.any(m[edges[i]:edges[i + 1], edges[j]:edges[j + 1]] != 0):
                    return False
    return True
