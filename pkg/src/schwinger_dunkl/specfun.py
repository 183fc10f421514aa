"""Scalar special functions: Pochhammer symbols, mu-numbers, terminating
hypergeometric sums, monic Krawtchouk, complementary Bannai-Ito and Heun
series coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .numerics import SingularParameterError

_ZERO = 1e-13


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0
    for i in range(n):
        out *= a + i
    return out


def mu_number(n: int, mu: float) -> float:
    """[n]_mu = n + mu (1 - (-1)^n)."""
    return n + mu * (1 - (-1) ** n)


def _is_nonpositive_int(a: float) -> bool:
    return a <= 0 and abs(a - round(a)) < _ZERO


def hyp_terminating(num_params: Sequence[float], den_params: Sequence[float], z: float) -> float:
    """Terminating pFq(num; den; z) by direct summation.

    Requires a nonpositive integer among ``num_params``; the sum stops there.
    """
    stops = [int(round(-a)) for a in num_params if _is_nonpositive_int(a)]
    if not stops:
        raise ValueError("series does not terminate: no nonpositive integer numerator parameter")
    last = min(stops)
    total, term = 0.0, 1.0
    for j in range(last + 1):
        total += term
        if j == last:
            break
        den = 1.0
        for b in den_params:
            if abs(b + j) < _ZERO:
                raise SingularParameterError(f"denominator parameter {b} vanishes at term {j + 1}")
            den *= b + j
        num = 1.0
        for a in num_params:
            num *= a + j
        term *= num / den * z / (j + 1)
    return total


def krawtchouk_monic(n: int, x: float, N: int) -> float:
    """Monic Krawtchouk polynomial at p = 1/2 from its three-term recurrence."""
    if not 0 <= n <= N:
        raise ValueError(f"degree {n} outside 0..{N}")
    prev, cur = 0.0, 1.0
    for j in range(n):
        prev, cur = cur, (x - N / 2) * cur - 0.25 * j * (N - j + 1) * prev
    return cur


@dataclass(frozen=True)
class CBIParams:
    rho1: float
    rho2: float
    r1: float
    r2: float

    @property
    def g(self) -> float:
        return self.rho1 + self.rho2 - self.r1 - self.r2


def _nonzero(value: float, what: str, n: int) -> float:
    if abs(value) < _ZERO:
        raise SingularParameterError(f"{what} vanishes at n={n}")
    return value


def cbi_recurrence_coeff(n: int, p: CBIParams) -> float:
    """tau_n of the monic complementary Bannai-Ito recurrence (tau_0 = 0)."""
    g = p.g
    if n % 2 == 0:
        h = n // 2
        den = _nonzero((2 * h + g) * (2 * h + g + 1), "tau denominator", n) if h else 1.0
        return -h * (h + p.rho1 - p.r1 + 0.5) * (h + p.rho1 - p.r2 + 0.5) * (h - p.r1 - p.r2) / den
    h = (n - 1) // 2
    den = _nonzero((2 * h + g + 1) * (2 * h + g + 2), "tau denominator", n)
    return -(h + g + 1) * (h + p.rho1 + p.rho2 + 1) * (h + p.rho2 - p.r1 + 0.5) * (h + p.rho2 - p.r2 + 0.5) / den


def cbi_monic(n: int, x: float, p: CBIParams) -> float:
    """I_n(x) from I_{j+1} = (x - (-1)^j rho2) I_j - tau_j I_{j-1}."""
    prev, cur = 0.0, 1.0
    for j in range(n):
        tau = cbi_recurrence_coeff(j, p) if j else 0.0
        prev, cur = cur, (x - (-1) ** j * p.rho2) * cur - tau * prev
    return cur


def cbi_hypergeometric(n: int, x: float, p: CBIParams) -> float:
    """I_n(x) from its 4F3 representation; an independent check on :func:`cbi_monic`."""
    g = p.g
    h = n // 2
    if n % 2 == 0:
        b = (p.rho1 + p.rho2 + 1, p.rho2 - p.r1 + 0.5, p.rho2 - p.r2 + 0.5)
        norm = math.prod(pochhammer(v, h) for v in b) / pochhammer(h + g + 1, h)
        return norm * hyp_terminating([-h, h + g + 1, p.rho2 + x, p.rho2 - x], list(b), 1.0)
    b = (p.rho1 + p.rho2 + 2, p.rho2 - p.r1 + 1.5, p.rho2 - p.r2 + 1.5)
    norm = math.prod(pochhammer(v, h) for v in b) / pochhammer(h + g + 2, h)
    return (x - p.rho2) * norm * hyp_terminating([-h, h + g + 2, p.rho2 + x + 1, p.rho2 - x + 1], list(b), 1.0)


@dataclass(frozen=True)
class HeunParams:
    a: float
    q: float
    alpha: float
    beta: float
    gamma: float
    delta: float

    @property
    def epsilon(self) -> float:
        return self.alpha + self.beta + 1 - self.gamma - self.delta


def heun_series(p: HeunParams, max_degree: int) -> list[float]:
    """Power-series coefficients c_0..c_{max_degree} of the local Heun solution.

    R_n c_{n+1} = (Q_n + q) c_n - P_n c_{n-1}, c_0 = 1.  When R_n = 0 beyond the
    degree of a polynomial solution (alpha a nonpositive integer, n >= -alpha,
    vanishing right-hand side) the coefficient is set to zero; any other
    vanishing R_n raises :class:`SingularParameterError`.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    a, q, al, be, ga, de, ep = p.a, p.q, p.alpha, p.beta, p.gamma, p.delta, p.epsilon
    c = [1.0]
    prev = 0.0
    for n in range(max_degree):
        R = a * (n + 1) * (n + ga)
        Q = n * ((n - 1 + ga) * (1 + a) + a * de + ep)
        P = (n - 1 + al) * (n - 1 + be)
        rhs = (Q + q) * c[n] - P * prev
        if abs(R) < _ZERO:
            polynomial_tail = _is_nonpositive_int(al) and n >= -round(al)
            scale = max(1.0, abs(Q + q) * abs(c[n]), abs(P * prev))
            if polynomial_tail and abs(rhs) <= 1e-10 * scale:
                nxt = 0.0
            else:
                raise SingularParameterError(f"Heun recurrence coefficient R_n vanishes at n={n}")
        else:
            nxt = rhs / R
        prev = c[n]
        c.append(nxt)
    return c
