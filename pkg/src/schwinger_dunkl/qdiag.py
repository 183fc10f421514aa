"""Eigenvectors of Q and J2 in the circular basis B2.

The coefficient sequences a_n, b_n come from forward recurrence solvers; the
closed forms (complementary Bannai-Ito, Heun, isotropic hypergeometric) are
alternative routes to the same numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .numerics import SingularParameterError
from .params import OscParams
from .repmat import b2_labels, b2_states, word_matrix
from .specfun import CBIParams, HeunParams, cbi_monic, heun_series, pochhammer


@dataclass(frozen=True)
class CoeffPair:
    a_seq: np.ndarray
    b_seq: np.ndarray
    k: int
    parity: str

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError("parity must be 'even' or 'odd'")


def solve_recurrence_even(k: int, params: OscParams, n_max: int | None = None) -> CoeffPair:
    """Forward solution of the even-N recurrence system, terms 0..n_max (default k)."""
    if k < 0:
        raise ValueError("sector index must be nonnegative")
    n_max = k if n_max is None else n_max
    mx, my, z = params.mu_x, params.mu_y, params.zeta
    a, b = [1.0], [1.0]
    for n in range(1, n_max + 1):
        if k == 0:
            a.append(0.0)
            b.append(0.0)
            continue
        s = 2 * sum(((-1) ** (n + al) * mx + my) * b[al] for al in range(n))
        den = n * (2 * k - n + z)
        if abs(den) < 1e-13:
            raise SingularParameterError(f"even recurrence denominator vanishes at n={n}")
        an = k * s / den
        a.append(an)
        b.append((k - n) * an / k)
    return CoeffPair(np.array(a), np.array(b), k, "even")


def solve_recurrence_odd(k: int, params: OscParams, n_max: int | None = None) -> CoeffPair:
    """Forward solution of the odd-N coupled system; each step is a 2x2 solve."""
    if k < 0:
        raise ValueError("sector index must be nonnegative")
    n_max = k if n_max is None else n_max
    mx, my = params.mu_x, params.mu_y
    a, b = [1.0], [1.0]
    for n in range(1, n_max + 1):
        rhs = np.array([2 * my * sum(b), 2 * mx * (-1) ** n * sum((-1) ** j * a[j] for j in range(n))])
        M = np.array([[k + my + 0.5, -(k - n + my + 0.5)], [-(k - n + mx + 0.5), k + mx + 0.5]])
        if abs(np.linalg.det(M)) < 1e-13:
            raise SingularParameterError(f"odd recurrence step is singular at n={n}")
        an, bn = np.linalg.solve(M, rhs)
        a.append(float(an))
        b.append(float(bn))
    return CoeffPair(np.array(a), np.array(b), k, "odd")


def solve_recurrence(k: int, params: OscParams) -> CoeffPair:
    if params.n % 2:
        return solve_recurrence_odd(k, params)
    return solve_recurrence_even(k, params)


# Closed forms through complementary Bannai-Ito (para-Krawtchouk) polynomials.
def closed_form_even(k: int, params: OscParams, n: int) -> float:
    if not 0 <= n <= 2 * k:
        raise ValueError(f"index n={n} outside 0..{2 * k}")
    if n > k:
        n = 2 * k - n
    z, x = params.zeta, params.xi
    cbi = CBIParams((z - 2) / 2, 0.0, (2 * k + z) / 2, 0.0)
    pref = (-1) ** n * 4 ** n / math.factorial(n) * pochhammer(k + 1 - n, n) / pochhammer(2 * k + z - n, n)
    return pref * cbi_monic(n, x / 2, cbi)


def para_krawtchouk_odd(k: int, params: OscParams, r: int) -> float:
    """The intermediate sequence P_r of the odd case, mirrored about r = k + 1/2."""
    if r < 0 or r > 2 * k + 1:
        return 0.0
    if r > k:
        r = 2 * k + 1 - r
    z, x = params.zeta, params.xi
    cbi = CBIParams((z - 1) / 2, 0.0, (2 * k + z + 1) / 2, 0.0)
    pref = (-1) ** r * 4 ** r / math.factorial(r) * pochhammer(k + 1 - r, r) / pochhammer(2 * k + z + 1 - r, r)
    return pref * cbi_monic(r, (1 + x) / 2, cbi)


def closed_form_odd(k: int, params: OscParams, n: int) -> tuple[float, float]:
    """(a_n, b_n); b_n uses the mirror of P under mu_x <-> mu_y."""
    if not 0 <= n <= 2 * k + 1:
        raise ValueError(f"index n={n} outside 0..{2 * k + 1}")
    swapped = OscParams(params.n, params.mu_y, params.mu_x)
    a = para_krawtchouk_odd(k, params, n) + para_krawtchouk_odd(k, params, n - 1)
    b = (-1) ** n * (para_krawtchouk_odd(k, swapped, n) + para_krawtchouk_odd(k, swapped, n - 1))
    return a, b


# Heun route.
def heun_params_even(k: int, params: OscParams) -> HeunParams:
    mx, my, z = params.mu_x, params.mu_y, params.zeta
    return HeunParams(a=-1.0, q=2 * k * (my - mx), alpha=-2.0 * k, beta=z, gamma=1 - 2 * k - z, delta=2 * my)


def heun_params_odd(k: int, params: OscParams, swap: bool = False) -> HeunParams:
    mx, my = (params.mu_y, params.mu_x) if swap else (params.mu_x, params.mu_y)
    z = params.zeta
    return HeunParams(a=-1.0, q=2 * k * (my - mx - 1), alpha=-2.0 * k, beta=z + 1, gamma=-2 * k - z, delta=2 * my)


def heun_coeffs_even(k: int, params: OscParams) -> np.ndarray:
    """a_0..a_{2k} as Heun polynomial coefficients."""
    return np.array(heun_series(heun_params_even(k, params), 2 * k))


def heun_coeffs_odd(k: int, params: OscParams) -> tuple[np.ndarray, np.ndarray]:
    """(a_0..a_k, b_0..b_k) from the (1 +/- z)-convolved Heun polynomials."""
    ca = np.array(heun_series(heun_params_odd(k, params), 2 * k))
    cb = np.array(heun_series(heun_params_odd(k, params, swap=True), 2 * k))
    cb = cb * (-1.0) ** np.arange(len(cb))
    return np.convolve([1.0, 1.0], ca)[: k + 1], np.convolve([1.0, -1.0], cb)[: k + 1]


def isotropic_coeffs(k: int, mu: float, parity: str, n_max: int | None = None) -> CoeffPair:
    """Closed-form a_n, b_n at mu_x = mu_y = mu."""
    n_max = k if n_max is None else n_max

    def ratio(num, den):
        if abs(den) < 1e-14:
            raise SingularParameterError("isotropic Pochhammer denominator vanishes")
        return num / den

    a, b = [], []
    for n in range(n_max + 1):
        h = n // 2
        if parity == "even":
            if n % 2:
                an = 0.0
            else:
                an = ratio(pochhammer(-k, h) * pochhammer(mu, h), pochhammer(1 - k - mu, h) * math.factorial(h))
            bn = 1.0 if k == 0 and n == 0 else ((k - n) / k * an if k else 0.0)
        elif parity == "odd":
            if n % 2 == 0:
                an = ratio(pochhammer(-k, h) * pochhammer(mu, h), math.factorial(h) * pochhammer(-mu - k, h))
            else:
                an = ratio(mu, k + mu) * ratio(
                    pochhammer(-k, h) * pochhammer(mu + 1, h), math.factorial(h) * pochhammer(-mu - k + 1, h)
                )
            bn = (-1) ** n * an
        else:
            raise ValueError("parity must be 'even' or 'odd'")
        a.append(an)
        b.append(bn)
    return CoeffPair(np.array(a), np.array(b), k, parity)


@dataclass(frozen=True)
class SectorConstants:
    alpha0: complex
    beta0: complex
    gamma0: complex
    eps0: complex


def sector_constants(k: int, params: OscParams) -> SectorConstants:
    z, x, mx, my = params.zeta, params.xi, params.mu_x, params.mu_y
    a0, b0 = 1 - 1j, 1 + 1j
    if params.n % 2 == 0:
        den = (1 + 1j) * k + 1j * z
        return SectorConstants(a0, b0, 2j * (k + z) / den, 2 * k / den)
    den = 2 * k + 1 + z - 1j * x
    return SectorConstants(a0, b0, (1 + 1j) * (2 * k + 1 + 2 * my) / den, (1 - 1j) * (2 * k + 1 + 2 * mx) / den)


@dataclass
class EigvecTable:
    """Eigenvectors keyed by (k, sign) as coordinate vectors in B2."""

    params: OscParams
    operator: str
    vectors: dict = field(default_factory=dict)
    eigenvalues: dict = field(default_factory=dict)
    basis: str = "circular-b2"
    scales: dict = field(default_factory=dict)  # relative scale t per sector (J2 tables)

    def keys(self) -> list:
        """Keys in the J2-eigenbasis order used for block matrices."""
        return sorted(self.vectors, key=lambda key: (key[0], key[1] != "+"))

    def components(self, k: int, sign: str) -> dict:
        """Map (l, sigma) -> component of the (k, sign) vector."""
        v = self.vectors[(k, sign)]
        return {lab: v[i] for i, lab in enumerate(b2_labels(self.params.n))}

    def matrix(self) -> np.ndarray:
        return np.column_stack([self.vectors[key] for key in self.keys()])


def _vector(N: int, comps: dict) -> np.ndarray:
    w = np.zeros(N + 1, dtype=complex)
    for i, lab in enumerate(b2_labels(N)):
        w[i] = comps.get(lab, 0.0)
    return w


def _pair(N, k, coeffs, c1, c2):
    """Components (c1 a_{k-l} +/- c2 b_{k-l})/2 on |l,->, |l,+>."""
    comps = {}
    for ell in range(k + 1):
        a, b = coeffs.a_seq[k - ell], coeffs.b_seq[k - ell]
        comps[(ell, "-")] = (c1 * a + c2 * b) / 2
        comps[(ell, "+")] = (c1 * a - c2 * b) / 2
    return _vector(N, comps)


def q_eigenvalue(k: int, sign: str, params: OscParams) -> float:
    z = params.zeta
    if params.n % 2 == 0:
        if k == 0:
            return -z - 0.5
        return 2 * k + z - 0.5 if sign == "+" else -(2 * k + z + 0.5)
    return 2 * k + z + 1.5 if sign == "+" else -(2 * k + z + 0.5)


def assemble_q_eigvecs(params: OscParams) -> EigvecTable:
    """Q-eigenvectors for every sector; key (k, '+') carries nu_k^+, (k, '-') nu_k^-."""
    N = params.n
    table = EigvecTable(params, "Q")
    if N % 2 == 0:
        e0 = np.zeros(N + 1, dtype=complex)
        e0[0] = 1.0
        table.vectors[(0, "-")] = e0
        table.eigenvalues[(0, "-")] = q_eigenvalue(0, "-", params)
        for k in range(1, N // 2 + 1):
            co = solve_recurrence_even(k, params)
            sc = sector_constants(k, params)
            table.vectors[(k, "+")] = _pair(N, k, co, sc.alpha0, sc.beta0)
            table.vectors[(k, "-")] = _pair(N, k, co, sc.gamma0, sc.eps0)
    else:
        for k in range((N + 1) // 2):
            co = solve_recurrence_odd(k, params)
            sc = sector_constants(k, params)
            table.vectors[(k, "+")] = _pair(N, k, co, sc.gamma0, sc.eps0)
            table.vectors[(k, "-")] = _pair(N, k, co, sc.alpha0, sc.beta0)
    for key in table.vectors:
        table.eigenvalues[key] = q_eigenvalue(key[0], key[1], params)
    return table


@dataclass(frozen=True)
class LinkCoeffs:
    c: complex
    lambda_plus: float
    lambda_minus: float


def link_coeffs(k: int, params: OscParams) -> LinkCoeffs:
    """omega_k (even N) or upsilon_k (odd N) with the J2 eigenvalues of sector k."""
    z, x, mx, my = params.zeta, params.xi, params.mu_x, params.mu_y
    if params.n % 2 == 0:
        lam = math.sqrt(k * (k + z))
        c = (z - 2j * lam) / (2 * k + z)
    else:
        lam = math.sqrt((k + mx + 0.5) * (k + my + 0.5))
        c = (x + 2j * lam) / (2 * k + z + 1)
    return LinkCoeffs(c, lam, -lam)


def ry_b2(params: OscParams) -> np.ndarray:
    return word_matrix([(1.0, ["Ry"])], b2_states(params.n), params)


def q_to_j2(table: EigvecTable, params: OscParams) -> EigvecTable:
    """J2-eigenvectors from pairs of Q-eigenvectors.

    The two Q-eigenvectors of a sector are first brought to a common scale t
    with Ry(q+ + t q-) = -(q+ - t q-)/c; then
    |k,+> = (q+ + t q-)/sqrt2 and |k,-> = -(q+ - t q-)/(c sqrt2).
    """
    Ry = ry_b2(params)
    out = EigvecTable(params, "J2")
    for key in table.keys():
        k, sign = key
        if params.n % 2 == 0 and k == 0:
            out.vectors[key] = table.vectors[key].copy()
            out.eigenvalues[key] = 0.0
            continue
        if sign != "+":
            continue
        qp, qm = table.vectors[(k, "+")], table.vectors[(k, "-")]
        link = link_coeffs(k, params)
        c = link.c
        lhs = Ry @ qm - qm / c
        rhs = -qp / c - Ry @ qp
        t = np.vdot(lhs, rhs) / np.vdot(lhs, lhs)
        out.scales[k] = complex(t)
        out.vectors[(k, "+")] = (qp + t * qm) / math.sqrt(2)
        out.vectors[(k, "-")] = -(qp - t * qm) / (c * math.sqrt(2))
        out.eigenvalues[(k, "+")] = link.lambda_plus
        out.eigenvalues[(k, "-")] = link.lambda_minus
    return out


def j2_eigenbasis(params: OscParams) -> tuple[np.ndarray, np.ndarray]:
    """Columns are J2-eigenvectors in B2, ordered (0,+),(0,-),(1,+),... for odd N
    and (0,-),(1,+),(1,-),... for even N; returns (E, eigenvalues)."""
    t = q_to_j2(assemble_q_eigvecs(params), params)
    keys = t.keys()
    return t.matrix(), np.array([t.eigenvalues[key] for key in keys])
