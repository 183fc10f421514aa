"""Actions of the parabosonic ladder operators and reflections on Fock states.

States are labelled by index pairs; coefficients are complex doubles.
Cartesian operators act on ``CartesianState``, circular ones on
``CircularState``; ``Rx`` and ``Ry`` act on both.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Union

from .params import OscParams
from .specfun import mu_number

CARTESIAN_OPS = ("A+x", "A-x", "A+y", "A-y")
CIRCULAR_OPS = ("A+L", "A-L", "A+R", "A-R")
REFLECTIONS = ("Rx", "Ry")
OPERATORS = CARTESIAN_OPS + CIRCULAR_OPS + REFLECTIONS


class CartesianState(NamedTuple):
    n_x: int
    n_y: int


class CircularState(NamedTuple):
    n_L: int
    n_R: int


State = Union[CartesianState, CircularState]


class StateSum:
    """Finite linear combination of states of a single kind, kept canonical."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[complex, State]] = ()):
        acc: dict = {}
        for coef, state in terms:
            acc[state] = acc.get(state, 0) + complex(coef)
        self._terms = tuple(sorted(((s, c) for s, c in acc.items() if c != 0), key=lambda t: tuple(t[0])))

    @classmethod
    def of(cls, state: State, coef: complex = 1.0) -> "StateSum":
        return cls([(coef, state)])

    @property
    def terms(self) -> tuple[tuple[complex, State], ...]:
        """(coefficient, state) pairs in lexicographic state order."""
        return tuple((c, s) for s, c in self._terms)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coeff(self, state: State) -> complex:
        return dict(self._terms).get(state, 0j)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "StateSum") -> "StateSum":
        return StateSum(self.terms + other.terms)

    def __sub__(self, other: "StateSum") -> "StateSum":
        return self + other.scale(-1)

    def scale(self, c: complex) -> "StateSum":
        return StateSum((c * coef, s) for coef, s in self.terms)

    def __eq__(self, other):
        return isinstance(other, StateSum) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def isclose(self, other: "StateSum", tol: float = 1e-12) -> bool:
        a, b = self.as_dict(), other.as_dict()
        return all(abs(a.get(k, 0) - b.get(k, 0)) <= tol for k in set(a) | set(b))

    def __repr__(self):
        body = " + ".join(f"({c:.6g})|{s[0]},{s[1]}>" for c, s in self.terms)
        return f"StateSum({body or '0'})"


def apply_cartesian(op: str, s: CartesianState, params: OscParams) -> StateSum:
    if not isinstance(s, CartesianState):
        raise TypeError("apply_cartesian needs a CartesianState")
    if op not in CARTESIAN_OPS + REFLECTIONS:
        raise ValueError(f"operator {op!r} does not act on Cartesian states")
    nx, ny = s
    if op == "A+x":
        return StateSum.of(CartesianState(nx + 1, ny))
    if op == "A+y":
        return StateSum.of(CartesianState(nx, ny + 1))
    if op == "A-x":
        return StateSum.of(CartesianState(nx - 1, ny), mu_number(nx, params.mu_x)) if nx else StateSum()
    if op == "A-y":
        return StateSum.of(CartesianState(nx, ny - 1), mu_number(ny, params.mu_y)) if ny else StateSum()
    if op == "Rx":
        return StateSum.of(s, (-1) ** nx)
    return StateSum.of(s, (-1) ** ny)


def _lower_circular(side: str, nL: int, nR: int, mx: float, my: float) -> StateSum:
    # sign of the mu_y term: + for A-L, - for A-R
    sy = 1 if side == "L" else -1
    terms = []
    n = nL if side == "L" else nR
    if n:
        terms.append((n, CircularState(nL - 1, nR) if side == "L" else CircularState(nL, nR - 1)))
    if nL != nR:
        lo, hi = sorted((nL, nR))
        outer = 1 if nL > nR else -1
        for j in range(lo, hi):
            c = outer * ((-1) ** (nR + j) * mx + sy * my)
            terms.append((c, CircularState(nL + nR - j - 1, j)))
    return StateSum(terms)


def apply_circular(op: str, s: CircularState, params: OscParams) -> StateSum:
    if not isinstance(s, CircularState):
        raise TypeError("apply_circular needs a CircularState")
    if op not in CIRCULAR_OPS + REFLECTIONS:
        raise ValueError(f"operator {op!r} does not act on circular states")
    nL, nR = s
    if op == "A+L":
        return StateSum.of(CircularState(nL + 1, nR))
    if op == "A+R":
        return StateSum.of(CircularState(nL, nR + 1))
    if op == "Rx":
        return StateSum.of(CircularState(nR, nL), (-1) ** (nL + nR))
    if op == "Ry":
        return StateSum.of(CircularState(nR, nL))
    return _lower_circular(op[-1], nL, nR, params.mu_x, params.mu_y)


def apply_op(op: str, s: State, params: OscParams) -> StateSum:
    if isinstance(s, CircularState):
        return apply_circular(op, s, params)
    return apply_cartesian(op, s, params)


def apply_to_sum(op: str, v: StateSum, params: OscParams) -> StateSum:
    out = StateSum()
    for c, s in v:
        out = out + apply_op(op, s, params).scale(c)
    return out


def apply_word(ops: list[str], s: Union[State, StateSum], params: OscParams) -> StateSum:
    """Apply ``ops`` right to left: the last operator acts first."""
    v = s if isinstance(s, StateSum) else StateSum.of(s)
    kinds = {type(st) for _, st in v}
    if len(kinds) > 1:
        raise ValueError("mixed Cartesian and circular states")
    for op in reversed(ops):
        v = apply_to_sum(op, v, params)
    return v


def circular_to_cartesian(s: CircularState) -> StateSum:
    """Expand |n_L, n_R> = (A+L)^{n_L} (A+R)^{n_R} |0,0> in Cartesian states.

    A+L = (A+x - i A+y)/sqrt2 and A+R = (A+x + i A+y)/sqrt2.
    """
    r = 2 ** -0.5
    free = OscParams(0, 0.0, 0.0)  # raising operators do not depend on mu
    v = StateSum.of(CartesianState(0, 0))
    for sign, count in ((1j, s.n_R), (-1j, s.n_L)):
        for _ in range(count):
            v = apply_to_sum("A+x", v, free).scale(r) + apply_to_sum("A+y", v, free).scale(sign * r)
    return v
