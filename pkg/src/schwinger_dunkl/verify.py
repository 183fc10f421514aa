"""Cross-check suite over levels and a grid of (mu_x, mu_y) points."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import fock, interbasis, j2rep, qdiag, repmat
from .numerics import (
    DEFAULT_TOL,
    EigenFailure,
    SingularParameterError,
    Tolerances,
    anticommutator,
    commutator,
    dense_eigen,
    is_block_tridiagonal,
    is_block_upper_triangular,
    relative_residual,
)
from .params import OscParams
from .repmat import BasisOrdering, GeneratorSet

GRID_VALUES = (-0.4, 0.0, 0.3, 0.7, 1.5)
DEFAULT_GRID = tuple(itertools.product(GRID_VALUES, GRID_VALUES))
K_MAX_CLOSED_FORM = 6
FOCK_N_MAX = 8


@dataclass
class Record:
    check: str
    params: dict
    max_residual: float
    passed: bool
    notes: str = ""


@dataclass
class Report:
    records: list = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> list:
        return [r for r in self.records if not r.passed]

    def add(self, check, params, residual, passed, notes=""):
        p = {"n": params.n, "mu_x": params.mu_x, "mu_y": params.mu_y} if isinstance(params, OscParams) else dict(params)
        self.records.append(Record(check, p, float(residual), bool(passed), notes))

    def extend(self, other: "Report"):
        self.records.extend(other.records)

    def worst(self, prefix: str = "") -> float:
        vals = [r.max_residual for r in self.records if r.check.startswith(prefix)]
        return max(vals) if vals else 0.0

    def to_dict(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "n_records": len(self.records),
            "n_failed": len(self.failures()),
            "seed": self.seed,
            "tolerances": self.tolerances,
            "records": [asdict(r) for r in self.records],
        }


# Relations and spectra.
def relation_residuals(gs: GeneratorSet) -> dict[str, float]:
    """Residual of each defining relation of sd(2) and of the Casimir value.

    Each residual is divided by the size of the terms that produced it: for a
    product identity that is the product of the factor norms (floored at one),
    so rounding in large non-normal matrices is not mistaken for failure.
    """
    p = gs.params
    J1, J2, J3, Rx, Ry, H = gs.J1, gs.J2, gs.J3, gs.Rx, gs.Ry, gs.H
    mx, my = p.mu_x, p.mu_y
    I = np.eye(p.dim)
    nrm = {name: float(np.linalg.norm(m)) for name, m in gs.matrices().items()}

    def res(lhs, rhs, scale):
        return float(np.linalg.norm(lhs - rhs)) / max(1.0, scale)

    def comm(a, b, rhs, na, nb):
        return res(commutator(a, b), rhs, 2 * na * nb)

    def anti(a, b, na, nb):
        return res(anticommutator(a, b), 0, 2 * na * nb)

    R = (("Rx", Rx), ("Ry", Ry))
    gens = (("J1", J1), ("J2", J2), ("J3", J3), ("Rx", Rx), ("Ry", Ry))
    j12_rhs = 1j * (J3 + J3 @ (mx * Rx + my * Ry) - H @ (mx * Rx - my * Ry) / 2)
    j12_scale = max(2 * nrm["J1"] * nrm["J2"],
                    nrm["J3"] * (1 + abs(mx) * nrm["Rx"] + abs(my) * nrm["Ry"])
                    + nrm["H"] * (abs(mx) * nrm["Rx"] + abs(my) * nrm["Ry"]) / 2)
    cas_scale = (nrm["J1"] ** 2 + nrm["J2"] ** 2 + nrm["J3"] ** 2 + nrm["H"] ** 2 / 4
                 + (abs(mx) * nrm["Rx"] + abs(my) * nrm["Ry"]) / 2 + abs(mx * my) * nrm["Rx"] * nrm["Ry"])
    return {
        "[J2,J3]=iJ1": comm(J2, J3, 1j * J1, nrm["J2"], nrm["J3"]),
        "[J3,J1]=iJ2": comm(J3, J1, 1j * J2, nrm["J3"], nrm["J1"]),
        "[J1,J2]": res(commutator(J1, J2), j12_rhs, j12_scale),
        "{J1,R}=0": max(anti(J1, r, nrm["J1"], nrm[n]) for n, r in R),
        "{J2,R}=0": max(anti(J2, r, nrm["J2"], nrm[n]) for n, r in R),
        "[J3,R]=0": max(comm(J3, r, 0, nrm["J3"], nrm[n]) for n, r in R),
        "R^2=I": max(res(r @ r, I, nrm[n] ** 2) for n, r in R),
        "[Rx,Ry]=0": comm(Rx, Ry, 0, nrm["Rx"], nrm["Ry"]),
        "H central": max(comm(H, x, 0, nrm["H"], nrm[n]) for n, x in gens),
        "C=(H^2-I)/4": res(gs.Casimir, (H @ H - I) / 4, cas_scale),
        "C central": max(comm(gs.Casimir, x, 0, cas_scale, nrm[n]) for n, x in gens),
    }


def check_relations(gs: GeneratorSet, tol: Tolerances, label: str) -> Report:
    rep = Report()
    for name, r in relation_residuals(gs).items():
        rep.add(f"relations/{label}/{name}", gs.params, r, r <= tol.residual_tol)
    return rep


def check_spectrum_match(built, predicted: Sequence[float], tol: Tolerances = DEFAULT_TOL,
                         check: str = "spectrum", params=None) -> Record:
    """Sorted numerical eigenvalues of ``built`` against ``predicted``."""
    params = params or {}
    p = {"n": params.n, "mu_x": params.mu_x, "mu_y": params.mu_y} if isinstance(params, OscParams) else dict(params)
    predicted = np.sort(np.asarray(predicted, dtype=float))
    built = np.asarray(built)
    if built.shape != (len(predicted), len(predicted)):
        return Record(check, p, math.inf, False, "dimension mismatch")
    try:
        vals, _ = dense_eigen(built, tol)
    except EigenFailure as exc:
        return Record(check, p, math.inf, False, f"eigensolver: {exc}")
    imag = float(np.max(np.abs(vals.imag))) if len(vals) else 0.0
    if imag > tol.eig_match_tol:
        return Record(check, p, imag, False, "eigenvalues not real")
    dev = float(np.max(np.abs(np.sort(vals.real) - predicted))) if len(vals) else 0.0
    return Record(check, p, dev, dev <= tol.eig_match_tol)


# Fock-level identities.
def _op_matrix(ops_terms, basis_from, basis_to, params):
    idx = {s: i for i, s in enumerate(basis_to)}
    M = np.zeros((len(basis_to), len(basis_from)), dtype=complex)
    for j, s in enumerate(basis_from):
        total = fock.StateSum()
        for w, ops in ops_terms:
            total = total + fock.apply_word(ops, s, params).scale(w)
        for c, st in total:
            M[idx[st], j] += c
    return M


def fock_identities(params: OscParams) -> dict[str, float]:
    """Ladder-operator identities on level N (absolute max coefficient error)."""
    N = params.n
    cart = repmat.cartesian_states(N)
    circ = repmat.b1_states(N)
    out = {}

    def diff(terms_a, terms_b, basis):
        worst = 0.0
        for s in basis:
            a = fock.StateSum()
            for w, ops in terms_a:
                a = a + fock.apply_word(ops, s, params).scale(w)
            b = fock.StateSum()
            for w, ops in terms_b:
                b = b + fock.apply_word(ops, s, params).scale(w)
            d = (a - b).as_dict()
            worst = max([worst] + [abs(v) for v in d.values()])
        return worst

    mu = {"x": params.mu_x, "y": params.mu_y}
    for c in ("x", "y"):
        out[f"[A-{c},A+{c}]=I+2mu R{c}"] = diff(
            [(1, [f"A-{c}", f"A+{c}"]), (-1, [f"A+{c}", f"A-{c}"])], [(1, []), (2 * mu[c], [f"R{c}"])], cart
        )
        out[f"{{A+-{c},R{c}}}=0"] = max(
            diff([(1, [f"A{s}{c}", f"R{c}"]), (1, [f"R{c}", f"A{s}{c}"])], [], cart) for s in "+-"
        )
    mixed = 0.0
    for s1, s2 in itertools.product("+-", repeat=2):
        mixed = max(mixed, diff([(1, [f"A{s1}x", f"A{s2}y"])], [(1, [f"A{s2}y", f"A{s1}x"])], cart))
    for s1, (c, r) in itertools.product("+-", (("x", "Ry"), ("y", "Rx"))):
        mixed = max(mixed, diff([(1, [f"A{s1}{c}", r])], [(1, [r, f"A{s1}{c}"])], cart))
    mixed = max(mixed, diff([(1, ["Rx", "Ry"])], [(1, ["Ry", "Rx"])], cart))
    out["cross commutators"] = mixed
    refl = 0.0
    for s in "+-":
        refl = max(refl,
                   diff([(1, ["Rx", f"A{s}L"])], [(-1, [f"A{s}R", "Rx"])], circ),
                   diff([(1, ["Rx", f"A{s}R"])], [(-1, [f"A{s}L", "Rx"])], circ),
                   diff([(1, ["Ry", f"A{s}L"])], [(1, [f"A{s}R", "Ry"])], circ),
                   diff([(1, ["Ry", f"A{s}R"])], [(1, [f"A{s}L", "Ry"])], circ))
    out["circular reflections"] = refl
    return out


def circular_conjugation_residual(params: OscParams) -> float:
    """Max error between the circular lowering actions and the Cartesian actions
    conjugated by the change of basis to circular states."""
    N = params.n
    if N == 0:
        return 0.0
    r = 2 ** -0.5

    def change(level):
        M = np.zeros((level + 1, level + 1), dtype=complex)
        for j, s in enumerate(repmat.b1_states(level)):
            for c, st in fock.circular_to_cartesian(s):
                M[st.n_x, j] += c
        return M

    upper, lower = change(N), change(N - 1)
    ax = _op_matrix([(1, ["A-x"])], repmat.cartesian_states(N), repmat.cartesian_states(N - 1), params)
    ay = _op_matrix([(1, ["A-y"])], repmat.cartesian_states(N), repmat.cartesian_states(N - 1), params)
    worst = 0.0
    for op, sign in (("A-L", 1j), ("A-R", -1j)):
        via_cart = np.linalg.solve(lower, (r * ax + sign * r * ay) @ upper)
        direct = _op_matrix([(1, [op])], repmat.b1_states(N), repmat.b1_states(N - 1), params)
        worst = max(worst, float(np.max(np.abs(via_cart - direct))))
    for op in ("Rx", "Ry"):
        R = _op_matrix([(1, [op])], repmat.cartesian_states(N), repmat.cartesian_states(N), params)
        via_cart = np.linalg.solve(upper, R @ upper)
        direct = _op_matrix([(1, [op])], repmat.b1_states(N), repmat.b1_states(N), params)
        worst = max(worst, float(np.max(np.abs(via_cart - direct))))
    return worst


# Per-point check groups.
def _rec(rep, name, params, residual, tol_value, notes=""):
    rep.add(name, params, residual, residual <= tol_value, notes)


def check_fock(params: OscParams, tol: Tolerances) -> Report:
    rep = Report()
    for name, r in fock_identities(params).items():
        _rec(rep, f"fock/{name}", params, r, tol.residual_tol)
    if params.n <= FOCK_N_MAX:
        _rec(rep, "fock/circular conjugation", params, circular_conjugation_residual(params), tol.residual_tol)
    return rep


def check_bases(params: OscParams, tol: Tolerances) -> tuple[Report, dict]:
    rep = Report()
    sets = {
        "cartesian": repmat.build_cartesian(params),
        "circular-b1": repmat.build_circular(params, BasisOrdering.CIRCULAR_B1),
        "circular-b2": repmat.build_circular(params, BasisOrdering.CIRCULAR_B2),
        "j2-eigen": j2rep.build_j2_eigen(params),
    }
    for label, gs in sets.items():
        rep.extend(check_relations(gs, tol, label))
        rep.records.append(check_spectrum_match(gs.J2, repmat.spectrum_closed_form(params, "J2"), tol,
                                                f"spectrum/{label}/J2", params))
        rep.records.append(check_spectrum_match(gs.J3, repmat.spectrum_closed_form(params, "J3"), tol,
                                                f"spectrum/{label}/J3", params))
        rep.records.append(check_spectrum_match(gs.H, repmat.spectrum_closed_form(params, "H"), tol,
                                                f"spectrum/{label}/H", params))
        _rec(rep, f"repmat/{label}/J1=-i[J2,J3]", params,
             relative_residual(gs.J1, -1j * commutator(gs.J2, gs.J3)), tol.residual_tol)
        H_fock = None if label == "j2-eigen" else repmat.hamiltonian_from_fock(params, label)
        if H_fock is not None:
            _rec(rep, f"repmat/{label}/H from ladder words", params, relative_residual(H_fock, gs.H), tol.residual_tol)

    cart_fock = repmat.build_from_fock(params, BasisOrdering.CARTESIAN)
    _rec(rep, "repmat/cartesian actions = ladder words", params,
         max(relative_residual(getattr(cart_fock, n), getattr(sets["cartesian"], n)) for n in ("J1", "J2", "J3", "Rx", "Ry")),
         tol.residual_tol)
    b2 = sets["circular-b2"]
    Q = repmat.q_operator(b2.J2, b2.Rx, b2.Ry, params)
    rep.records.append(check_spectrum_match(Q, repmat.spectrum_closed_form(params, "Q"), tol, "spectrum/circular-b2/Q", params))
    _rec(rep, "repmat/J2 in B2 = closed-form blocks", params, relative_residual(b2.J2, repmat.block_j2_b2(params)), tol.residual_tol)
    _rec(rep, "repmat/Q in B2 = closed-form blocks", params, relative_residual(Q, repmat.block_q_b2(params)), tol.residual_tol)
    blocks = repmat.b2_block_sizes(params.n)
    rep.add("structure/J2 B2 block upper-triangular", params, 0.0, is_block_upper_triangular(b2.J2, blocks))
    rep.add("structure/Q B2 block upper-triangular", params, 0.0, is_block_upper_triangular(Q, blocks))
    j3b1 = sets["circular-b1"].J3
    expected_b1 = np.diag([params.xi / 2] * params.dim).astype(complex)
    for n in range(params.n):
        expected_b1[n + 1, n] = (params.n - n) / 2
        expected_b1[n, n + 1] = (n + 1) / 2
    _rec(rep, "repmat/J3 in B1 tridiagonal form", params, relative_residual(j3b1, expected_b1), tol.residual_tol)
    return rep, sets


def check_u2(params: OscParams, sets: dict, tol: Tolerances) -> Report:
    """At mu = 0: diagonal J2 in B2, su(2) lattice spectra, standard su(2) matrices."""
    rep = Report()
    N = params.n
    b2j2 = sets["circular-b2"].J2
    off = float(np.max(np.abs(b2j2 - np.diag(np.diag(b2j2))))) if N else 0.0
    _rec(rep, "u2/J2 B2 diagonal", params, off, 1e-12)
    lattice = np.arange(N + 1) - N / 2
    for name in ("J2", "J3"):
        vals = repmat.spectrum_closed_form(params, name)
        _rec(rep, f"u2/{name} spectrum on su(2) lattice", params, float(np.max(np.abs(vals - lattice))), 1e-12)
    su2 = repmat.su2_matrices(N)
    std = repmat.su2_standard(N)
    D = repmat.su2_scaling(N)
    cart = sets["cartesian"]
    dev = max(float(np.max(np.abs(getattr(cart, n) - su2[n]))) for n in ("J1", "J2", "J3"))
    dev_std = max(float(np.max(np.abs(D @ getattr(cart, n) @ np.linalg.inv(D) - std[n]))) for n in ("J1", "J2", "J3"))
    _rec(rep, "u2/cartesian = su(2) matrices", params, max(dev, dev_std), 1e-12)
    return rep


def check_interbasis(params: OscParams, tol: Tolerances, b1_j3=None) -> Report:
    rep = Report()
    tm = interbasis.build_transition(params)
    j3 = b1_j3 if b1_j3 is not None else repmat.build_circular(params, BasisOrdering.CIRCULAR_B1).J3
    lhs = j3 @ tm.T
    rhs = tm.T @ np.diag(interbasis.transition_eigenvalues(params))
    _rec(rep, "interbasis/eigen-relation", params, relative_residual(lhs, rhs), tol.residual_tol)
    cond = tm.condition_number
    rep.add("interbasis/invertible", params, cond, bool(np.isfinite(cond) and cond < 1e12), f"cond={cond:.3e}")
    ref = interbasis.build_transition(OscParams(params.n, 0.0, 0.0)).T
    rep.add("interbasis/mu-independent", params, float(np.max(np.abs(tm.T - ref))), bool(np.array_equal(tm.T, ref)))
    return rep


def check_eigvecs(params: OscParams, tol: Tolerances, b2: GeneratorSet | None = None) -> Report:
    rep = Report()
    b2 = b2 or repmat.build_circular(params, BasisOrdering.CIRCULAR_B2)
    Q = repmat.q_operator(b2.J2, b2.Rx, b2.Ry, params)
    table = qdiag.assemble_q_eigvecs(params)
    nq = np.linalg.norm(Q)
    worst = max(np.linalg.norm(Q @ v - table.eigenvalues[k] * v) / nq for k, v in table.vectors.items())
    _rec(rep, "eigvecs/Q residual", params, worst, tol.residual_tol)
    j2t = qdiag.q_to_j2(table, params)
    nj = max(1.0, float(np.linalg.norm(b2.J2)))
    worst = max(np.linalg.norm(b2.J2 @ v - j2t.eigenvalues[k] * v) / nj for k, v in j2t.vectors.items())
    _rec(rep, "eigvecs/J2 residual", params, worst, tol.residual_tol)
    for k in range(params.m + 1):
        if params.n % 2 == 0 and k == 0:
            continue
        c = qdiag.link_coeffs(k, params).c
        _rec(rep, "eigvecs/unimodular link coefficient", params, abs(abs(c) - 1), 1e-12, f"k={k}")
    return rep


def check_closed_forms(mu_x: float, mu_y: float, tol: Tolerances, k_max: int = K_MAX_CLOSED_FORM) -> Report:
    """Closed forms, Heun route and isotropic forms against the recurrence solvers."""
    rep = Report()
    pe, po = OscParams(0, mu_x, mu_y), OscParams(1, mu_x, mu_y)
    p = {"mu_x": mu_x, "mu_y": mu_y}

    def rel(x, y):
        return float(np.max(np.abs(np.asarray(x) - np.asarray(y)) / np.maximum(1.0, np.abs(np.asarray(y)))))

    for k in range(k_max + 1):
        pk = dict(p, k=k)
        ev = qdiag.solve_recurrence_even(k, pe)
        cf = [qdiag.closed_form_even(k, pe, n) for n in range(k + 1)]
        rep.add("closed-form/even CBI", pk, rel(cf, ev.a_seq), rel(cf, ev.a_seq) <= tol.residual_tol)
        od = qdiag.solve_recurrence_odd(k, po)
        cfo = np.array([qdiag.closed_form_odd(k, po, n) for n in range(k + 1)])
        r = max(rel(cfo[:, 0], od.a_seq), rel(cfo[:, 1], od.b_seq))
        rep.add("closed-form/odd CBI", pk, r, r <= tol.residual_tol)
        mirror = max(abs(qdiag.para_krawtchouk_odd(k, po, n) - qdiag.para_krawtchouk_odd(k, po, 2 * k + 1 - n))
                     for n in range(2 * k + 2))
        rep.add("closed-form/odd mirror", pk, mirror, mirror <= tol.residual_tol)
        if k >= 1:
            try:
                heun = qdiag.heun_coeffs_even(k, pe)
                ext = qdiag.solve_recurrence_even(k, pe, n_max=2 * k)
                r = max(rel(heun, ext.a_seq), rel(ext.a_seq, ext.a_seq[::-1]))
                rep.add("heun/even", pk, r, r <= tol.residual_tol)
            except SingularParameterError as exc:
                rep.add("heun/even", pk, 0.0, True, f"not applicable: {exc}")
        try:
            ha, hb = qdiag.heun_coeffs_odd(k, po)
            r = max(rel(ha, od.a_seq), rel(hb, od.b_seq))
            rep.add("heun/odd", pk, r, r <= tol.residual_tol)
        except SingularParameterError as exc:
            rep.add("heun/odd", pk, 0.0, True, f"not applicable: {exc}")
        if mu_x == mu_y:
            iso_e = qdiag.isotropic_coeffs(k, mu_x, "even")
            iso_o = qdiag.isotropic_coeffs(k, mu_x, "odd")
            r = max(rel(iso_e.a_seq, ev.a_seq), rel(iso_e.b_seq, ev.b_seq),
                    rel(iso_o.a_seq, od.a_seq), rel(iso_o.b_seq, od.b_seq))
            rep.add("isotropic/closed forms", pk, r, r <= 1e-10)
    return rep


def check_j2_closed_form(params: OscParams, tol: Tolerances, seed: int = 0) -> Report:
    """Closed-form J3 in the J2 eigenbasis: relations, shape, spectrum, gauge covariance."""
    rep = Report()
    if abs(params.xi) <= tol.degeneracy_tol:
        rep.add("j2basis/applicability", params, 0.0, True, "skipped: mu_x = mu_y")
        return rep
    try:
        unit = j2rep.build_j3_j2basis(params, tol=tol)
    except SingularParameterError as exc:
        rep.add("j2basis/applicability", params, 0.0, True, f"skipped: {exc}")
        return rep
    rep.extend(check_relations(unit, tol, "j2-closed-form"))
    rep.add("structure/J3 J2-basis block tridiagonal", params, 0.0,
            is_block_tridiagonal(unit.J3, j2rep.block_sizes(params)))
    s = j2rep.j3_spectrum_check(unit, tol)
    rep.add("j2basis/J3 spectrum = cartesian lattice", params, s["max_deviation"], s["passed"], s["note"])
    m = params.m
    if m:
        rng = np.random.default_rng(seed)
        for trial in range(3):
            g = rng.uniform(0.5, 2.0, m) * rng.choice([-1.0, 1.0], m)
            gauged = j2rep.build_j3_j2basis(params, g, tol=tol)
            G = j2rep.gauge_matrix(params, g)
            cov = relative_residual(np.linalg.solve(G, unit.J3 @ G), gauged.J3)
            rel = max(relation_residuals(gauged).values())
            rep.add("j2basis/gauge covariance", params, cov, cov <= tol.residual_tol, f"trial {trial}")
            rep.add("j2basis/gauged relations", params, rel, rel <= tol.residual_tol, f"trial {trial}")
    return rep


def negative_controls(gs: GeneratorSet, tol: Tolerances, eps: float = 1e-3) -> Report:
    """Perturb one entry of each generator; some relation check must fail."""
    rep = Report()
    for name in ("J1", "J2", "J3", "Rx", "Ry", "H"):
        M = getattr(gs, name).copy()
        i, j = (0, 0) if gs.params.dim == 1 else (0, 1)
        M[i, j] += eps
        mats = {name: M}
        if name in ("J1", "J2", "J3", "Rx", "Ry"):
            p = gs.params
            args = {n: mats.get(n, getattr(gs, n)) for n in ("J1", "J2", "J3", "Rx", "Ry")}
            mats["Casimir"] = repmat.casimir(args["J1"], args["J2"], args["J3"], args["Rx"], args["Ry"], p)
        worst = max(relation_residuals(gs.replace(**mats)).values())
        detected = worst > tol.residual_tol
        rep.add(f"negative-control/{gs.ordering.value}/{name}", gs.params, worst, detected,
                "perturbation detected" if detected else "perturbation NOT detected")
    return rep


def validate_grid(mu_grid: Iterable[tuple[float, float]]) -> list[tuple[float, float]]:
    pts = [(float(a), float(b)) for a, b in mu_grid]
    for a, b in pts:
        if not (a > -0.5 and b > -0.5):
            raise ValueError(f"grid point ({a}, {b}) outside (-1/2, inf)^2")
    return pts


def run_suite(n_max: int, mu_grid: Iterable[tuple[float, float]] = DEFAULT_GRID,
              tol: Tolerances = DEFAULT_TOL, seed: int = 0, n_random: int = 2) -> Report:
    """Run every check for N = 0..n_max over the grid plus ``n_random`` seeded points."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    pts = validate_grid(mu_grid)
    rng = np.random.default_rng(seed)
    pts += [tuple(float(v) for v in np.round(rng.uniform(-0.45, 2.0, 2), 6)) for _ in range(n_random)]
    report = Report(tolerances=tol.as_dict(), seed=seed)
    for mx, my in pts:
        report.extend(_guard(check_closed_forms, "closed-form", (mx, my), mx, my, tol))
        for N in range(n_max + 1):
            p = OscParams(N, mx, my)
            report.extend(_point(p, tol, seed))
    return report


def _guard(fn, name, where, *args):
    try:
        return fn(*args)
    except Exception as exc:  # failures are data
        rep = Report()
        rep.add(f"{name}/exception", {"point": list(where)}, math.inf, False, f"{type(exc).__name__}: {exc}")
        return rep


def _point(p: OscParams, tol: Tolerances, seed: int) -> Report:
    rep = Report()
    where = (p.n, p.mu_x, p.mu_y)
    rep.extend(_guard(check_fock, "fock", where, p, tol))
    try:
        bases, sets = check_bases(p, tol)
    except Exception as exc:
        rep.add("bases/exception", p, math.inf, False, f"{type(exc).__name__}: {exc}")
        return rep
    rep.extend(bases)
    if p.mu_x == 0 and p.mu_y == 0:
        rep.extend(_guard(check_u2, "u2", where, p, sets, tol))
    rep.extend(_guard(check_interbasis, "interbasis", where, p, tol, sets["circular-b1"].J3))
    rep.extend(_guard(check_eigvecs, "eigvecs", where, p, tol, sets["circular-b2"]))
    rep.extend(_guard(check_j2_closed_form, "j2basis", where, p, tol, seed))
    if p.n >= 1:
        for gs in sets.values():
            rep.extend(_guard(negative_controls, "negative-control", where, gs, tol))
    return rep
