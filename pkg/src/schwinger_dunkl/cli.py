"""Command-line frontend: build, spectrum, eigvecs, transition, verify.

Exit codes: 0 success, 1 failed verification or spectrum mismatch, 2 usage or
parameter error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__, interbasis, j2rep, qdiag, repmat, verify
from .numerics import EigenFailure, SingularParameterError, Tolerances, dense_eigen
from .params import OscParams
from .repmat import BasisOrdering

BASES = ("cartesian", "circular-b1", "circular-b2", "j2-eigen", "j2-closed-form")


# JSON with 17 significant digits for every float.
def _fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        return json.dumps(None) if math.isnan(x) else ("1e999" if x > 0 else "-1e999")
    return format(x, ".17g")


def _depth(obj) -> int:
    if isinstance(obj, dict):
        return 99
    if isinstance(obj, (list, tuple, np.ndarray)):
        return 1 + max((_depth(v) for v in obj), default=0)
    return 0


def dumps(obj, indent: int = 0, _level: int = 0) -> str:
    """JSON text where floats carry 17 significant digits; complex -> [re, im]."""
    pad = "\n" + " " * (indent * (_level + 1)) if indent else ""
    end = "\n" + " " * (indent * _level) if indent else ""
    sep = "," + pad if indent else ", "
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{_fmt(obj.real)}, {_fmt(obj.imag)}]"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist(), indent, _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{" + pad + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        # matrix rows (lists of [re, im] pairs) stay on one line
        if _depth(obj) <= 2 or not indent:
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        return "[" + pad + sep.join(dumps(v, indent, _level + 1) for v in obj) + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def matrix_to_json(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)


def matrices_document(params: OscParams, basis: str, mats: dict, tol: Tolerances) -> dict:
    return {
        "params": {"n": params.n, "mu_x": params.mu_x, "mu_y": params.mu_y},
        "basis": basis,
        "matrices": {name: matrix_to_json(m) for name, m in mats.items()},
        "meta": {"version": __version__, "tolerances": tol.as_dict()},
    }


def load_matrices(path: str) -> tuple[dict, dict]:
    """Read a document written by ``build``; returns (document, {name: ndarray})."""
    with open(path) as fh:
        doc = json.load(fh)
    return doc, {name: matrix_from_json(rows) for name, rows in doc["matrices"].items()}


def generator_set(params: OscParams, basis: str, gauge=None, tol: Tolerances | None = None):
    tol = tol or Tolerances.from_env()
    if basis == "cartesian":
        return repmat.build_cartesian(params)
    if basis in ("circular-b1", "circular-b2"):
        return repmat.build_circular(params, BasisOrdering(basis))
    if basis == "j2-eigen":
        return j2rep.build_j2_eigen(params)
    if basis == "j2-closed-form":
        return j2rep.build_j3_j2basis(params, gauge, tol)
    raise ValueError(f"unknown basis {basis!r}")


def _tolerances(args) -> Tolerances:
    over = {}
    for name in ("residual_tol", "eig_match_tol", "degeneracy_tol"):
        v = getattr(args, name, None)
        if v is not None:
            over[name] = v
    return Tolerances.from_env(**over)


def _params(args) -> OscParams:
    return OscParams(args.n, args.mux, args.muy)


def _emit(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def cmd_build(args, tol) -> int:
    p = _params(args)
    gs = generator_set(p, args.basis, args.gauge, tol)
    mats = gs.matrices()
    if args.basis == "circular-b2":
        mats["Q"] = repmat.q_operator(gs.J2, gs.Rx, gs.Ry, p)
    _emit(dumps(matrices_document(p, args.basis, mats, tol), indent=1), args.out)
    return 0


def cmd_spectrum(args, tol) -> int:
    p = _params(args)
    if args.op == "Q":
        gs = repmat.build_circular(p, BasisOrdering.CIRCULAR_B2)
        M = repmat.q_operator(gs.J2, gs.Rx, gs.Ry, p)
    else:
        M = getattr(generator_set(p, args.basis, args.gauge, tol), args.op)
    closed = repmat.spectrum_closed_form(p, args.op)
    vals, _ = dense_eigen(M, tol)
    order = np.lexsort((vals.imag, vals.real))
    vals = vals[order]
    dev = np.abs(vals - closed)
    ok = bool(np.all(dev <= tol.eig_match_tol))
    if args.format == "csv":
        rows = [(i, float(c), float(v.real), float(v.imag), float(d)) for i, (c, v, d) in enumerate(zip(closed, vals, dev))]
        text = _csv(["index", "closed_form", "numeric_re", "numeric_im", "deviation"], rows)
    elif args.format == "json":
        text = dumps({
            "params": {"n": p.n, "mu_x": p.mu_x, "mu_y": p.mu_y}, "operator": args.op, "basis": args.basis,
            "closed_form": closed, "numeric": [complex(v) for v in vals], "max_deviation": float(dev.max()),
            "match": ok, "meta": {"version": __version__, "tolerances": tol.as_dict()},
        }, indent=1)
    else:
        lines = [f"{args.op} spectrum, N={p.n}, mu_x={p.mu_x}, mu_y={p.mu_y}, basis={args.basis}",
                 f"{'closed form':>22} {'numeric':>22} {'deviation':>11}"]
        for c, v, d in zip(closed, vals, dev):
            flag = "" if d <= tol.eig_match_tol else "  MISMATCH"
            lines.append(f"{c:22.15f} {v.real:22.15f} {d:11.2e}{flag}")
        lines.append("all match" if ok else "spectrum mismatch")
        text = "\n".join(lines)
    _emit(text, args.out)
    if not ok:
        print(f"spectrum mismatch: max deviation {dev.max():.3e}", file=sys.stderr)
    return 0 if ok else 1


def cmd_eigvecs(args, tol) -> int:
    p = _params(args)
    table = qdiag.assemble_q_eigvecs(p)
    if args.op == "J2":
        table = qdiag.q_to_j2(table, p)
    labels = repmat.b2_labels(p.n)
    rows = []
    for k, sign in table.keys():
        lam = table.eigenvalues[(k, sign)]
        for (ell, sigma), c in zip(labels, table.vectors[(k, sign)]):
            rows.append((k, sign, float(lam), ell, sigma, float(c.real), float(c.imag)))
    if args.format == "json":
        text = dumps({
            "params": {"n": p.n, "mu_x": p.mu_x, "mu_y": p.mu_y}, "operator": args.op, "basis": "circular-b2",
            "vectors": [{"k": r[0], "sign": r[1], "eigenvalue": r[2], "l": r[3], "sigma": r[4], "value": [r[5], r[6]]}
                        for r in rows],
            "meta": {"version": __version__, "tolerances": tol.as_dict()},
        }, indent=1)
    else:
        text = _csv(["k", "sign", "eigenvalue", "l", "sigma", "re", "im"], rows)
    _emit(text, args.out)
    return 0


def cmd_transition(args, tol) -> int:
    p = _params(args)
    tm = interbasis.build_transition(p)
    if args.format == "json":
        text = dumps({
            "params": {"n": p.n, "mu_x": p.mu_x, "mu_y": p.mu_y}, "basis": "circular-b1",
            "matrices": {"T": matrix_to_json(tm.T)}, "column_convention": tm.column_convention,
            "condition_number": tm.condition_number,
            "meta": {"version": __version__, "tolerances": tol.as_dict()},
        }, indent=1)
    else:
        N = p.n
        rows = [(n, j, interbasis.transition_coeff(n, j, N), float(tm.T[n, j])) for n in range(N + 1) for j in range(N + 1)]
        text = _csv(["n", "j", "P_n(j)", "T[n,j]"], rows)
    _emit(text, args.out)
    return 0


def parse_grid(text: str) -> list[tuple[float, float]]:
    if text == "default":
        return list(verify.DEFAULT_GRID)
    pts = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, b = chunk.split(",")
        pts.append((float(a), float(b)))
    if not pts:
        raise ValueError("empty grid")
    return pts


def cmd_verify(args, tol) -> int:
    grid = verify.validate_grid(parse_grid(args.grid))
    report = verify.run_suite(args.n_max, grid, tol, seed=args.seed, n_random=args.n_random)
    doc = report.to_dict()
    doc["meta"] = {"version": __version__, "n_max": args.n_max}
    if args.report:
        _emit(dumps(doc, indent=1), args.report)
    fails = report.failures()
    summary = f"{len(report.records)} checks, {len(fails)} failed, worst residual {report.worst('relations'):.2e} (relations)"
    print(summary, file=sys.stderr)
    for r in fails[:20]:
        print(f"FAIL {r.check} {r.params} residual={r.max_residual:.3e} {r.notes}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schwinger-dunkl", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, basis=True):
        sp.add_argument("--n", type=int, required=True, help="energy level N")
        sp.add_argument("--mux", type=float, required=True)
        sp.add_argument("--muy", type=float, required=True)
        if basis:
            sp.add_argument("--basis", choices=BASES, default="circular-b2")
            sp.add_argument("--gauge", type=float, nargs="+", default=None,
                            help="nonzero gauge values g_1..g_m for j2-closed-form")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        tolerances(sp)

    def tolerances(sp):
        sp.add_argument("--residual-tol", dest="residual_tol", type=float)
        sp.add_argument("--eig-match-tol", dest="eig_match_tol", type=float)
        sp.add_argument("--degeneracy-tol", dest="degeneracy_tol", type=float)

    sp = sub.add_parser("build", help="write all generator matrices as JSON")
    common(sp)
    sp = sub.add_parser("spectrum", help="closed-form against numerical spectrum")
    common(sp)
    sp.add_argument("--op", choices=("J2", "J3", "Q", "H"), required=True)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp = sub.add_parser("eigvecs", help="Q or J2 eigenvector components in B2")
    common(sp, basis=False)
    sp.add_argument("--op", choices=("Q", "J2"), default="J2")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp = sub.add_parser("transition", help="Cartesian-to-circular transition matrix")
    common(sp, basis=False)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp = sub.add_parser("verify", help="run the cross-check suite")
    sp.add_argument("--n-max", dest="n_max", type=int, default=10)
    sp.add_argument("--grid", default="default", help="'default' or 'mx,my;mx,my;...'")
    sp.add_argument("--report", default=None, help="JSON report path")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n-random", dest="n_random", type=int, default=2)
    tolerances(sp)
    return ap


COMMANDS = {
    "build": cmd_build,
    "spectrum": cmd_spectrum,
    "eigvecs": cmd_eigvecs,
    "transition": cmd_transition,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        tol = _tolerances(args)
        return COMMANDS[args.command](args, tol)
    except EigenFailure as exc:
        print(f"eigensolver failure: {exc}", file=sys.stderr)
        return 1
    except (ValueError, SingularParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
