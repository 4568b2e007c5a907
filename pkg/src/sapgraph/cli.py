"""Command-line interface: graph/matrix generation, kernel checks, embedding
exports, proof-replay constructions, kappa search, and the corpus verifier.

Exit codes: 0 success, 1 a requested check failed, 2 usage or input errors.
All reports embed the tool version, tolerance, and seed; a fixed config and
seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .errors import SapGraphError
from .gmatrix import (
    WellSignedMatrix,
    random_well_signed,
    shift_to_one_negative,
    validate_well_signed,
)
from .graphs import Graph, generate_named, is_flat, vertex_connectivity
from .geometry import (
    check_vdh_all,
    find_disjoint_planes,
    nullspace_embedding,
    spanned_complex,
    two_hyperplane_cover,
)
from .constructions import (
    compose_plane_matrices,
    find_plane_circuit,
    interpolation_trace,
    regular_polygon_circuit,
)
from .kappa import kappa_lower_bound, mu_report
from .sap import check_prop1, sap_kernel
from .spectra import SymMatrix, eigen_sym

DEFAULT_CORPUS = {
    "delta": 0.0,
    "samples": 20,
    "members": [
        {"name": "K_5", "family": "complete", "params": [5]},
        {"name": "octahedron", "family": "complete_tripartite", "params": [2, 2, 2]},
        {"name": "icosahedron", "family": "icosahedron", "params": []},
        {"name": "tri_6", "family": "random_4connected_planar_triangulation", "params": [6, 1]},
        {"name": "tri_7", "family": "random_4connected_planar_triangulation", "params": [7, 2]},
        {"name": "tri_8", "family": "random_4connected_planar_triangulation", "params": [8, 3]},
        {"name": "tri_9", "family": "random_4connected_planar_triangulation", "params": [9, 4]},
        {"name": "tri_10", "family": "random_4connected_planar_triangulation", "params": [10, 5]},
    ],
}


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _load_graph(path: str) -> Graph:
    return Graph.from_json_dict(_load_json(path))


def _load_matrix(path: str) -> SymMatrix:
    d = _load_json(path)
    if "matrix" in d:
        return SymMatrix.from_json_dict(d["matrix"])
    return SymMatrix.from_json_dict(d)


def _emit(obj, out: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=1) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_text(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _stamp(report: dict, args) -> dict:
    report["version"] = __version__
    report["tol"] = args.tol
    report["seed"] = args.seed
    return report


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_graph(args) -> int:
    if args.action == "gen":
        g = generate_named(args.family, *[int(p) for p in args.params])
        _emit(g.to_json_dict(), args.out)
        return 0
    g = _load_graph(args.path)
    if args.action == "info":
        _emit(_stamp({
            "n": g.n,
            "edges": len(g.edges),
            "degrees": sorted(g.degree(v) for v in range(g.n)),
        }, args), args.out)
        return 0
    if args.action == "connectivity":
        _emit(_stamp({"connectivity": vertex_connectivity(g)}, args), args.out)
        return 0
    if args.action == "flatness":
        flat = is_flat(g, budget=args.budget)
        _emit(_stamp({"flat": flat}, args), args.out)
        return 0
    raise SapGraphError(f"unknown graph action {args.action}")


def _cmd_matrix(args) -> int:
    if args.action == "gen":
        g = _load_graph(args.graph)
        m = random_well_signed(g, args.seed, edge_range=tuple(args.edge_range),
                               diag_range=tuple(args.diag_range))
        if args.shift:
            m = shift_to_one_negative(m, args.delta, args.tol)
        _emit(m.to_json_dict(args.tol), args.out)
        return 0
    g = _load_graph(args.graph)
    m = _load_matrix(args.path)
    if args.action == "validate":
        problems = validate_well_signed(g, m)
        _emit(_stamp({"well_signed": not problems, "violations": problems}, args), args.out)
        return 0 if not problems else 1
    if args.action == "spectrum":
        s = eigen_sym(m, args.tol)
        _emit(_stamp({
            "eigenvalues": [float(v) for v in s.eigenvalues],
            "lambda_minus": s.neg_count,
            "corank": s.zero_count,
        }, args), args.out)
        return 0
    raise SapGraphError(f"unknown matrix action {args.action}")


def _cmd_sap(args) -> int:
    g = _load_graph(args.graph)
    m = _load_matrix(args.path)
    if args.action == "check":
        rep = sap_kernel(g, m, args.tol)
        _emit(_stamp({"kernel_dim": rep.kernel_dim, "sap": rep.kernel_dim == 0},
                     args), args.out)
        return 0
    if args.action == "prop1":
        rep = check_prop1(g, m, args.tol)
        _emit(_stamp({
            "corank": rep.corank,
            "sap_dim": rep.sap_dim,
            "quadric_dim": rep.quadric_dim,
            "dims_equal": rep.dims_equal,
            "max_mapped_residual": rep.max_mapped_residual,
            "consistent": rep.consistent,
        }, args), args.out)
        return 0 if rep.consistent else 1
    raise SapGraphError(f"unknown sap action {args.action}")


def _cmd_embed(args) -> int:
    g = _load_graph(args.graph)
    m = _load_matrix(args.path)
    u = nullspace_embedding(m, args.tol)
    if args.action in ("compute", "export"):
        _emit_text(u.to_csv(), args.out)
        return 0
    if args.action == "vdh":
        rep = check_vdh_all(g, m, args.tol)
        _emit(_stamp({
            "corank": u.d,
            "hyperplanes": rep.hyperplane_count,
            "all_pass": rep.all_pass,
            "failed": list(rep.failed_indices),
        }, args), args.out)
        return 0 if rep.all_pass else 1
    if args.action == "planes":
        cx = spanned_complex(g, u, args.tol)
        out = {
            "d": cx.d,
            "lines": [{"vertices": list(ln.vertices)} for ln in cx.lines],
            "planes": [{"edges": [list(e) for e in pl.edges]} for pl in cx.planes],
            "degenerate_edges": [list(e) for e, _ in cx.degenerate_edges],
        }
        if u.d == 4:
            pair = find_disjoint_planes(g, u)
            out["disjoint_pair"] = (None if pair is None else
                                    [[list(e) for e in p.edges] for p in pair])
            cover = two_hyperplane_cover(g, u, args.tol)
            out["two_hyperplane_cover"] = cover.status
        _emit(_stamp(out, args), args.out)
        return 0
    raise SapGraphError(f"unknown embed action {args.action}")


def _cmd_construct(args) -> int:
    if args.action == "circuit":
        cm = regular_polygon_circuit(args.ngon)
        s = eigen_sym(cm.matrix, args.tol)
        _emit(_stamp({
            "circuit": list(cm.circuit),
            "matrix": cm.matrix.to_json_dict(),
            "eigenvalues": [float(v) for v in s.eigenvalues],
            "lambda_minus": s.neg_count,
            "corank": s.zero_count,
        }, args), args.out)
        return 0
    g = _load_graph(args.graph)
    m = _load_matrix(args.path)
    if args.action == "plane-circuit":
        u = nullspace_embedding(m, args.tol)
        cx = spanned_complex(g, u, args.tol)
        if not 0 <= args.plane < len(cx.planes):
            raise SapGraphError(f"plane index {args.plane} out of range "
                                f"(complex has {len(cx.planes)} planes)")
        cm = find_plane_circuit(g, u, cx.planes[args.plane], args.tol,
                                enforce_hypothesis=not args.no_hypothesis_check)
        _emit(_stamp({"circuit": list(cm.circuit),
                      "matrix": cm.matrix.to_json_dict()}, args), args.out)
        return 0
    if args.action == "interpolate":
        a = _load_matrix(args.second)
        tr = interpolation_trace(a, WellSignedMatrix(g, m), beta_max=args.beta_max,
                                 steps=args.steps, tol=args.tol)
        _emit_text(tr.to_csv(), args.out)
        return 0
    raise SapGraphError(f"unknown construct action {args.action}")


def _cmd_kappa(args) -> int:
    g = _load_graph(args.graph)
    if args.action == "search":
        wit = kappa_lower_bound(g, budget=args.budget, seed=args.seed, tol=args.tol)
        out = wit.to_json_dict()
        out["corank_lower_bound"] = wit.corank
        _emit(_stamp(out, args), args.out)
        return 0
    if args.action == "report":
        rep = mu_report(g, budget=args.budget, seed=args.seed, tol=args.tol)
        _emit(_stamp(rep.to_json_dict(), args), args.out)
        return 0 if rep.consistent else 1
    raise SapGraphError(f"unknown kappa action {args.action}")


# ---------------------------------------------------------------------------
# corpus verification
# ---------------------------------------------------------------------------

def run_verify_corpus(corpus: dict, seed: int = 0, tol: float | None = None,
                      budget: int = 10_000_000) -> tuple[int, dict]:
    """Check every corpus member: random shifted instances must be well
    signed with one negative eigenvalue, nontrivial kernel, the
    transversality property, corank at most 4, and passing hyperplane
    verdicts whenever the corank is at least 2.  Control members are
    expected to fail the transversality check and do not affect the exit
    status."""
    delta = float(corpus.get("delta", 0.0))
    default_samples = int(corpus.get("samples", 20))
    failures: list[str] = []
    members_out = []
    for mi, member in enumerate(corpus["members"]):
        name = member["name"]
        control = bool(member.get("control", False))
        samples = int(member.get("samples", default_samples))
        g = generate_named(member["family"], *member["params"])
        conn = vertex_connectivity(g)
        flat = is_flat(g, budget=budget)
        gate_ok = conn >= 4 and flat
        entry = {
            "name": name,
            "control": control,
            "n": g.n,
            "edges": len(g.edges),
            "connectivity": conn,
            "flat": flat,
            "gate_ok": gate_ok,
            "instances": [],
            "sap_failures": [],
        }
        if not control and not gate_ok:
            failures.append(f"{name}: not a 4-connected flat graph "
                            f"(connectivity {conn}, flat {flat})")
        wit = kappa_lower_bound(g, seed=seed + 7 * mi, tol=tol)
        wit_vdh = None
        if wit.corank >= 2:
            wit_vdh = check_vdh_all(g, wit.matrix.matrix, tol).all_pass
        entry["witness"] = {
            "corank": wit.corank,
            "lambda_minus": wit.lambda_minus,
            "sap": wit.sap,
            "method": wit.method,
            "vdh_pass": wit_vdh,
        }
        if control:
            if not wit.sap:
                entry["sap_failures"].append(
                    f"witness corank {wit.corank} lacks the transversality property")
        elif gate_ok:
            if not wit.sap:
                failures.append(f"{name}: witness corank {wit.corank} fails transversality")
            if wit.corank > 4:
                failures.append(f"{name}: witness corank {wit.corank} exceeds 4")
            if wit_vdh is False:
                failures.append(f"{name}: witness fails a hyperplane verdict")
        for k in range(samples):
            inst_seed = seed + 10_000 * mi + k
            m = shift_to_one_negative(random_well_signed(g, inst_seed), delta, tol)
            s = eigen_sym(m.matrix, tol)
            ws = validate_well_signed(g, m.matrix)
            sap = sap_kernel(g, m.matrix, tol).kernel_dim == 0
            vdh_pass = None
            if s.zero_count >= 2:
                vdh_pass = check_vdh_all(g, m.matrix, tol).all_pass
            inst = {
                "sample": k,
                "seed": inst_seed,
                "well_signed": not ws,
                "lambda_minus": s.neg_count,
                "corank": s.zero_count,
                "sap": sap,
                "corank_le_4": s.zero_count <= 4,
                "vdh_pass": vdh_pass,
            }
            entry["instances"].append(inst)
            if control:
                if not sap:
                    entry["sap_failures"].append(f"sample {k}: transversality fails")
                continue
            if not gate_ok:
                continue
            if ws:
                failures.append(f"{name} sample {k}: not well-signed: {ws[0]}")
            if s.neg_count != 1:
                failures.append(f"{name} sample {k}: lambda_minus = {s.neg_count}")
            if delta == 0.0 and s.zero_count < 1:
                failures.append(f"{name} sample {k}: corank 0 after zero-delta shift")
            if not sap:
                failures.append(f"{name} sample {k}: transversality fails")
            if s.zero_count > 4:
                failures.append(f"{name} sample {k}: corank {s.zero_count} exceeds 4")
            if vdh_pass is False:
                failures.append(f"{name} sample {k}: hyperplane verdicts fail")
        members_out.append(entry)
    report = {
        "version": __version__,
        "tol": tol,
        "seed": seed,
        "delta": delta,
        "members": members_out,
        "failures": failures,
        "pass": not failures,
    }
    return (0 if not failures else 1), report


def _cmd_verify(args) -> int:
    corpus = _load_json(args.corpus) if args.corpus else DEFAULT_CORPUS
    status, report = run_verify_corpus(corpus, seed=args.seed, tol=args.tol,
                                       budget=args.budget)
    _emit(report, args.out)
    return status


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sapgraph",
        description="Well-signed graph matrices, transversality kernels, and "
                    "nullspace embedding geometry.")
    ap.add_argument("--tol", type=float, default=None,
                    help="zero threshold override (default: 1e-9 * n * max entry)")
    ap.add_argument("--seed", type=int, default=0, help="base random seed")
    ap.add_argument("--budget", type=int, default=10_000_000,
                    help="search node budget (minor tests, kappa search)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    g = add_parser("graph", help="generate and inspect graphs")
    g.add_argument("action", choices=["gen", "info", "connectivity", "flatness"])
    g.add_argument("path", nargs="?", help="graph JSON (for info/connectivity/flatness)")
    g.add_argument("--family", help="family name (for gen)")
    g.add_argument("--params", nargs="*", default=[], help="family parameters")
    g.add_argument("-o", "--out")
    g.set_defaults(func=_cmd_graph)

    m = add_parser("matrix", help="generate and inspect matrices")
    m.add_argument("action", choices=["gen", "validate", "spectrum"])
    m.add_argument("graph", help="graph JSON")
    m.add_argument("path", nargs="?", help="matrix JSON (for validate/spectrum)")
    m.add_argument("--shift", action="store_true",
                   help="shift so exactly one eigenvalue is negative")
    m.add_argument("--delta", type=float, default=0.0)
    m.add_argument("--edge-range", type=float, nargs=2, default=[-2.0, -0.1],
                   help="uniform range for edge weights")
    m.add_argument("--diag-range", type=float, nargs=2, default=[-1.0, 1.0],
                   help="uniform range for diagonal entries")
    m.add_argument("-o", "--out")
    m.set_defaults(func=_cmd_matrix)

    s = add_parser("sap", help="transversality kernel checks")
    s.add_argument("action", choices=["check", "prop1"])
    s.add_argument("graph")
    s.add_argument("path")
    s.add_argument("-o", "--out")
    s.set_defaults(func=_cmd_sap)

    e = add_parser("embed", help="nullspace embedding tools")
    e.add_argument("action", choices=["compute", "export", "vdh", "planes"])
    e.add_argument("graph")
    e.add_argument("path")
    e.add_argument("-o", "--out")
    e.set_defaults(func=_cmd_embed)

    c = add_parser("construct", help="circuit matrices and interpolation")
    c.add_argument("action", choices=["circuit", "plane-circuit", "interpolate"])
    c.add_argument("graph", nargs="?")
    c.add_argument("path", nargs="?")
    c.add_argument("second", nargs="?", help="second matrix JSON (interpolate)")
    c.add_argument("--ngon", type=int, default=5)
    c.add_argument("--plane", type=int, default=0)
    c.add_argument("--no-hypothesis-check", action="store_true")
    c.add_argument("--beta-max", type=float, default=10.0)
    c.add_argument("--steps", type=int, default=200)
    c.add_argument("-o", "--out")
    c.set_defaults(func=_cmd_construct)

    k = add_parser("kappa", help="max-corank lower bound search")
    k.add_argument("action", choices=["search", "report"])
    k.add_argument("graph")
    k.add_argument("-o", "--out")
    k.set_defaults(func=_cmd_kappa)

    v = add_parser("verify", help="run the theorem corpus")
    v.add_argument("action", choices=["corpus"])
    v.add_argument("corpus", nargs="?", help="corpus JSON (default: built-in corpus)")
    v.add_argument("-o", "--out")
    v.set_defaults(func=_cmd_verify)
    return ap


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except SapGraphError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
