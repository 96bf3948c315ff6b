"""Command-line interface.

Subcommands: gen (family generators), label (closed-form construction or
solver), verify (labeling/certificate checker), solve (exact search), bounds
(closed-form report), sweep (inequality audit as CSV), export-dot.

Solver results are cached as append-only JSONL plus one certificate file per
graph, keyed by graph content hash; records are trusted only after the
stored certificate re-verifies.  Cache location: --cache-dir, else
$ANTIMAGIC_CACHE_DIR, else ./.antimagic-cache.

Exit codes: 0 success, 2 usage or domain error, 3 verification failure,
4 budget exhausted.
"""

from __future__ import annotations

import argparse
import datetime
import fcntl
import json
import os
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import jsonio
from .construction import construct
from .graphs import (Graph, INNER, VertexRole, complete, corona, cycle, fan,
                     fan_corona, friendship, friendship_corona, null_graph,
                     path)
from .labeling import (Certificate, GraphMismatchError, InvalidLabelingError,
                       make_certificate, verify_certificate)
from .solver import (BUDGET_EXHAUSTED, EXACT, FEASIBLE, INFEASIBLE,
                     SearchConfig, exact_chi_la, feasible_with_k_colors)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_BUDGET = 4

CACHE_ENV = "ANTIMAGIC_CACHE_DIR"
DEFAULT_CACHE = ".antimagic-cache"


def _write_out(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _dump(doc: dict, out: str | None) -> None:
    _write_out(json.dumps(doc, indent=2, sort_keys=True), out)


def _load_json(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc


def _load_graph(path: str) -> Graph:
    return Graph.from_doc(_load_json(path))


# -- certificate cache ---------------------------------------------------------


def _cache_dir(arg: str | None) -> Path:
    return Path(arg or os.environ.get(CACHE_ENV) or DEFAULT_CACHE)


def _cache_lookup(cache: Path, g: Graph) -> dict | None:
    """Last matching record whose certificate file still verifies."""
    index = cache / "cache.jsonl"
    if not index.is_file():
        return None
    best = None
    with open(index) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # torn write at the tail; ignore
            if rec.get("graph_hash") == g.content_hash():
                best = rec
    if best is None:
        return None
    cert_name = best.get("certificate")
    if cert_name:
        cert_path = cache / cert_name
        try:
            doc = _load_json(str(cert_path))
            jsonio.check_version(doc, "certificate")
            cert = Certificate.from_doc(doc)
            if not verify_certificate(cert, g):
                return None
        except (OSError, ValueError, KeyError):
            return None
        best["_certificate"] = cert
    return best


def _cache_store(cache: Path, g: Graph, cert: Certificate,
                 exact: int | None) -> None:
    cache.mkdir(parents=True, exist_ok=True)
    cert_name = f"{g.content_hash()}.cert.json"
    cert_doc = jsonio.stamp(cert.to_doc())
    (cache / cert_name).write_text(
        json.dumps(cert_doc, indent=2, sort_keys=True) + "\n")
    record = jsonio.stamp({
        "graph_hash": g.content_hash(),
        "family": g.family,
        "upper": cert.color_count,
        "exact": exact,
        "certificate": cert_name,
        "created": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    })
    index = cache / "cache.jsonl"
    with open(index, "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            fh.write(json.dumps(record, sort_keys=True) + "\n")
            fh.flush()
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


# -- subcommands -----------------------------------------------------------------


def _build_family(args) -> Graph:
    fam = args.family
    if fam == "friendship-corona":
        return friendship_corona(_req(args, "n"), _req(args, "m"))
    if fam == "fan-corona":
        return fan_corona(_req(args, "n"), _req(args, "m"))
    if fam == "c3-corona":
        return corona(cycle(3), null_graph(_req(args, "m")))
    if fam == "kn-k1":
        return corona(complete(_req(args, "n")), complete(1))
    builders = {"friendship": friendship, "fan": fan, "cycle": cycle,
                "path": path, "complete": complete, "null": null_graph}
    return builders[fam](_req(args, "n"))


def _req(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise ValueError(f"family {args.family!r} requires --{name}")
    return value


def cmd_gen(args) -> int:
    g = _build_family(args)
    _dump(g.to_doc(), args.out)
    return EXIT_OK


def _friendship_o1_n(g: Graph) -> int:
    """n such that g is content-identical to friendship_corona(n, 1)."""
    n = 0
    while True:
        try:
            g.vertex_with_role(VertexRole(INNER, "u", n + 1))
        except KeyError:
            break
        n += 1
    if n >= 2 and friendship_corona(n, 1).content_hash() == g.content_hash():
        return n
    raise ValueError(
        "construction method needs a friendship corona with one pendant "
        "per vertex (gen friendship-corona --n N --m 1)")


def _search_config(args, upper_hint: int | None = None) -> SearchConfig:
    return SearchConfig(
        time_budget=args.time_budget,
        node_budget=args.node_budget,
        target_colors=args.target_colors,
        edge_order=args.edge_order,
        parallel_width=args.parallel,
        symmetry_breaking=not args.no_symmetry,
        upper_hint=upper_hint,
    )


def _solve(g: Graph, args) -> tuple[int, dict, Certificate | None]:
    """Shared engine behind solve and label --method solver."""
    cache = _cache_dir(args.cache_dir)
    target = args.target_colors
    cached = _cache_lookup(cache, g)
    if cached and cached.get("exact") is not None and "_certificate" in cached:
        exact = cached["exact"]
        cert = cached["_certificate"]
        if target is None:
            doc = {"status": EXACT, "chi": exact, "cached": True,
                   "certificate": jsonio.stamp(cert.to_doc())}
            return EXIT_OK, doc, cert
        if exact <= target:
            doc = {"status": FEASIBLE, "cached": True,
                   "certificate": jsonio.stamp(cert.to_doc())}
            return EXIT_OK, doc, cert
        return EXIT_OK, {"status": INFEASIBLE, "infeasible_k": target,
                         "cached": True}, None
    cfg = _search_config(args)
    if target is None:
        outcome = exact_chi_la(g, cfg)
    else:
        outcome = feasible_with_k_colors(g, target, cfg)
    doc = {"status": outcome.status,
           "nodes_explored": outcome.nodes_explored,
           "wall_time": round(outcome.wall_time, 6)}
    cert = outcome.certificate
    if outcome.status == EXACT:
        doc["chi"] = outcome.chi
        _cache_store(cache, g, cert, exact=outcome.chi)
    elif outcome.status == FEASIBLE:
        _cache_store(cache, g, cert, exact=None)
    elif outcome.status == INFEASIBLE:
        doc["infeasible_k"] = outcome.infeasible_k
    elif outcome.best_so_far is not None:
        doc["best_so_far_colors"] = outcome.best_so_far.color_count
    if cert is not None:
        doc["certificate"] = jsonio.stamp(cert.to_doc())
    code = EXIT_BUDGET if outcome.status == BUDGET_EXHAUSTED else EXIT_OK
    return code, doc, cert


def cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    code, doc, _cert = _solve(g, args)
    _dump(doc, args.out)
    return code


def cmd_label(args) -> int:
    g = _load_graph(args.graph)
    if args.method == "construction":
        n = _friendship_o1_n(g)
        report = construct(n)
        # report's graph is freshly generated; hashes match by construction
        _dump(jsonio.stamp(report.certificate.to_doc()), args.out)
        return EXIT_OK
    code, doc, cert = _solve(g, args)
    if cert is None:
        _dump(doc, args.out)
        return code if code != EXIT_OK else EXIT_BUDGET
    _dump(jsonio.stamp(cert.to_doc()), args.out)
    return code


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    doc = _load_json(args.labeling)
    try:
        if "verdict" in doc:
            jsonio.check_version(doc, "certificate")
            cert = Certificate.from_doc(doc)
            ok = verify_certificate(cert, g)
            report = {"kind": "certificate", "ok": bool(ok),
                      "color_count": cert.color_count,
                      "verdict": cert.verdict.to_doc()}
        else:
            labels = doc["labels"]
            if doc.get("graph_hash") not in (None, g.content_hash()):
                raise GraphMismatchError("labeling was made for a different "
                                         "graph (content hash mismatch)")
            cert = make_certificate(g, labels)
            report = {"kind": "labeling", "ok": cert.verdict.ok,
                      "color_count": cert.color_count,
                      "verdict": cert.verdict.to_doc()}
    except (InvalidLabelingError, GraphMismatchError) as exc:
        _dump({"ok": False, "error": str(exc)}, args.out)
        return EXIT_VERIFY
    _dump(report, args.out)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def cmd_bounds(args) -> int:
    report = bounds_mod.bound_report(args.family, args.n or 0, args.m or 1)
    _dump(report.to_doc(), args.out)
    return EXIT_OK


def cmd_sweep(args) -> int:
    n_lo, n_hi = args.n_min, args.n_max
    m_lo, m_hi = args.m_min, args.m_max
    if args.target == "friendship":
        if n_lo is None:
            n_lo = 2
        witnesses = bounds_mod.sweep_friendship_inequalities(
            range(n_lo, n_hi + 1), range(m_lo, m_hi + 1))
    else:
        if n_lo is None:
            n_lo = 3
        witnesses = bounds_mod.sweep_fan_inequalities(
            range(n_lo, n_hi + 1), range(m_lo, m_hi + 1))
    if args.format == "json":
        _write_out(bounds_mod.witnesses_to_json(witnesses), args.out)
    elif args.out in (None, "-"):
        bounds_mod.witnesses_to_csv(witnesses, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            bounds_mod.witnesses_to_csv(witnesses, fh)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    labels = weights = None
    if args.certificate:
        doc = _load_json(args.certificate)
        jsonio.check_version(doc, "certificate")
        cert = Certificate.from_doc(doc)
        if not verify_certificate(cert, g):
            raise GraphMismatchError("certificate does not verify against "
                                     "this graph")
        labels, weights = list(cert.labels), list(cert.weights)
    _write_out(g.to_dot(labels=labels, weights=weights), args.out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--target-colors", type=int, default=None,
                   help="feasibility mode: search for <= K colors")
    p.add_argument("--time-budget", type=float, default=None,
                   help="wall-clock budget in seconds")
    p.add_argument("--node-budget", type=int, default=None,
                   help="search node budget")
    p.add_argument("--edge-order", default="connected-expansion",
                   choices=["input", "max-degree-first",
                            "connected-expansion"])
    p.add_argument("--parallel", type=int, default=1, metavar="W",
                   help="split the first edge's labels over W processes")
    p.add_argument("--no-symmetry", action="store_true",
                   help="disable symmetry-breaking constraints")
    p.add_argument("--cache-dir", default=None,
                   help=f"certificate cache (default ${CACHE_ENV} or "
                        f"./{DEFAULT_CACHE})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Local antimagic labelings of corona-product graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family instance")
    p.add_argument("family", choices=["friendship-corona", "fan-corona",
                                      "c3-corona", "kn-k1", "friendship",
                                      "fan", "cycle", "path", "complete",
                                      "null"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="produce a verified certificate")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--method", choices=["construction", "solver"],
                   default="construction")
    _add_solver_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling or certificate")
    p.add_argument("graph")
    p.add_argument("labeling", help="labeling or certificate JSON file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact search for the optimum")
    p.add_argument("graph")
    _add_solver_flags(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bounds", help="closed-form bound report")
    p.add_argument("--family", required=True,
                   choices=list(bounds_mod.REPORT_FAMILIES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", help="evaluate bound inequalities over a grid")
    p.add_argument("target", choices=["friendship", "fan"])
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--m-min", type=int, default=1)
    p.add_argument("--m-max", type=int, default=50)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export-dot", help="write Graphviz DOT")
    p.add_argument("graph")
    p.add_argument("--certificate", default=None,
                   help="overlay labels/weights from a certificate")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ValueError, KeyError, FileNotFoundError,
            jsonio.SchemaVersionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
