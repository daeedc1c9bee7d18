"""Command-line entry point.

Every analysis subcommand prints one JSON object on stdout; ``gen`` prints
the edge-list format so its output can be piped straight back in (use
``-`` as the file argument). Exit status is 0 on success, 2 on usage or
input errors, and 1 when a verification or bound check fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .census import census_bounds, census_report
from .cig import (
    CircularIntervalDigraph,
    G_beta_minus,
    cig_bound,
    cig_report,
    generate_G_beta,
)
from .digraph import PathKind, count, empty_digraph, is_k_free
from .edgelist import format_edge_list, read_edge_list
from .errors import DigraphError
from .families import layered_tournaments, recursive_family
from .path4 import check_outdegree_corollary, check_p4_bounds, four_tuple_stats, p4_report
from .search import local_search, verify_cig, verify_thomasse

log = logging.getLogger("digraph_census")


class CheckFailed(Exception):
    """A bound or verification came out false."""


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _parse_x(text: str | None, n: int, beta: int) -> list[tuple[int, int]]:
    """``"0:5,3:8"`` pairs, or bare tails ``"0,3"`` meaning ``(i, i + beta)``."""
    if not text:
        return []
    X = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if ":" in item:
            u, v = item.split(":")
            X.append((int(u), int(v)))
        else:
            u = int(item)
            X.append((u, (u + beta) % n))
    return X


def _load_cig(source: str) -> CircularIntervalDigraph:
    if source.startswith("gbeta:"):
        parts = source.split(":", 3)
        n, beta = int(parts[1]), int(parts[2])
        X = _parse_x(parts[3] if len(parts) > 3 else None, n, beta)
        return G_beta_minus(n, beta, X) if X else generate_G_beta(n, beta)
    if source.startswith("extents:"):
        return CircularIntervalDigraph([int(x) for x in source[len("extents:"):].split(",") if x])
    return CircularIntervalDigraph.from_digraph(read_edge_list(source))


# -- subcommands --------------------------------------------------------------

def cmd_census(args) -> int:
    g = read_edge_list(args.file)
    report = census_report(g, jobs=args.jobs)
    _emit(report)
    if any(report["residuals"]):
        raise CheckFailed("census identities have nonzero residual")
    return 0


def cmd_kfree(args) -> int:
    g = read_edge_list(args.file)
    _emit({"n": g.n, "k": args.k, "k_free": is_k_free(g, args.k)})
    return 0


def cmd_count(args) -> int:
    g = read_edge_list(args.file)
    kind = PathKind(args.kind)
    _emit({"n": g.n, "s": args.s, "kind": kind.value, "count": count(g, args.s, kind)})
    return 0


def cmd_gen(args) -> int:
    if args.family == "gbeta":
        X = _parse_x(args.remove_x, args.n, args.beta)
        cig = G_beta_minus(args.n, args.beta, X) if X else generate_G_beta(args.n, args.beta)
        g = cig.digraph
    elif args.family == "recursive":
        g = recursive_family(args.i)
    else:
        g = layered_tournaments(args.n)
    sys.stdout.write(format_edge_list(g))
    return 0


def cmd_cig_report(args) -> int:
    g = _load_cig(args.source)
    report = cig_report(g)
    _emit(report)
    if g.is_two_free and not report["bound_16"]["holds"]:
        raise CheckFailed("n^3/16 bound violated")
    return 0


def cmd_p4_report(args) -> int:
    g = read_edge_list(args.file)
    report = p4_report(g)
    _emit(report)
    if any(report["identities"].values()) or not all(b["holds"] for b in report["bounds"]):
        raise CheckFailed("four-vertex path identity or bound failed")
    return 0


def cmd_bounds(args) -> int:
    g = read_edge_list(args.file)
    reports = []
    applicable = []
    if not g.digons():
        applicable.append("digon_free")
        reports.extend(census_bounds(g))
    if is_k_free(g, 3):
        applicable.append("three_free")
        reports.extend(check_p4_bounds(g, four_tuple_stats(g)))
        if g.n:
            reports.append(check_outdegree_corollary(g))
    try:
        cig = CircularIntervalDigraph.from_digraph(g)
    except DigraphError:
        cig = None
    if cig is not None and cig.is_two_free:
        applicable.append("circular_interval")
        reports.append(cig_bound(cig))
    ok = all(r.holds for r in reports)
    _emit({
        "n": g.n,
        "classes": applicable,
        "bounds": [r.to_json() for r in reports],
        "verdict": "pass" if ok else "FAIL",
    })
    if not ok:
        raise CheckFailed("bound violated")
    return 0


def cmd_verify(args) -> int:
    if args.target == "thomasse":
        result = verify_thomasse(args.n, jobs=args.jobs, resume=args.resume)
        report = result.to_json()
    else:
        report = verify_cig(args.n)
    _emit(report)
    if report["verdict"] != "pass":
        raise CheckFailed(f"verify {args.target} failed at n={args.n}")
    return 0


def cmd_search(args) -> int:
    if args.init_file:
        start = read_edge_list(args.init_file)
    elif args.init == "layered":
        start = layered_tournaments(args.n)
    elif args.init == "cig":
        start = CircularIntervalDigraph([0] * args.n)
    else:
        start = empty_digraph(args.n)
    result = local_search(
        start, objective=args.objective, free=args.free, budget=args.steps, rng_seed=args.seed
    )
    report = result.to_json()
    report["seed"] = args.seed
    report["steps"] = args.steps
    _emit(report)
    if not all(r.holds for r in result.bound_reports()):
        raise CheckFailed("search found a digraph beyond a proven bound")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="digraph-census", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("census", help="triad census with identity residuals and bounds")
    s.add_argument("file")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("kfree", help="test for directed cycles of length <= k")
    s.add_argument("file")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_kfree)

    s = sub.add_parser("count", help="count s-vertex walks, paths or induced paths")
    s.add_argument("file")
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--kind", choices=[k.value for k in PathKind], required=True)
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("gen", help="emit an extremal construction as an edge list")
    gsub = s.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("gbeta")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--beta", type=int, required=True)
    g.add_argument("--remove-x", help="H_beta edges to drop: 'u:v,...' or tails 'u,...'")
    g = gsub.add_parser("recursive")
    g.add_argument("--i", type=int, required=True)
    g = gsub.add_parser("layered")
    g.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("cig-report", help="alpha/beta/xi/gamma and the n^3/16 verdict")
    s.add_argument("source", help="edge-list file, '-', 'gbeta:N:B[:X]' or 'extents:a0,a1,...'")
    s.set_defaults(func=cmd_cig_report)

    s = sub.add_parser("p4-report", help="four-vertex path statistics of a 3-free digraph")
    s.add_argument("file")
    s.set_defaults(func=cmd_p4_report)

    s = sub.add_parser("bounds", help="every applicable bound check")
    s.add_argument("file")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", help="exhaustive small-n verification")
    s.add_argument("target", choices=["thomasse", "cig"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--resume", help="checkpoint file (thomasse only)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="hill-climbing search for extremal digraphs")
    s.add_argument("--objective", choices=["p3", "p4"], required=True)
    s.add_argument("--free", type=int, choices=[2, 3], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--init", choices=["empty", "layered", "cig"], default="empty")
    s.add_argument("--init-file")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except CheckFailed as exc:
        print(f"CHECK FAILED: {exc}", file=sys.stderr)
        return 1
    except (DigraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
