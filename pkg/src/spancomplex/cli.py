"""Command-line interface.

Subcommands: ``analyze``, ``verify``, ``facets``, ``covers``,
``homology`` and ``random-suite``.  Exit codes: 0 success, 1 discrepancy
found, 2 input error, 3 enumeration budget exceeded.  All output is
deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import run_analyze
from .errors import (
    BudgetExceededError,
    GraphValidationError,
    NotUnicyclicError,
    SchemaError,
)
from .fvector import DEFAULT_BUDGET, require_budget
from .homology import betti_from_faces, boundary_matrix, euler_from_betti, graded_faces
from .ideal import facet_ideal, minimal_vertex_covers_generic, primary_decomposition
from .multigraph import Multigraph, load_graph_file
from .randomgraphs import random_suite
from .spanning import enumerate_spanning_trees_generic


def parse_graph_file(path: str) -> Multigraph:
    """Load and validate a graph file, with readable diagnostics."""
    if not Path(path).exists():
        raise SchemaError(f"no such file: {path}")
    return load_graph_file(path)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def _emit_discrepancies(discrepancies) -> None:
    if discrepancies:
        records = [d.to_json_dict() for d in discrepancies]
        sys.stderr.write(json.dumps(records, indent=2, ensure_ascii=False) + "\n")


def cmd_analyze(args) -> int:
    g = parse_graph_file(args.path)
    report = run_analyze(g, budget=args.budget, no_oracle=args.no_oracle, path=args.path)
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        sys.stdout.write(report.render_text())
    _emit_discrepancies(report.discrepancies)
    return 1 if report.discrepancies else 0


def cmd_verify(args) -> int:
    g = parse_graph_file(args.path)
    report = run_analyze(g, budget=args.budget, path=args.path)
    if report.discrepancies:
        sys.stdout.write(f"verify: FAIL ({len(report.discrepancies)} discrepancies)\n")
    else:
        sys.stdout.write("verify: PASS\n")
    _emit_discrepancies(report.discrepancies)
    return 1 if report.discrepancies else 0


def cmd_facets(args) -> int:
    g = parse_graph_file(args.path)
    require_budget(g.n_edges, args.budget, "spanning tree enumeration")
    facets = enumerate_spanning_trees_generic(g)
    if args.json:
        _emit_json([list(f.edge_ids) for f in facets])
    else:
        for f in facets:
            sys.stdout.write(" ".join(f.edge_ids) + "\n")
    return 0


def cmd_covers(args) -> int:
    g = parse_graph_file(args.path)
    require_budget(g.n_edges, args.budget, "spanning tree enumeration")
    facets = enumerate_spanning_trees_generic(g)
    covers = minimal_vertex_covers_generic(facets)
    view = facet_ideal(facets)
    decomp = primary_decomposition(covers)
    if args.json:
        _emit_json({"generators": [list(x) for x in view.generators],
                    "components": [list(x) for x in decomp.components]})
    else:
        for c in covers:
            sys.stdout.write(" ".join(c.edge_ids) + "\n")
        sys.stdout.write("decomposition: " + decomp.render_decomposition() + "\n")
    return 0


def cmd_homology(args) -> int:
    g = parse_graph_file(args.path)
    faces = graded_faces(g, budget=args.budget)
    betti = betti_from_faces(faces)
    if args.dump_matrices:
        outdir = Path(args.dump_matrices)
        outdir.mkdir(parents=True, exist_ok=True)
        for i in range(1, faces.dim + 1):
            bm = boundary_matrix(faces, i)
            target = outdir / f"boundary_{i}.txt"
            target.write_text("\n".join(bm.coordinate_triples()) + "\n", encoding="utf-8")
            sys.stdout.write(f"wrote {target}\n")
    doc = {
        "grade_sizes": [str(s) for s in faces.sizes()],
        "boundary_ranks": [str(r) for r in betti.boundary_ranks],
        "betti": [str(b) for b in betti.ranks],
        "euler_characteristic": str(euler_from_betti(betti)),
    }
    if args.json:
        _emit_json(doc)
    else:
        sys.stdout.write("grade sizes: " + " ".join(doc["grade_sizes"]) + "\n")
        sys.stdout.write("boundary ranks: " + " ".join(doc["boundary_ranks"]) + "\n")
        sys.stdout.write("betti numbers: " + " ".join(doc["betti"]) + "\n")
        sys.stdout.write("euler characteristic: " + doc["euler_characteristic"] + "\n")
    return 0


def cmd_random_suite(args) -> int:
    graphs = random_suite(args.seed, args.count, args.max_edges)
    failures = []
    for g in graphs:
        report = run_analyze(g, budget=args.budget)
        if report.discrepancies:
            target = Path(f"counterexample-{g.fingerprint()}.json")
            target.write_text(
                json.dumps(g.to_json_dict(), indent=2) + "\n", encoding="utf-8"
            )
            sys.stdout.write(f"FAIL {g.fingerprint()}: wrote {target}\n")
            failures.extend(report.discrepancies)
    if args.json:
        _emit_json(
            {
                "seed": args.seed,
                "count": args.count,
                "max_edges": args.max_edges,
                "failures": len(failures),
            }
        )
    else:
        sys.stdout.write(
            f"random-suite: checked {args.count} graphs "
            f"(seed {args.seed}, max edges {args.max_edges}): "
            + (f"{len(failures)} discrepancies\n" if failures else "all checks agree\n")
        )
    _emit_discrepancies(failures)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spancomplex",
        description="Spanning simplicial complexes of uni-cyclic multigraphs: "
        "exact enumeration, closed forms and their cross-verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_path=True):
        if with_path:
            p.add_argument("path", help="graph JSON file")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help=f"max edges for enumeration stages (default {DEFAULT_BUDGET})",
        )

    p = sub.add_parser("analyze", help="full report for one graph")
    add_common(p)
    p.add_argument(
        "--no-oracle",
        action="store_true",
        help="closed forms only; skip enumeration oracles (for large n)",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="cross-check closed forms against oracles")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("facets", help="spanning tree list")
    add_common(p)
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("covers", help="minimal vertex covers and facet ideal")
    add_common(p)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("homology", help="boundary ranks and Betti numbers")
    add_common(p)
    p.add_argument(
        "--dump-matrices",
        metavar="DIR",
        help="write each boundary matrix as 'row col value' triples",
    )
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("random-suite", help="verify a seeded random graph family")
    add_common(p, with_path=False)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-edges", type=int, default=12)
    p.set_defaults(func=cmd_random_suite)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (SchemaError, GraphValidationError, NotUnicyclicError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
