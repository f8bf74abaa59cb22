"""Command-line front end.

Subcommands: grow, stats, holes, export, verify.  Summary output is
machine-parsable ``key=value`` pairs on one line.  Exit codes: 0 success,
1 invariant or verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import export as export_mod
from . import holes as holes_mod
from . import stats as stats_mod
from .errors import PentagrowError
from .growth import grow
from .subdivision import (build_subdivision, euler_holes, extract_faces,
                          perimeter)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _summary_line(**kv) -> str:
    return " ".join(f"{k}={v}" for k, v in kv.items())


def _metrics(structure):
    graph = build_subdivision(structure)
    extract_faces(graph, structure)
    holes = sum(1 for f in graph.faces if f.kind == "hole")
    outer, total = perimeter(graph)
    return graph, holes, float(outer), float(total)


def cmd_grow(args) -> int:
    state = grow(args.n, args.seed)
    structure = state.to_structure()
    if args.out:
        export_mod.save(structure, args.out)
    graph, holes, outer, total = _metrics(structure)
    print(_summary_line(n=structure.n, V=graph.V, E=graph.E, H=holes,
                        outer_perimeter=f"{outer:.6f}",
                        total_boundary=f"{total:.6f}",
                        free_edges=state.free_edge_count(),
                        seed=args.seed))
    return EXIT_OK


def cmd_stats(args) -> int:
    records = stats_mod.run_batch(args.n_max, args.runs, args.seed,
                                  workers=args.workers)
    summary = stats_mod.estimate_limits(records)
    stats_mod.write_csv(records, args.out)
    if args.summary_out:
        stats_mod.write_summary_csv(summary, args.summary_out)
    print(_summary_line(runs=summary.runs, n_max=summary.n_max,
                        V_over_n=f"{summary.mean_V_over_n[-1]:.6f}",
                        E_over_n=f"{summary.mean_E_over_n[-1]:.6f}",
                        H_over_n=f"{summary.mean_H_over_n[-1]:.6f}",
                        out=args.out))
    return EXIT_OK


def cmd_holes(args) -> int:
    import os
    structure = export_mod.load(getattr(args, "in"))
    if args.catalog and os.path.exists(args.catalog):
        catalog = holes_mod.load_catalog(args.catalog)
    else:
        catalog = holes_mod.Catalog()
    result = holes_mod.census(structure, catalog)
    if args.catalog:
        holes_mod.save_catalog(catalog, args.catalog)
    lines = ["name,count"]
    for name in sorted(result.counts):
        lines.append(f"{name},{result.counts[name]}")
    try:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as ex:
        raise OSError(f"cannot write census CSV {args.out!r}: {ex}") from ex
    total = sum(result.counts.values())
    named = sum(c for name, c in result.counts.items()
                if not name.startswith("auto"))
    if result.angle_violations:
        print(_summary_line(holes=total, named=named,
                            violations=result.angle_violations))
        return EXIT_VERIFY
    print(_summary_line(holes=total, named=named, violations=0, out=args.out))
    return EXIT_OK


def cmd_export(args) -> int:
    structure = export_mod.load(getattr(args, "in"))
    export_mod.write_svg(structure, args.svg, scale=args.scale,
                         holes_as_cut=args.holes_as_cut,
                         tree=not args.no_tree)
    print(_summary_line(n=structure.n, svg=args.svg))
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = []
    try:
        structure = export_mod.load(getattr(args, "in"))
    except PentagrowError as ex:
        print(f"verify: {ex}", file=sys.stderr)
        return EXIT_VERIFY
    graph = build_subdivision(structure)
    extract_faces(graph, structure)
    h_faces = sum(1 for f in graph.faces if f.kind == "hole")
    h_formula = euler_holes(graph.V, graph.E, structure.n)
    if h_faces != h_formula:
        failures.append(f"euler-identity: faces={h_faces} formula={h_formula}")
    for face in graph.faces:
        if face.kind != "hole":
            continue
        angles = holes_mod.angle_sequence(graph, face)
        if not holes_mod.verify_angle_sum(angles):
            failures.append(f"angle-sum: hole with angles {angles}")
    if args.deep:
        if structure.n > 50:
            print("verify: --deep requires n <= 50", file=sys.stderr)
            return EXIT_USAGE
        from .oracle import subdivision_oracle
        ov, oe, oh = subdivision_oracle(structure)
        if (ov, oe, oh) != (graph.V, graph.E, h_faces):
            failures.append(f"oracle: got (V,E,H)=({graph.V},{graph.E},"
                            f"{h_faces}), oracle says ({ov},{oe},{oh})")
    if failures:
        for f in failures:
            print(f"FAIL {f}")
        return EXIT_VERIFY
    print(_summary_line(n=structure.n, V=graph.V, E=graph.E, H=h_faces,
                        verified="ok", deep=bool(args.deep)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pentagrow",
        description="Exact-arithmetic pentagon cell-growth simulator")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("grow", help="grow a structure and save it")
    g.add_argument("--n", type=int, required=True, help="number of pentagons")
    g.add_argument("--seed", type=int, default=0, help="RNG seed")
    g.add_argument("--out", help="structure file to write")
    g.set_defaults(func=cmd_grow)

    s = sub.add_parser("stats", help="run a batch and write growth-curve CSVs")
    s.add_argument("--n-max", type=int, required=True, dest="n_max")
    s.add_argument("--runs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0, help="base seed")
    s.add_argument("--out", required=True, help="per-checkpoint records CSV")
    s.add_argument("--summary-out", dest="summary_out",
                   help="per-checkpoint summary CSV")
    s.add_argument("--workers", type=int, default=1,
                   help="process-pool size (results are order-independent)")
    s.set_defaults(func=cmd_stats)

    h = sub.add_parser("holes", help="hole census of a saved structure")
    h.add_argument("--in", required=True, help="structure file")
    h.add_argument("--catalog", help="hole catalog file (read and updated)")
    h.add_argument("--out", required=True, help="histogram CSV")
    h.set_defaults(func=cmd_holes)

    e = sub.add_parser("export", help="render a saved structure to SVG")
    e.add_argument("--in", required=True, help="structure file")
    e.add_argument("--svg", required=True, help="SVG file to write")
    e.add_argument("--scale", type=float, default=10.0,
                   help="millimetres per pentagon side (default 10)")
    e.add_argument("--holes-as-cut", action="store_true",
                   help="include hole outlines in the cut layer")
    e.add_argument("--no-tree", action="store_true",
                   help="omit the attachment tree from the engrave layer")
    e.set_defaults(func=cmd_export)

    v = sub.add_parser("verify", help="run the invariant suite on a file")
    v.add_argument("--in", required=True, help="structure file")
    v.add_argument("--deep", action="store_true",
                   help="cross-check against the brute-force oracle (n <= 50)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_USAGE if ex.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except OSError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_IO
    except PentagrowError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
