"""Command-line front end.

Subcommands: sumset, independent, spanning, tau, phi, tau-table, phi-table,
perfect, probe, bounds, design-build, design-verify, distances, known,
reproduce.  Output is one JSON object per run (default) or CSV with
--format csv; table and reproduction runs given --out also render a PNG
figure next to the delimited file.

Exit codes: 0 success, 1 verification false or reproduction mismatch,
2 usage error, 3 budget exhausted before the search completed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .cache import open_cache
from .formulas import (
    delannoy,
    delsarte_bound,
    design3_excluded_sizes,
    design3_nonexistence_interval,
    harmonic_dimension,
    phi2_asymptotic_bounds,
    tau_asymptotic_bounds,
    two_distance_bounds,
)
from .groups import GroupSpec, format_element, label, parse_group, parse_subset_literal
from .search import SearchConfig, find_perfect_sets, conjecture_probe_perfect, phi, tau
from .sphere import (
    PointSet,
    construct_design_points,
    distance_spectrum,
    is_t_design_harmonic,
    is_t_design_moments,
    known_configuration,
    load_point_set,
    save_point_set,
)
from .sumsets import Subset, is_s_spanning, is_t_independent, signed_sumset, cumulative_sumset, table_to_elements
from .tables import reproduce_table, reproduce_tau3_formula

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _deliver(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_subset(group: GroupSpec, literal: str) -> Subset:
    return Subset(group, tuple(parse_subset_literal(group, literal)))


def _witness_str(subset: Subset | None) -> str | None:
    if subset is None:
        return None
    return ";".join(format_element(g) for g in subset.elements)


def _config(args) -> SearchConfig:
    return SearchConfig(
        symmetry_reduction=not args.no_symmetry,
        thread_count=args.threads,
        node_budget=args.budget_nodes,
        time_budget=args.budget_seconds,
    )


def _provenance(args) -> dict:
    return {
        "budget_nodes": args.budget_nodes,
        "budget_seconds": args.budget_seconds,
        "symmetry": not args.no_symmetry,
        "threads": args.threads,
        "version": __version__,
    }


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--budget-seconds", type=float, default=None)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--cache", default=None, metavar="PATH")


def _add_output_flags(p: argparse.ArgumentParser, with_out: bool = False) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    if with_out:
        p.add_argument("--out", default=None, metavar="FILE")
        p.add_argument("--no-figure", action="store_true")


def _load_points(args) -> PointSet:
    if args.points:
        return load_point_set(args.points)
    if args.A is not None and args.N is not None:
        group = GroupSpec((args.N,))
        return construct_design_points(_parse_subset(group, args.A))
    raise ValueError("need --points FILE, or --A and --N to build the point set")


def _cmd_sumset(args) -> int:
    group = parse_group(args.group)
    A = _parse_subset(group, args.set)
    table = cumulative_sumset(A, args.h) if args.cumulative else signed_sumset(A, args.h)
    elements = [format_element(g) for g in table_to_elements(group, table)]
    payload = {
        "cumulative": bool(args.cumulative),
        "elements": elements,
        "group": label(group),
        "h": args.h,
        "set": _witness_str(A),
        "size": len(elements),
    }
    if args.format == "csv":
        _deliver(_csv_text(["group", "h", "cumulative", "size", "elements"],
                           [[label(group), args.h, str(args.cumulative).lower(),
                             len(elements), ";".join(elements)]]), None)
    else:
        _print_json(payload)
    return EXIT_OK


def _cmd_independent(args) -> int:
    group = parse_group(args.group)
    A = _parse_subset(group, args.set)
    verdict = is_t_independent(A, args.t)
    _print_json({"independent": verdict})
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_spanning(args) -> int:
    group = parse_group(args.group)
    A = _parse_subset(group, args.set)
    verdict = is_s_spanning(A, args.s)
    _print_json({"spanning": verdict})
    return EXIT_OK if verdict else EXIT_FALSE


def _search_one(args, kind: str, parameter: int):
    group = parse_group(args.group)
    cache = open_cache(args.cache)
    result = None
    if cache is not None:
        result = cache.lookup(group, kind, parameter)
    if result is None:
        fn = tau if kind == "tau" else phi
        result = fn(group, parameter, _config(args))
        if cache is not None:
            cache.store(group, kind, parameter, result)
    return group, result


def _cmd_tau(args) -> int:
    group, result = _search_one(args, "tau", args.t)
    witness = _witness_str(result.witness)
    millis = round(result.elapsed * 1000)
    if args.format == "csv":
        _deliver(_csv_text(
            ["n", "t", "tau", "witness", "nodes", "millis", "exhaustive"],
            [[group.order, args.t, result.value, witness or "", result.nodes_explored,
              millis, str(result.exhaustive).lower()]]), None)
    else:
        _print_json({
            "exhaustive": result.exhaustive,
            "group": label(group),
            "millis": millis,
            "nodes": result.nodes_explored,
            "t": args.t,
            "tau": result.value,
            "witness": witness,
        })
    return EXIT_OK if result.exhaustive else EXIT_BUDGET


def _cmd_phi(args) -> int:
    group, result = _search_one(args, "phi", args.s)
    witness = _witness_str(result.witness)
    millis = round(result.elapsed * 1000)
    if args.format == "csv":
        _deliver(_csv_text(
            ["n", "s", "phi", "witness", "nodes", "millis", "exhaustive"],
            [[group.order, args.s, result.value, witness or "", result.nodes_explored,
              millis, str(result.exhaustive).lower()]]), None)
    else:
        _print_json({
            "exhaustive": result.exhaustive,
            "group": label(group),
            "millis": millis,
            "nodes": result.nodes_explored,
            "phi": result.value,
            "s": args.s,
            "witness": witness,
        })
    return EXIT_OK if result.exhaustive else EXIT_BUDGET


def _table_rows(args, kind: str, parameter: int):
    cache = open_cache(args.cache)
    config = _config(args)
    fn = tau if kind == "tau" else phi
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        group = GroupSpec((n,))
        result = cache.lookup(group, kind, parameter) if cache is not None else None
        if result is None:
            result = fn(group, parameter, config)
            if cache is not None:
                cache.store(group, kind, parameter, result)
        rows.append((n, result))
    return rows


def _cmd_table(args, kind: str) -> int:
    parameter = args.t if kind == "tau" else args.s
    if args.n_from < 1 or args.n_to < args.n_from:
        raise ValueError("need 1 <= --n-from <= --n-to")
    if kind == "tau" and args.n_from < 2:
        raise ValueError("independence tables start at n = 2")
    rows = _table_rows(args, kind, parameter)
    partial = any(not r.exhaustive for _, r in rows)
    value_key = "tau" if kind == "tau" else "phi"
    param_key = "t" if kind == "tau" else "s"
    header = ["n", param_key, value_key, "witness", "nodes", "millis", "exhaustive"]
    csv_rows = [
        [n, parameter, r.value, _witness_str(r.witness) or "", r.nodes_explored,
         round(r.elapsed * 1000), str(r.exhaustive).lower()]
        for n, r in rows
    ]
    if args.format == "csv":
        text = _csv_text(header, csv_rows)
    else:
        json_rows = [
            {
                "exhaustive": r.exhaustive,
                "millis": round(r.elapsed * 1000),
                "n": n,
                "nodes": r.nodes_explored,
                param_key: parameter,
                value_key: r.value,
                "witness": _witness_str(r.witness),
            }
            for n, r in rows
        ]
        text = json.dumps(
            {"kind": kind, "parameter": parameter, "partial": partial,
             "provenance": _provenance(args), "rows": json_rows},
            sort_keys=True,
        ) + "\n"
    _deliver(text, args.out)
    if args.out:
        figure = None
        if not args.no_figure:
            from .plotting import save_values_figure

            figure = os.path.splitext(args.out)[0] + ".png"
            save_values_figure(
                [(n, r.value, r.exhaustive) for n, r in rows], kind, parameter, figure)
        _print_json({"figure": figure, "out": args.out, "partial": partial, "rows": len(rows)})
    return EXIT_BUDGET if partial else EXIT_OK


def _cmd_perfect(args) -> int:
    witnesses = find_perfect_sets(args.m, args.s, _config(args))
    payload = {
        "count": len(witnesses),
        "m": args.m,
        "order": delannoy(args.m, args.s),
        "s": args.s,
        "witnesses": [
            {"group": label(G), "set": _witness_str(A)} for G, A in witnesses
        ],
    }
    _print_json(payload)
    return EXIT_OK


def _cmd_probe(args) -> int:
    cells = conjecture_probe_perfect(args.max_m, args.max_s, _config(args), args.order_cap)
    payload = {
        "cells": [
            {
                "m": c.m,
                "order": c.order,
                "s": c.s,
                "searched": c.searched,
                "witnesses": [
                    {"group": label(G), "set": _witness_str(A)} for G, A in c.witnesses
                ],
            }
            for c in cells
        ],
        "max_m": args.max_m,
        "max_s": args.max_s,
        "order_cap": args.order_cap,
    }
    _print_json(payload)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.t is not None and args.n is not None:
        lower, upper = tau_asymptotic_bounds(args.n, args.t, args.eps)
        _print_json({"eps": args.eps, "kind": "tau-asymptotic", "lower": lower,
                     "n": args.n, "t": args.t, "upper": upper})
        return EXIT_OK
    if args.s is not None and args.n is not None:
        if args.s != 2:
            raise ValueError("asymptotic spanning bounds are implemented for s = 2 only")
        lower, upper = phi2_asymptotic_bounds(args.n, args.eps, args.delta)
        _print_json({"delta": args.delta, "eps": args.eps, "kind": "phi2-asymptotic",
                     "lower": lower, "n": args.n, "s": 2, "upper": upper})
        return EXIT_OK
    if args.d is not None:
        lo, hi = design3_nonexistence_interval(args.d)
        payload = {
            "d": args.d,
            "design3_excluded_odd": list(design3_excluded_sizes(args.d)),
            "design3_interval": [lo, hi],
            "kind": "sphere",
            "two_distance_upper": list(two_distance_bounds(args.d)),
        }
        if args.k is not None:
            payload["delsarte"] = delsarte_bound(args.d, args.k)
            payload["harm_dim"] = harmonic_dimension(args.d, args.k)
        _print_json(payload)
        return EXIT_OK
    raise ValueError("bounds needs --n with --t or --s, or --d [--k]")


def _point_payload(X: PointSet) -> dict:
    return {
        "dimension": X.dimension,
        "points": [[float(c) for c in row] for row in X.points],
        "tolerance": X.tolerance,
    }


def _cmd_design_build(args) -> int:
    group = GroupSpec((args.N,))
    A = _parse_subset(group, args.A)
    X = construct_design_points(A)
    if args.out:
        save_point_set(X, args.out)
        _print_json({"A": _witness_str(A), "N": args.N, "dimension": X.dimension,
                     "m": A.m, "out": args.out, "points": X.size})
    else:
        _print_json(_point_payload(X))
    return EXIT_OK


def _cmd_design_verify(args) -> int:
    X = _load_points(args)
    check_fn = is_t_design_moments if args.method == "moments" else is_t_design_harmonic
    check = check_fn(X, args.t, args.tolerance)
    worst = check.worst
    if isinstance(worst, tuple):
        worst = list(worst)
    _print_json({
        "is_design": check.is_design,
        "max_residual": check.max_residual,
        "method": args.method,
        "points": X.size,
        "t": args.t,
        "worst": worst,
    })
    return EXIT_OK if check.is_design else EXIT_FALSE


def _cmd_distances(args) -> int:
    X = _load_points(args)
    spectrum = distance_spectrum(X, args.tolerance)
    _print_json({"distances": list(spectrum.distances), "points": X.size, "s": spectrum.s})
    return EXIT_OK


def _cmd_known(args) -> int:
    X = known_configuration(args.name)
    if args.out:
        save_point_set(X, args.out)
        _print_json({"dimension": X.dimension, "name": args.name, "out": args.out,
                     "points": X.size})
    else:
        _print_json(_point_payload(X))
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    cache = open_cache(args.cache)
    config = _config(args)
    if args.table == "tau3-formula":
        report = reproduce_tau3_formula(args.n_from, args.n_to, config, cache)
    else:
        report = reproduce_table(args.table, args.n_from, args.n_to, config, cache)
    partial = any(not row.exhaustive for row in report.rows)
    header = ["n", "published", "computed", "match", "witness", "nodes", "millis", "exhaustive"]
    csv_rows = [
        [row.n, row.published, row.computed, str(row.match).lower(),
         ";".join(str(v) for v in row.witness) if row.witness is not None else "",
         row.nodes, row.millis, str(row.exhaustive).lower()]
        for row in report.rows
    ]
    if args.format == "csv":
        text = _csv_text(header, csv_rows)
    else:
        json_rows = [
            {
                "computed": row.computed,
                "exhaustive": row.exhaustive,
                "match": row.match,
                "millis": row.millis,
                "n": row.n,
                "nodes": row.nodes,
                "published": row.published,
                "witness": ";".join(str(v) for v in row.witness)
                if row.witness is not None else None,
            }
            for row in report.rows
        ]
        text = json.dumps(
            {
                "kind": report.kind,
                "mismatches": list(report.mismatches),
                "parameter": report.parameter,
                "partial": partial,
                "provenance": _provenance(args),
                "rows": json_rows,
                "skipped": list(report.skipped),
                "table": report.table,
            },
            sort_keys=True,
        ) + "\n"
    _deliver(text, args.out)
    if args.out:
        figure = None
        if not args.no_figure:
            from .plotting import save_reproduction_figure

            figure = os.path.splitext(args.out)[0] + ".png"
            save_reproduction_figure(report, figure)
        _print_json({"figure": figure, "mismatches": list(report.mismatches),
                     "out": args.out, "partial": partial, "rows": len(report.rows),
                     "skipped": list(report.skipped)})
    if partial:
        return EXIT_BUDGET
    return EXIT_FALSE if report.mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumsphere",
        description="Exact searches and verifications for signed sumsets and spherical designs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="elements of the h-fold signed sumset")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--cumulative", action="store_true")
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_sumset)

    p = sub.add_parser("independent", help="test t-independence of a set")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(handler=_cmd_independent)

    p = sub.add_parser("spanning", help="test s-spanning of a set")
    p.add_argument("--group", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(handler=_cmd_spanning)

    p = sub.add_parser("tau", help="largest t-independent set size")
    p.add_argument("--group", required=True)
    p.add_argument("--t", type=int, required=True)
    _add_search_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_tau)

    p = sub.add_parser("phi", help="smallest s-spanning set size")
    p.add_argument("--group", required=True)
    p.add_argument("--s", type=int, required=True)
    _add_search_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_phi)

    p = sub.add_parser("tau-table", help="tau over a range of cyclic orders")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    _add_search_flags(p)
    _add_output_flags(p, with_out=True)
    p.set_defaults(handler=lambda a: _cmd_table(a, "tau"))

    p = sub.add_parser("phi-table", help="phi over a range of cyclic orders")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    _add_search_flags(p)
    _add_output_flags(p, with_out=True)
    p.set_defaults(handler=lambda a: _cmd_table(a, "phi"))

    p = sub.add_parser("perfect", help="perfect sets of size m at spanning order s")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_search_flags(p)
    p.set_defaults(handler=_cmd_perfect)

    p = sub.add_parser("probe", help="scan for perfect sets with m >= 3, s >= 2")
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--max-s", type=int, default=3)
    p.add_argument("--order-cap", type=int, default=256)
    _add_search_flags(p)
    p.set_defaults(handler=_cmd_probe)

    p = sub.add_parser("bounds", help="evaluate published bounds")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--eps", type=float, default=0.01)
    p.add_argument("--delta", type=float, default=0.01)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("design-build", help="build sphere points from a cyclic subset")
    p.add_argument("--A", required=True, help="subset literal in Z_N, e.g. 1,3")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(handler=_cmd_design_build)

    p = sub.add_parser("design-verify", help="test design strength of a point set")
    p.add_argument("--points", default=None, metavar="FILE")
    p.add_argument("--A", default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("moments", "harmonic"), default="moments")
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(handler=_cmd_design_verify)

    p = sub.add_parser("distances", help="distinct pairwise distances of a point set")
    p.add_argument("--points", default=None, metavar="FILE")
    p.add_argument("--A", default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--tolerance", type=float, default=None)
    p.set_defaults(handler=_cmd_distances)

    p = sub.add_parser("known", help="classical configurations by name")
    p.add_argument("--name", required=True)
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(handler=_cmd_known)

    p = sub.add_parser("reproduce", help="recompute a published table and diff it")
    p.add_argument("--table", required=True,
                   choices=("tau3-formula", "tau4", "tau5", "tau6", "phi2"))
    p.add_argument("--n-from", type=int, default=None)
    p.add_argument("--n-to", type=int, default=None)
    _add_search_flags(p)
    _add_output_flags(p, with_out=True)
    p.set_defaults(handler=_cmd_reproduce)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE


def main(argv=None) -> int:
    try:
        return run(argv)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
