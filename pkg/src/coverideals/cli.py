"""Command-line interface.

Subcommands::

    gens           minimal generators of the order-t cover ideal of a graph
    check-cwl      componentwise-linearity verdict (exit 0 yes / 1 no)
    betti          coarse and multigraded Betti tables
    quotients      linear-quotients certificate for a generator ordering
    polymatroidal  exchange-condition check per degree component
    search         sweep graphs in range and report verdicts

Graphs come from ``--graph FILE`` (format: ``graph <n>`` then ``u v`` lines),
``--complete N`` or ``--counterexample``; ideal-consuming commands also accept
``--ideal FILE`` (format: ``vars <n>`` then one monomial per line, e.g.
``x1^2*x3``).  Exit codes: 0 property holds, 1 property fails, 2 usage or
input error, 3 capacity or budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import textwrap

from .errors import CapacityError, DimensionError, NotEquigeneratedError
from .graphs import (
    SimpleGraph,
    complete_graph,
    counterexample_graph,
    cover_ideal,
    knt_closed_form,
    load_graph,
    theorem_order,
)
from .monomials import MonomialIdeal, format_monomial, load_ideal
from .resolution import (
    DEFAULT_TAYLOR_CAP,
    betti_table,
    find_linear_quotient_order,
    is_componentwise_linear,
    linear_quotients_check,
    parse_field,
    polymatroidal_check,
)
from .search import SweepConfig, sweep, to_csv, to_jsonl


def _add_graph_source(parser: argparse.ArgumentParser, with_ideal: bool) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE", help="graph file")
    group.add_argument("--complete", type=int, metavar="N", help="complete graph K_N")
    group.add_argument(
        "--counterexample",
        action="store_true",
        help="the 4-vertex chordal graph with edges ab,ac,bc,bd,cd",
    )
    if with_ideal:
        group.add_argument("--ideal", metavar="FILE", help="ideal file")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--field",
        default=os.environ.get("CWL_FIELD", "Q"),
        help="coefficient field: Q (default) or a prime p / Fp",
    )
    parser.add_argument(
        "--format", choices=("table", "json"), default="table", help="output format"
    )


def _resolve_graph(args) -> SimpleGraph:
    if args.complete is not None:
        return complete_graph(args.complete)
    if args.counterexample:
        return counterexample_graph()
    return load_graph(args.graph)


def _resolve_ideal(args) -> MonomialIdeal:
    if getattr(args, "ideal", None):
        if args.t is not None:
            raise ValueError("--t only applies to graph sources")
        return load_ideal(args.ideal)
    if args.t is None:
        raise ValueError("graph sources need --t")
    return cover_ideal(_resolve_graph(args), args.t)


def _wrap(items: list[str]) -> str:
    return textwrap.fill(
        ", ".join(items), width=80, initial_indent="  ", subsequent_indent="  "
    )


def _cmd_gens(args) -> int:
    if args.t is None or args.t < 1:
        raise ValueError("gens needs --t >= 1")
    if args.closed_form:
        if args.complete is None:
            raise ValueError("--closed-form applies to --complete graphs only")
        ideal = knt_closed_form(args.complete, args.t)
    else:
        G = _resolve_graph(args)
        method = "t_covers" if args.method == "t-covers" else "iterated_intersection"
        ideal = cover_ideal(G, args.t, method=method)
    gens = [format_monomial(g) for g in ideal.generators]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "vars": ideal.nvars,
                    "t": args.t,
                    "count": len(gens),
                    "generators": gens,
                },
                sort_keys=True,
            )
        )
    else:
        print(f"{len(gens)} minimal generators (vars x1..x{ideal.nvars}, t={args.t}):")
        print(_wrap(gens))
    return 0


def _cmd_check_cwl(args) -> int:
    field = parse_field(args.field)
    ideal = _resolve_ideal(args)
    report = is_componentwise_linear(
        ideal, field, engine=args.engine, extra_degrees=args.extra_degrees
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    else:
        for v in report.verdicts:
            line = f"degree {v.degree}: {v.status}"
            if v.offending:
                line += f" (offending beta at i={v.offending[0]}, j={v.offending[1]})"
            print(line)
        print(
            "componentwise linear"
            if report.overall
            else f"NOT componentwise linear (first failure at degree {report.failing_degree()})"
        )
        if report.certificate:
            print("linear-quotients certificate:")
            print(_wrap([str(m) for m in report.certificate]))
    return 0 if report.overall else 1


def _cmd_betti(args) -> int:
    field = parse_field(args.field)
    ideal = _resolve_ideal(args)
    if args.component is not None:
        ideal = ideal.component(args.component)
    table = betti_table(ideal, field, engine=args.engine, taylor_cap=args.taylor_cap)
    if args.format == "json":
        out = table.to_json_dict()
        if not args.multigraded:
            del out["multigraded"]
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"coarse Betti numbers over {field.label}:")
        for i, j, r in table.coarse_entries():
            print(f"  beta[{i},{j}] = {r}")
        if args.multigraded:
            print("multigraded:")
            for i, _, a, r in sorted(
                (i, sum(a), a, r) for (i, a), r in table.multigraded.items()
            ):
                print(f"  beta[{i},{a}] = {r}")
    return 0


def _cmd_quotients(args) -> int:
    if args.order == "theorem":
        if args.complete is None:
            raise ValueError("--order theorem applies to --complete graphs only")
        if args.t is None:
            raise ValueError("--order theorem needs --t")
        order = theorem_order(args.complete, args.t)
        result = linear_quotients_check(order)
    else:
        ideal = _resolve_ideal(args)
        strategy = args.order  # deglex | backtracking
        order = find_linear_quotient_order(ideal, strategy=strategy)
        if order is None:
            # rerun the deglex listing for a concrete failing step to report
            probe = linear_quotients_check(list(ideal.generators))
            if args.format == "json":
                print(
                    json.dumps(
                        {
                            "ok": False,
                            "order": None,
                            "failing_index": probe.failing_index,
                            "offending": (
                                str(probe.offending) if probe.offending else None
                            ),
                        },
                        sort_keys=True,
                    )
                )
            else:
                print(f"no linear-quotients order found (strategy {strategy})")
                if probe.failing_index:
                    print(
                        f"deglex order fails at position {probe.failing_index}: "
                        f"colon generator {probe.offending} has degree != 1"
                    )
            return 1
        result = linear_quotients_check(order)
    if args.format == "json":
        out = {
            "ok": result.ok,
            "order": [str(m) for m in order],
            "steps": [[str(m) for m in step] for step in result.steps],
        }
        if not result.ok:
            out["failing_index"] = result.failing_index
            out["offending"] = str(result.offending)
        print(json.dumps(out, sort_keys=True))
    else:
        if result.ok:
            print("linear quotients hold for the order:")
            print(_wrap([str(m) for m in order]))
            for k, step in enumerate(result.steps, start=2):
                print(f"  step {k}: colon = <{', '.join(str(m) for m in step)}>")
        else:
            print(
                f"order fails at position {result.failing_index}: colon generator "
                f"{result.offending} has degree != 1"
            )
    return 0 if result.ok else 1


def _cmd_polymatroidal(args) -> int:
    ideal = _resolve_ideal(args)
    if ideal.is_zero():
        raise ValueError("zero ideal has no degree components to check")
    if args.component is not None:
        degrees = [args.component]
    else:
        degrees = list(range(ideal.min_degree(), ideal.max_degree() + 1))
    results = []
    overall = True
    for d in degrees:
        comp = ideal.component(d)
        if comp.is_zero():
            results.append({"degree": d, "ok": True, "witness": None, "zero": True})
            continue
        ok, witness = polymatroidal_check(comp)
        overall &= ok
        results.append(
            {
                "degree": d,
                "ok": ok,
                "witness": (
                    None
                    if witness is None
                    else {
                        "u": str(witness[0]),
                        "v": str(witness[1]),
                        "i": witness[2],
                    }
                ),
            }
        )
    if args.format == "json":
        print(json.dumps({"overall": overall, "components": results}, sort_keys=True))
    else:
        for row in results:
            line = f"degree {row['degree']}: {'exchange holds' if row['ok'] else 'FAILS'}"
            if row["witness"]:
                w = row["witness"]
                line += f" (witness u={w['u']}, v={w['v']}, i={w['i']})"
            print(line)
    return 0 if overall else 1


def _parse_t_set(text: str) -> tuple[int, ...]:
    return tuple(sorted({int(part) for part in text.split(",") if part.strip()}))


def _cmd_search(args) -> int:
    field = parse_field(args.field)
    n_min = args.n if args.n is not None else args.n_min
    n_max = args.n if args.n is not None else args.n_max
    config = SweepConfig(
        n_min=n_min,
        n_max=n_max,
        t_set=_parse_t_set(args.t),
        chordal_only=args.chordal_only,
        connected_only=args.connected_only,
        complete_only=args.complete_only,
        field=field,
        row_budget_s=args.budget,
    )
    records, summary = sweep(config)
    include_timing = not args.no_timing
    if args.search_format == "csv":
        sys.stdout.write(to_csv(records, summary, include_timing))
    else:
        sys.stdout.write(to_jsonl(records, summary, include_timing))
    failures = sum(1 for rec in records if rec.status == "ok" and rec.cwl is False)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coverideals",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gens", help="minimal generators of the cover ideal")
    _add_graph_source(p, with_ideal=False)
    p.add_argument("--t", type=int, help="cover order t >= 1")
    p.add_argument(
        "--closed-form",
        action="store_true",
        help="use the complete-graph closed form instead of intersecting",
    )
    p.add_argument(
        "--method",
        choices=("intersection", "t-covers"),
        default="intersection",
        help="generator construction route",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_gens)

    p = sub.add_parser("check-cwl", help="componentwise linearity verdict")
    _add_graph_source(p, with_ideal=True)
    p.add_argument("--t", type=int, help="cover order (graph sources)")
    p.add_argument("--engine", choices=("auto", "taylor", "koszul"), default="auto")
    p.add_argument(
        "--extra-degrees",
        type=int,
        default=0,
        metavar="K",
        help="check K degrees past the top generator degree",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_check_cwl)

    p = sub.add_parser("betti", help="Betti tables")
    _add_graph_source(p, with_ideal=True)
    p.add_argument("--t", type=int, help="cover order (graph sources)")
    p.add_argument("--component", type=int, metavar="D", help="restrict to degree D")
    p.add_argument("--multigraded", action="store_true", help="include multidegrees")
    p.add_argument("--engine", choices=("auto", "taylor", "koszul"), default="auto")
    p.add_argument("--taylor-cap", type=int, default=DEFAULT_TAYLOR_CAP)
    _add_common(p)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("quotients", help="linear-quotients certificate")
    _add_graph_source(p, with_ideal=True)
    p.add_argument("--t", type=int, help="cover order (graph sources)")
    p.add_argument(
        "--order",
        choices=("deglex", "theorem", "backtracking"),
        default="deglex",
        help="ordering to certify",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_quotients)

    p = sub.add_parser("polymatroidal", help="exchange condition per component")
    _add_graph_source(p, with_ideal=True)
    p.add_argument("--t", type=int, help="cover order (graph sources)")
    p.add_argument("--component", type=int, metavar="D", help="single degree D")
    _add_common(p)
    p.set_defaults(func=_cmd_polymatroidal)

    p = sub.add_parser("search", help="sweep graphs and report verdicts")
    p.add_argument("--n", type=int, help="single vertex count")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--t", default="1", help="comma-separated t values")
    p.add_argument("--chordal-only", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--complete-only", action="store_true")
    p.add_argument(
        "--format",
        dest="search_format",
        choices=("jsonl", "json", "csv"),
        default="jsonl",
        help="json is an alias for jsonl",
    )
    p.add_argument("--no-timing", action="store_true", help="omit wall times")
    p.add_argument("--budget", type=float, default=30.0, help="per-row seconds")
    p.add_argument("--field", default=os.environ.get("CWL_FIELD", "Q"))
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, DimensionError, NotEquigeneratedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
