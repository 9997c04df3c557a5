"""Command-line front end emitting CSV (default) or JSON for every analysis.

Verbs: census, farey, approx, compare, colinear, fib, extended.
Exit codes: 0 success, 1 computation error (cap exceeded, loop cap hit),
2 usage error.  Output is deterministic: identical invocations produce
byte-identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import census as census_mod
from . import geometry
from .approximation import (
    CONTINUED_FRACTION,
    DEFAULT_MAX_LOOPS,
    Target,
    cf_expand,
    compare_tracks,
    farey_approximate,
    fibonacci_lucas_track,
    random_reduced_fractions,
)
from .errors import MediantError
from .fraction import (
    Fraction,
    NeighbourPair,
    fixed_decimal,
    parse_decimal,
    significant_decimal,
)

TABLE1_PERCENT_PLACES = 4  # percent values are printed with 4 decimals
CSV_SIGNIFICANT_DIGITS = 12


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _decimal_text(text: str) -> str:
    try:
        parse_decimal(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


def _seed_pair(text: str) -> NeighbourPair:
    try:
        return NeighbourPair.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _anchor(text: str) -> tuple[int, int]:
    if text == "0,0":
        return geometry.ORIGIN
    if text == "1,1":
        return geometry.ONES
    raise argparse.ArgumentTypeError("anchor must be 0,0 or 1,1")


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------


def _record_json(record) -> dict:
    return {
        "p": record.fraction.p,
        "q": record.fraction.q,
        "t": record.t,
        "p_pct": str(record.p_pct),
        "t_norm": str(record.t_norm) if record.t_norm is not None else None,
        "rnf": str(record.rnf),
    }


def _record_csv_row(record) -> list[str]:
    return [
        str(record.fraction.p),
        str(record.fraction.q),
        significant_decimal(record.fraction, CSV_SIGNIFICANT_DIGITS),
        str(record.t),
        significant_decimal(record.p_pct, CSV_SIGNIFICANT_DIGITS),
        (
            significant_decimal(record.t_norm, CSV_SIGNIFICANT_DIGITS)
            if record.t_norm is not None
            else ""
        ),
        significant_decimal(record.rnf, CSV_SIGNIFICANT_DIGITS),
    ]


def _track_json(track, target: Target, coefficients=None) -> dict:
    doc = {
        "method": "cf" if track.method == CONTINUED_FRACTION else "farey",
        "target": str(target.value),
        "epsilon": str(target.epsilon),
        "steps": [str(s) for s in track.steps],
        "loop": track.loop_count,
    }
    if coefficients is not None:
        doc["coefficients"] = list(coefficients.coefficients)
    return doc


def _group_json(group) -> dict:
    return {
        "anchor": list(group.anchor),
        "slope": str(group.slope),
        "members": [
            {"fraction": str(m.source), "x": str(m.x), "y": str(m.y)}
            for m in group.members
        ],
    }


def _compare_json(report) -> dict:
    return {
        "target": str(report.target),
        "epsilon": str(report.epsilon),
        "farey": {
            "steps": [str(s) for s in report.farey_track.steps],
            "loop": report.farey_track.loop_count,
            "final": str(report.farey_final),
            "error": str(report.farey_error),
        },
        "cf": {
            "coefficients": list(report.cf_coefficients.coefficients),
            "convergents": [str(s) for s in report.cf_track.steps],
            "loop": report.cf_track.loop_count,
            "final": str(report.cf_final) if report.cf_final is not None else None,
            "error": str(report.cf_error) if report.cf_error is not None else None,
        },
        "subsequence_ok": report.subsequence_ok,
        "loop_difference": report.loop_difference,
    }


def _compare_csv_row(report) -> list[str]:
    return [
        str(report.target),
        str(report.epsilon),
        str(report.farey_track.loop_count),
        str(report.cf_track.loop_count),
        str(report.loop_difference),
        str(report.subsequence_ok).lower(),
        str(report.farey_final),
        str(report.farey_error),
        str(report.cf_final) if report.cf_final is not None else "",
        str(report.cf_error) if report.cf_error is not None else "",
    ]


_COMPARE_CSV_HEADER = [
    "target",
    "epsilon",
    "farey_loop",
    "cf_loop",
    "loop_difference",
    "subsequence_ok",
    "farey_final",
    "farey_error",
    "cf_final",
    "cf_error",
]


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# verb handlers
# ---------------------------------------------------------------------------


def _census_like(args, build_census, extended: bool) -> int:
    kappa = args.kappa
    if args.table1:
        top = args.top or 4
        rows = []
        for n in range(1, top + 1):
            pct = census_mod.percentage(Fraction(1, n), kappa)
            percent = Fraction(100 * pct.p, pct.q)
            rows.append(["1", str(n), fixed_decimal(percent, TABLE1_PERCENT_PLACES)])
        if args.format == "json":
            doc = {
                "kappa": kappa,
                "rows": [
                    {"p": 1, "q": int(r[1]), "p_pct_x100": r[2]} for r in rows
                ],
            }
            _emit(args, _json_text(doc))
        else:
            _emit(args, _csv_text(["p", "q", "P_pct"], rows))
        return 0

    if args.table2:
        top = args.top or 33
        records = census_mod.top_records_by_rnf(kappa, top)
        rows = [
            [
                str(r.fraction.p),
                str(r.fraction.q),
                str(r.t),
                "1" if r.fraction.q == 1 else f"1/{r.fraction.q}",
            ]
            for r in records
        ]
        if args.format == "json":
            doc = {"kappa": kappa, "records": [_record_json(r) for r in records]}
            _emit(args, _json_text(doc))
        else:
            _emit(args, _csv_text(["p", "q", "T", "RNF"], rows))
        return 0

    cen = build_census(kappa)
    records = cen.records
    if args.top:
        if extended:
            ranked = sorted(
                records, key=lambda r: (max(r.fraction.p, r.fraction.q), r.fraction)
            )
            records = tuple(ranked[: args.top])
        else:
            records = tuple(census_mod.top_records_by_rnf(kappa, args.top))
    if args.format == "json":
        doc = {"kappa": kappa, "records": [_record_json(r) for r in records]}
        _emit(args, _json_text(doc))
    else:
        header = ["p", "q", "x", "T", "P", "Tnorm", "RNF"]
        _emit(args, _csv_text(header, (_record_csv_row(r) for r in records)))
    return 0


def _run_census(args) -> int:
    return _census_like(args, census_mod.closed_form_census, extended=False)


def _run_extended(args) -> int:
    return _census_like(args, census_mod.extended_trial, extended=True)


def _run_farey(args) -> int:
    sequence = census_mod.farey_sequence(args.order)
    if args.format == "json":
        doc = {"order": args.order, "fractions": [str(f) for f in sequence]}
        _emit(args, _json_text(doc))
    else:
        _emit(args, ",".join(str(f) for f in sequence) + "\n")
    return 0


def _run_approx(args) -> int:
    target = Target.from_strings(args.target, args.epsilon)
    docs = []
    rows = []
    if args.method in ("farey", "both"):
        track = farey_approximate(target, max_loops=args.max_loops)
        docs.append(_track_json(track, target))
        rows.extend(
            ["farey", str(i), str(step), str(track.loop_count)]
            for i, step in enumerate(track.steps, start=1)
        )
    if args.method in ("cf", "both"):
        expansion, track = cf_expand(
            target, fast=args.fast_cf, max_loops=args.max_loops
        )
        docs.append(_track_json(track, target, coefficients=expansion))
        rows.extend(
            ["cf", str(i), str(step), str(track.loop_count)]
            for i, step in enumerate(track.steps, start=1)
        )
    if args.format == "json":
        _emit(args, _json_text(docs if len(docs) > 1 else docs[0]))
    else:
        _emit(args, _csv_text(["method", "step", "fraction", "loop"], rows))
    return 0


def _run_compare(args) -> int:
    if args.fuzz:
        targets = random_reduced_fractions(args.fuzz, args.max_q, seed=args.seed)
        epsilon = parse_decimal(args.epsilon)
        reports = [
            compare_tracks(Target(value, epsilon), max_loops=args.max_loops)
            for value in targets
        ]
        if args.format == "json":
            doc = {
                "count": len(reports),
                "seed": args.seed,
                "max_q": args.max_q,
                "epsilon": str(epsilon),
                "all_subsequence_ok": all(r.subsequence_ok for r in reports),
                "min_loop_difference": min(r.loop_difference for r in reports),
                "max_loop_difference": max(r.loop_difference for r in reports),
                "results": [_compare_json(r) for r in reports],
            }
            _emit(args, _json_text(doc))
        else:
            _emit(
                args,
                _csv_text(
                    _COMPARE_CSV_HEADER, (_compare_csv_row(r) for r in reports)
                ),
            )
        return 0

    if not args.target:
        raise MediantError("compare needs --target (or --fuzz N)")
    report = compare_tracks(
        Target.from_strings(args.target, args.epsilon), max_loops=args.max_loops
    )
    if args.format == "json":
        _emit(args, _json_text(_compare_json(report)))
    else:
        _emit(args, _csv_text(_COMPARE_CSV_HEADER, [_compare_csv_row(report)]))
    return 0


def _run_colinear(args) -> int:
    if args.anchor == geometry.ORIGIN:
        groups = geometry.classify_category_a(args.kappa)
    else:
        groups = geometry.classify_category_b(args.kappa)
    if args.format == "json":
        doc = {
            "kappa": args.kappa,
            "anchor": list(args.anchor),
            "groups": [_group_json(g) for g in groups],
        }
        if args.anchor == geometry.ONES:
            doc["integer_slope_forms"] = {
                str(slope): forms
                for slope, forms in sorted(
                    geometry.integer_slope_forms(groups).items()
                )
            }
        _emit(args, _json_text(doc))
    else:
        rows = [
            [str(g.slope), str(m.source.p), str(m.source.q), str(m.x), str(m.y)]
            for g in groups
            for m in g.members
        ]
        _emit(args, _csv_text(["slope", "p", "q", "x", "y"], rows))
    return 0


def _run_fib(args) -> int:
    track = fibonacci_lucas_track(args.seed, args.steps)
    if args.format == "json":
        doc = {
            "seed": [str(args.seed.lo), str(args.seed.hi)],
            "steps": args.steps,
            "track": [str(f) for f in track],
        }
        _emit(args, _json_text(doc))
    else:
        _emit(args, ",".join(str(f) for f in track) + "\n")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub) -> None:
    sub.add_argument(
        "--format", choices=("csv", "json"), default="csv", help="output format"
    )
    sub.add_argument("--output", help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mediant",
        description=(
            "Exact census of reduced fractions on [0,1], Farey sequences, "
            "mediant/continued-fraction approximation, and collinearity "
            "analysis"
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    census = sub.add_parser("census", help="frequency census of [0,1]")
    census.add_argument("--kappa", type=_positive_int, required=True)
    census.add_argument("--top", type=_positive_int)
    table = census.add_mutually_exclusive_group()
    table.add_argument(
        "--table1", action="store_true", help="percent table for 1/1..1/N"
    )
    table.add_argument(
        "--table2", action="store_true", help="top records by limiting frequency"
    )
    _add_common(census)

    extended = sub.add_parser(
        "extended", help="census over all non-negative values up to kappa"
    )
    extended.add_argument("--kappa", type=_positive_int, required=True)
    extended.add_argument("--top", type=_positive_int)
    extended.set_defaults(table1=False, table2=False)
    _add_common(extended)

    farey = sub.add_parser("farey", help="Farey sequence of a given order")
    farey.add_argument("--order", type=_positive_int, required=True)
    _add_common(farey)

    approx = sub.add_parser("approx", help="approximate a decimal in [0,1]")
    approx.add_argument("--target", type=_decimal_text, required=True)
    approx.add_argument("--epsilon", type=_decimal_text, required=True)
    approx.add_argument(
        "--method", choices=("farey", "cf", "both"), default="both"
    )
    approx.add_argument("--max-loops", type=_positive_int, default=DEFAULT_MAX_LOOPS)
    approx.add_argument(
        "--fast-cf",
        action="store_true",
        help="division-based inner loop (identical output)",
    )
    _add_common(approx)

    compare = sub.add_parser("compare", help="run both engines side by side")
    compare.add_argument("--target", type=_decimal_text)
    compare.add_argument("--epsilon", type=_decimal_text, required=True)
    compare.add_argument("--max-loops", type=_positive_int, default=DEFAULT_MAX_LOOPS)
    compare.add_argument(
        "--fuzz", type=_positive_int, help="compare on N random reduced targets"
    )
    compare.add_argument("--max-q", type=_positive_int, default=500)
    compare.add_argument("--seed", type=int, default=0)
    _add_common(compare)

    colinear = sub.add_parser("colinear", help="collinear ray groups")
    colinear.add_argument("--kappa", type=_positive_int, required=True)
    colinear.add_argument("--anchor", type=_anchor, required=True)
    _add_common(colinear)

    fib = sub.add_parser("fib", help="zigzag mediant track from a neighbour pair")
    fib.add_argument("--seed", type=_seed_pair, required=True)
    fib.add_argument("--steps", type=_positive_int, required=True)
    _add_common(fib)

    return parser


_HANDLERS = {
    "census": _run_census,
    "extended": _run_extended,
    "farey": _run_farey,
    "approx": _run_approx,
    "compare": _run_compare,
    "colinear": _run_colinear,
    "fib": _run_fib,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.verb](args)
    except MediantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
