"""Command-line driver.

Exit codes: 0 success / all checks pass, 1 a check failed or the engine
refused, 2 usage error, 3 inconclusive with nothing failing.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from pathlib import Path
from typing import List, Optional

from . import cache
from .errors import AlgebraError, InvalidInputError
from .invariants import TruncatedSeries, gk_estimate, hilbert_truncation, total_dimension
from .koszul import DEFAULT_MAX_COLUMNS, ext_table, p_koszul_bound
from .ncpoly import MonomialOrder
from .partitions import dn_hilbert_closed_form, partitions_csv
from .quadratic import FAMILIES, Presentation, catalog, dual_presentation, parse_presentation
from .rewrite import ReductionSystem, complete
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_presentation(args) -> Presentation:
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}")
        return parse_presentation(text)
    if not args.algebra:
        raise UsageError("give --algebra NAME or --file PATH")
    return catalog(args.algebra, args.n)


def _parse_order(pres: Presentation, text: Optional[str]) -> MonomialOrder:
    if not text:
        return MonomialOrder(pres.gens)
    labels = [t for t in re.split(r"[\s,<]+", text) if t]
    return MonomialOrder.from_labels(pres.gens, labels)


def _complete_cached(pres: Presentation, order: MonomialOrder, degree: int, use_cache: bool,
                     max_rules: Optional[int] = None) -> ReductionSystem:
    key = cache.cache_key(pres.digest(), order, degree)
    if use_cache:
        hit = cache.load(key, order)
        if hit is not None:
            logging.getLogger(__name__).info("cache hit %s", key[:12])
            return hit
    sys_ = complete(pres, order, degree, max_rules=max_rules)
    if use_cache:
        try:
            cache.save(sys_, key)
        except OSError as exc:
            logging.getLogger(__name__).warning("could not write cache: %s", exc)
    return sys_


def _emit(args, obj: dict, text: str, csv_rows: Optional[List[list]] = None):
    fmt = args.format
    if getattr(args, "json", False):
        fmt = "json"
    if getattr(args, "csv", False):
        fmt = "csv"
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    elif fmt == "csv":
        if csv_rows is None:
            raise UsageError("this command has no CSV output")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(csv_rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


# ---------------------------------------------------------------------------
# commands


def cmd_gb(args) -> int:
    pres = _load_presentation(args)
    order = _parse_order(pres, args.order)
    s = _complete_cached(pres, order, args.degree, not args.no_cache, args.max_rules)
    status = "terminated" if s.terminated else f"truncated (exact through degree {s.complete_to})"
    rules = s.rule_table()
    text = "\n".join([f"{pres.name}: {len(rules)} rules, {status}", repr(order)] + rules)
    obj = {
        "algebra": pres.name,
        "order": repr(order),
        "degree": args.degree,
        "terminated": s.terminated,
        "rules": rules,
    }
    _emit(args, obj, text, [["lhs", "rhs"]] + [r.split(" -> ") for r in rules])
    return EXIT_OK


def _series_out(args, name: str, series: TruncatedSeries, extra: dict) -> None:
    obj = {"algebra": name, "series": list(series), **extra}
    rows = [["degree", "dimension"]] + [[d, h] for d, h in enumerate(series)]
    if args.format == "table":
        text = "\n".join(f"{d:>6}  {h}" for d, h in enumerate(series))
    else:
        text = str(series)
    _emit(args, obj, text, rows)


def cmd_hilbert(args) -> int:
    if args.closed_form:
        if (args.algebra or "").lower() not in ("d", "dn"):
            raise UsageError("--closed-form is only available for the commutative family dn")
        if args.n is None or args.n < 2:
            raise InvalidInputError("n must be >= 2")
        series = dn_hilbert_closed_form(args.n, args.degree)
        name = f"D_{args.n}"
        source = "closed form"
    else:
        pres = _load_presentation(args)
        order = _parse_order(pres, args.order)
        if not pres.homogeneous:
            s = _complete_cached(pres, order, args.degree, not args.no_cache, args.max_rules)
            if not s.terminated:
                print(f"{pres.name}: not terminated by degree {args.degree}; total dimension unknown")
                return EXIT_INCONCLUSIVE
            dim = total_dimension(s)
            _emit(args, {"algebra": pres.name, "total_dimension": dim, "terminated": True},
                  f"total dimension {dim} (terminated)", [["total_dimension"], [dim]])
            return EXIT_OK
        s = _complete_cached(pres, order, args.degree, not args.no_cache, args.max_rules)
        series = hilbert_truncation(s, args.degree)
        name = pres.name
        source = "rewriting"
    extra = {"degree": args.degree, "source": source}
    if args.substitute == "t2":
        series = series.substitute_power(2)
        extra["substitution"] = "t -> t^2"
    if args.gk:
        est = gk_estimate(series, args.tail)
        extra["gk"] = {"degree": est.degree, "stable": est.stable, "window": list(est.window)}
        _series_out(args, name, series, extra)
        if args.format != "json" and not args.json and not args.csv:
            print(str(est))
        return EXIT_OK if est.stable else EXIT_INCONCLUSIVE
    _series_out(args, name, series, extra)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "list":
        for sid, s in SUITES.items():
            print(f"{sid:28} {s.summary}")
        return EXIT_OK
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; run 'verify list'")
    rep = run_suite(args.suite, args.n, args.degree)
    if args.json or args.format == "json":
        print(rep.to_json(timing=args.timing))
    else:
        print(rep.text())
        if args.timing:
            print(f"wall time {rep.wall_time:.2f}s")
    return rep.exit_code


def cmd_ext(args) -> int:
    pres = _load_presentation(args)
    order = _parse_order(pres, args.order)
    s = _complete_cached(pres, order, args.J, not args.no_cache)
    t = ext_table(s, args.I, args.J, name=pres.name, max_columns=args.max_columns)
    bound = p_koszul_bound(t)
    obj = t.to_dict()
    obj["p_koszul"] = {"p": bound.p, "at_least": bound.at_least,
                       "violation": list(bound.violation) if bound.violation else None}
    rows = [["i", "j", "dim"]] + [[i, j, t[i, j]] for i in range(1, t.I + 1) for j in range(1, t.J + 1)]
    _emit(args, obj, t.grid() + f"\np-Koszul bound: {bound}", rows)
    return EXIT_OK


def cmd_dual(args) -> int:
    pres = _load_presentation(args)
    print(dual_presentation(pres).to_text())
    return EXIT_OK


def cmd_partitions(args) -> int:
    sys.stdout.write(partitions_csv(args.n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    p = argparse.ArgumentParser(prog="fkdual", description="Graded algebra workbench over the rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_opts(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--algebra", help=f"catalog family ({', '.join(FAMILIES)})")
        g.add_argument("--file", help="presentation file")
        sp.add_argument("--n", type=int, help="number of indices for indexed families")
        sp.add_argument("--order", help="generator labels from smallest to largest, e.g. 'a<b<c'")
        sp.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    def out_opts(sp):
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--csv", action="store_true")
        sp.add_argument("--format", choices=["text", "table", "json", "csv"], default="text")

    gb = sub.add_parser("gb", parents=[common], help="complete a presentation and list the rewrite rules")
    algebra_opts(gb)
    gb.add_argument("--degree", type=int, default=8)
    gb.add_argument("--max-rules", type=int)
    out_opts(gb)
    gb.set_defaults(func=cmd_gb)

    hb = sub.add_parser("hilbert", parents=[common], help="Hilbert series truncation or total dimension")
    algebra_opts(hb)
    hb.add_argument("--degree", type=int, default=8)
    hb.add_argument("--max-rules", type=int)
    hb.add_argument("--closed-form", action="store_true", help="use the set-partition formula (dn only)")
    hb.add_argument("--substitute", choices=["t2"], help="report the series in t^2")
    hb.add_argument("--gk", action="store_true", help="also estimate the growth degree")
    hb.add_argument("--tail", type=int, default=6)
    out_opts(hb)
    hb.set_defaults(func=cmd_hilbert)

    vf = sub.add_parser("verify", parents=[common], help="run a named verification suite ('list' to show them)")
    vf.add_argument("suite")
    vf.add_argument("--n", type=int)
    vf.add_argument("--degree", type=int)
    vf.add_argument("--timing", action="store_true", help="include wall time in the output")
    out_opts(vf)
    vf.set_defaults(func=cmd_verify)

    ex = sub.add_parser("ext", parents=[common], help="bigraded Ext dimension table")
    algebra_opts(ex)
    ex.add_argument("--I", type=int, default=4)
    ex.add_argument("--J", type=int, default=6)
    ex.add_argument("--max-columns", type=int, default=DEFAULT_MAX_COLUMNS)
    out_opts(ex)
    ex.set_defaults(func=cmd_ext)

    du = sub.add_parser("dual", parents=[common], help="print the quadratic dual presentation")
    algebra_opts(du)
    du.set_defaults(func=cmd_dual)

    pa = sub.add_parser("partitions", parents=[common], help="CSV of set partitions with their statistics")
    pa.add_argument("--n", type=int, required=True)
    pa.set_defaults(func=cmd_partitions)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, InvalidInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
