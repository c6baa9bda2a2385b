"""Command-line interface: ``sga <command> ...``."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .classification import Label, theorem_a_report
from .errors import GroupError
from .groupid import normalize, parse_group
from .invariants import invariants
from .oracle import min_corefree_index, oracle_fixture, oracle_fixtures
from .verify import (
    CLAUSES,
    SweepReport,
    exponent_ratio,
    iter_sweep,
    parse_family,
    remark_psl_n2,
    tightness_limit,
    tightness_report,
)


def _emit(args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        print("\n".join(lines))


def cmd_info(args) -> int:
    canon = normalize(parse_group(args.group))
    inv = invariants(canon.key)
    rep = theorem_a_report(canon.key)
    payload = {
        "key": str(inv.key),
        "aliases": [str(a) for a in canon.aliases],
        "order": inv.order,
        "mindeg": inv.mindeg,
        "out_order": inv.out_order,
        "out_recipe": str(inv.out_recipe),
        "label": str(rep.label),
        "v": rep.v_index,
        "min_index_ordinary": inv.min_index_ordinary,
        "witnesses": [w.__dict__ for w in inv.witnesses],
    }
    lines = [
        f"group        {inv.key}" + (f"  (aliases: {', '.join(map(str, canon.aliases))})" if len(canon.aliases) > 1 else ""),
        f"order        {inv.order}",
        f"mindeg       {inv.mindeg}",
        f"|Out|        {inv.out_order}  = {inv.out_recipe}",
        f"class        {rep.label}" + (f"  v = {rep.v_index}" if rep.v_index is not None else ""),
        "witnesses:",
    ]
    for w in inv.witnesses:
        kind = "ordinary" if w.ordinary else "not ordinary"
        lines.append(f"  index {w.index:<12} {w.structure}  [{kind}, {w.class_count} class(es)]")
    _emit(args, payload, lines)
    return 0


def cmd_classify(args) -> int:
    rep = theorem_a_report(parse_group(args.group))
    lines = [f"{rep.key}: {rep.label} (clause {rep.clause})", f"mindeg {rep.mindeg}"]
    if rep.label is not Label.NEITHER:
        lines.append(f"v {rep.v_index}")
    lines.append(rep.guaranteed_indices)
    _emit(args, rep.as_dict(), lines)
    return 0


def cmd_verify(args) -> int:
    clauses = CLAUSES if args.clause == "all" else (args.clause,)
    families = [parse_family(f) for f in args.family] if args.family else None
    report = SweepReport(clauses, tuple(f.value for f in families) if families else ("all",), args.n_max, args.q_max)
    writer = None
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["key", "order", "mindeg", "out_order", "label", "v", *clauses])
    for rec in iter_sweep(clauses, families, args.n_max, args.q_max, report):
        if args.json:
            print(json.dumps(rec.as_dict()))
        elif writer is not None:
            d = rec.as_dict()
            writer.writerow([d["key"], d["order"], d["mindeg"], d["out_order"], d["label"],
                             "" if d["v"] is None else d["v"], *("" if v is None else v for v in rec.clauses.values())])
    summary = report.summary()
    if args.json:
        print(json.dumps({"summary": summary}))
    elif writer is None:
        print(f"clauses {','.join(clauses)}: {report.candidates} candidates, {report.passed} passed, "
              f"{report.failed} failed, {report.skipped_total} skipped ({report.wall_time:.2f}s)")
        for reason, count in report.skipped.most_common():
            print(f"  skipped {count:>6}  {reason}")
        if report.excluded:
            print(f"  excluded from the refined bound: {len(report.excluded)}, "
                  f"of which {report.excluded_would_pass} satisfy it anyway")
        for fail in report.failures:
            print(f"  FAIL {fail.clause} {fail.key}: {fail.lhs} vs {fail.rhs}")
    else:
        print(f"# {report.candidates} candidates, {report.passed} passed, {report.failed} failed, "
              f"{report.skipped_total} skipped", file=sys.stderr)
    return 0 if report.all_pass else 1


def cmd_oracle(args) -> int:
    names = list(oracle_fixtures()) if args.fixture == "all" else [oracle_fixture(args.fixture).name]
    ok = True
    for name in names:
        fx = oracle_fixture(name)
        g = fx.group()
        brute = min_corefree_index(g)
        formula = invariants(fx.key).mindeg
        agree = brute == formula
        ok &= agree
        _emit(args, {"fixture": name, "order": g.order, "oracle": brute, "mindeg": formula, "agree": agree},
              [f"{name}: order {g.order}, oracle {brute}, formula {formula} -> {'agree' if agree else 'DISAGREE'}"])
    return 0 if ok else 1


def cmd_remark(args) -> int:
    ev = remark_psl_n2(args.n)
    _emit(args, {"n": ev.n, "index": ev.index, "mindeg": ev.mindeg, "exponent": ev.exponent,
                 "bound": ev.bound, "passed": ev.passed},
          [f"PSL({ev.n},2): |S:M| = {ev.index} {'>' if ev.passed else '<='} "
           f"{ev.mindeg}^{ev.exponent} = {ev.bound}"])
    return 0 if ev.passed else 1


def cmd_tightness(args) -> int:
    rows = tightness_report(args.m, args.f_max)
    limit = tightness_limit(args.m)
    for r in rows:
        _emit(args, {"f": r.f, "mindeg": r.mindeg, "out_order": r.out_order, "lo": str(r.lo),
                     "hi": str(r.hi), "estimate": r.estimate},
              [f"f={r.f:<4} l={r.mindeg:<24} |Out|={r.out_order:<5} ratio~{r.estimate:.6f} "
               f"(limit {float(limit):.6f}, gap {r.estimate - float(limit):+.6f})"])
    return 0


def cmd_ratio(args) -> int:
    key = parse_group(args.group)
    lo, hi = exponent_ratio(key)
    _emit(args, {"key": str(key), "lo": str(lo), "hi": str(hi), "estimate": float((lo + hi) / 2)},
          [f"log|S|/log l(S) for {key}: {float(lo):.6f} .. {float(hi):.6f}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sga", description="Exact invariants of finite simple groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="line-delimited JSON output")
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "order, minimal degree, Out(S), witnesses").add_argument("group")
    add("classify", cmd_classify, "X/Y/Neither label and guaranteed indices").add_argument("group")

    p = add("verify", cmd_verify, "sweep a clause over parameter ranges")
    p.add_argument("clause", choices=[*CLAUSES, "all"])
    p.add_argument("--family", action="append", help="restrict to a family (repeatable), e.g. PSL, O+, E6")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--q-max", type=int, default=None)
    p.add_argument("--csv", action="store_true", help="CSV rows on stdout")

    add("oracle", cmd_oracle, "brute-force minimal degree of a fixture group").add_argument(
        "fixture", help="fixture name such as 'PSL(2,7)', or 'all'")

    p = add("remark", cmd_remark, "index check for PSL(n,2), n prime")
    p.add_argument("which", choices=["psl-n2"])
    p.add_argument("n", type=int)

    p = add("tightness", cmd_tightness, "log2 l / |Out| for PSL(m,2^f)")
    p.add_argument("m", type=int)
    p.add_argument("f_max", type=int)

    add("ratio", cmd_ratio, "bracket of log|S| / log l(S)").add_argument("group")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
