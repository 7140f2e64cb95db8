"""Command-line front end.

Verbs: series, e1, e2, generators, oracle, verify, loopspace.  Output
is byte-deterministic for fixed arguments; --format picks table (plain
lines, series as comma-joined coefficients), csv (degree,value rows),
or json (a single object with dim, r, max_degree, series, report).
Exit code 0 means success, 1 a verification mismatch, 2 a usage error.
"""

import argparse
import json
import sys

from .grading import VariableSet, FlavoredSpace, FULL, SYM, SKEW, Series, space_series
from .actions import oracle_crosscheck
from .e1 import column_series
from .differentials import assemble_matrix
from .pages import e2_ranks, generator_classes, verify_generators, collapse_check
from .loopspace import loopspace_series


class UsageError(Exception):
    pass


class Result:
    __slots__ = ("exit", "series", "report", "table")

    def __init__(self, exit=0, series=None, report=None, table=None):
        self.exit = exit
        self.series = series
        self.report = report
        self.table = table if table is not None else []


_FLAVORS = {"p": FULL, "sp": SYM, "ap": SKEW}


def _parse_space(text, D):
    """p:a,b | sp:a,b | ap:a,b | b:d -> rank series."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise UsageError("space must look like p:a,b, sp:a,b, ap:a,b or b:d")
    try:
        if kind == "b":
            d = int(rest)
            if d < 1:
                raise ValueError
            return Series.ring([4 * (i + 1) for i in range(d // 2)], D)
        flavor = _FLAVORS[kind]
        a, b = (int(x) for x in rest.split(","))
        if a < 0 or b < 0:
            raise ValueError
        return space_series(FlavoredSpace(VariableSet(a, b), flavor), D)
    except (KeyError, ValueError):
        raise UsageError("bad space %r" % text)


def _cmd_series(args):
    ser = _parse_space(args.space, args.max_degree)
    return Result(series=list(ser.c), table=[",".join(str(x) for x in ser.c)])


def _cmd_e1(args):
    ser = column_series(args.dim, args.column, args.max_degree)
    return Result(series=list(ser.c), table=[",".join(str(x) for x in ser.c)])


def _cmd_e2(args):
    rep = e2_ranks(args.dim, args.r, args.max_degree)
    rows = []
    for (k, n) in sorted(rep.cells):
        c = rep.cells[(k, n)]
        rows.append({"column": k, "degree": n, "e1": c.e1_rank,
                     "kernel": c.kernel_rank, "image": c.image_rank_from_left,
                     "e2": c.e2_rank})
    return Result(series=list(rep.total.c), report=rows,
                  table=[",".join(str(x) for x in rep.total.c)])


def _cmd_generators(args):
    classes = generator_classes(args.dim, args.max_degree)
    counts = [0] * (args.max_degree + 1)
    rows = []
    for cl in sorted(classes, key=lambda c: (c.degree, c.kind, str(c.family), c.label())):
        counts[cl.degree] += 1
        rows.append({"degree": cl.degree, "kind": cl.kind,
                     "family": cl.family, "label": cl.label()})
    table = ["%4d  %s" % (r["degree"], r["label"]) for r in rows]
    return Result(series=counts, report=rows, table=table)


def _cmd_oracle(args):
    rep = oracle_crosscheck(args.dim, args.level, args.max_degree)
    rows = [{"stratum": repr(s), "ok": mis is None,
             "first_mismatch": mis} for s, mis in rep.entries]
    return Result(exit=0 if rep.ok else 1, report=rows, table=rep.lines())


def _cmd_loopspace(args):
    ser = loopspace_series(args.dim, args.r, args.max_degree, args.offset)
    return Result(series=list(ser.c), table=[",".join(str(x) for x in ser.c)])


def _cmd_verify(args):
    d, D = args.dim, args.max_degree
    K = max(1, D - d)
    rows = []
    table = []

    def add(name, ok, detail=""):
        rows.append({"check": name, "ok": ok, "detail": detail})
        table.append("%s %s%s" % ("ok  " if ok else "FAIL", name,
                                  " (%s)" % detail if detail else ""))

    for level in range(1, min(7, K) + 1):
        rep = oracle_crosscheck(d, level, D)
        bad = [(s, mis) for s, mis in rep.entries if mis is not None]
        add("oracle level %d" % level, not bad,
            "" if not bad else "%r first mismatch at degree %d" % bad[0])

    chain_bad = None
    for k in range(min(5, K - 1) + 1):
        for n in range(D):
            A = assemble_matrix(d, k, n)
            if not A.source.elements:
                continue
            B = assemble_matrix(d, k + 1, n + 1)
            if not B.compose(A).is_zero():
                chain_bad = (k, n)
                break
        if chain_bad:
            break
    add("chain condition d(d(x)) = 0", chain_bad is None,
        "" if chain_bad is None else "column %d degree %d" % chain_bad)

    col = collapse_check(d, D, 2, min(5, K))
    for name, ok, detail in col.entries:
        add("collapse " + name, ok, detail)

    rep = e2_ranks(d, args.r, D)
    add("closed form matches computed ranks", rep.mismatch is None,
        "" if rep.mismatch is None else
        "first failing degree %d (all columns summed)" % rep.mismatch)

    gen = verify_generators(d, D)
    for name, ok, detail in gen.entries:
        add("generators: " + name, ok, detail if not ok else "")

    code = 0 if all(r["ok"] for r in rows) else 1
    return Result(exit=code, report=rows, table=table)


def _r_value(text):
    if text == "inf":
        return "inf"
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("r must be a positive integer or inf")
    if v < 1:
        raise argparse.ArgumentTypeError("r must be a positive integer or inf")
    return v


def build_parser():
    ap = argparse.ArgumentParser(
        prog="artifact",
        description="Exact rank computations for the Morin singularity spectral sequence.")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, dim=True, r=False):
        if dim:
            p.add_argument("--dim", type=int, required=True, help="dimension difference d")
        if r:
            p.add_argument("--r", type=_r_value, default="inf",
                           help="truncation order, a positive integer or inf")
        p.add_argument("--max-degree", type=int, default=40, dest="max_degree")
        p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("series", help="rank series of one graded space")
    p.add_argument("--space", required=True,
                   help="p:a,b | sp:a,b | ap:a,b | b:d")
    common(p, dim=False)
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("e1", help="first-page rank series of one column")
    p.add_argument("--column", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_e1)

    p = sub.add_parser("e2", help="second-page ranks and total series")
    common(p, r=True)
    p.set_defaults(fn=_cmd_e2)

    p = sub.add_parser("generators", help="explicit fold-column generators")
    common(p)
    p.set_defaults(fn=_cmd_generators)

    p = sub.add_parser("oracle", help="sign-action oracle against content tables")
    p.add_argument("--level", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="full verification battery for one (dim, r)")
    common(p, r=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("loopspace", help="loop-space class algebra series")
    p.add_argument("--offset", type=int, default=0,
                   help="shift every generator degree by this amount")
    common(p, r=True)
    p.set_defaults(fn=_cmd_loopspace)
    return ap


def _render(args, res):
    fmt = args.format
    if fmt == "table":
        return "\n".join(res.table)
    if fmt == "csv":
        if res.series is not None:
            return "\n".join("%d,%d" % (n, v) for n, v in enumerate(res.series))
        return "\n".join(",".join(str(v) for v in row.values())
                         for row in res.report or [])
    payload = {
        "dim": getattr(args, "dim", None),
        "r": getattr(args, "r", None),
        "max_degree": args.max_degree,
        "series": res.series,
        "report": res.report,
    }
    return json.dumps(payload)


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        res = args.fn(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = _render(args, res)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    return res.exit


if __name__ == "__main__":
    sys.exit(main())
