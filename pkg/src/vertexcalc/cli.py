"""Command-line entry point: ``vertexcalc tabulate|decmat|verify|report``.

Exit codes: 0 when everything passes, 1 on any verification failure or
report collision, 2 on usage or size-guard errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import blocks
from .fock import llt_canonical_basis
from .verify import SUITES, ReportCollision, dumps, merge_reports, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _text(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def cmd_tabulate(args) -> int:
    n, e = args.n, args.e
    if n is None or e is None:
        raise UsageError("tabulate needs --n and --e")
    if n < 1 or e < 2:
        raise UsageError("need n >= 1 and e >= 2")
    if args.what == "blocks":
        if args.format == "json":
            text = blocks.dumps(blocks.block_table(n, e)) + "\n"
        else:
            text = blocks.block_table_csv(n, e)
    elif args.what == "cuspidal":
        table = blocks.cuspidal_table(n, e)
        if args.format == "json":
            text = blocks.dumps(table) + "\n"
        else:
            text = _rows_csv(["label", "sigma", "nu", "k", "depth", "parabolic"], [
                [_text(r["label"]), _text(r["sigma"]), _text(r["nu"]), r["k"], r["depth"], _text(r["parabolic"])]
                for r in table["labels"]
            ])
    else:
        table = blocks.vertex_table(n, e)
        if args.format == "json":
            text = blocks.dumps(table) + "\n"
        else:
            text = _rows_csv(["k", "vertex"], [[len(v), _text(v)] for v in table["predicted_vertices"]])
    _emit(text, args.out)
    return EXIT_OK


def cmd_decmat(args) -> int:
    n = args.n
    es = args.e_list
    if n is None or not es:
        raise UsageError("decmat needs --n and --e")
    if n < 1 or any(e < 2 for e in es):
        raise UsageError("need n >= 1 and e >= 2")
    status = EXIT_OK
    payload = []
    for e in es:
        D = llt_canonical_basis(n, e)
        if args.at_one:
            body = {"n": n, "e": e, "rows": [list(r) for r in D.rows], "cols": [list(c) for c in D.cols],
                    "entries": [[x.at_one() for x in row] for row in D.entries]}
        else:
            body = D.to_json()
        if args.check_gram:
            rep = run_suite("decmat", n=n, es=(e,), check_gram=True, jobs=args.jobs)
            # only the records for size n are relevant here
            recs = [r.to_json() for r in rep.records if r.description.startswith(f"n={n},")]
            body["checks"] = recs
            if any(r["status"] == "fail" for r in recs):
                status = EXIT_FAIL
        payload.append(body)
    if args.format == "csv":
        rows = []
        for body in payload:
            for i, lam in enumerate(body["rows"]):
                for j, mu in enumerate(body["cols"]):
                    x = body["entries"][i][j]
                    if x:
                        rows.append([body["e"], _text(lam), _text(mu), json.dumps(x, sort_keys=True)])
        text = _rows_csv(["e", "lam", "mu", "entry"], rows)
    else:
        text = dumps(payload[0] if len(payload) == 1 else payload)
    _emit(text, args.out)
    return status


def cmd_verify(args) -> int:
    if not args.suite:
        raise UsageError("verify needs --suite")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    status = EXIT_OK
    payloads = []
    for suite in args.suite:
        rep = run_suite(suite, n=args.n, es=args.e_list, check_gram=args.check_gram, max_dim=args.max_dim,
                        jobs=args.jobs)
        print(f"{suite}: {rep.status} ({len(rep.records)} checks, {rep.duration:.1f}s)", file=sys.stderr)
        for r in rep.failures():
            print(f"  FAIL {r.description}", file=sys.stderr)
        if not rep.ok:
            status = EXIT_FAIL
        payloads.append(rep.payload())
    text = dumps(payloads[0] if len(payloads) == 1 else merge_reports(payloads))
    _emit(text, args.out)
    return status


def cmd_report(args) -> int:
    docs = []
    for path in args.files:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        # a merged aggregate contributes its member reports
        docs.extend(data["reports"] if "reports" in data and "suite" not in data else [data])
    try:
        merged = merge_reports(docs)
    except ReportCollision as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(dumps(merged), args.out)
    return EXIT_OK if merged["status"] == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vertexcalc", description="Blocks, decomposition numbers and vertices "
                                "for Hecke algebras of symmetric groups at roots of unity.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, multi_e: bool = False):
        sp.add_argument("--n", type=int, help="size of the symmetric group (upper bound for verify suites)")
        if multi_e:
            sp.add_argument("--e", type=int, action="append", dest="e_list",
                            help="order of q; repeat for several values")
        else:
            sp.add_argument("--e", type=int, help="order of q")
        sp.add_argument("--out", metavar="FILE", help="write the output to FILE instead of stdout")

    t = sub.add_parser("tabulate", help="block, cuspidal and predicted-vertex tables")
    t.add_argument("what", choices=["blocks", "cuspidal", "vertices"])
    common(t)
    t.add_argument("--format", choices=["json", "csv"], default="json")
    t.set_defaults(func=cmd_tabulate)

    d = sub.add_parser("decmat", help="LLT decomposition matrix, optionally checked against the Hecke engine")
    common(d, multi_e=True)
    d.add_argument("--format", choices=["json", "csv"], default="json")
    d.add_argument("--at-one", action="store_true", help="evaluate the entries at v = 1")
    d.add_argument("--check-gram", action="store_true", help="compare with Gram ranks and characters")
    d.add_argument("--jobs", type=int, default=1)
    d.set_defaults(func=cmd_decmat)

    v = sub.add_parser("verify", help="run verification suites")
    common(v, multi_e=True)
    v.add_argument("--suite", action="append", choices=SUITES, help="suite to run; repeatable")
    v.add_argument("--check-gram", action="store_true")
    v.add_argument("--max-dim", type=int, default=None, help="largest module dimension to scan")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--format", choices=["json"], default="json")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="merge report files")
    r.add_argument("files", nargs="*")
    r.add_argument("--out", metavar="FILE")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    from .hecke.algebra import SizeGuardError

    try:
        return args.func(args)
    except (UsageError, SizeGuardError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
