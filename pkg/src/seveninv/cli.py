"""Command-line front end.

Subcommands:
  invariants     full invariant report for one pair (table/json/csv)
  family         moduli census along the index family of a base pair
  verify-oracle  exact comparison of the strata oracle with the closed form
  search         stream a CSV of invariants over a bounded parameter box
  selftest       run the acceptance battery

Exit codes: 0 success, 1 invariant-check failure, 2 invalid input.  All
rationals are printed exactly; no floating point reaches json/csv output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional

from .acceptance import run_all
from .defect import DegenerateDefectArgumentError
from .families import CensusError, milnor_membership, moduli_census
from .invariants import (
    DegenerateH4Error,
    InvalidPairError,
    invariant_report,
    rational_str,
    validate_pair,
)
from .oracle import oracle_check
from .sweeps import random_valid_pair, row_for_pair, valid_triples

CSV_COLUMNS = (
    "a1,a2,a3,b1,b2,b3,n,m,s,mu,lk,p1_lo,p1_hi,defect_minus,defect_plus"
)


def _parse_triple(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    return tuple(int(p) for p in parts)


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _csv_row(row: dict) -> str:
    p1 = row["p1"]
    fields = [
        *row["a"],
        *row["b"],
        row["n"],
        rational_str(row["m"]),
        rational_str(row["s"]),
        rational_str(row["mu"]),
        rational_str(row["lk"]),
        "" if p1 is None else p1[0],
        "" if p1 is None else p1[1],
        rational_str(row["defect_minus"]),
        rational_str(row["defect_plus"]),
    ]
    return ",".join(str(f) for f in fields)


def _report_table(rep) -> str:
    lines = [
        f"a            {rep.pair.a.entries}",
        f"b            {rep.pair.b.entries}",
        f"n            {rep.n}",
        f"m            {rational_str(rep.m)}",
        f"s            {rational_str(rep.s)}",
        f"mu           {rational_str(rep.mu)}",
        f"lk           {rational_str(rep.lk)}",
        f"p1           {'unavailable' if rep.p1 is None else set(rep.p1)}",
        f"defect_minus {rational_str(rep.defect_minus)}",
        f"defect_plus  {rational_str(rep.defect_plus)}",
        f"sign_W       {rep.sign_w:+d}",
        f"class        {milnor_membership(rep.pair)}",
    ]
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    pair = validate_pair(args.a, args.b)
    rep = invariant_report(pair)
    if args.format == "json":
        print(json.dumps(rep.to_json_dict(), indent=2))
    elif args.format == "csv":
        print(CSV_COLUMNS)
        row = {
            "a": pair.a.entries,
            "b": pair.b.entries,
            "n": rep.n,
            "m": rep.m,
            "s": rep.s,
            "mu": rep.mu,
            "lk": rep.lk,
            "p1": rep.p1,
            "defect_minus": rep.defect_minus,
            "defect_plus": rep.defect_plus,
        }
        print(_csv_row(row))
    else:
        print(_report_table(rep))
    return 0


def cmd_family(args) -> int:
    pair = validate_pair(args.a, args.b)
    try:
        rep = moduli_census(pair, args.count, args.stride)
    except CensusError as exc:
        print(f"census failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "table":
        print(f"base a={pair.a.entries} b={pair.b.entries} stride={rep.stride}")
        for i, s, v in zip(rep.indices, rep.s_values, rep.verdicts):
            print(f"  i={i:<12d} s={rational_str(s)}  [{v.kind.value}]")
        print(f"distinct |s| values: {len(rep.distinct_abs_s)}")
    else:
        print(json.dumps(rep.to_json_dict(), indent=2))
    return 0


def cmd_verify_oracle(args) -> int:
    pairs = []
    if args.random is not None:
        import random

        rng = random.Random(args.seed)
        for _ in range(args.random):
            pairs.append(
                random_valid_pair(rng, q_min=3, q_max=args.max_q, entry_bound=49)
            )
    else:
        if args.a is None or args.b is None:
            print("verify-oracle needs --a/--b or --random", file=sys.stderr)
            return 2
        pairs.append(validate_pair(args.a, args.b))
    bad = 0
    for pair in pairs:
        chk = oracle_check(pair)
        tag = "EQUAL" if chk.equal else "MISMATCH"
        print(
            f"{tag} a={pair.a.entries} b={pair.b.entries} "
            f"oracle={rational_str(chk.oracle)} closed={rational_str(chk.closed_form)}"
        )
        if not chk.equal:
            bad += 1
            print(json.dumps(chk.to_json_dict(), indent=2), file=sys.stderr)
    return 1 if bad else 0


def _search_block(task) -> list[str]:
    a, bound, homotopy, milnor, target_mu, start_after = task
    out = []
    for b in valid_triples(bound):
        if start_after is not None and a + b <= tuple(start_after):
            continue
        row = row_for_pair(a, b, homotopy, milnor, target_mu)
        if row is not None:
            out.append(_csv_row(row))
    return out


def cmd_search(args) -> int:
    milnor: Optional[bool] = None
    if args.milnor:
        milnor = True
    elif args.non_milnor:
        milnor = False
    start_after = _parse_cursor(args.start_after) if args.start_after else None
    triples = valid_triples(args.max)
    tasks = [
        (a, args.max, args.homotopy_sphere, milnor, args.target_mu, start_after)
        for a in triples
    ]
    threads = int(os.environ.get("SEVEN_INV_THREADS", args.threads))
    out = open(args.output, "w") if args.output else sys.stdout
    last_cursor = "start"
    try:
        print(CSV_COLUMNS, file=out)
        if threads > 1:
            with Pool(threads) as pool:
                for block in pool.imap(_search_block, tasks, chunksize=1):
                    for line in block:
                        print(line, file=out)
                        last_cursor = line
        else:
            for task in tasks:
                for line in _search_block(task):
                    print(line, file=out)
                    last_cursor = line
        out.flush()
    except OSError as exc:
        print(
            f"I/O error after row [{last_cursor}]: {exc}", file=sys.stderr
        )
        return 1
    finally:
        if args.output:
            out.close()
    return 0


def _parse_cursor(text: str) -> tuple[int, ...]:
    parts = tuple(int(p) for p in text.split(","))
    if len(parts) != 6:
        raise ValueError("cursor must be a1,a2,a3,b1,b2,b3")
    return parts


def cmd_selftest(args) -> int:
    results = run_all()
    for r in results:
        print(r.line)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seveninv",
        description="Exact invariants of 2-connected 7-manifolds from integer triples",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for one pair")
    p_inv.add_argument("--a", type=_parse_triple, required=True)
    p_inv.add_argument("--b", type=_parse_triple, required=True)
    p_inv.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_inv.set_defaults(fn=cmd_invariants)

    p_fam = sub.add_parser("family", help="moduli census along a family")
    p_fam.add_argument("--a", type=_parse_triple, required=True)
    p_fam.add_argument("--b", type=_parse_triple, required=True)
    p_fam.add_argument("--count", type=int, required=True)
    p_fam.add_argument("--stride", type=int, default=None)
    p_fam.add_argument("--format", choices=("table", "json"), default="json")
    p_fam.set_defaults(fn=cmd_family)

    p_ver = sub.add_parser("verify-oracle", help="oracle vs closed form")
    p_ver.add_argument("--a", type=_parse_triple)
    p_ver.add_argument("--b", type=_parse_triple)
    p_ver.add_argument("--random", type=int, default=None, metavar="N")
    p_ver.add_argument("--max-q", type=int, default=25)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(fn=cmd_verify_oracle)

    p_sea = sub.add_parser("search", help="stream invariants over a parameter box")
    p_sea.add_argument("--max", type=int, required=True)
    p_sea.add_argument("--target-mu", type=_parse_fraction, default=None)
    p_sea.add_argument("--homotopy-sphere", action="store_true")
    kind = p_sea.add_mutually_exclusive_group()
    kind.add_argument("--milnor", action="store_true")
    kind.add_argument("--non-milnor", action="store_true")
    p_sea.add_argument("--start-after", default=None, metavar="A1,A2,A3,B1,B2,B3")
    p_sea.add_argument("--output", default=None)
    p_sea.add_argument("--threads", type=int, default=1)
    p_sea.set_defaults(fn=cmd_search)

    p_self = sub.add_parser("selftest", help="run the acceptance battery")
    p_self.set_defaults(fn=cmd_selftest)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except (InvalidPairError, DegenerateDefectArgumentError, DegenerateH4Error, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
