"""Command-line front end: ``ribbonstat <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

from . import __version__
from .cycpoly import as_integer_poly, eval_at_root, series_power_of_one_minus
from .partitions import Partition, compact, has_empty_core, k_core, k_quotient, parse_partition
from .symfunc import lemma46_rhs, mn_character, theorem_rhs
from .tableaux import count_bst, descents_bst, enumerate_bst, fake_degree, sign_epsilon, stat, stat_generating_function
from .verify import minimal_counterexample, verify_all

FORMAT_ENV = "RIBBONSTAT_FORMAT"


class UsageError(Exception):
    pass


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {text!r}: {exc}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_core_quotient(args) -> int:
    p, k = args.partition, args.k
    core = k_core(p, k)
    quotient = k_quotient(p, k)
    payload = {"partition": list(p), "k": k, "core": list(core), "quotient": [list(c) for c in quotient]}
    text = f"partition {compact(p)}\n{k}-core     {compact(core)}\n{k}-quotient {quotient}"
    _emit(args, payload, text)
    return 0


def cmd_fakedeg(args) -> int:
    p = args.partition
    f = fake_degree(p)
    payload: dict = {"partition": list(p), "fake_degree": f.to_json(), "fake_degree_text": str(f)}
    lines = [f"f^{compact(p)}(q,t) = {f}"]
    if args.k is not None:
        k = args.k
        value = eval_at_root(f, k)
        lifted = as_integer_poly(value)
        empty = has_empty_core(p, k)
        payload.update(k=k, evaluation=str(value), integral=lifted is not None, core_empty=empty)
        lines.append(f"f^{compact(p)}(xi_{k},t) = {value}   [{'integral' if lifted is not None else 'not integral'}]")
        if lifted is not None:
            payload["evaluation_coeffs"] = lifted.to_json()
        if empty:
            rhs = theorem_rhs(p, k)
            verdict = "MATCH" if lifted == rhs else "MISMATCH"
            payload.update(bst_side=str(rhs), bst_side_coeffs=rhs.to_json(), epsilon=sign_epsilon(p, k), verdict=verdict)
            lines.append(f"eps * sum_B t^stat(B)   = {rhs}")
            order = p.size if args.order is None else args.order
            series = (rhs * series_power_of_one_minus(k, -(p.size // k - 1), order)).truncate(order)
            tuples = lemma46_rhs(p, k, order)
            if series != tuples:
                verdict = "MISMATCH"
            payload.update(order=order, series=series.to_json(), ssyt_tuple_series=tuples.to_json(), verdict=verdict)
            lines.append(f"divided by (1-t^{k})^{p.size // k - 1}, to t^{order}: {series}")
            lines.append(f"eps * sum over SSYT tuples, to t^{order}: {tuples}")
            lines.append(f"verdict: {verdict}")
        else:
            payload.update(verdict="N/A", note=f"{k}-core not empty: no combinatorial interpretation")
            lines.append(f"verdict: N/A ({k}-core {compact(k_core(p, k))} not empty: no combinatorial interpretation)")
        if payload["verdict"] == "MISMATCH":
            _emit(args, payload, "\n".join(lines))
            return 1
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_bst(args) -> int:
    p, k = args.partition, args.k
    payload: dict = {"partition": list(p), "k": k}
    if args.mode == "count":
        total = count_bst(p, k)
        payload["count"] = total
        _emit(args, payload, f"|BST({compact(p)},{k})| = {total}")
        return 0
    if args.mode == "stats":
        gf = stat_generating_function(p, k)
        payload.update(count=gf(1) if not gf.is_zero() else 0, stat_distribution=gf.to_json())
        lines = [f"|BST({compact(p)},{k})| = {payload['count']}", f"sum t^stat = {gf}"]
        if has_empty_core(p, k):
            payload["epsilon"] = sign_epsilon(p, k)
            lines.append(f"epsilon = {payload['epsilon']:+d}")
        _emit(args, payload, "\n".join(lines))
        return 0
    rows = []
    blocks = []
    for i, B in enumerate(enumerate_bst(p, k), start=1):
        d = descents_bst(B)
        rows.append({**B.to_json(), "descents": list(d.descents), "height": B.height, "stat": stat(B)})
        blocks.append(
            f"#{i}  DES={{{','.join(map(str, d.descents))}}}  height={B.height}  stat={stat(B)}\n{B.render()}"
        )
    payload["tableaux"] = rows
    header = f"BST({compact(p)},{k}): {len(rows)} tableau{'x' if len(rows) != 1 else ''}"
    _emit(args, payload, "\n\n".join([header] + blocks))
    return 0


def cmd_character(args) -> int:
    p, rho = args.partition, args.rho
    if p.size != rho.size:
        raise UsageError(f"|partition| = {p.size} but |rho| = {rho.size}")
    chi = mn_character(p, rho)
    _emit(args, {"partition": list(p), "rho": list(rho), "character": chi}, f"chi^{compact(p)}({compact(rho)}) = {chi}")
    return 0


def cmd_verify(args) -> int:
    start = time.perf_counter()
    results = verify_all(args.max_n, args.k, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    failures = [r for r in results if not r.ok]
    by_check: dict[str, list[int]] = {}
    for r in results:
        tally = by_check.setdefault(r.check, [0, 0])
        tally[0 if r.ok else 1] += 1
    worst = minimal_counterexample(results)
    payload = {
        "max_n": args.max_n,
        "checks": {name: {"passed": a, "failed": b} for name, (a, b) in sorted(by_check.items())},
        "failures": len(failures),
        "counterexample": worst.to_json() if worst else None,
        "seconds": round(elapsed, 3),
    }
    lines = [f"{name:<20} passed {a:>6}  failed {b:>4}" for name, (a, b) in sorted(by_check.items())]
    lines.append(f"{len(results)} checks, {len(failures)} failures, {elapsed:.1f}s")
    if worst:
        lines.append(f"minimal counterexample: {worst.check} at {compact(worst.partition)}, k={worst.k}: {worst.detail}")
    _emit(args, payload, "\n".join(lines))
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json"):
        default_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=default_format)

    parser = argparse.ArgumentParser(prog="ribbonstat", description="Border strip tableaux and fake degrees at roots of unity.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core-quotient", parents=[common], help="k-core and k-quotient")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_core_quotient)

    p = sub.add_parser("fakedeg", parents=[common], help="f(q,t), optionally at a primitive k-th root")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--order", type=_positive, help="t-order of the series check (default: n)")
    p.set_defaults(func=cmd_fakedeg)

    p = sub.add_parser("bst", parents=[common], help="list or count border strip tableaux")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--mode", choices=("list", "count", "stats"), default="list")
    p.set_defaults(func=cmd_bst)

    p = sub.add_parser("character", parents=[common], help="Murnaghan-Nakayama character value")
    p.add_argument("--partition", type=_partition, required=True)
    p.add_argument("--rho", type=_partition, required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("verify", parents=[common], help="exhaustively check all identities")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, action="append", help="restrict to these strip sizes (repeatable)")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ribbonstat: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
