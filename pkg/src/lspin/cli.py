"""Command-line entry point.

    lspin eval FILE [--json] [--numeric q=Q seed=S]
    lspin table {sreg,total,zeta} [--diff] [--case ID]
    lspin verify {all,...} [--case ID] [--workers N] [--json]

Exit codes: eval is 0 iff no query errored and no verification failed;
table --diff is nonzero on any snapshot mismatch; verify is nonzero on any
check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import CHECK_NAMES, TABLE_NAMES, diff_table, regenerate, run_verification
from .errors import LspinError
from .session import emit_report, evaluate_session, numeric_coherence, parse_session


def _parse_numeric(values: list[str]) -> tuple[int, int]:
    spec = {}
    for item in values:
        key, _, value = item.partition("=")
        if key not in ("q", "seed") or not value.lstrip("-").isdigit():
            raise LspinError(f"--numeric expects q=<int> seed=<int>, got {item!r}")
        spec[key] = int(value)
    if "q" not in spec:
        raise LspinError("--numeric requires q=<int>")
    return spec["q"], spec.get("seed", 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lspin",
        description="Exact spinor L-factor calculator for GSp(4) split Bessel models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a .lspin session file")
    p_eval.add_argument("file", type=Path)
    p_eval.add_argument("--json", action="store_true")
    p_eval.add_argument(
        "--numeric", nargs=2, metavar=("q=Q", "seed=S"),
        help="verify factor products numerically at seeded sample points",
    )

    p_table = sub.add_parser("table", help="regenerate a classification table")
    p_table.add_argument("which", choices=TABLE_NAMES)
    p_table.add_argument("--diff", action="store_true",
                         help="diff against the committed snapshots; nonzero exit on mismatch")
    p_table.add_argument("--case", default=None,
                         help="restrict output to rows of one case (typeTag[:branch])")

    p_verify = sub.add_parser("verify", help="run the cross-verification corpus")
    p_verify.add_argument("check", choices=("all",) + CHECK_NAMES)
    p_verify.add_argument("--case", default=None)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    return parser


def cmd_eval(args) -> int:
    try:
        text = args.file.read_text()
    except OSError as err:
        print(f"lspin: cannot read {args.file}: {err}", file=sys.stderr)
        return 2
    try:
        session = parse_session(text)
        evaluated = evaluate_session(session)
        numeric = None
        if args.numeric:
            q, seed = _parse_numeric(args.numeric)
            numeric = numeric_coherence(evaluated, q, seed)
    except LspinError as err:
        print(f"lspin: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(evaluated, json_mode=args.json, numeric=numeric))
    ok = evaluated.ok and (numeric is None or numeric["ok"])
    return 0 if ok else 1


def cmd_table(args) -> int:
    if args.diff:
        text, mismatches = diff_table(args.which)
        output = text
        if args.case:
            output = _filter_rows(args.which, args.case)
        sys.stdout.write(output)
        if mismatches:
            for m in mismatches:
                print(f"SnapshotMismatch: {m}", file=sys.stderr)
            return 1
        print(f"table {args.which}: all rows match the committed snapshots")
        return 0
    sys.stdout.write(_filter_rows(args.which, args.case))
    return 0


def _filter_rows(which: str, case: str | None) -> str:
    rows = regenerate(which)
    if case:
        rows = [
            (row_id, text) for row_id, text in rows
            if row_id == case or row_id.startswith(case) or f"case: {case}" in text
        ]
    return "\n".join(text for _, text in rows)


def cmd_verify(args) -> int:
    text, checks, failures = run_verification(
        args.check, selector=args.case, workers=args.workers
    )
    if args.json:
        payload = {"check": args.check, "checks_run": checks, "failures": failures,
                   "detail": text.splitlines()}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "table":
            return cmd_table(args)
        return cmd_verify(args)
    except LspinError as err:
        print(f"lspin: {type(err).__name__}: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
