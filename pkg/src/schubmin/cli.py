"""
Command-line interface::

    schubmin analyze 3142
    schubmin analyze 6,1,9,7,2,3,4,5,8 --json --certificates
    schubmin survey 6 --out atlas6.jsonl --threads 4
    schubmin witness 3142 --I 2,3 --J 1,2
    schubmin groebner 3142 --order antidiag --mode buchberger

Exit codes: 0 ok, 1 internal invariant violation, 2 bad input, 3 I/O error,
4 invalid certificate request, 5 order gating, 6 limits exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import factorial

from .errors import InvariantViolation, LimitsExceeded, OrderGatingError
from .generators import (
    NotEssentialError, attended_cells, elusive_minors, is_elusive, minor,
)
from .perm import Permutation, PermutationError, all_permutations, parse_permutation
from .poly import ANTIDIAGONAL, DIAGONAL, leading_monomial_of_minor, minor_polynomial
from .report import analyze, dumps
from .verify import (
    BuchbergerLimits, buchberger_check, certify_minor, initial_term_cover, reduce,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_CERT = 4
EXIT_GATE = 5
EXIT_LIMITS = 6

DEFAULT_MAX_N = 8
ORDERS = {"antidiag": ANTIDIAGONAL, "diag": DIAGONAL}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_perm(text: str):
    try:
        return parse_permutation(text)
    except PermutationError as exc:
        raise CliError(EXIT_PARSE, f"cannot parse permutation {text!r}: {exc}")


def _parse_indices(text: str, name: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise CliError(EXIT_PARSE, f"malformed {name} index list {text!r}")


class _Output:
    """stdout, or the --out file opened lazily."""

    def __init__(self, path):
        self.path = path
        self.fh = None

    def __enter__(self):
        if self.path is None:
            self.fh = sys.stdout
        else:
            try:
                self.fh = open(self.path, "w", encoding="utf-8", newline="\n")
            except OSError as exc:
                raise CliError(EXIT_IO, f"cannot write {self.path}: {exc}")
        return self

    def write(self, text: str):
        try:
            self.fh.write(text)
        except OSError as exc:
            raise CliError(EXIT_IO, f"write failed: {exc}")

    def __exit__(self, *exc):
        if self.fh is not None and self.fh is not sys.stdout:
            self.fh.close()
        return False


def cmd_analyze(args) -> int:
    w = _parse_perm(args.perm)
    report = analyze(w, certificates=args.certificates)
    with _Output(args.out) as out:
        out.write(dumps(report.to_json()) + "\n" if args.json else report.render())
    return EXIT_OK


def _survey_record(word):
    return dumps(analyze(Permutation(word)).to_json())


def _worker_count(threads):
    if threads is None or threads <= 0:
        return os.cpu_count() or 1
    return threads


def cmd_survey(args) -> int:
    n = args.n
    if not 1 <= n <= args.max_n:
        raise CliError(EXIT_LIMITS, f"survey needs 1 <= n <= --max-n {args.max_n}, got {n}")
    words = [w.word for w in all_permutations(n)]
    workers = _worker_count(args.threads)
    ci_count = 0
    with _Output(args.out) as out:
        if workers > 1 and len(words) > 1:
            chunk = max(1, len(words) // (workers * 8))
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = pool.map(_survey_record, words, chunksize=chunk)
                for rec in records:
                    ci_count += json.loads(rec)["ci"]["by_count"]
                    out.write(rec + "\n")
        else:
            for word in words:
                rec = _survey_record(word)
                ci_count += json.loads(rec)["ci"]["by_count"]
                out.write(rec + "\n")
        summary = {"summary": {"n": n, "total": factorial(n), "ci_count": ci_count}}
        out.write(dumps(summary) + "\n")
    return EXIT_OK


def cmd_witness(args) -> int:
    w = _parse_perm(args.perm)
    try:
        m = minor(_parse_indices(args.I, "--I"), _parse_indices(args.J, "--J"))
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    try:
        elusive = is_elusive(m, w)
    except NotEssentialError:
        raise CliError(EXIT_CERT, f"{m} is not an essential minor of {w}")
    if not elusive:
        where = ", ".join(f"({e.cell.i},{e.cell.j})" for e in attended_cells(m, w))
        raise CliError(EXIT_CERT, f"{m} is not elusive for {w}: it attends {where}")
    essential = [em.minor for em in elusive_minors(w).essential]
    cert = certify_minor(m, w, essential)
    with _Output(args.out) as out:
        if args.json:
            out.write(dumps({"w": list(w.word), **cert.to_json()}) + "\n")
        else:
            out.write(f"w = {w}\nminor {m}\nwitness point:\n")
            out.write(cert.point.render())
            out.write(f"value at witness: {cert.value_at_point}\n")
            out.write(f"other essential minors vanishing: "
                      f"{cert.vanishing_checked}/{len(essential) - 1}\n")
            out.write("certificate: valid\n")
    return EXIT_OK


def _traces(w, order):
    gens = elusive_minors(w)
    basis = [minor_polynomial(m) for m in gens.elusive]
    out = []
    for em in gens.essential:
        trace = reduce(minor_polynomial(em.minor), basis, order)
        out.append({"minor": em.minor.to_json(), "trace": trace.to_json(order)})
    return out


def cmd_groebner(args) -> int:
    w = _parse_perm(args.perm)
    order = ORDERS[args.order]
    try:
        if args.mode == "cover":
            cover = initial_term_cover(w, order, force=args.force)
            payload = {
                "w": list(w.word), "order": order.kind, "mode": "cover",
                "passed": True,
                "cover": [{"minor": m.to_json(), "by": e.to_json(),
                           "initial": str(leading_monomial_of_minor(m, order)),
                           "divisor": str(leading_monomial_of_minor(e, order))}
                          for m, e in cover.items()],
            }
        else:
            limits = BuchbergerLimits(max_n=args.max_n, max_basis=args.max_basis)
            result = buchberger_check(w, order, limits, force=args.force)
            payload = {"mode": "buchberger", **result.to_json()}
    except OrderGatingError as exc:
        raise CliError(EXIT_GATE, f"{exc}; pass --force to run anyway")
    except LimitsExceeded as exc:
        raise CliError(EXIT_LIMITS, str(exc))
    if args.traces:
        payload["traces"] = _traces(w, order)
    with _Output(args.out) as out:
        if args.json:
            out.write(dumps(payload) + "\n")
        else:
            out.write(f"w = {w}    order = {order.kind}    mode = {args.mode}\n")
            if args.mode == "cover":
                for item in payload["cover"]:
                    out.write(f"  {item['initial']}  divisible by  {item['divisor']}\n")
                out.write(f"{len(payload['cover'])} non-elusive minors covered\n")
            else:
                out.write(f"elusive basis size {payload['basis_size']}, "
                          f"{payload['pairs_total']} pairs "
                          f"({payload['pairs_skipped_coprime']} skipped, coprime)\n")
                if "failure" in payload:
                    out.write(f"FAIL: S-polynomial of {payload['failure']['pair']} "
                              f"leaves {payload['failure']['remainder']}\n")
            if args.traces:
                out.write(json.dumps(payload["traces"], sort_keys=True, indent=1) + "\n")
            out.write("pass\n" if payload["passed"] else "fail\n")
    return EXIT_OK if payload["passed"] else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument("--threads", type=int, default=0,
                        help="worker processes (default: all cores)")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help="size bound for survey and Buchberger runs "
                             f"(default {DEFAULT_MAX_N})")

    parser = argparse.ArgumentParser(
        prog="schubmin",
        description="Minimal generators of Schubert determinantal ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze one permutation")
    p.add_argument("perm")
    p.add_argument("--certificates", action="store_true",
                   help="include minimality certificates")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("survey", parents=[common], help="analyze all of S_n as JSONL")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("witness", parents=[common], help="certificate for one elusive minor")
    p.add_argument("perm")
    p.add_argument("--I", required=True, help="row indices, e.g. 2,3")
    p.add_argument("--J", required=True, help="column indices, e.g. 1,2")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("groebner", parents=[common], help="check the Gröbner property")
    p.add_argument("perm")
    p.add_argument("--order", choices=sorted(ORDERS), default="antidiag")
    p.add_argument("--mode", choices=("cover", "buchberger"), default="cover")
    p.add_argument("--force", action="store_true",
                   help="allow diagonal order on non-vexillary permutations")
    p.add_argument("--max-basis", type=int, default=BuchbergerLimits.max_basis)
    p.add_argument("--traces", action="store_true",
                   help="include reduction traces of every essential minor")
    p.set_defaults(func=cmd_groebner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"schubmin: {exc}", file=sys.stderr)
        return exc.code
    except InvariantViolation as exc:
        bundle = {"error": str(exc), "command": sys.argv[1:] if argv is None else list(argv),
                  "details": exc.details}
        print("schubmin: internal invariant violation", file=sys.stderr)
        print(dumps(bundle), file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
