"""Command-line front end: transform, generator, primes, bench.

Vector file format (text, ASCII): a header line "ntt-vec 1 <p> <n>" followed
by exactly n lines, each one canonical decimal residue in [0, p).  Every
line ends with a single linefeed and there are no trailing blank lines, so
valid files round-trip byte-identically.

Exit codes: 0 success, 2 malformed vector file, 3 plan or parameter error.
"""

import argparse
import sys

from .bench import DEFAULT_NAIVE_CUTOFF, DEFAULT_TRIALS, emit_report, run_benchmark
from .errors import (
    BadRadices,
    InvalidField,
    LengthMismatch,
    NotADivisor,
    VectorFileError,
    WrongOrder,
)
from .field import FieldParams, is_prime
from .numtheory import factorize, find_generator, prime_search
from .transform import RECURSIVE, TWIDDLE, VARIANTS, fft_recursive, fft_twiddle, ifft, plan_transform

_MAGIC = "ntt-vec"
_VERSION = "1"

_PLAN_ERRORS = (NotADivisor, WrongOrder, BadRadices, InvalidField, LengthMismatch, ValueError)


def read_vector_file(path: str) -> tuple[int, list[int]]:
    """Parse a vector file, returning (p, values). Raises VectorFileError."""
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise VectorFileError(f"cannot read {path}: {exc}") from exc
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise VectorFileError(f"{path}: not ASCII text") from exc
    if not text.endswith("\n"):
        raise VectorFileError(f"{path}: missing trailing newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 4 or header[0] != _MAGIC or header[1] != _VERSION:
        raise VectorFileError(f"{path}: bad header {lines[0]!r}")
    p = _parse_decimal(header[2], path)
    n = _parse_decimal(header[3], path)
    if not is_prime(p):
        raise VectorFileError(f"{path}: header modulus {p} is not prime")
    data = lines[1:]
    if len(data) != n:
        raise VectorFileError(
            f"{path}: header declares {n} values, found {len(data)}"
        )
    values = []
    for line in data:
        value = _parse_decimal(line, path)
        if value >= p:
            raise VectorFileError(f"{path}: value {value} not reduced modulo {p}")
        values.append(value)
    return p, values


def _parse_decimal(token: str, path: str) -> int:
    if not token.isdigit() or (len(token) > 1 and token[0] == "0"):
        raise VectorFileError(f"{path}: {token!r} is not a canonical decimal")
    return int(token)


def write_vector_file(path: str, p: int, values) -> None:
    lines = [f"{_MAGIC} {_VERSION} {p} {len(values)}"]
    lines.extend(str(int(v)) for v in values)
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_radices(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise BadRadices(f"bad radix list {text!r}") from exc


def cmd_transform(args: argparse.Namespace) -> int:
    try:
        p, values = read_vector_file(args.input)
    except VectorFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        params = FieldParams(p)
        radices = _parse_radices(args.radices) if args.radices else None
        plan = plan_transform(params, len(values), omega=args.omega, radices=radices)
        if args.inverse:
            out = ifft(plan, values, args.variant, raw_order=args.raw_order)
        elif args.variant == RECURSIVE:
            out = fft_recursive(plan, values, raw_order=args.raw_order)
        else:
            out = fft_twiddle(plan, values, raw_order=args.raw_order)
    except _PLAN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    write_vector_file(args.output, p, out)
    return 0


def cmd_generator(args: argparse.Namespace) -> int:
    try:
        params = FieldParams(args.p)
        n = params.p - 1 if args.n is None else args.n
        a = find_generator(params, n)
    except _PLAN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"{a} {factorize(n)}")
    return 0


def cmd_primes(args: argparse.Namespace) -> int:
    try:
        factors = {int(tok) for tok in args.factors.split(",")}
        records = prime_search(args.min, args.max, factors)
    except (InvalidField, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for rec in records:
        print(f"{rec.p} {rec.factorization} {rec.generator}")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        params = FieldParams(args.p)
        n = params.p - 1 if args.n is None else args.n
        radices = _parse_radices(args.radices) if args.radices else None
        report = run_benchmark(
            params,
            n,
            radices=radices,
            variant=args.variant,
            measure_naive_up_to=args.naive_cutoff,
            trials=args.trials,
        )
    except _PLAN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(emit_report(report, args.format), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smoothntt",
        description="Exact transforms over prime fields with smooth group order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="run an (inverse) FFT over a vector file")
    t.add_argument("input", help="input vector file")
    t.add_argument("output", help="output vector file")
    t.add_argument("--inverse", action="store_true", help="apply the inverse transform")
    t.add_argument("--variant", choices=VARIANTS, default=TWIDDLE)
    t.add_argument("--radices", help="comma-separated radix schedule, e.g. 2,2,3")
    t.add_argument("--omega", type=int, help="order-n root of unity to use")
    t.add_argument(
        "--raw-order", action="store_true", help="emit digit-reversed kernel order"
    )
    t.set_defaults(func=cmd_transform)

    g = sub.add_parser("generator", help="smallest generator of an order-n subgroup")
    g.add_argument("p", type=int, help="prime modulus")
    g.add_argument("--n", type=int, help="subgroup order (default p-1)")
    g.set_defaults(func=cmd_generator)

    pr = sub.add_parser("primes", help="primes in (min, max) with smooth p-1")
    pr.add_argument("--min", type=int, required=True)
    pr.add_argument("--max", type=int, required=True)
    pr.add_argument("--factors", default="2,3", help="allowed prime factors of p-1")
    pr.set_defaults(func=cmd_primes)

    b = sub.add_parser("bench", help="count and time one transform configuration")
    b.add_argument("p", type=int, help="prime modulus")
    b.add_argument("--n", type=int, help="transform length (default p-1)")
    b.add_argument("--radices", help="comma-separated radix schedule")
    b.add_argument("--variant", choices=VARIANTS, default=TWIDDLE)
    b.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    b.add_argument("--naive-cutoff", type=int, default=DEFAULT_NAIVE_CUTOFF)
    b.add_argument("--format", choices=("human", "csv"), default="human")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())
