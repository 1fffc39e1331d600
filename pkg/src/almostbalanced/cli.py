"""Command-line front end.

Sequences travel one per line as decimal digit strings.  Exit codes:
0 success, 2 invalid configuration or arguments, 3 malformed input line,
4 iteration guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from decimal import Decimal
from fractions import Fraction
from functools import partial

from .balancer import DEFAULT_BITS, MODES, CodecConfig, balancer_for, validate_config
from .bounds import table_bounds
from .errors import ConfigError, IterationGuardExceeded

EXIT_CONFIG = 2
EXIT_MALFORMED = 3
EXIT_GUARD = 4


class MalformedLine(Exception):
    def __init__(self, lineno, message):
        super().__init__(lineno, message)
        self.lineno = lineno
        self.message = message

    def __str__(self):
        return f"line {self.lineno}: {self.message}"


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("alpha^2 must be positive")
    return value


def _q_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        r = range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if not r or r.start < 2:
        raise argparse.ArgumentTypeError(f"empty or invalid q range {text!r}")
    return r


def _add_config_flags(p):
    p.add_argument("--mode", choices=MODES, default="binary")
    p.add_argument("--n", type=int, required=True, help="codeword length")
    p.add_argument("--alpha2", type=_fraction, required=True, metavar="NUM/DEN",
                   help="alpha squared as an exact rational")
    p.add_argument("--q", type=int, default=None, help="alphabet size (default: 2 binary, 4 otherwise)")
    p.add_argument("--precision-bits", type=int, default=DEFAULT_BITS)
    p.add_argument("--max-iterations", type=int, default=None)


def _add_io_flags(p):
    p.add_argument("-i", "--input", type=argparse.FileType("r"), default="-")
    p.add_argument("-j", "--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="almostbalanced",
        description="Encode words into almost-balanced words with one redundancy symbol.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode length n-1 lines to length n codewords")
    _add_config_flags(enc)
    _add_io_flags(enc)

    dec = sub.add_parser("decode", help="invert encode line by line")
    _add_config_flags(dec)
    _add_io_flags(dec)

    st = sub.add_parser("stats", help="iteration counts of the encoder")
    _add_config_flags(st)
    _add_io_flags(st)
    st.add_argument("--format", choices=("text", "json"), default="text")
    st.add_argument("--random", type=int, default=None, metavar="COUNT",
                    help="use COUNT uniform random inputs instead of reading lines")
    st.add_argument("--seed", type=int, default=0)

    val = sub.add_parser("validate", help="check that a parameter set is usable")
    _add_config_flags(val)

    bnd = sub.add_parser("bounds", help="grid bounds on the threshold constant")
    bnd.add_argument("--q-range", type=_q_range, default=range(2, 8), metavar="A..B")
    bnd.add_argument("--grid", type=Decimal, default=Decimal("0.005"))
    bnd.add_argument("--check-n", type=int, default=None)
    bnd.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _config(args) -> CodecConfig:
    try:
        config = CodecConfig(
            args.mode, args.n, args.alpha2, args.q, args.precision_bits, args.max_iterations
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    validate_config(config)
    return config


def _read_lines(stream, length, q):
    lines = []
    for lineno, raw in enumerate(stream, 1):
        text = raw.rstrip("\r\n")
        if len(text) != length:
            raise MalformedLine(lineno, f"expected {length} symbols, got {len(text)}")
        bad = [ch for ch in text if not ch.isdigit() or int(ch) >= q]
        if bad:
            raise MalformedLine(lineno, f"invalid symbol {bad[0]!r} for q={q}")
        lines.append((lineno, text))
    return lines


def _encode_one(config, item):
    lineno, text = item
    report = balancer_for(config).encode(tuple(map(int, text)))
    return str(report.codeword), report.iterations


def _decode_one(config, item):
    lineno, text = item
    try:
        return str(balancer_for(config).decode(tuple(map(int, text))))
    except ValueError as exc:
        raise MalformedLine(lineno, str(exc)) from None


def _run(func, items, jobs):
    """Apply ``func`` to every item, in input order."""
    if jobs <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * jobs))))


def cmd_encode(args) -> int:
    config = _config(args)
    items = _read_lines(args.input, config.n - 1, config.q)
    for codeword, _ in _run(partial(_encode_one, config), items, args.jobs):
        print(codeword)
    return 0


def cmd_decode(args) -> int:
    config = _config(args)
    items = _read_lines(args.input, config.n, config.q)
    for word in _run(partial(_decode_one, config), items, args.jobs):
        print(word)
    return 0


def summarize(iterations) -> dict:
    """Stats record: ``{"count", "mean", "max", "histogram"}``."""
    hist = Counter(iterations)
    count = len(iterations)
    return {
        "count": count,
        "mean": sum(iterations) / count if count else 0.0,
        "max": max(iterations, default=0),
        "histogram": {str(k): hist[k] for k in sorted(hist)},
    }


def cmd_stats(args) -> int:
    config = _config(args)
    if args.random is not None:
        rng = random.Random(args.seed)
        items = [
            (k + 1, "".join(str(rng.randrange(config.q)) for _ in range(config.n - 1)))
            for k in range(args.random)
        ]
    else:
        items = _read_lines(args.input, config.n - 1, config.q)
    iterations = [it for _, it in _run(partial(_encode_one, config), items, args.jobs)]
    summary = summarize(iterations)
    if args.format == "json":
        print(json.dumps(summary))
        return 0
    if args.random is None:
        for it in iterations:
            print(it)
    print(f"# count {summary['count']}")
    print(f"# mean {summary['mean']:.6f}")
    print(f"# max {summary['max']}")
    for k, v in summary["histogram"].items():
        print(f"# iterations={k} {v}")
    return 0


def cmd_validate(args) -> int:
    config = _config(args)
    print(
        f"ok mode={config.mode} n={config.n} q={config.q} alpha^2={config.alpha_sq} "
        f"p_L={float(config.p_low):.12f} target_len={config.target_len}"
    )
    return 0


def cmd_bounds(args) -> int:
    if args.grid <= 0:
        raise ConfigError("grid step must be positive")
    if args.check_n is not None and args.check_n < 1:
        raise ConfigError("--check-n must be positive")
    table = table_bounds(args.q_range, args.grid, args.check_n)
    if args.format == "json":
        print(json.dumps(table.records()))
    else:
        print(table.to_text())
    return 0


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "stats": cmd_stats,
    "validate": cmd_validate,
    "bounds": cmd_bounds,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        code = EXIT_CONFIG
    except MalformedLine as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_MALFORMED
    except IterationGuardExceeded as exc:
        print(f"error: IterationGuardExceeded: {exc}", file=sys.stderr)
        code = EXIT_GUARD
    if argv is None:
        sys.exit(code)
    return code
