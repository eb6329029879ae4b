"""Command-line interface.

Exit status: 0 on success, 1 on a usage or input error, 2 on an internal
error.
"""
from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from binlambda import analytic, boltzmann
from binlambda.counting import count
from binlambda.errors import BinLambdaError
from binlambda.simpletypes import count_typable
from binlambda.term import decode, encode, parse_term, render_term, size
from binlambda.unrank import rank, sample_uniform, sample_uniform_typable, unrank


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _m_value(text: str):
    if text.lower() in ("inf", "infinity", "∞"):
        return math.inf
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer or 'inf', got {text!r}")
    if m < 0:
        raise argparse.ArgumentTypeError("m must be non-negative")
    return m


def _m_for(m, n):
    return n if m == math.inf else m


def _window(text: str):
    try:
        lo, hi = (int(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    return lo, hi


def _show(t, bits: bool) -> str:
    return encode(t) if bits else render_term(t)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="binlambda", description="Count, rank, sample and type terms of the binary lambda calculus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="S(m, n)")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("table", help="S(m, n) for n = 0..max-n")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--format", choices=("text", "csv"), default="text")

    c = sub.add_parser("unrank", help="term of a given rank")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)

    c = sub.add_parser("rank", help="rank of a term")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--term", required=True)

    c = sub.add_parser("encode", help="binary code of a term")
    c.add_argument("--term", required=True)

    c = sub.add_parser("decode", help="term of a binary code")
    c.add_argument("--bits", required=True)

    c = sub.add_parser("sample", help="uniform terms of exact size")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--typable", action="store_true")
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--seed", type=int)
    c.add_argument("--bits", action="store_true", help="print binary codes instead of terms")

    c = sub.add_parser("boltzmann", help="Boltzmann (approximate-size) terms")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--mean", type=float)
    g.add_argument("--x", type=float)
    g.add_argument("--rho", action="store_true", help="x = rho (the default)")
    c.add_argument("--uplimit", type=int)
    c.add_argument("--window", type=_window)
    c.add_argument("--count", type=int, default=1)
    c.add_argument("--seed", type=int)
    c.add_argument("--max-attempts", type=int, default=100_000)
    c.add_argument("--bits", action="store_true", help="print binary codes instead of terms")
    c.add_argument("--sizes-only", action="store_true")

    c = sub.add_parser("tune", help="Boltzmann parameter for a target mean size")
    c.add_argument("--mean", type=float, required=True)

    c = sub.add_parser("typable-table", help="number of typable terms for n = 0..max-n")
    c.add_argument("--m", type=_m_value, required=True)
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--format", choices=("text", "csv"), default="text")
    c.add_argument("--workers", type=int, default=1)

    c = sub.add_parser("asymptotics", help="rho, C and the growth ratio")
    c.add_argument("--check-n", type=int, default=600)

    c = sub.add_parser("ratio-table", help="CSV of S(m, n) rho^n n^1.5")
    c.add_argument("--max-m", type=int, required=True)
    c.add_argument("--max-n", type=int, required=True)
    return p


def _print_column(values, fmt, out):
    for n, v in enumerate(values):
        print(f"{n},{v}" if fmt == "csv" else v, file=out)


def _typable(args):
    m, n = args
    return count_typable(m, n)


def run_command(args, out) -> None:
    cmd = args.command
    if cmd == "count":
        print(count(args.m, args.n), file=out)
    elif cmd == "table":
        if args.format == "csv":
            print("n,count", file=out)
        _print_column([count(args.m, n) for n in range(args.max_n + 1)], args.format, out)
    elif cmd == "unrank":
        t = unrank(args.m, args.n, args.k)
        print(render_term(t), file=out)
        print(encode(t), file=out)
    elif cmd == "rank":
        print(rank(args.m, parse_term(args.term)), file=out)
    elif cmd == "encode":
        print(encode(parse_term(args.term)), file=out)
    elif cmd == "decode":
        print(render_term(decode(args.bits.strip())), file=out)
    elif cmd == "sample":
        rng = boltzmann.make_rng(args.seed)
        m = _m_for(args.m, args.n)
        for _ in range(args.count):
            if args.typable:
                t = sample_uniform_typable(m, args.n, rng)
            else:
                t = sample_uniform(m, args.n, rng)
            print(_show(t, args.bits), file=out)
    elif cmd == "boltzmann":
        _boltzmann(args, out)
    elif cmd == "tune":
        print(f"{boltzmann.tune(args.mean):.15g}", file=out)
    elif cmd == "typable-table":
        jobs = [(_m_for(args.m, n), n) for n in range(args.max_n + 1)]
        if args.workers > 1:
            with ProcessPoolExecutor(args.workers) as pool:
                values = list(pool.map(_typable, jobs))
        else:
            values = [_typable(j) for j in jobs]
        if args.format == "csv":
            print("n,count", file=out)
        _print_column(values, args.format, out)
    elif cmd == "asymptotics":
        rep = analytic.asymptotic_report((args.check_n,))
        print(f"rho = {rep.rho:.15g}", file=out)
        print(f"1/rho = {rep.inv_rho:.15g}", file=out)
        print(f"c_tilde = {rep.c_tilde:.15g}", file=out)
        print(f"c = {rep.c:.15g}", file=out)
        n, ratio = rep.samples[0]
        print(f"growth_ratio({n}) = {ratio:.15g}", file=out)
    elif cmd == "ratio-table":
        out.write(analytic.ratio_table_csv(analytic.ratio_table(args.max_m, args.max_n)))


def _boltzmann(args, out) -> None:
    if args.mean is not None:
        params = boltzmann.make_params(boltzmann.tune(args.mean))
    elif args.x is not None:
        params = boltzmann.make_params(args.x)
    else:
        params = boltzmann.rho_params()
    rng = boltzmann.make_rng(args.seed)
    for _ in range(args.count):
        if args.window is not None:
            lo, hi = args.window
            if args.uplimit is not None:
                hi = min(hi, args.uplimit)
            t = boltzmann.sample_window(params, lo, hi, rng, args.max_attempts)
        elif args.uplimit is not None:
            t = boltzmann.sample_window(params, 0, args.uplimit, rng, args.max_attempts)
        else:
            t = boltzmann.sample_free(params, rng)
        n = size(t)
        if args.sizes_only:
            print(n, file=out)
        else:
            print(f"{n}\t{_show(t, args.bits)}", file=out)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        run_command(args, out)
    except UsageError as e:
        print(f"binlambda: error: {e}", file=err)
        return 1
    except (BinLambdaError, ValueError, ArithmeticError) as e:
        print(f"binlambda: {type(e).__name__}: {e}", file=err)
        return 1
    except SystemExit as e:
        # --help
        return 0 if e.code in (0, None) else 1
    except Exception as e:  # noqa: BLE001
        print(f"binlambda: internal error: {type(e).__name__}: {e}", file=err)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
