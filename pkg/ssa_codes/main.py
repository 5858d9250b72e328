"""
ssa-codes command line
"""
import argparse
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List, Optional, Union

from ssa_codes import __version__
from ssa_codes.config import get_settings
from ssa_codes.errors import ParameterError, log_error_details
from ssa_codes.logger import ssa_logger
from ssa_codes.cli.commands import (
    EXIT_OK,
    EXIT_PROPERTY_FAILED,
    SCHEMES,
    build_codec,
    format_check,
    format_fields,
    format_table,
    run_check,
    run_codec,
    run_table,
)
from ssa_codes.cli.payload import pack_bytes, unpack_dna
from ssa_codes.services.block_code import build_block_set, serialize_block_set
from ssa_codes.services.composition_code import brute_count, char_root, count, rank, unrank
from ssa_codes.services.ssa_oracle import capacity_upper_bound
from ssa_codes.utils.dna import DnaSeq
from ssa_codes.utils.validators import parse_dna_lines, parse_range


def positive_int(value: str) -> int:
    try:
        ival = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{value}" is not an integer')
    if ival < 1:
        raise argparse.ArgumentTypeError(f'"{value}" is not a positive integer')
    return ival


# ============================================
# Input / Output
# ============================================

def _read_text(path: Optional[str]) -> str:
    if path and path != "-":
        return Path(path).read_text(encoding="utf-8")
    return sys.stdin.read()


def _read_bytes(path: Optional[str]) -> bytes:
    if path and path != "-":
        return Path(path).read_bytes()
    return sys.stdin.buffer.read()


def _write(output: Union[str, bytes]):
    if isinstance(output, bytes):
        sys.stdout.flush()
        sys.stdout.buffer.write(output)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(output)


# ============================================
# Sub-command handlers
# ============================================

def handle_check(args) -> int:
    status = EXIT_OK
    for seq in parse_dna_lines(_read_text(args.input).splitlines()):
        result = run_check(seq, args.m, args.witness)
        _write(format_check(result, args.format) + "\n")
        if result.status != EXIT_OK:
            status = EXIT_PROPERTY_FAILED
    return status


def _handle_codec(args, mode: str) -> int:
    codec = build_codec(args.scheme, n=args.n, m=args.m, set_file=args.set_file)
    if mode == "encode" and args.bytes:
        payload = _read_bytes(args.input)
    else:
        payload = _read_text(args.input)
    _write(run_codec(mode, codec, payload, as_bytes=args.bytes, trace=args.trace))
    return EXIT_OK


def handle_encode(args) -> int:
    return _handle_codec(args, "encode")


def handle_decode(args) -> int:
    return _handle_codec(args, "decode")


def handle_count(args) -> int:
    if args.brute:
        value = brute_count(args.n, args.m, args.k)
    elif args.k != 1:
        raise ParameterError("closed-form counting covers k = 1 only; use --brute for other k")
    else:
        value = count(args.n, args.m)
    _write(format_fields({"m": args.m, "n": args.n, "k": args.k, "count": value}, args.format))
    return EXIT_OK


def handle_rank(args) -> int:
    for seq in parse_dna_lines(_read_text(args.input).splitlines()):
        _write(f"{rank(seq, args.m)}\n")
    return EXIT_OK


def handle_unrank(args) -> int:
    _write(f"{unrank(args.index, args.n, args.m).text}\n")
    return EXIT_OK


def handle_rate(args) -> int:
    if args.m < 2:
        raise ParameterError("rate needs m >= 2")
    root = char_root(args.m)
    bound = capacity_upper_bound(args.m)
    fields = {"m": args.m, "lambda": root.lam, "rate": root.rate,
              "bound": bound.bound, "trivial_bound": bound.trivial_bound}
    _write(format_fields(fields, args.format))
    return EXIT_OK


def handle_search(args) -> int:
    block_set = build_block_set(args.m, args.method)
    text = serialize_block_set(block_set)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        ssa_logger.info(f"💾 {block_set.size} blocks written to {args.out}")
    else:
        _write(text)
    return EXIT_OK


def handle_table(args) -> int:
    if args.kind == "rates":
        table = run_table("rates", parse_range(args.m_range, range(2, 5)), range(0))
    else:
        table = run_table(
            "counts",
            parse_range(args.m_range, range(3, 4)),
            parse_range(args.n_range, range(1, 11)),
        )
    _write(format_table(table, args.format))
    return EXIT_OK


def handle_pack(args) -> int:
    _write(pack_bytes(_read_bytes(args.input)).text + "\n")
    return EXIT_OK


def handle_unpack(args) -> int:
    text = "".join(_read_text(args.input).split())
    _write(unpack_dna(DnaSeq(text)))
    return EXIT_OK


HANDLERS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "check": handle_check,
    "encode": handle_encode,
    "decode": handle_decode,
    "count": handle_count,
    "rank": handle_rank,
    "unrank": handle_unrank,
    "rate": handle_rate,
    "search": handle_search,
    "table": handle_table,
    "pack": handle_pack,
    "unpack": handle_unpack,
}


# ============================================
# Parser
# ============================================

def _add_input(parser: argparse.ArgumentParser):
    parser.add_argument("input", nargs="?", default=None,
                        help="input file (default: standard input)")


def _add_codec_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--scheme", choices=SCHEMES, default="replacement")
    parser.add_argument("--n", type=positive_int, help="codeword length")
    parser.add_argument("--m", type=positive_int, help="window length (composition scheme)")
    parser.add_argument("--set-file", dest="set_file", help="block set written by `search`")
    parser.add_argument("--bytes", action="store_true", help="treat the payload as raw bytes")
    parser.add_argument("--trace", action="store_true", help="log every replacement step")
    _add_input(parser)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="ssa-codes",
        description="Secondary-structure avoiding DNA codes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "rows"), default=settings.default_format)
    parser.add_argument("--log-level", dest="log_level", default=None,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    check = subparsers.add_parser("check", help="test sequences for the m-SSA property")
    check.add_argument("--m", type=positive_int, required=True)
    check.add_argument("--witness", action="store_true", help="print the violating pair")
    _add_input(check)

    _add_codec_flags(subparsers.add_parser("encode", help="messages to codewords"))
    _add_codec_flags(subparsers.add_parser("decode", help="codewords to messages"))

    count_parser = subparsers.add_parser("count", help="size of the composition codebook")
    count_parser.add_argument("--m", type=positive_int, required=True)
    count_parser.add_argument("--n", type=int, required=True)
    count_parser.add_argument("--k", type=positive_int, default=1)
    count_parser.add_argument("--brute", action="store_true", help="enumerate instead of recurse")

    rank_parser = subparsers.add_parser("rank", help="rank composition codewords")
    rank_parser.add_argument("--m", type=positive_int, required=True)
    _add_input(rank_parser)

    unrank_parser = subparsers.add_parser("unrank", help="composition codeword of a rank")
    unrank_parser.add_argument("--m", type=positive_int, required=True)
    unrank_parser.add_argument("--n", type=positive_int, required=True)
    unrank_parser.add_argument("index", type=int)

    rate_parser = subparsers.add_parser("rate", help="asymptotic rate and capacity bound")
    rate_parser.add_argument("--m", type=positive_int, required=True)

    search = subparsers.add_parser("search", help="search a compatible block set")
    search.add_argument("--m", type=positive_int, required=True)
    search.add_argument("--method", choices=("exact", "greedy"), default="exact")
    search.add_argument("--out", default=None)

    table = subparsers.add_parser("table", help="rate or count tables")
    table.add_argument("kind", choices=("rates", "counts"))
    table.add_argument("--m-range", dest="m_range", default="")
    table.add_argument("--n-range", dest="n_range", default="")

    _add_input(subparsers.add_parser("pack", help="bytes to DNA, four symbols per byte"))
    _add_input(subparsers.add_parser("unpack", help="DNA back to bytes"))
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if args.log_level:
        ssa_logger.set_level(args.log_level)

    start = time.perf_counter()
    try:
        status = HANDLERS[args.command](args)
    except Exception as e:
        status = log_error_details(e)

    params = {k: v for k, v in vars(args).items() if k != "command"}
    ssa_logger.log_run_summary(
        command=args.command,
        params=params,
        duration=time.perf_counter() - start,
        success=status == EXIT_OK,
    )
    return status


if __name__ == "__main__":
    sys.exit(main())
