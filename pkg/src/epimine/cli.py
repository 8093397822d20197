"""Command-line interface.

Subcommands: ``mine`` (depth-first miner), ``oracle`` (exhaustive reference
miner), ``diff`` (compare two result files), ``gen`` (synthetic sequence
generator), ``stats`` (sequence summary). Exit codes: 0 success, 1 runtime
failure (budget or I/O), 2 usage or input-parse error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .codec import (
    diff,
    format_diff,
    parse_native,
    parse_transactions,
    read_hues,
    write_hues,
    write_native,
)
from .datagen import GenConfig, generate
from .errors import BudgetExceededError, EpiMineError, InvalidConfigError, ParseError
from .miner import MiningConfig, mine
from .model import EventSequence
from .oracle import OracleBudget, oracle_mine

ORDER_FLAGS = {
    "occ": "occurrence",
    "lexi": "lexicographic",
    "ewu-asc": "ewu-ascending",
    "ewu-desc": "ewu-descending",
}


def _ratio(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a ratio: {text!r}") from None
    if not 0 <= value <= 1:
        raise argparse.ArgumentTypeError(f"ratio must lie in [0, 1], got {text}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, help="input sequence file")
    parser.add_argument(
        "--format",
        choices=("useq", "tx"),
        default="useq",
        help="input format: native (useq) or transactions (tx)",
    )


def _add_threshold_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mtd", type=_non_negative_int, required=True, help="maximum time duration")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--min-util", type=_ratio, help="utility threshold as a ratio of TU")
    group.add_argument("--min-util-abs", type=_non_negative_int, help="absolute utility threshold")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--emit", choices=("tsv", "json"), default="tsv", help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="epimine", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine high-utility episodes")
    _add_input_flags(p_mine)
    _add_threshold_flags(p_mine)
    p_mine.add_argument("--ewu", choices=("baseline", "opt1", "opt2"), default="opt2")
    p_mine.add_argument("--order", choices=tuple(ORDER_FLAGS), default="ewu-asc")
    p_mine.add_argument("--mode", choices=("paper", "strict"), default="strict")
    p_mine.add_argument("--max-episode-length", type=int, default=None)
    p_mine.add_argument("--threads", type=int, default=1)
    p_mine.add_argument("--stats", action="store_true", help="print traversal statistics to stderr")
    p_mine.add_argument("--no-timing", action="store_true", help="omit timing from the statistics")
    _add_output_flags(p_mine)

    p_oracle = sub.add_parser("oracle", help="exhaustive reference miner")
    _add_input_flags(p_oracle)
    _add_threshold_flags(p_oracle)
    p_oracle.add_argument("--max-time-points", type=int, default=OracleBudget.max_time_points)
    p_oracle.add_argument("--max-alphabet", type=int, default=OracleBudget.max_alphabet)
    p_oracle.add_argument("--max-length", type=int, default=OracleBudget.max_episode_length)
    _add_output_flags(p_oracle)

    p_diff = sub.add_parser("diff", help="compare two result files")
    p_diff.add_argument("file_a")
    p_diff.add_argument("file_b")

    p_gen = sub.add_parser("gen", help="generate a synthetic sequence (native format)")
    p_gen.add_argument("--time-points", type=int, required=True)
    p_gen.add_argument("--alphabet", type=int, required=True)
    p_gen.add_argument("--events-min", type=int, default=1)
    p_gen.add_argument("--events-max", type=int, default=3)
    p_gen.add_argument("--qty-max", type=int, default=6)
    p_gen.add_argument("--util-max", type=int, default=1000)
    p_gen.add_argument("--lognorm-location", type=float, default=GenConfig.lognormal_location)
    p_gen.add_argument("--lognorm-scale", type=float, default=GenConfig.lognormal_scale)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", help="output file (default: stdout)")

    p_stats = sub.add_parser("stats", help="print sequence summary")
    _add_input_flags(p_stats)

    return parser


def _load_sequence(args) -> EventSequence:
    with open(args.input, "r", encoding="utf-8") as handle:
        if args.format == "useq":
            sequence, _ = parse_native(handle)
        else:
            sequence = parse_transactions(handle)
    return sequence


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_mine(args) -> int:
    sequence = _load_sequence(args)
    config = MiningConfig(
        mtd=args.mtd,
        min_util=args.min_util,
        min_util_abs=args.min_util_abs,
        ewu_variant=args.ewu,
        order=ORDER_FLAGS[args.order],
        mode=args.mode,
        max_episode_length=args.max_episode_length,
        threads=args.threads,
    )
    records, stats = mine(sequence, config)
    _write_out(write_hues(records, args.emit), args.out)
    if args.stats:
        lines = [
            f"hues\t{len(records)}",
            f"candidates_visited\t{stats.candidates_visited}",
            f"pruned_by_ewu\t{stats.pruned_by_ewu}",
            f"max_depth\t{stats.max_depth}",
        ]
        if not args.no_timing:
            lines.append(f"elapsed_s\t{stats.elapsed:.6f}")
        print("\n".join(lines), file=sys.stderr)
    return 0


def _cmd_oracle(args) -> int:
    sequence = _load_sequence(args)
    config = MiningConfig(mtd=args.mtd, min_util=args.min_util, min_util_abs=args.min_util_abs)
    budget = OracleBudget(
        max_time_points=args.max_time_points,
        max_alphabet=args.max_alphabet,
        max_episode_length=args.max_length,
    )
    records = oracle_mine(sequence, config, budget)
    _write_out(write_hues(records, args.emit), args.out)
    return 0


def _read_results(path: str):
    fmt = "json" if path.endswith(".json") else "tsv"
    with open(path, "r", encoding="utf-8") as handle:
        return read_hues(handle, fmt)


def _cmd_diff(args) -> int:
    report = diff(_read_results(args.file_a), _read_results(args.file_b))
    sys.stdout.write(format_diff(report))
    return 0


def _cmd_gen(args) -> int:
    config = GenConfig(
        num_time_points=args.time_points,
        alphabet_size=args.alphabet,
        events_per_point_min=args.events_min,
        events_per_point_max=args.events_max,
        quantity_range=(1, args.qty_max),
        unit_utility_range=(1, args.util_max),
        lognormal_location=args.lognorm_location,
        lognormal_scale=args.lognorm_scale,
        seed=args.seed,
    )
    sequence, table = generate(config)
    _write_out(write_native(sequence, table), args.out)
    return 0


def _cmd_stats(args) -> int:
    sequence = _load_sequence(args)
    print(f"time_points\t{len(sequence)}")
    print(f"alphabet_size\t{len(sequence.alphabet)}")
    print(f"total_events\t{sum(len(e.events) for e in sequence.entries)}")
    print(f"total_utility\t{sequence.total_utility}")
    return 0


_COMMANDS = {
    "mine": _cmd_mine,
    "oracle": _cmd_oracle,
    "diff": _cmd_diff,
    "gen": _cmd_gen,
    "stats": _cmd_stats,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ParseError, InvalidConfigError) as exc:
        print(f"epimine: error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, OSError) as exc:
        print(f"epimine: {exc}", file=sys.stderr)
        return 1
    except EpiMineError as exc:
        print(f"epimine: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
