"""High-utility episode mining by depth-first prefix growth with EWU pruning.

One scan builds every 1-episode's minimal occurrences, utility, and EWU.
Each 1-episode whose EWU reaches the threshold is then grown recursively by
simultaneous and serial concatenation over the conceptual lexicographic
sequence tree. A node's extensions inherit its minimal-occurrence set, so
the sequence is never rescanned from scratch; extensions whose EWU falls
below the threshold are pruned together with their whole subtree.

Extension candidates inside the span procedures are deliberately not
filtered by their own global 1-episode EWU: an event whose 1-episode bound
is below the threshold can still appear as a suffix of a high-utility
episode. Only the roots are gated.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .codec import HueRecord, sort_records
from .errors import InvalidConfigError
from .model import (
    Episode,
    EventSequence,
    ORDER_KINDS,
    ProcessingOrder,
    build_order,
    serial_concat,
    simult_concat,
)
from .occurrence import (
    MOSET_MODES,
    MoSet,
    extend_moset_serial,
    extend_moset_simult,
)
from .utility import EWU_VARIANTS, episode_utility, ewu_total

RatioLike = Fraction | str | int


@dataclass(frozen=True)
class MiningConfig:
    """Parameters of one mining run.

    Exactly one of ``min_util`` (a ratio of the sequence's total utility,
    parsed exactly: ``"0.5"`` means one half) and ``min_util_abs`` (an
    absolute utility threshold) must be set. The threshold comparison is
    "no less than", evaluated in exact rational arithmetic.
    """

    mtd: int
    min_util: RatioLike | None = None
    min_util_abs: int | None = None
    ewu_variant: str = "opt2"
    order: str = "ewu-ascending"
    mode: str = "strict"
    max_episode_length: int | None = None
    threads: int = 1

    def validate(self) -> None:
        if not isinstance(self.mtd, int) or self.mtd < 0:
            raise InvalidConfigError(f"mtd must be a non-negative integer, got {self.mtd!r}")
        if (self.min_util is None) == (self.min_util_abs is None):
            raise InvalidConfigError("exactly one of min_util and min_util_abs must be set")
        if self.min_util is not None:
            ratio = self.min_util_ratio()
            if not 0 <= ratio <= 1:
                raise InvalidConfigError(f"min_util must lie in [0, 1], got {ratio}")
        elif self.min_util_abs < 0:
            raise InvalidConfigError("min_util_abs must be non-negative")
        if self.ewu_variant not in EWU_VARIANTS:
            raise InvalidConfigError(f"unknown EWU variant {self.ewu_variant!r}")
        if self.order not in ORDER_KINDS:
            raise InvalidConfigError(f"unknown processing order {self.order!r}")
        if self.mode not in MOSET_MODES:
            raise InvalidConfigError(f"unknown mode {self.mode!r}")
        if self.max_episode_length is not None and self.max_episode_length < 1:
            raise InvalidConfigError("max_episode_length must be at least 1")
        if self.threads < 1:
            raise InvalidConfigError("threads must be at least 1")

    def min_util_ratio(self) -> Fraction:
        try:
            return Fraction(self.min_util)
        except (ValueError, TypeError) as exc:
            raise InvalidConfigError(f"cannot parse min_util {self.min_util!r}") from exc

    def threshold(self, total_utility: int) -> Fraction:
        """Effective utility threshold for a sequence with the given TU."""
        if self.min_util_abs is not None:
            return Fraction(self.min_util_abs)
        return self.min_util_ratio() * total_utility


@dataclass
class MineStats:
    """Traversal counters of one mining run.

    ``candidates_visited`` counts every extension episode whose minimal
    occurrence set came out non-empty and whose utility and EWU were
    therefore evaluated, once per construction.
    """

    candidates_visited: int = 0
    pruned_by_ewu: int = 0
    max_depth: int = 0
    elapsed: float = 0.0

    def merge(self, other: "MineStats") -> None:
        self.candidates_visited += other.candidates_visited
        self.pruned_by_ewu += other.pruned_by_ewu
        self.max_depth = max(self.max_depth, other.max_depth)


def collect_simult_candidates(
    alpha: Episode,
    mo_alpha: MoSet,
    sequence: EventSequence,
    mtd: int,
    order: ProcessingOrder,
    mode: str = "strict",
) -> list[str]:
    """Events eligible to extend ``alpha``'s last set, sorted by the order.

    Only events ordered after the last set's order-maximal event qualify. In
    paper mode, candidates are drawn from the end points of the minimal
    occurrences; in strict mode, from every window time point at which the
    full last set occurs again, which is complete for minimal occurrences of
    the extension.
    """
    last = alpha.sets[-1]
    pivot_rank = max(order.rank[ev] for ev in last)
    found: set[str] = set()
    for s, te in mo_alpha:
        times = (te,) if mode == "paper" else sequence.times_between(te, s + mtd)
        for t in times:
            at = sequence.events_at(t)
            if mode == "strict" and not all(ev in at for ev in last):
                continue
            found.update(ev for ev in at if order.rank[ev] > pivot_rank)
    return sorted(found, key=order.rank.__getitem__)


def collect_serial_candidates(
    alpha: Episode,
    mo_alpha: MoSet,
    sequence: EventSequence,
    mtd: int,
    order: ProcessingOrder,
) -> list[str]:
    """Events occurring after some minimal occurrence of ``alpha`` within its
    MTD window, sorted by the order."""
    found: set[str] = set()
    for s, te in mo_alpha:
        for t in sequence.times_between(te + 1, s + mtd):
            found.update(sequence.events_at(t))
    return sorted(found, key=order.rank.__getitem__)


class _Run:
    """Mutable state of one (sub)tree exploration."""

    def __init__(
        self,
        sequence: EventSequence,
        config: MiningConfig,
        order: ProcessingOrder,
        threshold: Fraction,
    ):
        self.sequence = sequence
        self.config = config
        self.order = order
        self.threshold = threshold
        self.records: dict[Episode, HueRecord] = {}
        self.stats = MineStats()

    def explore_root(self, episode: Episode, mo: MoSet, bound: int, utility: int) -> None:
        self.stats.max_depth = max(self.stats.max_depth, 1)
        if bound >= self.threshold:
            if utility >= self.threshold:
                self.records[episode] = HueRecord(episode, utility, mo)
            self._span(episode, mo)

    def _span(self, alpha: Episode, mo_alpha: MoSet) -> None:
        cfg = self.config
        for event in collect_simult_candidates(
            alpha, mo_alpha, self.sequence, cfg.mtd, self.order, cfg.mode
        ):
            beta = simult_concat(alpha, event)
            mo_beta = extend_moset_simult(
                mo_alpha, alpha, event, self.sequence, cfg.mtd, cfg.mode
            )
            self._evaluate(beta, mo_beta)
        for event in collect_serial_candidates(
            alpha, mo_alpha, self.sequence, cfg.mtd, self.order
        ):
            beta = serial_concat(alpha, event)
            mo_beta = extend_moset_serial(mo_alpha, event, self.sequence, cfg.mtd)
            self._evaluate(beta, mo_beta)

    def _evaluate(self, beta: Episode, mo_beta: MoSet) -> None:
        if not mo_beta:
            return
        self.stats.candidates_visited += 1
        self.stats.max_depth = max(self.stats.max_depth, beta.length)
        bound = ewu_total(
            self.config.ewu_variant, beta, mo_beta, self.sequence, self.config.mtd, self.order
        )
        if bound < self.threshold:
            self.stats.pruned_by_ewu += 1
            return
        utility = episode_utility(beta, mo_beta, self.sequence)
        if utility >= self.threshold:
            self.records[beta] = HueRecord(beta, utility, mo_beta)
        cap = self.config.max_episode_length
        if cap is None or beta.length < cap:
            self._span(beta, mo_beta)


def mine(sequence: EventSequence, config: MiningConfig) -> tuple[list[HueRecord], MineStats]:
    """Discover all high-utility episodes of ``sequence`` under ``config``.

    Returns the records sorted by descending utility (ties by episode
    serialization) together with the traversal statistics. With strict-mode
    minimal-occurrence computation the result is the complete set; paper
    mode reproduces the literal incremental reading, which can omit
    episodes whose extended last set only assembles later in the window.
    """
    config.validate()
    if len(sequence) == 0:
        raise InvalidConfigError("cannot mine an empty sequence")
    started = time.perf_counter()
    threshold = config.threshold(sequence.total_utility)

    one_episodes = {ev: Episode(((ev,),)) for ev in sequence.alphabet}
    one_mosets: dict[str, MoSet] = {
        ev: tuple((t, t) for t in sequence.event_times(ev)) for ev in sequence.alphabet
    }
    lex = build_order(sequence, "lexicographic")
    if config.order in ("ewu-ascending", "ewu-descending"):
        # Rank by the opt1 formula for every pruning variant, so that the
        # traversal tree is identical across variants.
        rank_values = {
            ev: ewu_total("opt1", one_episodes[ev], one_mosets[ev], sequence, config.mtd, lex)
            for ev in sequence.alphabet
        }
        order = build_order(sequence, config.order, rank_values)
    else:
        order = build_order(sequence, config.order)

    roots = []
    for ev in order.sorted_events(sequence.alphabet):
        episode, mo = one_episodes[ev], one_mosets[ev]
        bound = ewu_total(config.ewu_variant, episode, mo, sequence, config.mtd, order)
        utility = episode_utility(episode, mo, sequence)
        roots.append((episode, mo, bound, utility))

    def run_root(root) -> _Run:
        run = _Run(sequence, config, order, threshold)
        run.explore_root(*root)
        return run

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            runs = list(pool.map(run_root, roots))
    else:
        runs = [run_root(root) for root in roots]

    records: dict[Episode, HueRecord] = {}
    stats = MineStats()
    for run in runs:
        records.update(run.records)
        stats.merge(run.stats)
    stats.elapsed = time.perf_counter() - started
    return sort_records(records.values()), stats
