"""Utility arithmetic: set, time-point, episode, and remaining utilities,
plus the three episode-weighted-utilization (EWU) upper-bound variants.

Episode utility sums, over each minimal occurrence, the utilities of the
sets matched by the greedy-earliest embedding anchored at the occurrence
start (minimality puts the last set at the occurrence end). All values are
exact integers.

EWU variants, per minimal occurrence [Ts, Te] of a k-set episode:

- ``baseline``: matched utility of all k sets plus the total utility of
  every time point in [Te, Ts + MTD].
- ``opt1``: matched utility of the first k - 1 sets plus the same window,
  removing the overlap of the last set with tu(Te).
- ``opt2``: matched utility of all k sets, plus the remaining utility of the
  last set at Te (events ordered after its order-maximal event), plus the
  total utility of every time point in [Te + 1, Ts + MTD].

The per-occurrence bounds satisfy utility <= opt2 <= opt1 <= baseline, and
each bounds the utility of every episode reachable from the prefix by
canonical extension.
"""

from __future__ import annotations

from typing import Iterable

from .errors import AbsentEventError
from .model import Episode, EventSequence, ProcessingOrder
from .occurrence import Interval, MoSet, match_times

EWU_VARIANTS = ("baseline", "opt1", "opt2")


def set_utility(events: Iterable[str], time: int, sequence: EventSequence) -> int:
    """Utility of a simultaneous event set at one time point."""
    at = sequence.events_at(time)
    total = 0
    for ev in events:
        try:
            total += at[ev]
        except KeyError:
            raise AbsentEventError(f"event {ev} not present at time {time}") from None
    return total


def time_point_utility(time: int, sequence: EventSequence) -> int:
    """Total utility tu of one time point."""
    return sequence.tu(time)


def total_utility(sequence: EventSequence) -> int:
    """Total utility TU of the whole sequence."""
    return sequence.total_utility


def episode_utility(episode: Episode, mo_set: MoSet, sequence: EventSequence) -> int:
    """Total utility of an episode over its minimal occurrences."""
    total = 0
    for start, _ in mo_set:
        matched = match_times(episode, sequence, start)
        total += sum(
            set_utility(event_set, t, sequence)
            for event_set, t in zip(episode.sets, matched)
        )
    return total


def remaining_utility(
    events: Iterable[str], time: int, order: ProcessingOrder, sequence: EventSequence
) -> int:
    """Utility at ``time`` of the events ordered after the order-maximal
    event of ``events``."""
    at = sequence.events_at(time)
    pivot = None
    for ev in events:
        if ev not in at:
            raise AbsentEventError(f"event {ev} not present at time {time}")
        if pivot is None or order.is_after(ev, pivot):
            pivot = ev
    pivot_rank = order.rank[pivot]
    return sum(u for ev, u in at.items() if order.rank[ev] > pivot_rank)


def ewu(
    variant: str,
    episode: Episode,
    mo: Interval,
    sequence: EventSequence,
    mtd: int,
    order: ProcessingOrder,
) -> int:
    """Episode-weighted utilization of one minimal occurrence.

    Window sums range only over time points that exist in the sequence;
    gaps contribute nothing.
    """
    start, end = mo
    matched = match_times(episode, sequence, start)
    set_utils = [
        set_utility(event_set, t, sequence)
        for event_set, t in zip(episode.sets, matched)
    ]
    if variant == "baseline":
        return sum(set_utils) + sequence.range_tu(end, start + mtd)
    if variant == "opt1":
        return sum(set_utils[:-1]) + sequence.range_tu(end, start + mtd)
    if variant == "opt2":
        ru = remaining_utility(episode.sets[-1], end, order, sequence)
        return sum(set_utils) + ru + sequence.range_tu(end + 1, start + mtd)
    raise ValueError(f"unknown EWU variant {variant!r}")


def ewu_total(
    variant: str,
    episode: Episode,
    mo_set: MoSet,
    sequence: EventSequence,
    mtd: int,
    order: ProcessingOrder,
) -> int:
    """Accumulated EWU over all minimal occurrences of an episode."""
    return sum(ewu(variant, episode, mo, sequence, mtd, order) for mo in mo_set)
