"""Minimal occurrences of episodes under the maximum-time-duration constraint.

An occurrence of an episode is an interval [Ts, Te] whose first set matches
at Ts and whose last set matches at Te, with the sets in between embedded at
strictly increasing time points. A minimal occurrence contains no other
occurrence of the same episode. The admissible minimal occurrences are the
ones whose span Te - Ts does not exceed the MTD.

Two computation routes are provided: a direct scan (``compute_moset``) and
incremental extension from a prefix episode's minimal occurrences
(``extend_moset_serial`` / ``extend_moset_simult``), which is what the miner
uses. For serial extension, and for simultaneous extension in strict mode,
the incremental route yields exactly the scan result: every minimal
occurrence of an extension shares its start with a minimal occurrence of the
prefix, and candidates beyond the MTD window can only be contained in
intervals that the MTD filter removes anyway.
"""

from __future__ import annotations

from .model import Episode, EventSequence

Interval = tuple[int, int]
MoSet = tuple[Interval, ...]

MOSET_MODES = ("paper", "strict")


def match_times(episode: Episode, sequence: EventSequence, start: int) -> tuple[int, ...] | None:
    """Greedy-earliest embedding of ``episode`` anchored at ``start``.

    Matches the first set exactly at ``start`` and each subsequent set at
    the earliest strictly later time point containing it. Returns the
    matched time per set, or None when no embedding exists.
    """
    if not all(sequence.has_event_at(ev, start) for ev in episode.sets[0]):
        return None
    times = [start]
    t = start
    for event_set in episode.sets[1:]:
        t = sequence.next_time_with_set(event_set, after=t)
        if t is None:
            return None
        times.append(t)
    return tuple(times)


def earliest_end(episode: Episode, sequence: EventSequence, start: int) -> int | None:
    """End time of the greedy-earliest embedding anchored at ``start``, if any."""
    matched = match_times(episode, sequence, start)
    return matched[-1] if matched else None


def minimal_intervals(candidates: list[Interval]) -> MoSet:
    """Drop every candidate interval that contains another candidate.

    Equivalent to pairwise non-containment filtering, but linear after
    sorting: reduce to the smallest end per start, then keep an interval iff
    its end is strictly below every kept later-starting end.
    """
    if not candidates:
        return ()
    best_end: dict[int, int] = {}
    for s, e in candidates:
        if s not in best_end or e < best_end[s]:
            best_end[s] = e
    kept: list[Interval] = []
    min_end = None
    for s in sorted(best_end, reverse=True):
        e = best_end[s]
        if min_end is None or e < min_end:
            kept.append((s, e))
            min_end = e
    kept.reverse()
    return tuple(kept)


def compute_moset(episode: Episode, sequence: EventSequence, mtd: int) -> MoSet:
    """All minimal occurrences of ``episode`` with span at most ``mtd``.

    For each feasible start the greedy-earliest end gives one candidate;
    containment filtering then yields the minimal occurrences, and the MTD
    constraint is applied afterwards.
    """
    candidates: list[Interval] = []
    for start in sequence.times_with_set(episode.sets[0]):
        end = earliest_end(episode, sequence, start)
        if end is not None:
            candidates.append((start, end))
    return tuple((s, e) for s, e in minimal_intervals(candidates) if e - s <= mtd)


def extend_moset_serial(
    mo_alpha: MoSet, event: str, sequence: EventSequence, mtd: int
) -> MoSet:
    """Minimal occurrences of the serial concatenation of a prefix with ``event``.

    For each prefix occurrence [Ts, Te], every occurrence of ``event`` at a
    time in (Te, Ts + mtd] yields a candidate [Ts, t]; containment filtering
    of the candidates gives exactly the scan result for the extension.
    """
    candidates: list[Interval] = []
    for s, te in mo_alpha:
        for t in sequence.times_between(te + 1, s + mtd):
            if sequence.has_event_at(event, t):
                candidates.append((s, t))
    return tuple((s, e) for s, e in minimal_intervals(candidates) if e - s <= mtd)


def extend_moset_simult(
    mo_alpha: MoSet,
    alpha: Episode,
    event: str,
    sequence: EventSequence,
    mtd: int,
    mode: str = "strict",
) -> MoSet:
    """Minimal occurrences of the simultaneous concatenation with ``event``.

    In ``paper`` mode a prefix occurrence [Ts, Te] survives iff ``event``
    occurs at Te itself, the most literal incremental reading; this can miss
    minimal occurrences whose extended last set only assembles at a later
    time point within the window. ``strict`` mode examines every time point
    t in [Te, Ts + mtd] at which the full extended last set occurs and is
    exactly the scan result.
    """
    if mode not in MOSET_MODES:
        raise ValueError(f"unknown moset mode {mode!r}")
    last = alpha.sets[-1]
    candidates: list[Interval] = []
    if mode == "paper":
        for s, te in mo_alpha:
            if sequence.has_event_at(event, te):
                candidates.append((s, te))
    else:
        for s, te in mo_alpha:
            for t in sequence.times_between(te, s + mtd):
                at = sequence.events_at(t)
                if event in at and all(ev in at for ev in last):
                    candidates.append((s, t))
    return tuple((s, e) for s, e in minimal_intervals(candidates) if e - s <= mtd)
