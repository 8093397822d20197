"""Core domain types: event sequences, episodes, and processing orders.

An event sequence is a single long, time-ordered list of simultaneous event
sets, each event carrying an exact integer utility. Episodes are ordered
lists of non-empty event sets: serial order between sets, no order within a
set. All utility arithmetic in this package is exact integer arithmetic.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    DuplicateEventError,
    EmptySetError,
    MissingEwuError,
    UnknownTimeError,
)

EventId = str

#: Maps each event to its positive unit utility.
UtilityTable = dict[str, int]

_FORBIDDEN_TOKEN_CHARS = set(":{},>")

ORDER_KINDS = ("occurrence", "lexicographic", "ewu-ascending", "ewu-descending")


def validate_event_token(token: str) -> str:
    """Check that ``token`` is a legal event identifier and return it.

    Tokens are non-empty and may not contain whitespace or any of
    ``: { } , >`` (the characters used by the serialization grammar).
    """
    if not token:
        raise ValueError("event token must be non-empty")
    for ch in token:
        if ch.isspace() or ch in _FORBIDDEN_TOKEN_CHARS:
            raise ValueError(f"illegal character {ch!r} in event token {token!r}")
    return token


class EventOccurrence(NamedTuple):
    event: EventId
    quantity: int | None
    utility: int


@dataclass(frozen=True)
class TimePointEntry:
    """One simultaneous event set of the sequence, with per-event utilities."""

    time: int
    events: tuple[EventOccurrence, ...]

    def __post_init__(self) -> None:
        if self.time < 0:
            raise ValueError(f"time point must be non-negative, got {self.time}")
        if not self.events:
            raise ValueError(f"time point {self.time} has no events")
        seen: set[str] = set()
        for ev in self.events:
            if ev.event in seen:
                raise DuplicateEventError(f"event {ev.event} repeated at time {self.time}")
            seen.add(ev.event)
            if ev.utility <= 0 or (ev.quantity is not None and ev.quantity <= 0):
                raise ValueError(f"non-positive value for event {ev.event} at time {self.time}")
        object.__setattr__(self, "events", tuple(sorted(self.events)))

    @property
    def tu(self) -> int:
        return sum(ev.utility for ev in self.events)


class EventSequence:
    """A complex event sequence with cached utility lookups.

    Immutable after construction; all derived structures (per-time utility
    ``tu``, prefix sums for range queries, per-event time indexes) are built
    once so mining never rescans the raw entries.
    """

    def __init__(self, entries: Sequence[TimePointEntry]):
        entries = tuple(entries)
        for prev, cur in zip(entries, entries[1:]):
            if cur.time <= prev.time:
                raise ValueError(f"time points must strictly increase ({prev.time} then {cur.time})")
        self.entries: tuple[TimePointEntry, ...] = entries
        self.times: tuple[int, ...] = tuple(e.time for e in entries)
        self._events_at: dict[int, dict[str, int]] = {
            e.time: {ev.event: ev.utility for ev in e.events} for e in entries
        }
        self._tu: dict[int, int] = {e.time: e.tu for e in entries}
        prefix = [0]
        for e in entries:
            prefix.append(prefix[-1] + e.tu)
        self._tu_prefix: list[int] = prefix
        self.total_utility: int = prefix[-1]
        event_times: dict[str, list[int]] = {}
        for e in entries:
            for ev in e.events:
                event_times.setdefault(ev.event, []).append(e.time)
        self._event_times: dict[str, tuple[int, ...]] = {
            ev: tuple(ts) for ev, ts in event_times.items()
        }
        self.alphabet: tuple[str, ...] = tuple(sorted(event_times))

    @classmethod
    def from_quantities(
        cls,
        points: Iterable[tuple[int, Mapping[str, int]]],
        utilities: Mapping[str, int],
    ) -> "EventSequence":
        """Build a sequence from per-event quantities and a unit-utility table."""
        entries = []
        for time, quantities in points:
            occs = tuple(
                EventOccurrence(ev, qty, utilities[ev] * qty) for ev, qty in quantities.items()
            )
            entries.append(TimePointEntry(time, occs))
        return cls(entries)

    @classmethod
    def from_utilities(cls, points: Iterable[tuple[int, Mapping[str, int]]]) -> "EventSequence":
        """Build a sequence from per-event utilities directly (no quantity split)."""
        entries = []
        for time, utils in points:
            occs = tuple(EventOccurrence(ev, None, u) for ev, u in utils.items())
            entries.append(TimePointEntry(time, occs))
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EventSequence) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"EventSequence({len(self.entries)} time points, TU={self.total_utility})"

    def tu(self, time: int) -> int:
        """Total utility of one time point."""
        try:
            return self._tu[time]
        except KeyError:
            raise UnknownTimeError(f"no time point {time} in sequence") from None

    def range_tu(self, lo: int, hi: int) -> int:
        """Sum of ``tu`` over existing time points in ``[lo, hi]``.

        Missing time points contribute nothing; ``hi < lo`` yields 0.
        """
        i = bisect_left(self.times, lo)
        j = bisect_right(self.times, hi)
        return self._tu_prefix[j] - self._tu_prefix[i]

    def events_at(self, time: int) -> Mapping[str, int]:
        """Events present at ``time`` mapped to their utilities."""
        try:
            return self._events_at[time]
        except KeyError:
            raise UnknownTimeError(f"no time point {time} in sequence") from None

    def has_event_at(self, event: str, time: int) -> bool:
        at = self._events_at.get(time)
        return at is not None and event in at

    def event_times(self, event: str) -> tuple[int, ...]:
        """All time points at which ``event`` occurs, ascending."""
        return self._event_times.get(event, ())

    def times_between(self, lo: int, hi: int) -> tuple[int, ...]:
        """Existing time points in the closed interval ``[lo, hi]``."""
        i = bisect_left(self.times, lo)
        j = bisect_right(self.times, hi)
        return self.times[i:j]

    def _rarest(self, events: Iterable[str]) -> str:
        return min(events, key=lambda ev: len(self._event_times.get(ev, ())))

    def times_with_set(self, events: frozenset[str] | Sequence[str]) -> list[int]:
        """Time points at which every event of ``events`` occurs."""
        events = tuple(events)
        if len(events) == 1:
            return list(self.event_times(events[0]))
        anchor = self._rarest(events)
        out = []
        for t in self._event_times.get(anchor, ()):
            at = self._events_at[t]
            if all(ev in at for ev in events):
                out.append(t)
        return out

    def next_time_with_set(self, events: Sequence[str], after: int) -> int | None:
        """Earliest time point strictly after ``after`` containing all of ``events``."""
        anchor = self._rarest(events) if len(events) > 1 else events[0]
        ts = self._event_times.get(anchor, ())
        i = bisect_right(ts, after)
        if len(events) == 1:
            return ts[i] if i < len(ts) else None
        for t in ts[i:]:
            at = self._events_at[t]
            if all(ev in at for ev in events):
                return t
        return None


@dataclass(frozen=True)
class Episode:
    """A canonical episode: a tuple of non-empty, lexicographically sorted event sets.

    Two episodes are the same pattern exactly when their canonical forms are
    equal. Serial order between sets is significant; order within a set is
    not (the canonical form fixes it to lexicographic).
    """

    sets: tuple[tuple[str, ...], ...]

    @property
    def length(self) -> int:
        """Episode length: the total number of events across all sets."""
        return sum(len(s) for s in self.sets)

    @property
    def last_set(self) -> tuple[str, ...]:
        return self.sets[-1]

    def __str__(self) -> str:
        return "->".join(
            s[0] if len(s) == 1 else "{" + ",".join(s) + "}" for s in self.sets
        )

    @classmethod
    def parse(cls, text: str) -> "Episode":
        """Parse the serialization grammar: sets joined by ``->``, multi-event
        sets wrapped in braces, singletons bare."""
        raw: list[list[str]] = []
        for part in text.split("->"):
            part = part.strip()
            if part.startswith("{") and part.endswith("}"):
                tokens = [tok.strip() for tok in part[1:-1].split(",")]
            else:
                tokens = [part]
            raw.append([validate_event_token(tok) for tok in tokens])
        return canonicalize(raw)


def canonicalize(raw_episode: Iterable[Iterable[str]]) -> Episode:
    """Build the canonical form of an episode given as raw event collections.

    Each set is sorted lexicographically; serial order of the sets is kept.
    Raises :class:`EmptySetError` for an empty set and
    :class:`DuplicateEventError` if an event repeats within one set
    (repetition across different sets is legal).
    """
    sets = []
    for raw_set in raw_episode:
        events = tuple(sorted(raw_set))
        if not events:
            raise EmptySetError("episode contains an empty simultaneous event set")
        for a, b in zip(events, events[1:]):
            if a == b:
                raise DuplicateEventError(f"event {a} repeated within one simultaneous set")
        sets.append(events)
    if not sets:
        raise EmptySetError("episode has no event sets")
    return Episode(tuple(sets))


def simult_concat(alpha: Episode, event: str) -> Episode:
    """Grow ``alpha`` by inserting ``event`` into its last set (I-concatenation)."""
    last = alpha.sets[-1]
    if event in last:
        raise DuplicateEventError(f"event {event} already in the last set of {alpha}")
    return Episode(alpha.sets[:-1] + (tuple(sorted(last + (event,))),))


def serial_concat(alpha: Episode, event: str) -> Episode:
    """Grow ``alpha`` by appending a new singleton set (S-concatenation)."""
    return Episode(alpha.sets + ((event,),))


def is_sub_episode(beta: Episode, alpha: Episode) -> bool:
    """True iff ``beta``'s sets embed order-preservingly into ``alpha``'s sets,
    with set containment at each matched position.

    Greedy earliest matching is complete for this relation.
    """
    i = 0
    for b_set in beta.sets:
        b = set(b_set)
        while i < len(alpha.sets) and not b.issubset(alpha.sets[i]):
            i += 1
        if i == len(alpha.sets):
            return False
        i += 1
    return True


@dataclass(frozen=True, eq=False)
class ProcessingOrder:
    """A strict total order over the sequence's event alphabet.

    The order drives extension enumeration, remaining-utility computation,
    and EWU-based ranking. It never affects episode identity, which is
    always the lexicographic canonical form.
    """

    kind: str
    rank: Mapping[str, int]

    def max_event(self, events: Iterable[str]) -> str:
        """The order-maximal event of a non-empty collection."""
        return max(events, key=self.rank.__getitem__)

    def is_after(self, event: str, pivot: str) -> bool:
        return self.rank[event] > self.rank[pivot]

    def sorted_events(self, events: Iterable[str]) -> list[str]:
        return sorted(events, key=self.rank.__getitem__)


def build_order(
    sequence: EventSequence,
    kind: str,
    ewu_values: Mapping[str, int] | None = None,
) -> ProcessingOrder:
    """Construct a processing order over the sequence's alphabet.

    ``occurrence`` ranks by first time point of appearance, ``lexicographic``
    by token; the EWU-based kinds rank by the supplied per-event EWU values
    (ascending or descending). All ties break lexicographically.
    """
    if kind not in ORDER_KINDS:
        raise ValueError(f"unknown processing order kind {kind!r}")
    alphabet = sequence.alphabet
    if kind == "lexicographic":
        ordered = list(alphabet)
    elif kind == "occurrence":
        ordered = sorted(alphabet, key=lambda ev: (sequence.event_times(ev)[0], ev))
    else:
        if ewu_values is None:
            raise MissingEwuError(f"order kind {kind!r} requires per-event EWU values")
        sign = 1 if kind == "ewu-ascending" else -1
        ordered = sorted(alphabet, key=lambda ev: (sign * ewu_values[ev], ev))
    return ProcessingOrder(kind, {ev: i for i, ev in enumerate(ordered)})
