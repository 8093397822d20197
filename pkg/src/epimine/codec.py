"""Input parsing and result serialization.

Native format (``.useq``), one directive per line, ``#`` starts a comment:

    U <event> <unitUtility>        declares an event's positive unit utility
    T <time> <event>:<qty> ...     declares a time point (strictly increasing)

Transaction format, one transaction per line (time point i for line i):

    <items separated by spaces>:<transactionUtility>:<item utilities>

Results are emitted as TSV (columns ``episode  utility  numMinOccs  moSet``)
or as a JSON array with the same fields. Episodes serialize with sets joined
by ``->``, multi-event sets braced, singletons bare; minimal occurrences as
``[s,e];[s,e]``. Output is deterministic: records sort by descending
utility, then by episode serialization.
"""

from __future__ import annotations

import io
import json
import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .errors import (
    ChecksumWarning,
    CountMismatchError,
    DuplicateEventError,
    NonIncreasingTimeError,
    NonPositiveValueError,
    ParseError,
    UnknownEventError,
)
from .model import (
    Episode,
    EventOccurrence,
    EventSequence,
    TimePointEntry,
    UtilityTable,
    validate_event_token,
)
from .occurrence import MoSet

TSV_HEADER = "episode\tutility\tnumMinOccs\tmoSet"

_MO_RE = re.compile(r"^\[(-?\d+),(-?\d+)\]$")


@dataclass(frozen=True)
class HueRecord:
    """One mined high-utility episode with its utility and minimal occurrences."""

    episode: Episode
    utility: int
    mo_set: MoSet

    def sort_key(self) -> tuple[int, str]:
        return (-self.utility, str(self.episode))


@dataclass
class DiffReport:
    """Difference between two result sets keyed by canonical episode."""

    missing: list[HueRecord] = field(default_factory=list)
    extra: list[HueRecord] = field(default_factory=list)
    utility_mismatch: list[tuple[Episode, int, int]] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not (self.missing or self.extra or self.utility_mismatch)


def _as_lines(source: str | TextIO) -> Iterable[tuple[int, str]]:
    stream = io.StringIO(source) if isinstance(source, str) else source
    for lineno, line in enumerate(stream, start=1):
        yield lineno, line.rstrip("\n")


def _parse_positive_int(token: str, what: str, lineno: int, column: int | None = None) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", lineno, column) from None
    if value <= 0:
        raise NonPositiveValueError(f"{what} must be positive, got {value}", lineno, column)
    return value


def parse_native(source: str | TextIO) -> tuple[EventSequence, UtilityTable]:
    """Parse the native format into a sequence and its unit-utility table.

    Per-event utility is computed as unit utility times quantity; the
    sequence's tu and TU caches are populated on construction.
    """
    utilities: UtilityTable = {}
    entries: list[TimePointEntry] = []
    last_time: int | None = None
    for lineno, raw in _as_lines(source):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "U":
            if len(fields) != 3:
                raise ParseError(f"malformed U line: {raw!r}", lineno)
            try:
                event = validate_event_token(fields[1])
            except ValueError as exc:
                raise ParseError(str(exc), lineno, raw.find(fields[1]) + 1) from None
            if event in utilities:
                raise DuplicateEventError(f"unit utility of {event} declared twice (line {lineno})")
            utilities[event] = _parse_positive_int(fields[2], "unit utility", lineno)
        elif kind == "T":
            if len(fields) < 3:
                raise ParseError(f"malformed T line: {raw!r}", lineno)
            try:
                time = int(fields[1])
            except ValueError:
                raise ParseError(f"expected integer time, got {fields[1]!r}", lineno) from None
            if time < 0:
                raise NonPositiveValueError(f"time must be non-negative, got {time}", lineno)
            if last_time is not None and time <= last_time:
                raise NonIncreasingTimeError(
                    f"time {time} not greater than previous time {last_time}", lineno
                )
            last_time = time
            occurrences: list[EventOccurrence] = []
            seen: set[str] = set()
            for pair in fields[2:]:
                column = raw.find(pair) + 1
                if ":" not in pair:
                    raise ParseError(f"expected <event>:<qty>, got {pair!r}", lineno, column)
                name, qty_text = pair.split(":", 1)
                try:
                    event = validate_event_token(name)
                except ValueError as exc:
                    raise ParseError(str(exc), lineno, column) from None
                if event not in utilities:
                    raise UnknownEventError(
                        f"event {event} has no unit-utility declaration", lineno, column
                    )
                if event in seen:
                    raise DuplicateEventError(f"event {event} repeated at time {time} (line {lineno})")
                seen.add(event)
                qty = _parse_positive_int(qty_text, "quantity", lineno, column)
                occurrences.append(EventOccurrence(event, qty, utilities[event] * qty))
            entries.append(TimePointEntry(time, tuple(occurrences)))
        else:
            raise ParseError(f"unknown directive {kind!r}", lineno, 1)
    if not entries:
        raise ParseError("input declares no time points")
    return EventSequence(entries), utilities


def parse_transactions(source: str | TextIO) -> EventSequence:
    """Parse the transaction format; transaction i becomes time point i.

    Each item's listed utility is taken directly as its utility at that time
    point; the quantity/unit-utility split is not reconstructed. A mismatch
    between the declared transaction utility and the sum of item utilities
    raises a non-fatal :class:`ChecksumWarning`.
    """
    entries: list[TimePointEntry] = []
    time = 0
    for lineno, raw in _as_lines(source):
        line = raw.strip()
        if not line:
            continue
        parts = line.split(":")
        if len(parts) != 3:
            raise ParseError(f"expected <items>:<tu>:<itemUtils>, got {raw!r}", lineno)
        items = parts[0].split()
        utils = parts[2].split()
        if not items:
            raise ParseError("transaction has no items", lineno)
        if len(items) != len(utils):
            raise CountMismatchError(
                f"{len(items)} items but {len(utils)} utilities", lineno
            )
        declared_tu = _parse_positive_int(parts[1], "transaction utility", lineno)
        time += 1
        occurrences: list[EventOccurrence] = []
        seen: set[str] = set()
        for name, util_text in zip(items, utils):
            try:
                event = validate_event_token(name)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            if event in seen:
                raise DuplicateEventError(f"item {event} repeated in transaction {time} (line {lineno})")
            seen.add(event)
            occurrences.append(
                EventOccurrence(event, None, _parse_positive_int(util_text, "item utility", lineno))
            )
        entry = TimePointEntry(time, tuple(occurrences))
        if entry.tu != declared_tu:
            warnings.warn(
                f"transaction {time}: declared utility {declared_tu} != item sum {entry.tu}",
                ChecksumWarning,
                stacklevel=2,
            )
        entries.append(entry)
    if not entries:
        raise ParseError("input declares no transactions")
    return EventSequence(entries)


def write_native(sequence: EventSequence, utilities: UtilityTable) -> str:
    """Serialize a quantity-based sequence back to the native format."""
    lines = [f"U {event} {utilities[event]}" for event in sorted(utilities)]
    for entry in sequence.entries:
        if any(ev.quantity is None for ev in entry.events):
            raise ValueError("native format needs quantities; this sequence has none")
        pairs = " ".join(f"{ev.event}:{ev.quantity}" for ev in entry.events)
        lines.append(f"T {entry.time} {pairs}")
    return "\n".join(lines) + "\n"


def format_moset(mo_set: MoSet) -> str:
    return ";".join(f"[{s},{e}]" for s, e in mo_set)


def parse_moset(text: str) -> MoSet:
    if not text:
        return ()
    intervals = []
    for chunk in text.split(";"):
        m = _MO_RE.match(chunk)
        if not m:
            raise ParseError(f"malformed minimal-occurrence list {text!r}")
        intervals.append((int(m.group(1)), int(m.group(2))))
    return tuple(intervals)


def sort_records(records: Iterable[HueRecord]) -> list[HueRecord]:
    return sorted(records, key=HueRecord.sort_key)


def write_hues(records: Iterable[HueRecord], fmt: str = "tsv") -> str:
    """Serialize result records; deterministic for a given record list."""
    records = sort_records(records)
    if fmt == "tsv":
        lines = [TSV_HEADER]
        for rec in records:
            lines.append(
                f"{rec.episode}\t{rec.utility}\t{len(rec.mo_set)}\t{format_moset(rec.mo_set)}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = [
            {
                "episode": str(rec.episode),
                "utility": rec.utility,
                "numMinOccs": len(rec.mo_set),
                "moSet": [list(mo) for mo in rec.mo_set],
            }
            for rec in records
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown output format {fmt!r}")


def read_hues(source: str | TextIO, fmt: str = "tsv") -> list[HueRecord]:
    """Parse result records previously emitted by :func:`write_hues`."""
    text = source if isinstance(source, str) else source.read()
    records: list[HueRecord] = []
    if fmt == "tsv":
        lines = text.splitlines()
        if not lines or lines[0] != TSV_HEADER:
            raise ParseError("missing result header line", 1)
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 4:
                raise ParseError(f"expected 4 tab-separated fields, got {len(fields)}", lineno)
            try:
                episode = Episode.parse(fields[0])
                utility = int(fields[1])
                count = int(fields[2])
            except ValueError as exc:
                raise ParseError(f"malformed result record: {exc}", lineno) from None
            mo_set = parse_moset(fields[3])
            if count != len(mo_set):
                raise ParseError("numMinOccs does not match the occurrence list", lineno)
            records.append(HueRecord(episode, utility, mo_set))
        return records
    if fmt == "json":
        try:
            payload = json.loads(text)
            for obj in payload:
                records.append(
                    HueRecord(
                        Episode.parse(obj["episode"]),
                        int(obj["utility"]),
                        tuple((int(s), int(e)) for s, e in obj["moSet"]),
                    )
                )
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"malformed JSON results: {exc}") from None
        return records
    raise ValueError(f"unknown input format {fmt!r}")


def diff(a: Iterable[HueRecord], b: Iterable[HueRecord]) -> DiffReport:
    """Compare two result sets as (episode -> utility) maps.

    ``missing`` holds records of ``a`` absent from ``b``, ``extra`` records
    of ``b`` absent from ``a``; episodes present in both with different
    utilities land in ``utility_mismatch``.
    """
    by_episode_a = {rec.episode: rec for rec in a}
    by_episode_b = {rec.episode: rec for rec in b}
    report = DiffReport()
    for episode, rec in by_episode_a.items():
        other = by_episode_b.get(episode)
        if other is None:
            report.missing.append(rec)
        elif other.utility != rec.utility:
            report.utility_mismatch.append((episode, rec.utility, other.utility))
    for episode, rec in by_episode_b.items():
        if episode not in by_episode_a:
            report.extra.append(rec)
    report.missing = sort_records(report.missing)
    report.extra = sort_records(report.extra)
    report.utility_mismatch.sort(key=lambda item: str(item[0]))
    return report


def format_diff(report: DiffReport) -> str:
    """Human-readable rendering of a diff report."""
    if report.is_empty():
        return "identical: no differences\n"
    lines = []
    for rec in report.missing:
        lines.append(f"missing\t{rec.episode}\t{rec.utility}")
    for rec in report.extra:
        lines.append(f"extra\t{rec.episode}\t{rec.utility}")
    for episode, ua, ub in report.utility_mismatch:
        lines.append(f"utility-mismatch\t{episode}\t{ua}\t{ub}")
    return "\n".join(lines) + "\n"
