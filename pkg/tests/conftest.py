"""Shared fixtures: reference sequences, random-instance builders, and a
naive occurrence oracle that is independent of the production scan."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from epimine.model import Episode, EventSequence
from epimine.codec import parse_native

DATA_DIR = Path(__file__).parent / "data"

DEMO_USEQ = (DATA_DIR / "demo.useq").read_text(encoding="utf-8")

#: (criterion number, description, status, detail lines) filled by the
#: acceptance tests and rendered once in the terminal summary.
ACCEPTANCE_RESULTS: list[tuple[int, str, str, list[str]]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, description, status, details in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"criterion {number:>2} {status:<4} {description}")
        for line in details:
            terminalreporter.write_line(f"             {line}")


@pytest.fixture(scope="session")
def demo():
    """The six-point demo sequence (TU = 94) and its utility table."""
    return parse_native(DEMO_USEQ)


@pytest.fixture(scope="session")
def demo_seq(demo) -> EventSequence:
    return demo[0]


@pytest.fixture(scope="session")
def gap_seq() -> EventSequence:
    """Four-point sequence on which the literal extension reading misses a
    minimal occurrence: {B,C} only assembles one point after B first recurs."""
    return EventSequence.from_utilities(
        [(1, {"A": 1}), (2, {"A": 1}), (3, {"B": 1}), (4, {"B": 1, "C": 1})]
    )


def random_sequence(rng: random.Random, max_points: int = 12, max_alphabet: int = 5) -> EventSequence:
    """A small random sequence with gaps in its time axis."""
    n_points = rng.randint(4, max_points)
    alphabet = [chr(ord("A") + i) for i in range(rng.randint(2, max_alphabet))]
    times, t = [], 0
    for _ in range(n_points):
        t += rng.randint(1, 2)
        times.append(t)
    points = []
    for t in times:
        k = rng.randint(1, min(3, len(alphabet)))
        events = rng.sample(alphabet, k)
        points.append((t, {ev: rng.randint(1, 6) for ev in events}))
    table = {ev: rng.randint(1, 10) for ev in alphabet}
    return EventSequence.from_quantities(points, table)


def random_episode(rng: random.Random, alphabet: list[str]) -> Episode:
    """A small random canonical episode, independent of any sequence."""
    sets = []
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(1, min(2, len(alphabet)))
        sets.append(tuple(sorted(rng.sample(alphabet, size))))
    return Episode(tuple(sets))


def _embeds_with_ends(episode: Episode, seq: EventSequence, start: int, end: int) -> bool:
    """Exhaustive embedding test: first set exactly at start, last exactly at
    end, middles at strictly increasing time points in between."""

    def events_ok(event_set, t):
        at = seq.events_at(t)
        return all(ev in at for ev in event_set)

    if not events_ok(episode.sets[0], start) or not events_ok(episode.sets[-1], end):
        return False
    if len(episode.sets) == 1:
        return start == end
    if start >= end:
        return False

    middles = episode.sets[1:-1]
    candidates = [t for t in seq.times_between(start + 1, end - 1)]

    def place(i: int, after: int) -> bool:
        if i == len(middles):
            return True
        for t in candidates:
            if t > after and events_ok(middles[i], t) and place(i + 1, t):
                return True
        return False

    return place(0, start)


def naive_moset(episode: Episode, seq: EventSequence, mtd: int):
    """Reference minimal occurrences: enumerate every window of span <= mtd,
    test occurrence by exhaustive embedding, drop intervals containing a
    smaller occurrence."""
    occs = []
    for i, s in enumerate(seq.times):
        for e in seq.times[i:]:
            if e - s > mtd:
                break
            if _embeds_with_ends(episode, seq, s, e):
                occs.append((s, e))
    minimal = [
        (s, e)
        for s, e in occs
        if not any((s2, e2) != (s, e) and s <= s2 and e2 <= e for s2, e2 in occs)
    ]
    return tuple(sorted(minimal))
