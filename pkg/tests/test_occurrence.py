"""Minimal-occurrence computation: frozen examples, structural invariants,
and agreement with the naive window-enumeration reference."""

from __future__ import annotations

import random

import pytest

from epimine.model import Episode, serial_concat, simult_concat
from epimine.occurrence import (
    compute_moset,
    earliest_end,
    extend_moset_serial,
    extend_moset_simult,
    minimal_intervals,
)

from conftest import naive_moset, random_episode, random_sequence


def assert_moset_structure(mo_set, mtd):
    starts = [s for s, _ in mo_set]
    ends = [e for _, e in mo_set]
    assert starts == sorted(set(starts))
    assert ends == sorted(set(ends))
    assert all(e - s <= mtd and s <= e for s, e in mo_set)


class TestEarliestEnd:
    def test_examples(self, demo_seq):
        assert earliest_end(Episode.parse("{A,D}->B"), demo_seq, 1) == 2
        assert earliest_end(Episode.parse("D->B"), demo_seq, 3) == 5
        assert earliest_end(Episode.parse("E->C"), demo_seq, 3) is None


class TestComputeMoset:
    def test_examples(self, demo_seq):
        assert compute_moset(Episode.parse("{A,D}->B"), demo_seq, 4) == ((1, 2), (3, 5))
        assert compute_moset(Episode.parse("D"), demo_seq, 0) == ((1, 1), (3, 3), (4, 4), (6, 6))
        assert compute_moset(Episode.parse("D->B->{A,D}"), demo_seq, 2) == ((1, 3), (4, 6))

    def test_mtd_filter(self, demo_seq):
        # of the two minimal occurrences only [1,2] fits within span 1
        assert compute_moset(Episode.parse("{A,D}->B"), demo_seq, 1) == ((1, 2),)
        assert compute_moset(Episode.parse("{A,D}->B"), demo_seq, 0) == ()

    def test_one_episode_mosets(self, demo_seq):
        expected = {
            "A": ((1, 1), (3, 3), (6, 6)),
            "B": ((2, 2), (5, 5), (6, 6)),
            "C": ((1, 1), (2, 2)),
            "D": ((1, 1), (3, 3), (4, 4), (6, 6)),
            "E": ((3, 3), (4, 4)),
        }
        for ev, mo in expected.items():
            assert compute_moset(Episode.parse(ev), demo_seq, 2) == mo


class TestMinimalIntervals:
    def test_containment_dropped(self):
        assert minimal_intervals([(1, 5), (2, 4), (3, 6)]) == ((2, 4), (3, 6))
        assert minimal_intervals([(1, 6), (2, 5), (3, 4)]) == ((3, 4),)

    def test_same_start_keeps_earliest_end(self):
        assert minimal_intervals([(1, 5), (1, 7)]) == ((1, 5),)

    def test_overlap_without_containment_kept(self):
        assert minimal_intervals([(1, 3), (2, 5)]) == ((1, 3), (2, 5))


class TestSerialExtension:
    def test_example_d_plus_b(self, demo_seq):
        mo_d = compute_moset(Episode.parse("D"), demo_seq, 2)
        assert extend_moset_serial(mo_d, "B", demo_seq, 2) == ((1, 2), (4, 5))

    def test_example_de_plus_b(self, demo_seq):
        mo_de = compute_moset(Episode.parse("{D,E}"), demo_seq, 2)
        assert mo_de == ((3, 3), (4, 4))
        assert extend_moset_serial(mo_de, "B", demo_seq, 2) == ((4, 5),)

    def test_absent_event_gives_empty(self, demo_seq):
        mo_c = compute_moset(Episode.parse("C"), demo_seq, 2)
        assert extend_moset_serial(mo_c, "Z", demo_seq, 2) == ()


class TestSimultExtension:
    def test_example_a_plus_d_both_modes(self, demo_seq):
        ep = Episode.parse("A")
        mo_a = compute_moset(ep, demo_seq, 2)
        expected = ((1, 1), (3, 3), (6, 6))
        assert extend_moset_simult(mo_a, ep, "D", demo_seq, 2, "paper") == expected
        assert extend_moset_simult(mo_a, ep, "D", demo_seq, 2, "strict") == expected

    def test_gap_paper_mode_misses(self, gap_seq):
        ep = Episode.parse("A->B")
        mo = compute_moset(ep, gap_seq, 3)
        assert mo == ((2, 3),)
        assert extend_moset_simult(mo, ep, "C", gap_seq, 3, "paper") == ()
        assert extend_moset_simult(mo, ep, "C", gap_seq, 3, "strict") == ((2, 4),)


class TestAgainstNaiveReference:
    """compute_moset and both extension routes versus exhaustive embedding."""

    @pytest.mark.parametrize("seed", range(60))
    def test_compute_moset_matches_naive(self, seed):
        rng = random.Random(1000 + seed)
        seq = random_sequence(rng)
        mtd = rng.randint(0, 3)
        for _ in range(8):
            ep = random_episode(rng, list(seq.alphabet))
            got = compute_moset(ep, seq, mtd)
            assert got == naive_moset(ep, seq, mtd)
            assert_moset_structure(got, mtd)

    @pytest.mark.parametrize("seed", range(60))
    def test_serial_extension_is_exact(self, seed):
        rng = random.Random(2000 + seed)
        seq = random_sequence(rng)
        mtd = rng.randint(0, 3)
        for _ in range(6):
            alpha = random_episode(rng, list(seq.alphabet))
            mo_alpha = compute_moset(alpha, seq, mtd)
            event = rng.choice(seq.alphabet)
            beta = serial_concat(alpha, event)
            assert extend_moset_serial(mo_alpha, event, seq, mtd) == compute_moset(beta, seq, mtd)

    @pytest.mark.parametrize("seed", range(60))
    def test_simult_extension_strict_exact_paper_subset(self, seed):
        rng = random.Random(3000 + seed)
        seq = random_sequence(rng)
        mtd = rng.randint(0, 3)
        for _ in range(6):
            alpha = random_episode(rng, list(seq.alphabet))
            mo_alpha = compute_moset(alpha, seq, mtd)
            choices = [ev for ev in seq.alphabet if ev > alpha.sets[-1][-1]]
            if not choices:
                continue
            event = rng.choice(choices)
            beta = simult_concat(alpha, event)
            strict = extend_moset_simult(mo_alpha, alpha, event, seq, mtd, "strict")
            paper = extend_moset_simult(mo_alpha, alpha, event, seq, mtd, "paper")
            assert strict == compute_moset(beta, seq, mtd)
            assert set(paper) <= set(strict)

    @pytest.mark.parametrize("seed", range(40))
    def test_start_preservation(self, seed):
        rng = random.Random(4000 + seed)
        seq = random_sequence(rng)
        mtd = rng.randint(1, 3)
        for _ in range(6):
            alpha = random_episode(rng, list(seq.alphabet))
            alpha_starts = {s for s, _ in compute_moset(alpha, seq, mtd)}
            event = rng.choice(seq.alphabet)
            for beta in (serial_concat(alpha, event),) + (
                (simult_concat(alpha, event),) if event not in alpha.sets[-1] else ()
            ):
                beta_starts = {s for s, _ in compute_moset(beta, seq, mtd)}
                assert beta_starts <= alpha_starts
