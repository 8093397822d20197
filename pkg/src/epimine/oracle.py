"""Exact reference miner by exhaustive enumeration.

The oracle materializes every canonical episode that occurs at least once
within the time-duration constraint, by trying every one-step canonical
extension of every node, and evaluates each episode from scratch with the
direct minimal-occurrence scan. It shares none of the miner's incremental
extension machinery, which is what makes differential testing against the
miner meaningful. Deliberately exponential; budget-guarded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import HueRecord, sort_records
from .errors import BudgetExceededError
from .miner import MiningConfig
from .model import Episode, EventSequence, serial_concat, simult_concat
from .occurrence import MoSet, compute_moset
from .utility import episode_utility


@dataclass(frozen=True)
class OracleBudget:
    """Input-size limits beyond which enumeration refuses to run."""

    max_time_points: int = 64
    max_alphabet: int = 16
    max_episode_length: int = 24


def _check_budget(sequence: EventSequence, budget: OracleBudget) -> None:
    if len(sequence) > budget.max_time_points:
        raise BudgetExceededError(
            f"{len(sequence)} time points exceed the budget of {budget.max_time_points}"
        )
    if len(sequence.alphabet) > budget.max_alphabet:
        raise BudgetExceededError(
            f"alphabet of {len(sequence.alphabet)} exceeds the budget of {budget.max_alphabet}"
        )


def _enumerate_with_mosets(
    sequence: EventSequence, mtd: int, budget: OracleBudget
) -> list[tuple[Episode, MoSet]]:
    _check_budget(sequence, budget)
    alphabet = sequence.alphabet
    out: list[tuple[Episode, MoSet]] = []

    def extend(alpha: Episode) -> None:
        feasible: list[tuple[Episode, MoSet]] = []
        last_max = alpha.sets[-1][-1]
        for event in alphabet:
            if event > last_max:
                beta = simult_concat(alpha, event)
                mo = compute_moset(beta, sequence, mtd)
                if mo:
                    feasible.append((beta, mo))
        for event in alphabet:
            beta = serial_concat(alpha, event)
            mo = compute_moset(beta, sequence, mtd)
            if mo:
                feasible.append((beta, mo))
        if feasible and alpha.length >= budget.max_episode_length:
            raise BudgetExceededError(
                f"enumeration would exceed episodes of length {budget.max_episode_length}"
            )
        for beta, mo in feasible:
            out.append((beta, mo))
            extend(beta)

    for event in alphabet:
        episode = Episode(((event,),))
        mo = compute_moset(episode, sequence, mtd)
        if mo:
            out.append((episode, mo))
            extend(episode)
    return out


def enumerate_episodes(
    sequence: EventSequence, mtd: int, budget: OracleBudget | None = None
) -> list[Episode]:
    """Every canonical episode with at least one occurrence of span <= mtd.

    Episodes are generated by exhaustive canonical extension (new last-set
    events must exceed the current last-set maximum in token order), so each
    episode appears exactly once.
    """
    budget = budget or OracleBudget()
    return [episode for episode, _ in _enumerate_with_mosets(sequence, mtd, budget)]


def oracle_mine(
    sequence: EventSequence, config: MiningConfig, budget: OracleBudget | None = None
) -> list[HueRecord]:
    """Exact high-utility episode set by exhaustive enumeration.

    Only ``config.mtd`` and the threshold are consulted; EWU variant,
    processing order, and mode do not apply to the oracle.
    """
    budget = budget or OracleBudget()
    config.validate()
    threshold = config.threshold(sequence.total_utility)
    records = []
    for episode, mo in _enumerate_with_mosets(sequence, config.mtd, budget):
        utility = episode_utility(episode, mo, sequence)
        if utility >= threshold:
            records.append(HueRecord(episode, utility, mo))
    return sort_records(records)
