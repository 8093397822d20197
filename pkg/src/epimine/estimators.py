"""Estimator-style facade over the miners.

Both estimators follow the scikit-learn protocol: hyperparameters are
constructor arguments stored verbatim, ``fit`` runs the algorithm on an
event sequence and exposes the results as trailing-underscore attributes,
and ``get_params``/``set_params``/``clone`` work as usual. The "X" of these
estimators is a single :class:`~epimine.model.EventSequence`, not a feature
matrix.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator

from .miner import MiningConfig, mine
from .model import EventSequence
from .oracle import OracleBudget, oracle_mine


def check_event_sequence(X) -> EventSequence:
    """Validate the input of ``fit``; accepts an EventSequence only."""
    if isinstance(X, EventSequence):
        if len(X) == 0:
            raise ValueError("cannot fit on an empty event sequence")
        return X
    raise TypeError(
        f"expected an EventSequence (see epimine.codec parsers), got {type(X).__name__}"
    )


class HighUtilityEpisodeMiner(BaseEstimator):
    """Discovers the episodes whose total utility reaches a threshold.

    Parameters mirror :class:`~epimine.miner.MiningConfig`. After ``fit``:

    - ``hues_``: list of result records, sorted by descending utility;
    - ``stats_``: traversal statistics of the run;
    - ``threshold_``: the effective utility threshold (exact rational);
    - ``n_hues_``: number of discovered episodes.
    """

    def __init__(
        self,
        mtd: int = 2,
        min_util="0.5",
        min_util_abs: int | None = None,
        ewu_variant: str = "opt2",
        order: str = "ewu-ascending",
        mode: str = "strict",
        max_episode_length: int | None = None,
        threads: int = 1,
    ):
        self.mtd = mtd
        self.min_util = min_util
        self.min_util_abs = min_util_abs
        self.ewu_variant = ewu_variant
        self.order = order
        self.mode = mode
        self.max_episode_length = max_episode_length
        self.threads = threads

    def _config(self) -> MiningConfig:
        return MiningConfig(
            mtd=self.mtd,
            min_util=self.min_util if self.min_util_abs is None else None,
            min_util_abs=self.min_util_abs,
            ewu_variant=self.ewu_variant,
            order=self.order,
            mode=self.mode,
            max_episode_length=self.max_episode_length,
            threads=self.threads,
        )

    def fit(self, X, y=None):
        sequence = check_event_sequence(X)
        config = self._config()
        config.validate()
        self.hues_, self.stats_ = mine(sequence, config)
        self.threshold_ = config.threshold(sequence.total_utility)
        self.n_hues_ = len(self.hues_)
        return self


class ExhaustiveOracleMiner(BaseEstimator):
    """Exact reference miner by exhaustive enumeration (budget-guarded).

    After ``fit``: ``hues_``, ``threshold_``, ``n_hues_``.
    """

    def __init__(
        self,
        mtd: int = 2,
        min_util="0.5",
        min_util_abs: int | None = None,
        max_time_points: int = 64,
        max_alphabet: int = 16,
        max_episode_length: int = 24,
    ):
        self.mtd = mtd
        self.min_util = min_util
        self.min_util_abs = min_util_abs
        self.max_time_points = max_time_points
        self.max_alphabet = max_alphabet
        self.max_episode_length = max_episode_length

    def fit(self, X, y=None):
        sequence = check_event_sequence(X)
        config = MiningConfig(
            mtd=self.mtd,
            min_util=self.min_util if self.min_util_abs is None else None,
            min_util_abs=self.min_util_abs,
        )
        config.validate()
        budget = OracleBudget(
            max_time_points=self.max_time_points,
            max_alphabet=self.max_alphabet,
            max_episode_length=self.max_episode_length,
        )
        self.hues_ = oracle_mine(sequence, config, budget)
        self.threshold_ = config.threshold(sequence.total_utility)
        self.n_hues_ = len(self.hues_)
        return self
