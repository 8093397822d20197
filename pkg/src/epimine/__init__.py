"""High-utility episode mining over a single long complex event sequence.

The package discovers every episode (an ordered list of simultaneous event
sets) whose exact integer utility reaches a threshold, under a maximum time
duration constraint on its minimal occurrences. It ships a depth-first
miner with three episode-weighted-utilization pruning bounds, an exhaustive
oracle for differential validation, format codecs, a result differ, a
seeded synthetic generator, and a command-line front end.
"""

from .codec import (
    DiffReport,
    HueRecord,
    diff,
    parse_native,
    parse_transactions,
    read_hues,
    write_hues,
    write_native,
)
from .datagen import GenConfig, PortableRng, generate
from .estimators import ExhaustiveOracleMiner, HighUtilityEpisodeMiner, check_event_sequence
from .miner import (
    MineStats,
    MiningConfig,
    collect_serial_candidates,
    collect_simult_candidates,
    mine,
)
from .model import (
    Episode,
    EventSequence,
    ProcessingOrder,
    TimePointEntry,
    UtilityTable,
    build_order,
    canonicalize,
    is_sub_episode,
    serial_concat,
    simult_concat,
)
from .occurrence import (
    compute_moset,
    earliest_end,
    extend_moset_serial,
    extend_moset_simult,
)
from .oracle import OracleBudget, enumerate_episodes, oracle_mine
from .utility import (
    episode_utility,
    ewu,
    ewu_total,
    remaining_utility,
    set_utility,
    time_point_utility,
    total_utility,
)

__version__ = "0.1.0"

__all__ = [
    "DiffReport",
    "Episode",
    "EventSequence",
    "ExhaustiveOracleMiner",
    "GenConfig",
    "HighUtilityEpisodeMiner",
    "HueRecord",
    "MineStats",
    "MiningConfig",
    "OracleBudget",
    "PortableRng",
    "ProcessingOrder",
    "TimePointEntry",
    "UtilityTable",
    "build_order",
    "canonicalize",
    "check_event_sequence",
    "collect_serial_candidates",
    "collect_simult_candidates",
    "compute_moset",
    "diff",
    "earliest_end",
    "enumerate_episodes",
    "episode_utility",
    "ewu",
    "ewu_total",
    "extend_moset_serial",
    "extend_moset_simult",
    "generate",
    "is_sub_episode",
    "mine",
    "oracle_mine",
    "parse_native",
    "parse_transactions",
    "read_hues",
    "remaining_utility",
    "serial_concat",
    "set_utility",
    "simult_concat",
    "time_point_utility",
    "total_utility",
    "write_hues",
    "write_native",
]
