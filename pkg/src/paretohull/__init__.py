"""Exact enumeration of nondominated extreme points of multi-objective
assignment and knapsack problems via dichotomic convex-hull search."""

from .engine import (
    DegenerateOutcomeSetError,
    DummyConfig,
    EngineInvariantError,
    FrontierResult,
    bd_dichotomy,
    dummy_dichotomy,
    final_filter,
    inflate_balloon,
    lexicographic_seed,
    make_dummies,
)
from .files import SplitMix64, generate, parse_instance, write_instance
from .geometry import Facet, HullState, InsertOutcome, facet_weight, is_nondominated_facet
from .oracle import enumerate_outcomes, oracle_ysn1, pareto_filter, ysn1_certificates
from .solvers import (
    Instance,
    InstanceError,
    OutcomePoint,
    RawProblem,
    RunStats,
    canonicalize,
    hungarian,
    knapsack_max,
    subproblem_weight,
    to_raw,
    weighted_sum_solve,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateOutcomeSetError",
    "DummyConfig",
    "EngineInvariantError",
    "Facet",
    "FrontierResult",
    "HullState",
    "InsertOutcome",
    "Instance",
    "InstanceError",
    "OutcomePoint",
    "RawProblem",
    "RunStats",
    "SplitMix64",
    "bd_dichotomy",
    "canonicalize",
    "dummy_dichotomy",
    "enumerate_outcomes",
    "facet_weight",
    "final_filter",
    "generate",
    "hungarian",
    "inflate_balloon",
    "is_nondominated_facet",
    "knapsack_max",
    "lexicographic_seed",
    "make_dummies",
    "oracle_ysn1",
    "pareto_filter",
    "parse_instance",
    "subproblem_weight",
    "to_raw",
    "weighted_sum_solve",
    "write_instance",
    "ysn1_certificates",
]
