"""Deterministic hypergraph containers: construction, oracles, verifiers."""

from .core import (
    Hypergraph,
    HypergraphError,
    cmp_log,
    degree,
    fiber,
    is_bounded,
    is_homogeneous,
    ldeg,
    log_size,
    max_degree,
    nabla,
    new_hypergraph,
    section,
    vertex_fiber,
)
from .bounded import (
    BoundedWitness,
    OracleSizeError,
    greedy_bounded_sub,
    is_expanding,
    max_bounded_size,
    max_bounded_sub,
    satisfies_expansive,
)
from .engine import (
    EngineContext,
    NotIndependentError,
    Params,
    PrintDomainError,
    StrictModeError,
    derive_params,
    print_union,
)
from .instances import FormatError, gen_ap, gen_random, read_edge_list, write_edge_list
from .verify import (
    VerificationReport,
    counting_bound,
    enumerate_independent_sets,
    sample_independent_set,
    sample_independent_sets,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
