from wsat.pattern.base import (
    PatternSpec,
    Witness,
    witness_holds,
    witness_shape_ok,
)
from wsat.pattern.detection import (
    addability_pair_criterion,
    contains_kst,
    edge_completes_kst,
    edge_completes_kst_generic,
    edge_witness,
    find_copy,
    is_kst_free,
)

__all__ = [
    # Types
    "PatternSpec",
    "Witness",
    # Witness checks
    "witness_holds",
    "witness_shape_ok",
    # Detection
    "contains_kst",
    "is_kst_free",
    "edge_completes_kst",
    "edge_completes_kst_generic",
    "addability_pair_criterion",
    # Adjacency-level finders used by the closure engine
    "edge_witness",
    "find_copy",
]
