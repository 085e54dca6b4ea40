from wsat.constructions.base import (
    FamilyInstance,
    FamilyManager,
    register_family,
)
from wsat.constructions.families import (
    clique_join_family,
    complement_path,
    complement_path_union_k1,
    expected_edges,
    gnt,
    h_graph,
    pendant_extend,
    xyz_graph,
    xyz_saturation_condition,
)

__all__ = [
    # Registry
    "FamilyInstance",
    "FamilyManager",
    "register_family",
    # Families
    "complement_path",
    "complement_path_union_k1",
    "gnt",
    "xyz_graph",
    "h_graph",
    "clique_join_family",
    # Helpers
    "pendant_extend",
    "expected_edges",
    "xyz_saturation_condition",
]
