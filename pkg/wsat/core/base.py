"""Base enums and errors shared across the weak saturation toolkit."""
from enum import Enum
from typing import Optional

ENGINE_VERSION = "0.1.0"


class PatternKind(Enum):
    """Specifies the shape of the forbidden graph F"""

    BIPARTITE = "bipartite"
    CLIQUE = "clique"


class FamilyName(Enum):
    """Specifies the name of a graph construction family"""

    COMPLEMENT_PATH = "complement-path"
    COMPLEMENT_PATH_UNION_K1 = "complement-path-union-k1"
    GNT = "gnt"
    XYZ = "xyz"
    H_GRAPH = "h-graph"
    CLIQUE_JOIN = "clique-join"


class ClassicalKind(Enum):
    """Specifies a classical weak saturation formula"""

    CLIQUE = "clique"
    STAR = "star"
    K22 = "k22"
    K23 = "k23"


class CertificateViolation(Enum):
    """The certificate invariant that failed verification."""

    BASE_NOT_PATTERN_FREE = "base not pattern-free"
    PATTERN_TOO_LARGE = "pattern larger than graph"
    INVALID_STEP_EDGE = "step edge out of range"
    DUPLICATE_STEP_EDGE = "duplicate step edge"
    STEP_EDGE_IN_BASE = "step edge already present"
    WITNESS_SHAPE = "witness has wrong shape"
    WITNESS_MISSES_EDGE = "witness does not contain step edge"
    WITNESS_EDGE_MISSING = "witness edge not yet present"
    CLOSURE_INCOMPLETE = "closure incomplete"


class CapacityError(ValueError):
    """Raised when a vertex count falls outside the supported range."""


class Graph6Error(ValueError):
    """Raised when graph6 text cannot be decoded."""


class PatternError(ValueError):
    """Raised for invalid patterns or pattern queries."""


class ConstructionError(ValueError):
    """Raised when a construction family receives bad parameters."""


class SearchError(ValueError):
    """Raised for invalid search configurations or bounds."""


class NotWeaklySaturatedError(ValueError):
    """Raised when a certificate is requested for a graph that has none."""

    def __init__(
        self,
        reason: CertificateViolation,
        message: Optional[str] = None,
        step: Optional[int] = None,
    ) -> None:
        self.reason = reason
        self.step = step
        super().__init__(message or f"Not weakly saturated: {reason.value}")
