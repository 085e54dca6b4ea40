import dotenv

dotenv.load_dotenv()

from wsat.core.base import ENGINE_VERSION  # noqa: E402
from wsat.graph import (  # noqa: E402
    Edge,
    Graph,
    canonical_key,
    graph6_decode,
    graph6_encode,
)
from wsat.pattern import PatternSpec, Witness  # noqa: E402
from wsat.percolation import (  # noqa: E402
    Certificate,
    closure,
    extract_certificate,
    is_weakly_saturated,
    verify_certificate,
)
from wsat.search import SearchConfig, WsatResult, wsat_exact  # noqa: E402

__version__ = ENGINE_VERSION

__all__ = [
    # Graphs
    "Edge",
    "Graph",
    "canonical_key",
    "graph6_encode",
    "graph6_decode",
    # Patterns
    "PatternSpec",
    "Witness",
    # Percolation
    "Certificate",
    "closure",
    "is_weakly_saturated",
    "extract_certificate",
    "verify_certificate",
    # Search
    "SearchConfig",
    "WsatResult",
    "wsat_exact",
]
