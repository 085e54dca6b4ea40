"""F-bootstrap percolation: closure, weak saturation and addable edges."""
import logging
import random
from dataclasses import dataclass
from typing import Optional

from wsat.core.base import PatternError, SearchError
from wsat.graph.base import Edge, Graph, missing_edges
from wsat.pattern.base import PatternSpec, Witness
from wsat.pattern.detection import edge_witness, find_copy

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_MISSING = 12

Step = tuple[Edge, Witness]


@dataclass(frozen=True)
class ClosureOutcome:
    """Result of running the percolation process to a fixed point."""

    final: Graph
    added: tuple[Step, ...]
    complete: bool

    @property
    def added_edges(self) -> list[Edge]:
        return [edge for edge, _ in self.added]


def check_pattern_fits(G: Graph, pattern: PatternSpec) -> None:
    if pattern.order > G.n:
        raise PatternError(
            f"pattern larger than graph: {pattern.label} needs {pattern.order} vertices, graph has {G.n}"
        )


def is_full(adj: list[int]) -> bool:
    full = (1 << len(adj)) - 1
    return all(row | (1 << v) == full for v, row in enumerate(adj))


def percolate(adj: list[int], pattern: PatternSpec) -> list[Step]:
    """Run the closure in place on a mutable adjacency list.

    Sweeps the missing pairs in ascending edge index, adding each one that
    completes a copy of the pattern against the current graph, until a
    whole sweep adds nothing.
    """
    n = len(adj)
    added: list[Step] = []
    progress = True
    while progress:
        progress = False
        for u in range(n):
            for v in range(u + 1, n):
                if adj[u] >> v & 1:
                    continue
                witness = edge_witness(adj, u, v, pattern)
                if witness is None:
                    continue
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                added.append((Edge(u, v), witness))
                progress = True
    return added


def closure(G: Graph, pattern: PatternSpec) -> ClosureOutcome:
    """The unique maximal graph reachable from `G` by adding addable edges."""
    check_pattern_fits(G, pattern)
    adj = list(G.adj)
    added = percolate(adj, pattern)
    outcome = ClosureOutcome(
        Graph(G.n, tuple(adj)), tuple(added), is_full(adj)
    )
    logger.debug(
        f"Closure of {G.n}-vertex graph under {pattern.label}: "
        f"{len(added)} edges added, complete={outcome.complete}"
    )
    return outcome


def is_weakly_saturated(G: Graph, pattern: PatternSpec) -> bool:
    check_pattern_fits(G, pattern)
    if find_copy(G.adj, pattern) is not None:
        return False
    return closure(G, pattern).complete


def addable_edges(G: Graph, pattern: PatternSpec) -> list[Step]:
    """Missing edges of `G` whose addition creates a copy through them."""
    check_pattern_fits(G, pattern)
    found = []
    for edge in missing_edges(G):
        witness = edge_witness(G.adj, edge.u, edge.v, pattern)
        if witness is not None:
            found.append((edge, witness))
    return found


def randomized_closure(
    G: Graph, pattern: PatternSpec, rng: Optional[random.Random] = None
) -> ClosureOutcome:
    """Closure that adds a uniformly random addable edge at every step."""
    check_pattern_fits(G, pattern)
    rng = rng or random.Random()
    current = G
    added: list[Step] = []
    while True:
        candidates = addable_edges(current, pattern)
        if not candidates:
            break
        edge, witness = rng.choice(candidates)
        adj = list(current.adj)
        adj[edge.u] |= 1 << edge.v
        adj[edge.v] |= 1 << edge.u
        current = Graph(current.n, tuple(adj))
        added.append((edge, witness))
    return ClosureOutcome(current, tuple(added), is_full(list(current.adj)))


def brute_force_is_weakly_saturated(G: Graph, pattern: PatternSpec) -> bool:
    """Backtrack over orderings of the missing edges.

    Uses the plain subset search for every witness and no closure
    shortcut; dead sets of added edges are memoized.
    """
    check_pattern_fits(G, pattern)
    pending = missing_edges(G)
    if len(pending) > BRUTE_FORCE_MAX_MISSING:
        raise SearchError(
            f"too many missing edges for brute force: {len(pending)} > {BRUTE_FORCE_MAX_MISSING}"
        )
    if find_copy(G.adj, pattern) is not None:
        return False

    everything = (1 << len(pending)) - 1
    dead: set[int] = set()

    def extend(adj: list[int], done: int) -> bool:
        if done == everything:
            return True
        if done in dead:
            return False
        for i, (u, v) in enumerate(pending):
            if done >> i & 1:
                continue
            if edge_witness(adj, u, v, pattern, generic=True) is None:
                continue
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            ok = extend(adj, done | (1 << i))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            if ok:
                return True
        dead.add(done)
        return False

    return extend(list(G.adj), 0)
