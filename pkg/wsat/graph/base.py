"""A fixed-capacity simple graph kernel with bitset adjacency."""
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from wsat.core.base import CapacityError
from wsat.graph.bitset import bits_to_tuple, iter_bits, mask_of, popcount

MAX_VERTICES = 64


class Edge(NamedTuple):
    """An undirected edge, always stored with u < v."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Build a normalized edge from two distinct endpoints."""
        if a == b:
            raise ValueError(f"Loops are not allowed, got edge ({a}, {b}).")
        return cls(a, b) if a < b else cls(b, a)

    def to_list(self) -> list[int]:
        return [self.u, self.v]


EdgeLike = Union[Edge, tuple[int, int], Sequence[int]]


def as_edge(e: EdgeLike) -> Edge:
    a, b = e
    return Edge.of(int(a), int(b))


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise CapacityError(
            f"capacity exceeded: vertex count must be in 1..{MAX_VERTICES}, got {n}"
        )


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1.

    `adj[v]` is the bitset of neighbours of `v`. Values are immutable;
    every operation in this module returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError(
                f"Expected {self.n} neighbour sets, got {len(self.adj)}."
            )
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"Vertex {u} has a neighbour outside 0..n-1.")
            if row >> u & 1:
                raise ValueError(f"Vertex {u} has a loop.")
            for v in iter_bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(
                        f"Adjacency is not symmetric between {u} and {v}."
                    )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(edges(self))})"


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ValueError(f"Vertex {v} is outside 0..{G.n - 1}.")


def _check_edge(G: Graph, e: EdgeLike) -> Edge:
    edge = as_edge(e)
    _check_vertex(G, edge.u)
    _check_vertex(G, edge.v)
    return edge


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    """The path 0-1-...-(n-1) in its natural order."""
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def clique_join(a: int, b: int) -> Graph:
    """K_a joined to an independent set of size b."""
    if a == 0:
        return empty_graph(b)
    if b == 0:
        return complete_graph(a)
    return join(complete_graph(a), empty_graph(b))


def from_edges(n: int, edge_list: Iterable[EdgeLike]) -> Graph:
    _check_order(n)
    adj = [0] * n
    for e in edge_list:
        u, v = as_edge(e)
        if v >= n:
            raise ValueError(f"Edge ({u}, {v}) does not fit in {n} vertices.")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edges(G: Graph) -> Iterator[Edge]:
    """Iterate over the edges of `G` in ascending edge index."""
    for u in range(G.n):
        for v in iter_bits(G.adj[u] >> (u + 1)):
            yield Edge(u, u + 1 + v)


def num_edges(G: Graph) -> int:
    return sum(popcount(row) for row in G.adj) // 2


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, e: EdgeLike) -> int:
    """Rank of `e` among all pairs of an n-vertex graph in (u, v) order."""
    u, v = as_edge(e)
    if v >= n:
        raise ValueError(f"Edge ({u}, {v}) does not fit in {n} vertices.")
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def edge_from_index(n: int, index: int) -> Edge:
    if not 0 <= index < num_pairs(n):
        raise ValueError(f"Edge index {index} out of range for n={n}.")
    u = 0
    while index >= n - 1 - u:
        index -= n - 1 - u
        u += 1
    return Edge(u, u + 1 + index)


def all_pairs(n: int) -> list[Edge]:
    return [Edge(u, v) for u in range(n) for v in range(u + 1, n)]


def missing_edges(G: Graph) -> list[Edge]:
    """Non-adjacent pairs of `G` in ascending edge index."""
    return [
        Edge(u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if not G.adj[u] >> v & 1
    ]


def has_edge(G: Graph, e: EdgeLike) -> bool:
    u, v = _check_edge(G, e)
    return bool(G.adj[u] >> v & 1)


def add_edge(G: Graph, e: EdgeLike) -> Graph:
    """Return G + e; adding a present edge is a no-op."""
    u, v = _check_edge(G, e)
    if G.adj[u] >> v & 1:
        return G
    adj = list(G.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def remove_edge(G: Graph, e: EdgeLike) -> Graph:
    """Return G - e; removing an absent edge is a no-op."""
    u, v = _check_edge(G, e)
    if not G.adj[u] >> v & 1:
        return G
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(G.n, tuple(adj))


def add_edges(G: Graph, edge_list: Iterable[EdgeLike]) -> Graph:
    adj = list(G.adj)
    for e in edge_list:
        u, v = _check_edge(G, e)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(G.n, tuple(adj))


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(
        G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj))
    )


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 ⊔ G2 with G2's vertices relabeled to n1..n1+n2-1."""
    n = G1.n + G2.n
    _check_order(n)
    return Graph(n, G1.adj + tuple(row << G1.n for row in G2.adj))


def join(G1: Graph, G2: Graph) -> Graph:
    """G1 ∨ G2 with G2's vertices relabeled to n1..n1+n2-1."""
    n = G1.n + G2.n
    _check_order(n)
    low = (1 << G1.n) - 1
    high = ((1 << G2.n) - 1) << G1.n
    return Graph(
        n,
        tuple(row | high for row in G1.adj)
        + tuple((row << G1.n) | low for row in G2.adj),
    )


def neighbors(G: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(G, v)
    return bits_to_tuple(G.adj[v])


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return popcount(G.adj[v])


def min_degree(G: Graph) -> int:
    return min(popcount(row) for row in G.adj)


def common_neighbors(G: Graph, u: int, v: int) -> frozenset[int]:
    """N(u) ∩ N(v); never contains u or v."""
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        raise ValueError("common_neighbors needs two distinct vertices.")
    return frozenset(iter_bits(G.adj[u] & G.adj[v]))


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    unseen = (1 << G.n) - 1
    components = []
    while unseen:
        start = unseen & -unseen
        component = start
        frontier = start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= G.adj[v]
            frontier = reach & ~component
            component |= frontier
        unseen &= ~component
        components.append(frozenset(iter_bits(component)))
    return components


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) == 1


def is_forest(G: Graph) -> bool:
    return num_edges(G) == G.n - len(connected_components(G))


def is_complete(G: Graph) -> bool:
    return num_edges(G) == num_pairs(G.n)


def is_subgraph(G1: Graph, G2: Graph) -> bool:
    """True when both graphs share the vertex set and E(G1) ⊆ E(G2)."""
    if G1.n != G2.n:
        return False
    return all(a & ~b == 0 for a, b in zip(G1.adj, G2.adj))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex i as perm[i]."""
    if sorted(perm) != list(range(G.n)):
        raise ValueError(f"{list(perm)} is not a permutation of 0..{G.n - 1}.")
    adj = [0] * G.n
    for v, row in enumerate(G.adj):
        adj[perm[v]] = mask_of(perm[w] for w in iter_bits(row))
    return Graph(G.n, tuple(adj))


def delete_vertex(G: Graph, v: int) -> Graph:
    """G - v; vertices above v shift down by one."""
    _check_vertex(G, v)
    low = (1 << v) - 1

    def squeeze(row: int) -> int:
        return (row & low) | ((row >> (v + 1)) << v)

    return Graph(
        G.n - 1, tuple(squeeze(row) for w, row in enumerate(G.adj) if w != v)
    )
