"""Detection of K_{s,t} copies, globally and through a single new edge.

All finders return the lexicographically smallest (side_s, side_t) pair
among the copies they look for, so certificates are reproducible.
"""
from itertools import combinations
from typing import Optional, Sequence

from wsat.core.base import PatternError
from wsat.graph.base import Edge, EdgeLike, Graph, as_edge
from wsat.graph.bitset import bits_to_tuple, iter_bits, lowest_bits, popcount
from wsat.pattern.base import PatternSpec, Witness

Adjacency = Sequence[int]


def _smallest_clique(adj: Adjacency, candidates: int, k: int) -> Optional[int]:
    """Lexicographically smallest k-clique inside `candidates`, as a mask."""
    if k == 0:
        return 0
    for c in iter_bits(candidates):
        higher = candidates & ~((2 << c) - 1)
        rest = _smallest_clique(adj, higher & adj[c], k - 1)
        if rest is not None:
            return rest | (1 << c)
    return None


def find_copy(adj: Adjacency, pattern: PatternSpec) -> Optional[Witness]:
    """Smallest copy of the pattern anywhere in `adj`."""
    n = len(adj)
    if pattern.is_clique:
        clique = _smallest_clique(adj, (1 << n) - 1, pattern.order)
        if clique is None:
            return None
        members = bits_to_tuple(clique)
        return Witness(members[:2], members[2:])

    s, t = pattern.s, pattern.t
    if s == 1:
        for x in range(n):
            if popcount(adj[x]) >= t:
                return Witness((x,), bits_to_tuple(lowest_bits(adj[x], t)))
        return None
    for side_s in combinations(range(n), s):
        common = adj[side_s[0]]
        for x in side_s[1:]:
            common &= adj[x]
        if popcount(common) >= t:
            return Witness(side_s, bits_to_tuple(lowest_bits(common, t)))
    return None


def _oriented_witness(
    adj: Adjacency, x: int, y: int, s: int, t: int
) -> Optional[Witness]:
    """Smallest copy through xy with x on the s-side and y on the t-side."""
    x_row = adj[x] | (1 << y)
    pool = bits_to_tuple(adj[y] & ~(1 << x))
    for rest in combinations(pool, s - 1):
        common = x_row
        for w in rest:
            common &= adj[w]
        if popcount(common) >= t:
            others = lowest_bits(common & ~(1 << y), t - 1)
            return Witness.of(rest + (x,), bits_to_tuple(others | (1 << y)))
    return None


def _generic_edge_witness(
    adj: Adjacency, u: int, v: int, pattern: PatternSpec
) -> Optional[Witness]:
    found = [
        w
        for w in (
            _oriented_witness(adj, u, v, pattern.s, pattern.t),
            _oriented_witness(adj, v, u, pattern.s, pattern.t),
        )
        if w is not None
    ]
    return min(found) if found else None


def _star_edge_witness(
    adj: Adjacency, u: int, v: int, t: int
) -> Optional[Witness]:
    # u < v, so a star centred at u is the smaller witness.
    for center, leaf in ((u, v), (v, u)):
        if popcount(adj[center]) >= t - 1:
            leaves = lowest_bits(adj[center], t - 1) | (1 << leaf)
            return Witness((center,), bits_to_tuple(leaves))
    return None


def _pair_edge_witness(
    adj: Adjacency, u: int, v: int, t: int
) -> Optional[Witness]:
    found = []
    for x, y in ((u, v), (v, u)):
        for b in iter_bits(adj[y] & ~(1 << x)):
            shared = adj[x] & adj[b]
            if popcount(shared) >= t - 1:
                side_t = lowest_bits(shared, t - 1) | (1 << y)
                found.append(Witness.of((x, b), bits_to_tuple(side_t)))
                break
    return min(found) if found else None


def _clique_edge_witness(
    adj: Adjacency, u: int, v: int, pattern: PatternSpec
) -> Optional[Witness]:
    clique = _smallest_clique(adj, adj[u] & adj[v], pattern.t)
    if clique is None:
        return None
    return Witness((u, v), bits_to_tuple(clique))


def edge_witness(
    adj: Adjacency,
    u: int,
    v: int,
    pattern: PatternSpec,
    generic: bool = False,
) -> Optional[Witness]:
    """Copy of the pattern through the absent edge uv (u < v) in adj + uv.

    `generic` skips the s = 1 and s = 2 fast paths.
    """
    if pattern.is_clique:
        return _clique_edge_witness(adj, u, v, pattern)
    if generic:
        return _generic_edge_witness(adj, u, v, pattern)
    if pattern.s == 1:
        return _star_edge_witness(adj, u, v, pattern.t)
    if pattern.s == 2:
        return _pair_edge_witness(adj, u, v, pattern.t)
    return _generic_edge_witness(adj, u, v, pattern)


def _check_fits(G: Graph, pattern: PatternSpec) -> None:
    if pattern.order > G.n:
        raise PatternError(
            f"pattern larger than graph: {pattern.label} needs {pattern.order} vertices, graph has {G.n}"
        )


def _check_absent(G: Graph, e: EdgeLike) -> Edge:
    edge = as_edge(e)
    if edge.v >= G.n:
        raise ValueError(f"Edge {tuple(edge)} does not fit in {G.n} vertices.")
    if G.adj[edge.u] >> edge.v & 1:
        raise PatternError(f"edge already present: {tuple(edge)}")
    return edge


def contains_kst(G: Graph, pattern: PatternSpec) -> Optional[Witness]:
    """Some copy of the pattern in `G` (non-induced), or None."""
    _check_fits(G, pattern)
    return find_copy(G.adj, pattern)


def is_kst_free(G: Graph, pattern: PatternSpec) -> bool:
    return contains_kst(G, pattern) is None


def edge_completes_kst(
    G: Graph, e: EdgeLike, pattern: PatternSpec
) -> Optional[Witness]:
    """A copy of the pattern in G + e that uses e, or None."""
    u, v = _check_absent(G, e)
    return edge_witness(G.adj, u, v, pattern)


def edge_completes_kst_generic(
    G: Graph, e: EdgeLike, pattern: PatternSpec
) -> Optional[Witness]:
    """Subset-search version of `edge_completes_kst` without fast paths."""
    u, v = _check_absent(G, e)
    return edge_witness(G.adj, u, v, pattern, generic=True)


def addability_pair_criterion(
    G: Graph, a: int, b: int, t: int
) -> Optional[Edge]:
    """Missing edge forced by a pair with t-1 common neighbours.

    If |N(a, b)| >= t - 1 and some c is adjacent to exactly one of a, b,
    joining c to the other one creates K_{2,t} with sides {a, b} and
    t - 1 common neighbours plus c.
    """
    if a == b:
        raise ValueError(
            "addability_pair_criterion needs two distinct vertices."
        )
    for x in (a, b):
        if not 0 <= x < G.n:
            raise ValueError(f"Vertex {x} is outside 0..{G.n - 1}.")
    if popcount(G.adj[a] & G.adj[b]) < t - 1:
        return None
    only_a = G.adj[a] & ~G.adj[b] & ~(1 << b)
    only_b = G.adj[b] & ~G.adj[a] & ~(1 << a)
    candidates = only_a | only_b
    if not candidates:
        return None
    c = (candidates & -candidates).bit_length() - 1
    return Edge.of(b, c) if only_a >> c & 1 else Edge.of(a, c)
