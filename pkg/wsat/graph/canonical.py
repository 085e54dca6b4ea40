"""Canonical labeling by partition refinement and individualization.

The canonical form of a graph is the relabeling, among the leaves of the
individualization-refinement tree, whose graph6 string is smallest. The
tree is built only from label-independent data, so isomorphic graphs
share the same set of leaf graphs and therefore the same key.
"""
from typing import Optional

from wsat.graph.base import Graph
from wsat.graph.bitset import mask_of, popcount
from wsat.graph.graph6 import graph6_encode

Partition = list[list[int]]


def _refine(adj: tuple[int, ...], cells: Partition) -> Partition:
    """Refine an ordered partition until it is equitable.

    Each non-singleton cell is split by the number of neighbours its
    vertices have in every cell; the pieces keep their signature order.
    """
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: Partition = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple(popcount(adj[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                split = True
            refined.extend(groups[key] for key in sorted(groups))
        cells = refined
        if not split:
            return cells


def _are_twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    """Transposing twins is an automorphism, so one subtree suffices."""
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _leaf_graph(G: Graph, cells: Partition) -> str:
    perm = [0] * G.n
    for position, cell in enumerate(cells):
        perm[cell[0]] = position
    adj = [0] * G.n
    for v, row in enumerate(G.adj):
        new_row = 0
        while row:
            low = row & -row
            new_row |= 1 << perm[low.bit_length() - 1]
            row ^= low
        adj[perm[v]] = new_row
    return graph6_encode(Graph(G.n, tuple(adj)))


def _search(G: Graph, cells: Partition, best: Optional[str]) -> str:
    cells = _refine(G.adj, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        leaf = _leaf_graph(G, cells)
        return leaf if best is None or leaf < best else best

    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        if any(_are_twins(G.adj, u, v) for u in tried):
            continue
        tried.append(v)
        rest = [w for w in cell if w != v]
        branch = cells[:target] + [[v], rest] + cells[target + 1 :]
        best = _search(G, branch, best)
    assert best is not None
    return best


def canonical_form(G: Graph) -> str:
    """graph6 text of the canonically relabeled graph."""
    return _search(G, [list(range(G.n))], None)


def canonical_key(G: Graph) -> bytes:
    """Key equal for two graphs exactly when they are isomorphic."""
    return canonical_form(G).encode("ascii")


def is_isomorphic(G1: Graph, G2: Graph) -> bool:
    if G1.n != G2.n or sorted(map(popcount, G1.adj)) != sorted(
        map(popcount, G2.adj)
    ):
        return False
    return canonical_key(G1) == canonical_key(G2)
