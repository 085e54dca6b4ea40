"""Deterministic generators for the weak saturation graph families.

Every family fixes its vertex labels so graph6 output and certificates
are reproducible.
"""
from math import comb, gcd
from typing import Sequence

from wsat.constructions.base import FamilyInstance, register_family
from wsat.core.base import CapacityError, ConstructionError, FamilyName
from wsat.graph.base import (
    MAX_VERTICES,
    Edge,
    Graph,
    clique_join,
    complement,
    disjoint_union,
    empty_graph,
    from_edges,
    path_graph,
)
from wsat.pattern.base import PatternSpec, Witness

# (edge, side_s, side_t) with vertices given as path positions
PlannedStep = tuple[Edge, tuple[int, ...], tuple[int, ...]]


def _check_total(total: int) -> None:
    if total > MAX_VERTICES:
        raise ConstructionError(
            f"size overflow: {total} vertices exceeds {MAX_VERTICES}"
        )


def _check_sides(s: int, t: int) -> None:
    if s < 1 or t < 1:
        raise ConstructionError(f"Need s, t >= 1, got s={s}, t={t}.")
    _check_total(s + t)


def _complement_path_plan(
    vs: Sequence[int], s: int, t: int
) -> list[PlannedStep]:
    """Saturating steps for the complement of the path vs[0]-...-vs[-1].

    Needs gcd(s, t) = 1 and len(vs) = s + t. The first step joins the two
    halves A = vs[:s] and B = vs[s:]; B is then saturated as a
    K_{s,t-s} instance with A appended to every t-side, and finally the
    path edges inside A are added.
    """
    if s > t:
        return [(e, b, a) for e, a, b in _complement_path_plan(vs, t, s)]
    side_a, side_b = tuple(vs[:s]), tuple(vs[s:])
    steps: list[PlannedStep] = [(Edge.of(vs[s - 1], vs[s]), side_a, side_b)]
    if t > s:
        steps += [
            (e, c, side_a + d)
            for e, c, d in _complement_path_plan(side_b, s, t - s)
        ]
    for i in range(1, s):
        steps.append(
            (
                Edge.of(vs[i - 1], vs[i]),
                tuple(vs[:i]) + tuple(vs[s : 2 * s - i]),
                tuple(vs[i:s]) + tuple(vs[2 * s - i :]),
            )
        )
    return steps


def _unzip(
    plan: list[PlannedStep],
) -> tuple[tuple[Edge, ...], tuple[Witness, ...]]:
    order = tuple(edge for edge, _, _ in plan)
    witnesses = tuple(Witness.of(a, b) for _, a, b in plan)
    return order, witnesses


@register_family(FamilyName.COMPLEMENT_PATH)
def complement_path(s: int, t: int) -> FamilyInstance:
    """The complement of the path on s + t vertices.

    Weakly K_{s,t}-saturated exactly when gcd(s, t) = 1, in which case the
    saturating order and its witnesses are attached.
    """
    _check_sides(s, t)
    pattern = PatternSpec.of(s, t)
    graph = complement(path_graph(s + t))
    order = witnesses = None
    if gcd(s, t) == 1:
        plan = _complement_path_plan(range(s + t), pattern.s, pattern.t)
        order, witnesses = _unzip(plan)
    return FamilyInstance(
        graph,
        FamilyName.COMPLEMENT_PATH,
        {"s": s, "t": t},
        pattern,
        order,
        witnesses,
    )


@register_family(FamilyName.COMPLEMENT_PATH_UNION_K1)
def complement_path_union_k1(s: int, t: int) -> FamilyInstance:
    """The complement of P_{s+t-1} plus an isolated vertex (vertex s+t-1).

    The added vertex dominates the graph, so for s = 1 the graph already
    contains K_{1,t} and no order is attached.
    """
    _check_sides(s, t)
    params = {"s": s, "t": t}
    pattern = PatternSpec.of(s, t)
    s, t = pattern.s, pattern.t
    n = s + t
    graph = complement(disjoint_union(path_graph(n - 1), empty_graph(1)))

    order: list[Edge] = []
    witnesses: list[Witness] = []
    if s >= 2:
        base_side = list(range(s))
        order.append(Edge(s - 1, s))
        sides = [base_side]
        for i in range(2, s + 1):
            order.append(Edge(i - 2, i - 1))
        for i in range(s + 1, n - 1):
            order.append(Edge(i - 1, i))
        # side_s for step i + 1 is derived from base_side
        for i in range(1, n - 2):
            if i <= s - 1:
                side = [v for v in base_side if v != i - 1] + [n - 1]
            else:
                side = [v for v in base_side if v != 0] + [i]
            sides.append(side)
        for side in sides:
            rest = [v for v in range(n) if v not in side]
            witnesses.append(Witness.of(side, rest))
    return FamilyInstance(
        graph,
        FamilyName.COMPLEMENT_PATH_UNION_K1,
        params,
        pattern,
        tuple(order) or None,
        tuple(witnesses) or None,
    )


@register_family(FamilyName.GNT)
def gnt(n: int, t: int) -> FamilyInstance:
    """The K_{2,t} construction on n vertices with n - 2 + C(t, 2) edges.

    Clique {0..t-2} with distinguished vertex c* = t-2; hubs t-1 and t
    joined to the whole clique; pendant t+1 on hub t-1; vertices
    t+2..n-1 each hang off c*.
    """
    if t < 3:
        raise ConstructionError(f"gnt needs t >= 3, got t={t}.")
    if n < t + 2:
        raise ConstructionError(f"gnt needs n >= t + 2, got n={n}, t={t}.")
    _check_total(n)
    center = t - 2
    hub_u, hub_v, pendant = t - 1, t, t + 1
    clique = range(t - 1)
    edge_list = [(a, b) for a in clique for b in clique if a < b]
    edge_list += [(c, hub) for hub in (hub_u, hub_v) for c in clique]
    edge_list.append((hub_u, pendant))
    edge_list += [(center, w) for w in range(t + 2, n)]
    return FamilyInstance(
        from_edges(n, edge_list),
        FamilyName.GNT,
        {"n": n, "t": t},
        PatternSpec(2, t),
    )


def pendant_extend(G: Graph, targets: Sequence[int]) -> Graph:
    """Add vertex G.n joined exactly to `targets`."""
    if G.n >= MAX_VERTICES:
        raise CapacityError(
            f"capacity exceeded: cannot add a vertex to a {G.n}-vertex graph"
        )
    chosen = list(targets)
    if len(set(chosen)) != len(chosen):
        raise ConstructionError(f"Duplicate pendant targets {chosen}.")
    for v in chosen:
        if not 0 <= v < G.n:
            raise ConstructionError(
                f"Pendant target {v} is outside 0..{G.n - 1}."
            )
    row = 0
    adj = [a | (1 << G.n) if v in chosen else a for v, a in enumerate(G.adj)]
    for v in chosen:
        row |= 1 << v
    return Graph(G.n + 1, tuple(adj) + (row,))


def _block_graph(
    blocks: Sequence[int],
    clique_blocks: Sequence[int],
    joined: Sequence[tuple[int, int]],
) -> Graph:
    starts = [sum(blocks[:i]) for i in range(len(blocks))]
    members = [
        range(start, start + size) for start, size in zip(starts, blocks)
    ]
    edge_list = []
    for b in clique_blocks:
        edge_list += [(a, c) for a in members[b] for c in members[b] if a < c]
    for b1, b2 in joined:
        edge_list += [(a, c) for a in members[b1] for c in members[b2]]
    return from_edges(sum(blocks), edge_list)


@register_family(FamilyName.XYZ)
def xyz_graph(x: int, y: int, z: int) -> FamilyInstance:
    """Clique X joined to Y, and Y joined to the independent set Z."""
    if x < 2 or y < 1 or z < 0:
        raise ConstructionError(
            f"xyz_graph needs x >= 2, y >= 1, z >= 0, got ({x}, {y}, {z})."
        )
    _check_total(x + y + z)
    graph = _block_graph((x, y, z), (0,), ((0, 1), (1, 2)))
    return FamilyInstance(graph, FamilyName.XYZ, {"x": x, "y": y, "z": z})


def xyz_saturation_condition(x: int, y: int, z: int, t: int) -> bool:
    """Whether the K_{2,t} closure of xyz_graph(x, y, z) is complete."""
    return x >= t or (y >= t - 1 and x + z >= t)


@register_family(FamilyName.H_GRAPH)
def h_graph(x: int, y1: int, y2: int, z: int) -> FamilyInstance:
    """Blocks X, Y1, Y2, Z: X a clique joined to Y1 and Y2, Z joined to Y1."""
    if x < 1 or min(y1, y2, z) < 0:
        raise ConstructionError(
            f"h_graph needs x >= 1 and non-negative sizes, got ({x}, {y1}, {y2}, {z})."
        )
    _check_total(x + y1 + y2 + z)
    graph = _block_graph((x, y1, y2, z), (0,), ((0, 1), (0, 2), (1, 3)))
    return FamilyInstance(
        graph, FamilyName.H_GRAPH, {"x": x, "y1": y1, "y2": y2, "z": z}
    )


@register_family(FamilyName.CLIQUE_JOIN)
def clique_join_family(a: int, b: int) -> FamilyInstance:
    """K_a joined to b independent vertices; weakly K_{a+2}-saturated."""
    if a < 0 or b < 0 or a + b < 1:
        raise ConstructionError(
            f"clique_join needs a, b >= 0 and a + b >= 1, got ({a}, {b})."
        )
    _check_total(a + b)
    return FamilyInstance(
        clique_join(a, b),
        FamilyName.CLIQUE_JOIN,
        {"a": a, "b": b},
        PatternSpec.clique(a + 2),
    )


def expected_edges(name: FamilyName, **params: int) -> int:
    """Closed-form edge count of a family instance."""
    if name == FamilyName.COMPLEMENT_PATH:
        return comb(params["s"] + params["t"] - 1, 2)
    if name == FamilyName.COMPLEMENT_PATH_UNION_K1:
        return comb(params["s"] + params["t"] - 1, 2) + 1
    if name == FamilyName.GNT:
        return params["n"] - 2 + comb(params["t"], 2)
    if name == FamilyName.XYZ:
        x, y, z = params["x"], params["y"], params["z"]
        return comb(x, 2) + x * y + y * z
    if name == FamilyName.H_GRAPH:
        x, y1, y2, z = params["x"], params["y1"], params["y2"], params["z"]
        return comb(x, 2) + x * (y1 + y2) + y1 * z
    if name == FamilyName.CLIQUE_JOIN:
        a, b = params["a"], params["b"]
        return comb(a, 2) + a * b
    raise ConstructionError(f"No edge formula for family '{name}'.")
