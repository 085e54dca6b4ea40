from itertools import combinations

import pytest

from wsat.core.base import PatternError, SearchError
from wsat.graph import (
    Edge,
    add_edges,
    canonical_key,
    complete_graph,
    disjoint_union,
    edges,
    empty_graph,
    from_edges,
    is_subgraph,
    num_edges,
    path_graph,
    relabel,
)
from wsat.pattern import PatternSpec, Witness, witness_holds
from wsat.percolation import (
    addable_edges,
    brute_force_is_weakly_saturated,
    closure,
    is_weakly_saturated,
    randomized_closure,
)

SMALL_PATTERNS = [
    PatternSpec(1, 2),
    PatternSpec(1, 3),
    PatternSpec(2, 2),
    PatternSpec(2, 3),
]


def _graph_classes(n):
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        G = from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.setdefault(canonical_key(G), G)
    return list(seen.values())


def test_complement_of_path_percolates(complement_p5, k23):
    outcome = closure(complement_p5, k23)
    assert outcome.complete
    assert num_edges(complement_p5) == 6
    assert outcome.added_edges == [
        Edge(1, 2),
        Edge(2, 3),
        Edge(3, 4),
        Edge(0, 1),
    ]
    assert outcome.added[0][1] == Witness((0, 1), (2, 3, 4))
    assert is_weakly_saturated(complement_p5, k23)


def test_empty_graph_is_stuck():
    outcome = closure(empty_graph(4), PatternSpec(1, 2))
    assert not outcome.complete
    assert outcome.added == ()


def test_clique_plus_isolated_vertices_saturates_stars():
    for t in range(2, 6):
        G = disjoint_union(complete_graph(t), empty_graph(3))
        assert is_weakly_saturated(G, PatternSpec(1, t))


def test_pattern_copy_disqualifies():
    G = complete_graph(5)
    assert closure(G, PatternSpec(2, 3)).complete
    assert not is_weakly_saturated(G, PatternSpec(2, 3))


def test_pattern_larger_than_graph():
    with pytest.raises(PatternError, match="pattern larger than graph"):
        closure(path_graph(4), PatternSpec(2, 3))


def test_closure_is_idempotent(random_graph, rng):
    for _ in range(40):
        pattern = rng.choice(SMALL_PATTERNS)
        G = random_graph(rng.randint(5, 8), rng.random())
        final = closure(G, pattern).final
        again = closure(final, pattern)
        assert again.added == ()
        assert again.final == final


def test_closure_is_monotone(random_graph, rng):
    for _ in range(40):
        pattern = rng.choice(SMALL_PATTERNS)
        n = rng.randint(5, 8)
        G = random_graph(n, 0.3)
        H = add_edges(G, edges(random_graph(n, 0.3)))
        assert is_subgraph(
            closure(G, pattern).final, closure(H, pattern).final
        )


def test_closure_is_order_independent(random_graph, rng):
    for _ in range(30):
        pattern = rng.choice(SMALL_PATTERNS + [PatternSpec(2, 4)])
        G = random_graph(rng.randint(6, 8), rng.random())
        expected = closure(G, pattern).final
        for _ in range(5):
            assert randomized_closure(G, pattern, rng).final == expected


def test_saturation_is_isomorphism_invariant(random_graph, rng):
    for _ in range(50):
        pattern = rng.choice(SMALL_PATTERNS)
        n = rng.randint(5, 8)
        G = random_graph(n, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        assert is_weakly_saturated(G, pattern) == is_weakly_saturated(
            relabel(G, perm), pattern
        )


def test_addable_edges_carry_valid_witnesses(random_graph):
    pattern = PatternSpec(2, 3)
    G = random_graph(7, 0.5)
    for edge, witness in addable_edges(G, pattern):
        assert witness.separates(edge, pattern)
        assert witness_holds(G.adj, witness, pattern, extra=edge)


@pytest.mark.parametrize("pattern", SMALL_PATTERNS, ids=lambda p: p.label)
def test_closure_agrees_with_ordering_search(pattern):
    for n in range(pattern.order, 6):
        for G in _graph_classes(n):
            assert is_weakly_saturated(
                G, pattern
            ) == brute_force_is_weakly_saturated(G, pattern)


def test_ordering_search_limit():
    with pytest.raises(SearchError, match="too many missing edges"):
        brute_force_is_weakly_saturated(empty_graph(6), PatternSpec(2, 3))


@pytest.mark.slow
def test_closure_is_order_independent_at_scale(random_graph, rng):
    for _ in range(100):
        pattern = rng.choice(SMALL_PATTERNS + [PatternSpec(2, 4)])
        G = random_graph(rng.randint(6, 10), rng.random())
        expected = closure(G, pattern).final
        for _ in range(10):
            assert randomized_closure(G, pattern, rng).final == expected
