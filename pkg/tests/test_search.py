from functools import lru_cache
from itertools import combinations
from math import gcd

import pytest

from wsat.constructions import pendant_extend
from wsat.core.base import PatternError, SearchError
from wsat.graph import (
    canonical_form,
    complement,
    complete_graph,
    degree,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edges,
    is_complete,
    is_connected,
    is_forest,
    is_isomorphic,
    num_edges,
)
from wsat.pattern import PatternSpec
from wsat.percolation import is_weakly_saturated, verify_certificate
from wsat.search import (
    SearchConfig,
    degree_floor,
    first_level,
    verify_no_smaller,
    wsat_exact,
)


@lru_cache(maxsize=None)
def exact(n, s, t, **options):
    return wsat_exact(SearchConfig(n, PatternSpec(s, t), **options))


def _brute_force_wsat(n, pattern):
    pairs = list(combinations(range(n), 2))
    best = None
    for mask in range(1 << len(pairs)):
        G = from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if best is not None and num_edges(G) >= best:
            continue
        if is_weakly_saturated(G, pattern):
            best = num_edges(G)
    return best


@pytest.mark.parametrize(
    "n, s, t, value",
    [
        (4, 1, 2, 1),
        (4, 2, 2, 4),
        (5, 1, 3, 3),
        (5, 2, 2, 5),
        (5, 2, 3, 6),
        (6, 2, 3, 7),
        (6, 2, 4, 11),
        (6, 3, 3, 11),
    ],
)
def test_known_values(n, s, t, value):
    result = exact(n, s, t)
    assert result.value == value
    assert result.summary() == f"wsat = {value}"
    assert all(num_edges(w) == value for w in result.witnesses)
    assert verify_certificate(result.certificate)


def test_star_witness_is_a_triangle():
    result = exact(5, 1, 3)
    target = disjoint_union(complete_graph(3), empty_graph(2))
    assert any(is_isomorphic(w, target) for w in result.witnesses)


@pytest.mark.parametrize("n, value", [(4, 3), (5, 4), (6, 5)])
def test_triangle_values(n, value):
    cfg = SearchConfig(n, PatternSpec.clique(3))
    assert wsat_exact(cfg).value == value


def test_k4_value():
    assert wsat_exact(SearchConfig(5, PatternSpec.clique(4))).value == 7


def test_witnesses_are_canonical_and_sorted():
    result = exact(5, 2, 3)
    keys = [canonical_form(w) for w in result.witnesses]
    assert keys == sorted(set(keys))
    assert canonical_form(result.witness) == keys[0]
    assert result.to_dict()["witness"] == keys[0]


def test_result_is_independent_of_dedup_and_workers():
    reference = exact(5, 2, 3)
    keys = [canonical_form(w) for w in reference.witnesses]
    for options in (
        dict(dedup=False),
        dict(worker_count=2),
        dict(worker_count=3, dedup=False),
        dict(prefix_length=0),
        dict(prefix_length=4),
    ):
        result = exact(5, 2, 3, **options)
        assert result.value == reference.value
        assert [canonical_form(w) for w in result.witnesses] == keys
        assert result.graphs_enumerated == reference.graphs_enumerated
    assert exact(5, 2, 3, dedup=False).graphs_tested > reference.graphs_tested


@pytest.mark.parametrize(
    "n, pattern",
    [
        (4, PatternSpec(2, 2)),
        (5, PatternSpec(2, 2)),
        (5, PatternSpec(2, 3)),
        (5, PatternSpec(1, 3)),
        (4, PatternSpec.clique(3)),
    ],
)
def test_scan_matches_full_enumeration(n, pattern):
    cfg = SearchConfig(n, pattern, dedup=False)
    assert wsat_exact(cfg).value == _brute_force_wsat(n, pattern)


def test_verify_no_smaller():
    assert verify_no_smaller(SearchConfig(5, PatternSpec(2, 3)), 5)
    assert not verify_no_smaller(SearchConfig(5, PatternSpec(2, 3)), 6)
    assert verify_no_smaller(SearchConfig(4, PatternSpec(2, 2)), 6)
    assert verify_no_smaller(SearchConfig(6, PatternSpec(2, 4)), 10)
    with pytest.raises(SearchError):
        verify_no_smaller(SearchConfig(5, PatternSpec(2, 3)), 11)


def test_empty_range():
    result = wsat_exact(SearchConfig(5, PatternSpec(2, 3), m_hi=5))
    assert result.value is None
    assert result.witness is None
    assert result.certificate is None
    assert result.summary() == "wsat: none in range [0, 5]"


def test_fast_mode_starts_at_prediction():
    cfg = SearchConfig(5, PatternSpec(2, 3), independent=False)
    assert first_level(cfg) == 6
    result = wsat_exact(cfg)
    assert result.start_m == 6
    assert result.value == 6
    assert first_level(SearchConfig(5, PatternSpec(2, 3))) == 0


def test_levels_are_reported():
    reports = []
    result = wsat_exact(
        SearchConfig(5, PatternSpec(2, 3)), on_level=reports.append
    )
    assert [r.m for r in reports] == list(range(0, 7))
    assert reports[-1].found == len(result.witnesses)
    assert all(r.found == 0 for r in reports[:-1])
    assert sum(r.graphs_tested for r in reports) == result.graphs_tested


def test_resume_from_level():
    result = wsat_exact(SearchConfig(5, PatternSpec(2, 3)), start_m=5)
    assert result.value == 6
    with pytest.raises(SearchError):
        wsat_exact(SearchConfig(5, PatternSpec(2, 3), m_lo=3), start_m=1)


def test_search_config_validation():
    with pytest.raises(PatternError):
        SearchConfig(4, PatternSpec(2, 3))
    with pytest.raises(SearchError):
        SearchConfig(5, PatternSpec(2, 3), m_lo=7, m_hi=6)
    with pytest.raises(SearchError):
        SearchConfig(5, PatternSpec(2, 3), m_hi=11)
    with pytest.raises(SearchError):
        SearchConfig(5, PatternSpec(2, 3), worker_count=0)
    with pytest.raises(SearchError):
        SearchConfig(65, PatternSpec(2, 3))
    assert SearchConfig(5, PatternSpec(2, 3)).m_hi == 10


def test_degree_floor():
    assert degree_floor(PatternSpec(2, 3)) == 1
    assert degree_floor(PatternSpec(3, 3)) == 2
    assert degree_floor(PatternSpec.clique(4)) == 2


@pytest.mark.parametrize(
    "n, s, t", [(4, 2, 2), (5, 2, 2), (5, 2, 3), (6, 2, 3)]
)
def test_connected_prune_keeps_the_value(n, s, t):
    assert exact(n, s, t, prune_connected=True).value == exact(n, s, t).value
    assert all(
        is_connected(w) for w in exact(n, s, t, prune_connected=True).witnesses
    )


def test_connected_prune_is_ignored_for_stars():
    assert exact(5, 1, 3, prune_connected=True).value == 3


@pytest.mark.parametrize("s, t", [(2, 2), (2, 3), (2, 4), (3, 3)])
def test_minimum_witnesses_have_forest_complements(s, t):
    for G in exact(s + t, s, t).witnesses:
        H = complement(G)
        assert is_forest(H)
        if gcd(s, t) != 1:
            assert not is_connected(H)


@pytest.mark.parametrize("n, t", [(4, 2), (5, 2), (5, 3), (6, 3), (6, 4)])
def test_pendant_keeps_saturation(n, t):
    pattern = PatternSpec(2, t)
    for G in exact(n, 2, t).witnesses:
        for v in range(G.n):
            assert is_weakly_saturated(pendant_extend(G, [v]), pattern)


@pytest.mark.slow
@pytest.mark.parametrize("t", [3, 4, 5])
def test_pendant_keeps_saturation_at_seven(t):
    pattern = PatternSpec(2, t)
    witnesses = exact(7, 2, t, worker_count=4).witnesses
    assert witnesses
    for G in witnesses:
        for v in range(G.n):
            assert is_weakly_saturated(pendant_extend(G, [v]), pattern)


@pytest.mark.parametrize(
    "n, t, has_leaf",
    [(6, 4, True), pytest.param(7, 5, False, marks=pytest.mark.slow)],
)
def test_degree_one_deletion(n, t, has_leaf):
    """Deleting a leaf of a minimum witness on n <= 2t - 2 vertices.

    At these orders G - v has fewer vertices than K_{2,t}, so the check
    reduces to G - v being complete. With n = 7 and t = 5 a leaf would
    force more than wsat edges, and none of the witnesses has one.
    """
    pattern = PatternSpec(2, t)
    assert n <= 2 * t - 2
    checked = 0
    for G in exact(n, 2, t, worker_count=4).witnesses:
        assert is_weakly_saturated(G, pattern)
        for v in range(G.n):
            if degree(G, v) != 1:
                continue
            H = delete_vertex(G, v)
            checked += 1
            if H.n < pattern.order:
                assert is_complete(H)
            else:
                assert is_weakly_saturated(H, pattern)
    assert (checked > 0) == has_leaf


@pytest.mark.slow
@pytest.mark.parametrize(
    "n, s, t, value",
    [(7, 2, 3, 8), (7, 2, 4, 11), (7, 2, 5, 15), (7, 3, 4, 15)],
)
def test_known_values_at_seven(n, s, t, value):
    assert exact(n, s, t, worker_count=4).value == value


@pytest.mark.slow
def test_triangle_at_seven():
    assert wsat_exact(SearchConfig(7, PatternSpec.clique(3))).value == 6


@pytest.mark.slow
@pytest.mark.parametrize("t", [3, 4])
def test_connected_prune_at_six(t):
    assert exact(6, 2, t, prune_connected=True).value == exact(6, 2, t).value
