"""Reverse search, baseline DFS, and the flip-verdict cache.

Includes the three-node mock graph that pins down why cached verdicts must
be about flips: trusting cached *target* regularity silently drops the
bottom triangulation from the search tree.
"""

from __future__ import annotations

import pytest

from regulartri import (
    ResourceLimitError,
    SearchMode,
    cube,
    enumerate_triangulations,
    gkz,
    lex_compare,
    nested_triangles,
    parse_triangulation,
    placing_triangulation,
    square,
    triangle_with_interior,
)
from regulartri.search import (
    FlipCache,
    GeometricFlipOracle,
    NeighborProvider,
    SearchStats,
    baseline_dfs,
    find_root,
    predecessor,
    reverse_search,
)


def _provider(config, mode=SearchMode.REGULAR_ONLY, capacity=40000, buggy=False):
    stats = SearchStats()
    oracle = GeometricFlipOracle(config, mode, stats, verify_increments=True)
    return NeighborProvider(oracle, stats, capacity, buggy_target_cache=buggy), stats


class MockOracle:
    """Three triangulations; the direct edge between top and bottom is a
    non-regular flip, and it is the bottom node's lex-largest upflip."""

    GKZ = {"T0": (3, 0), "T1": (2, 0), "T2": (1, 0)}
    EDGES = {
        "T0": [("f01", "T1"), ("f02", "T2")],
        "T1": [("f10", "T0"), ("f12", "T2")],
        "T2": [("f20", "T0"), ("f21", "T1")],
    }

    def __init__(self, bad=("f02", "f20")):
        self.bad = set(bad)

    def gkz(self, t):
        return self.GKZ[t]

    def canonical(self, t):
        return t

    def flip_items(self, t, t_gkz):
        return [(f, tgt, self.GKZ[tgt]) for f, tgt in self.EDGES[t]]

    def true_flip_valid(self, t, items):
        return [f not in self.bad for f, _, _ in items]

    def node_regular(self, t):
        return True

    def seed(self):
        return "T0"


def _run_mock(buggy, bad=("f02", "f20")):
    stats = SearchStats()
    provider = NeighborProvider(
        MockOracle(bad), stats, 100, buggy_target_cache=buggy
    )
    seen = []
    reverse_search(provider, visitor=lambda c, g, d: seen.append(c))
    return sorted(seen)


def test_mock_graph_correct_cache_visits_everything():
    assert _run_mock(buggy=False) == ["T0", "T1", "T2"]


def test_mock_graph_target_regularity_cache_loses_a_node():
    assert _run_mock(buggy=True) == ["T0", "T1"]


def test_mock_graph_agrees_when_all_flips_are_regular():
    assert _run_mock(buggy=False, bad=()) == ["T0", "T1", "T2"]
    assert _run_mock(buggy=True, bad=()) == ["T0", "T1", "T2"]


def test_predecessor_square():
    sq = square()
    provider, _ = _provider(sq)
    low = parse_triangulation("{{0,1,3},{1,2,3}}")
    high = parse_triangulation("{{0,1,2},{0,2,3}}")
    pred = predecessor(provider, low, gkz(sq, low))
    assert pred is not None
    assert pred[0] == high
    assert pred[1] == (2, 1, 2, 1)
    assert predecessor(provider, high, gkz(sq, high)) is None


def test_predecessor_isolated_simplex():
    from regulartri import new_configuration

    cfg = new_configuration([(0, 0), (1, 0), (0, 1)])
    provider, _ = _provider(cfg)
    t = parse_triangulation("{{0,1,2}}")
    assert predecessor(provider, t, gkz(cfg, t)) is None


def test_find_root_pins():
    provider, _ = _provider(square())
    root, root_gkz = find_root(provider, placing_triangulation(square()))
    assert root_gkz == (2, 1, 2, 1)
    tri = triangle_with_interior()
    provider, _ = _provider(tri)
    root, root_gkz = find_root(provider, placing_triangulation(tri))
    assert root == parse_triangulation("{{0,1,2}}")
    assert root_gkz == (9, 9, 9, 0)


def test_find_root_is_seed_independent():
    for cfg in (square(), triangle_with_interior(), nested_triangles()):
        provider, _ = _provider(cfg)
        members = []
        reverse_search(
            provider, visitor=lambda c, g, d: members.append(parse_triangulation(c))
        )
        roots = set()
        for t in members:
            fresh, _ = _provider(cfg)
            root, _gkz = find_root(fresh, t)
            roots.add(root)
        assert len(roots) == 1


def test_reverse_search_counts():
    for cfg, want in (
        (square(), 2),
        (triangle_with_interior(), 2),
        (nested_triangles(), 16),
        (cube(3), 74),
    ):
        count, stats = enumerate_triangulations(cfg)
        assert count == want
        assert stats.nodes == want


def test_reverse_search_matches_baseline():
    for cfg in (square(), triangle_with_interior(), nested_triangles()):
        seen = set()
        count, _ = enumerate_triangulations(
            cfg, visitor=lambda c, g, d: seen.add(c)
        )
        assert count == len(seen)
        base = set()
        bcount, _ = enumerate_triangulations(
            cfg, baseline=True, visitor=lambda c, g, d: base.add(c)
        )
        assert bcount == len(base)
        assert seen == base


def test_visitor_sees_each_node_once_with_depths():
    log = []
    count, _ = enumerate_triangulations(
        nested_triangles(), visitor=lambda c, g, d: log.append((c, g, d))
    )
    canon = [c for c, _, _ in log]
    assert len(canon) == count == len(set(canon))
    depths = [d for _, _, d in log]
    assert depths[0] == 0
    assert all(d >= 0 for d in depths)
    # GKZ values reported to the visitor are the exact vectors.
    cfg = nested_triangles()
    for c, g, _ in log:
        assert g == gkz(cfg, parse_triangulation(c))


def test_predecessor_chains_reach_root():
    cfg = nested_triangles()
    provider, _ = _provider(cfg)
    members = []
    reverse_search(provider, visitor=lambda c, g, d: members.append(c))
    root = parse_triangulation(members[0])
    root_gkz = gkz(cfg, root)
    for c in members:
        node = parse_triangulation(c)
        node_gkz = gkz(cfg, node)
        hops = 0
        while True:
            up = predecessor(provider, node, node_gkz)
            if up is None:
                break
            assert lex_compare(up[1], node_gkz) > 0
            node, node_gkz = up
            hops += 1
            assert hops <= len(members)
        assert node == root
        assert node_gkz == root_gkz


def test_cache_transparency():
    reference = None
    for capacity in (0, 3, 40000):
        seen = set()
        count, stats = enumerate_triangulations(
            nested_triangles(),
            cache_capacity=capacity,
            visitor=lambda c, g, d: seen.add(c),
        )
        assert count == 16
        if reference is None:
            reference = seen
        assert seen == reference
        if capacity == 0:
            assert stats.cache_hits == 0
    # A warm cache does get hits at full capacity.
    _, stats = enumerate_triangulations(nested_triangles(), cache_capacity=40000)
    assert stats.cache_hits > 0


def test_flip_cache_lru_eviction():
    cache = FlipCache(2)
    cache.put("a", 1)
    cache.put("b", 2)
    assert cache.get("a") == 1
    cache.put("c", 3)  # evicts "b", the least recently used
    assert cache.get("b") is None
    assert cache.get("a") == 1
    assert cache.get("c") == 3
    assert len(cache) == 2
    disabled = FlipCache(0)
    disabled.put("a", 1)
    assert disabled.get("a") is None
    with pytest.raises(ValueError):
        FlipCache(-1)


def test_stats_conservation():
    class CountingProvider(NeighborProvider):
        requests = 0

        def neighbors(self, node, node_gkz):
            CountingProvider.requests += 1
            return super().neighbors(node, node_gkz)

    CountingProvider.requests = 0
    stats = SearchStats()
    oracle = GeometricFlipOracle(cube(3), SearchMode.REGULAR_ONLY, stats)
    provider = CountingProvider(oracle, stats, 40000)
    count = reverse_search(provider)
    assert count == 74
    assert stats.cache_hits + stats.cache_misses == CountingProvider.requests
    assert stats.rays.lps_solved <= stats.flips_evaluated
    decided = (
        stats.rays.r1
        + stats.rays.r2
        + stats.rays.r3
        + stats.rays.scalar_tests
        + stats.rays.lps_solved
    )
    assert decided >= stats.flips_evaluated


def test_baseline_dfs_resource_limit():
    provider, _ = _provider(cube(3), mode=SearchMode.ALL_FLIPS)
    with pytest.raises(ResourceLimitError):
        baseline_dfs(provider, max_nodes=5)


def test_all_flips_baseline_on_nested_triangles():
    # Two of the eighteen flip-reachable triangulations are non-regular.
    all_count, _ = enumerate_triangulations(
        nested_triangles(), mode=SearchMode.ALL_FLIPS, baseline=True
    )
    regular_count, _ = enumerate_triangulations(nested_triangles())
    assert all_count == 18
    assert regular_count == 16
