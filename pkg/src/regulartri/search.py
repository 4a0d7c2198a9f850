"""Reverse search over the flip graph.

The enumeration walks the spanning tree induced by the predecessor map: the
predecessor of a triangulation is its neighbor with lexicographically largest
GKZ-vector, provided that neighbor improves on the triangulation itself (an
"upflip").  The root — the unique lex-largest vertex in regular mode, where
the graph is the edge graph of a polytope — is found by walking upflips from
the placing seed.  Children of a node are exactly the lex-smaller neighbors
whose predecessor is the node, so no visited set is ever needed.

The engine is generic over a small oracle interface so that the same
traversal (and the same cache semantics) can be driven by the real geometry
or by a hand-built graph in tests:

    gkz(node)                     -> tuple
    canonical(node)               -> str
    flip_items(node, node_gkz)    -> [(edge, target, target_gkz)]
    true_flip_valid(node, items)  -> [bool]  (mode-dependent flip verdicts)
    node_regular(node)            -> bool    (target-regularity, demo mode only)

Flip lists with their per-flip verdicts are memoized in an LRU cache keyed by
the canonical string; any capacity (including zero) yields the same
enumeration, only the hit counters move.  A deliberately broken alternative
— caching regularity of *target triangulations* and trusting it in place of
per-flip verdicts — is available behind `buggy_target_cache=True` to
demonstrate how that shortcut silently prunes reachable triangulations.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum

from .errors import ResourceLimitError
from .flips import apply_flip, find_flips
from .points import PointConfiguration
from .regularity import RayStats, is_regular, regular_flips
from .triangulation import Triangulation, gkz, lex_compare, placing_triangulation


class SearchMode(Enum):
    ALL_FLIPS = "all"
    REGULAR_ONLY = "regular"


@dataclass
class SearchStats:
    nodes: int = 0
    flips_evaluated: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    rays: RayStats = field(default_factory=RayStats)


class FlipCache:
    """LRU map from canonical string to the node's evaluated flip list.

    capacity 0 disables storage entirely; eviction is least-recently-used.
    """

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError("cache capacity must be nonnegative")
        self.capacity = capacity
        self._data = OrderedDict()

    def get(self, key):
        entry = self._data.get(key)
        if entry is not None:
            self._data.move_to_end(key)
        return entry

    def put(self, key, value):
        if self.capacity == 0:
            return
        self._data[key] = value
        self._data.move_to_end(key)
        while len(self._data) > self.capacity:
            self._data.popitem(last=False)

    def __len__(self):
        return len(self._data)


class GeometricFlipOracle:
    """Oracle backed by an actual point configuration.

    With `verify_increments=True` every incrementally updated GKZ-vector is
    checked against a from-scratch recomputation (for tests; enumeration
    relies on the exact increment).
    """

    def __init__(self, config: PointConfiguration, mode: SearchMode,
                 stats: SearchStats, verify_increments: bool = False):
        self.config = config
        self.mode = mode
        self.stats = stats
        self.verify_increments = verify_increments

    def gkz(self, t: Triangulation):
        return gkz(self.config, t)

    def canonical(self, t: Triangulation) -> str:
        return t.canonical()

    def flip_items(self, t: Triangulation, t_gkz):
        items = []
        for flip in find_flips(self.config, t):
            target = apply_flip(self.config, t, flip)
            tgkz = tuple(a + b for a, b in zip(t_gkz, flip.delta))
            if self.verify_increments:
                assert tgkz == gkz(self.config, target), (
                    "incremental GKZ update disagrees with recomputation"
                )
            items.append((flip, target, tgkz))
        return items

    def true_flip_valid(self, t, items):
        if self.mode is SearchMode.ALL_FLIPS:
            return [True] * len(items)
        flips = [it[0] for it in items]
        good = set(
            id(f) for f in regular_flips(self.config, t, flips, self.stats.rays)
        )
        return [id(f) in good for f in flips]

    def node_regular(self, t: Triangulation) -> bool:
        return is_regular(self.config, t).regular

    def seed(self) -> Triangulation:
        return placing_triangulation(self.config)


class NeighborProvider:
    """Evaluates and caches mode-valid neighbors on top of an oracle."""

    def __init__(self, oracle, stats: SearchStats, cache_capacity: int = 40000,
                 buggy_target_cache: bool = False):
        self.oracle = oracle
        self.stats = stats
        self.buggy = buggy_target_cache
        self.cache = FlipCache(cache_capacity)
        self._target_reg = FlipCache(cache_capacity) if buggy_target_cache else None

    def neighbors(self, node, node_gkz):
        """Valid neighbors as (target, target_gkz) pairs, deterministic order."""
        key = self.oracle.canonical(node)
        entry = self.cache.get(key)
        if entry is not None:
            self.stats.cache_hits += 1
            return entry
        self.stats.cache_misses += 1
        items = self.oracle.flip_items(node, node_gkz)
        self.stats.flips_evaluated += len(items)
        if not self.buggy:
            valid = self.oracle.true_flip_valid(node, items)
        else:
            # Demonstration mode: a flip counts as valid whenever the
            # *target triangulation* is known regular from an earlier
            # visit, in place of the per-flip verdict.  The verdicts are
            # frozen into the node's cached list at first expansion, so a
            # wrong trust-based verdict sticks.
            true_valid = self.oracle.true_flip_valid(node, items)
            valid = []
            for (edge, target, tgkz), ok in zip(items, true_valid):
                tkey = self.oracle.canonical(target)
                cached = self._target_reg.get(tkey)
                if cached is not None:
                    valid.append(cached[0])
                else:
                    self._target_reg.put(tkey, (self.oracle.node_regular(target),))
                    valid.append(ok)
        entry = self._pack(items, valid)
        self.cache.put(key, entry)
        return entry

    @staticmethod
    def _pack(items, valid):
        return [
            (target, tgkz)
            for (edge, target, tgkz), ok in zip(items, valid)
            if ok
        ]


def predecessor(provider: NeighborProvider, node, node_gkz):
    """The lex-largest valid neighbor, if it improves on the node; else None."""
    best = None
    seen = set()
    for target, tgkz in provider.neighbors(node, node_gkz):
        assert tgkz not in seen, "distinct neighbors share a GKZ-vector"
        seen.add(tgkz)
        if best is None or lex_compare(tgkz, best[1]) > 0:
            best = (target, tgkz)
    if best is not None and lex_compare(best[1], node_gkz) > 0:
        return best
    return None


def find_root(provider: NeighborProvider, seed, seed_gkz=None):
    """Walk lex-largest upflips from the seed until a sink is reached."""
    node = seed
    node_gkz = seed_gkz if seed_gkz is not None else provider.oracle.gkz(seed)
    while True:
        up = predecessor(provider, node, node_gkz)
        if up is None:
            return node, node_gkz
        node, node_gkz = up


def reverse_search(provider: NeighborProvider, visitor=None, seed=None):
    """Enumerate the predecessor tree rooted at the sink above the seed.

    In regular mode the flip graph is the edge graph of a polytope, every
    upflip walk ends at the unique lex-max vertex, and the tree covers all
    regular triangulations.  In all-flips mode non-regular lex-local-maxima
    may exist, so only the tree of the sink reached from the seed is
    enumerated; use baseline_dfs for the full connected component.

    The visitor, when given, receives (canonical_string, gkz, depth) for
    every triangulation exactly once and must not mutate search state.
    Memory use is bounded by the tree depth — no visited set exists.
    Returns the number of triangulations visited.
    """
    stats = provider.stats
    if seed is None:
        seed = provider.oracle.seed()
    root, root_gkz = find_root(provider, seed)
    stats.nodes += 1
    if visitor is not None:
        visitor(provider.oracle.canonical(root), root_gkz, 0)
    stack = [(root, root_gkz, 0)]
    while stack:
        node, node_gkz, depth = stack.pop()
        for target, tgkz in provider.neighbors(node, node_gkz):
            if lex_compare(tgkz, node_gkz) < 0:
                pred = predecessor(provider, target, tgkz)
                if pred is not None and pred[0] == node:
                    stats.nodes += 1
                    if visitor is not None:
                        visitor(provider.oracle.canonical(target), tgkz, depth + 1)
                    stack.append((target, tgkz, depth + 1))
    return stats.nodes


def baseline_dfs(provider: NeighborProvider, visitor=None, seed=None, max_nodes=None):
    """Reference traversal: visited-set DFS over the same neighbor relation.

    Exhaustive on the seed's connected component regardless of predecessor
    structure, at the price of remembering every visited triangulation.
    Returns the set of canonical strings.  `max_nodes` bounds memory
    explicitly; crossing it raises ResourceLimitError.
    """
    stats = provider.stats
    if seed is None:
        seed = provider.oracle.seed()
    seed_gkz = provider.oracle.gkz(seed)
    start_key = provider.oracle.canonical(seed)
    visited = {start_key}
    stats.nodes += 1
    if visitor is not None:
        visitor(start_key, seed_gkz, 0)
    stack = [(seed, seed_gkz, 0)]
    while stack:
        node, node_gkz, depth = stack.pop()
        for target, tgkz in provider.neighbors(node, node_gkz):
            key = provider.oracle.canonical(target)
            if key in visited:
                continue
            if max_nodes is not None and len(visited) >= max_nodes:
                raise ResourceLimitError(
                    f"baseline traversal exceeded {max_nodes} stored nodes"
                )
            visited.add(key)
            stats.nodes += 1
            if visitor is not None:
                visitor(key, tgkz, depth + 1)
            stack.append((target, tgkz, depth + 1))
    return visited


def enumerate_triangulations(
    config: PointConfiguration,
    mode: SearchMode = SearchMode.REGULAR_ONLY,
    visitor=None,
    cache_capacity: int = 40000,
    baseline: bool = False,
    max_nodes=None,
    buggy_target_cache: bool = False,
    verify_increments: bool = False,
):
    """Convenience front end tying oracle, cache and traversal together.

    Returns (count, stats).  With `baseline=True` the memory-unbounded DFS
    replaces reverse search (for cross-checks).
    """
    stats = SearchStats()
    oracle = GeometricFlipOracle(config, mode, stats, verify_increments)
    provider = NeighborProvider(
        oracle, stats, cache_capacity, buggy_target_cache=buggy_target_cache
    )
    if baseline:
        visited = baseline_dfs(provider, visitor=visitor, max_nodes=max_nodes)
        return len(visited), stats
    count = reverse_search(provider, visitor=visitor)
    return count, stats
