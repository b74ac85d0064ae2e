"""k-token configurations of a base graph and their slide adjacency.

A configuration is a sorted tuple of k distinct vertices (the occupied set).
Two configurations are adjacent when their symmetric difference is an edge of
the base graph, i.e. one token slides along an edge to a free vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb, inf
from typing import Iterable, Iterator

from .graphs import Graph

__all__ = [
    "Config",
    "MATERIALIZE_LIMIT",
    "make_config",
    "check_config",
    "move_token",
    "complement_iso",
    "token_degree",
    "min_token_degree",
    "TokenGraph",
    "build_token_graph",
    "Case1Pair",
    "Case2Pair",
    "classify_distance2",
]

Config = tuple[int, ...]

# refuse to materialise token graphs beyond this many configurations
MATERIALIZE_LIMIT = 500_000


def make_config(vertices: Iterable[int]) -> Config:
    cfg = tuple(sorted(vertices))
    if len(set(cfg)) != len(cfg):
        raise ValueError(f"repeated vertices in configuration {cfg}")
    return cfg


def check_config(g: Graph, cfg: Config) -> None:
    """Validate cfg as a k-token configuration of g (1 <= k <= n-1)."""
    if tuple(sorted(set(cfg))) != cfg:
        raise ValueError(f"configuration {cfg} is not a sorted duplicate-free tuple")
    if not 1 <= len(cfg) <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1 tokens, got k={len(cfg)} with n={g.n}")
    if cfg and not (0 <= cfg[0] and cfg[-1] < g.n):
        raise ValueError(f"configuration {cfg} out of range for n={g.n}")


def move_token(cfg: Config, src: int, dst: int) -> Config:
    """Configuration after sliding the token at src to dst."""
    if src not in cfg:
        raise ValueError(f"no token at {src} in {cfg}")
    if dst in cfg:
        raise ValueError(f"target {dst} already occupied in {cfg}")
    return tuple(sorted((set(cfg) - {src}) | {dst}))


def complement_iso(cfg: Config, n: int) -> Config:
    """Image of a configuration under occupied/free exchange on n vertices."""
    return tuple(sorted(set(range(n)) - set(cfg)))


def token_degree(g: Graph, cfg: Config) -> int:
    """Number of base edges with exactly one endpoint occupied by cfg."""
    check_config(g, cfg)
    occupied = set(cfg)
    return sum((u in occupied) != (v in occupied) for u, v in g.edges)


def min_token_degree(g: Graph, k: int) -> int:
    """Minimum token degree over all k-configurations, by direct scan."""
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} with n={g.n}")
    edges = g.edges
    best = inf
    for cfg in combinations(range(g.n), k):
        occupied = set(cfg)
        d = sum((u in occupied) != (v in occupied) for u, v in edges)
        if d < best:
            best = d
    return int(best)


class TokenGraph:
    """A materialised k-token graph with index-based adjacency."""

    def __init__(self, base: Graph, k: int, vertices: tuple[Config, ...], adj: list[list[int]]):
        self.base = base
        self.k = k
        self.vertices = vertices
        self.adj = adj
        self.index = {cfg: i for i, cfg in enumerate(vertices)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, cfg: Config) -> int:
        return len(self.adj[self.index[cfg]])

    def neighbors(self, cfg: Config) -> tuple[Config, ...]:
        return tuple(self.vertices[j] for j in self.adj[self.index[cfg]])

    def distance(self, a: Config, b: Config) -> int | float:
        if a == b:
            return 0
        start, goal = self.index[a], self.index[b]
        dist = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    if w == goal:
                        return dist[w]
                    queue.append(w)
        return inf

    def distance2_pairs(self) -> Iterator[tuple[Config, Config]]:
        """Unordered pairs at distance exactly 2, in lexicographic order."""
        for i, cfg in enumerate(self.vertices):
            direct = set(self.adj[i])
            second: set[int] = set()
            for j in direct:
                second.update(self.adj[j])
            second -= direct
            second.discard(i)
            for j in sorted(second):
                if j > i:
                    yield cfg, self.vertices[j]

    def as_graph(self) -> Graph:
        """Flatten to a plain Graph over configuration indices."""
        edges = tuple(
            (i, j) for i, nbrs in enumerate(self.adj) for j in nbrs if i < j
        )
        return Graph(len(self.vertices), edges)


def build_token_graph(g: Graph, k: int) -> TokenGraph:
    """Materialise the k-token graph of g (guarded by MATERIALIZE_LIMIT)."""
    if not 1 <= k <= g.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k} with n={g.n}")
    size = comb(g.n, k)
    if size > MATERIALIZE_LIMIT:
        raise ValueError(
            f"token graph would have {size} configurations, over the limit {MATERIALIZE_LIMIT}"
        )
    vertices = tuple(combinations(range(g.n), k))
    index = {cfg: i for i, cfg in enumerate(vertices)}
    adj: list[list[int]] = [[] for _ in vertices]
    adjacency = g.adjacency
    for i, cfg in enumerate(vertices):
        occupied = set(cfg)
        for u in cfg:
            for w in adjacency[u]:
                if w not in occupied:
                    j = index[tuple(sorted((occupied - {u}) | {w}))]
                    adj[i].append(j)
    for nbrs in adj:
        nbrs.sort()
    return TokenGraph(g, k, vertices, adj)


@dataclass(frozen=True)
class Case1Pair:
    """Distance-2 pair differing in one token: x -> v -> y through a common neighbour."""

    x: int
    y: int
    v: int


@dataclass(frozen=True)
class Case2Pair:
    """Distance-2 pair differing in two tokens along independent edges x_i y_i."""

    x1: int
    y1: int
    x2: int
    y2: int


def classify_distance2(g: Graph, a: Config, b: Config) -> Case1Pair | Case2Pair:
    """Classify an unordered configuration pair at distance exactly 2.

    Pairs sharing k-1 tokens need the two leftover vertices to be
    non-adjacent with a common neighbour (smallest such neighbour is
    reported, whether or not it is occupied).  Pairs sharing k-2 tokens need
    a perfect matching of base edges between the leftover pairs.  Anything
    else is not at distance 2 and raises ValueError.
    """
    check_config(g, a)
    check_config(g, b)
    if len(a) != len(b):
        raise ValueError(f"configurations have different sizes: {len(a)} vs {len(b)}")
    only_a = sorted(set(a) - set(b))
    only_b = sorted(set(b) - set(a))
    if not only_a:
        raise ValueError("identical configurations are at distance 0")
    if len(only_a) == 1:
        x, y = only_a[0], only_b[0]
        if g.has_edge(x, y):
            raise ValueError(f"configurations are adjacent (token slide {x}->{y})")
        common = sorted(g.neighbors(x) & g.neighbors(y))
        if not common:
            raise ValueError(f"distance exceeds 2: vertices {x},{y} share no neighbour")
        return Case1Pair(x, y, common[0])
    if len(only_a) == 2:
        x1, x2 = only_a
        r, s = only_b
        if g.has_edge(x1, r) and g.has_edge(x2, s):
            return Case2Pair(x1, r, x2, s)
        if g.has_edge(x1, s) and g.has_edge(x2, r):
            return Case2Pair(x1, s, x2, r)
        raise ValueError(
            f"distance exceeds 2: no matching of edges between {only_a} and {only_b}"
        )
    raise ValueError("distance exceeds 2: symmetric difference larger than 4")
