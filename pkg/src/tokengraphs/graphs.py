"""Simple undirected graphs on dense integer vertices, with small-order utilities.

Vertices are always 0..n-1. Graphs are immutable and hashable so they can sit
inside frozen dataclasses and key caches.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "Graph6Error",
    "parse_graph6",
    "emit_graph6",
    "distance",
    "girth",
    "enumerate_trees",
    "tree_canonical_form",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "bridged_cliques",
]


class Graph6Error(ValueError):
    """Raised when a graph6 payload cannot be decoded."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            seen.add((min(u, v), max(u, v)))
        # normalise: each edge (u, v) with u < v, sorted, deduplicated
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.n >= 1 and self.edge_count == self.n - 1 and self.is_connected()

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2


def _bfs_dists(g: Graph, source: int) -> list[float]:
    dist: list[float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    """Length of a shortest u-v path, or math.inf if none exists."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices {u},{v} out of range for n={g.n}")
    if u == v:
        return 0
    d = _bfs_dists(g, u)[v]
    return int(d) if d != math.inf else d


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or math.inf for forests.

    BFS from every vertex; a non-tree edge (u, w) seen from root r closes a
    walk of length dist(u)+dist(w)+1 through r, which contains a cycle no
    longer than that, and a root on a shortest cycle attains the girth.
    """
    best: int | float = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if cand < best:
                        best = cand
    return best


# ---------------------------------------------------------------------------
# graph6 codec (single-byte order, n <= 62)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally prefixed with the standard header)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 payload", 0)
    data = []
    for i, ch in enumerate(s):
        val = ord(ch)
        if not 63 <= val <= 126:
            raise Graph6Error(f"byte {val!r} outside graph6 range 63..126", i)
        data.append(val - 63)
    n = data[0]
    if n == 63:
        raise Graph6Error("multi-byte vertex counts (n > 62) not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated bit vector: n={n} needs {need} payload bytes, found {len(body)}",
            len(s),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit vector", 1 + need)
    bits = "".join(format(b, "06b") for b in body)
    if any(b == "1" for b in bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx] == "1":
                edges.append((row, col))
            idx += 1
    return Graph(n, tuple(edges))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a single-line graph6 string (requires n <= 62)."""
    if g.n > 62:
        raise ValueError(f"graph6 single-byte encoding requires n <= 62, got {g.n}")
    present = set(g.edges)
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append("1" if (row, col) in present else "0")
    s = "".join(bits)
    s += "0" * (-len(s) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(s), 6):
        out.append(chr(int(s[i : i + 6], 2) + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# free trees

_TREE_COUNT_MAX = 12


def _rooted_canon(adj: Sequence[frozenset[int]], root: int, parent: int) -> str:
    subs = sorted(_rooted_canon(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(subs) + ")"


def _centroids(g: Graph) -> list[int]:
    # classic subtree-size argument; one or two centroids in any tree
    n = g.n
    if n == 1:
        return [0]
    size = [1] * n
    order = []
    seen = [False] * n
    stack = [(0, -1, False)]
    while stack:
        u, p, done = stack.pop()
        if done:
            for w in g.adjacency[u]:
                if w != p:
                    size[u] += size[w]
            order.append((u, p))
            continue
        seen[u] = True
        stack.append((u, p, True))
        for w in g.adjacency[u]:
            if not seen[w]:
                stack.append((w, u, False))
    best = n + 1
    result: list[int] = []
    for u in range(n):
        heaviest = 0
        for w in g.adjacency[u]:
            part = size[w] if size[w] < size[u] else n - size[u]
            heaviest = max(heaviest, part)
        if heaviest < best:
            best = heaviest
            result = [u]
        elif heaviest == best:
            result.append(u)
    return result


def tree_canonical_form(g: Graph) -> str:
    """Isomorphism-invariant string for a tree (rooted AHU at the centroid)."""
    if not g.is_tree():
        raise ValueError("tree_canonical_form requires a tree")
    return min(_rooted_canon(g.adjacency, c, -1) for c in _centroids(g))


def _canonical_relabel(g: Graph) -> Graph:
    """Relabel a tree so equal canonical forms give identical edge tuples."""
    adj = g.adjacency
    memo: dict[tuple[int, int], str] = {}

    def canon(u: int, p: int) -> str:
        key = (u, p)
        if key not in memo:
            memo[key] = "(" + "".join(sorted(canon(c, u) for c in adj[u] if c != p)) + ")"
        return memo[key]

    root = min(_centroids(g), key=lambda c: canon(c, -1))
    new_id: dict[int, int] = {}

    def visit(u: int, p: int) -> None:
        new_id[u] = len(new_id)
        for c in sorted((c for c in adj[u] if c != p), key=lambda c: canon(c, u)):
            visit(c, u)

    visit(root, -1)
    return Graph(g.n, tuple((new_id[u], new_id[v]) for u, v in g.edges))


def enumerate_trees(n: int) -> list[Graph]:
    """All free trees on n vertices, one canonical representative per class.

    Grown by leaf extension (every tree on s+1 vertices is a tree on s
    vertices plus a pendant vertex), deduplicated by the AHU canonical form,
    returned in canonical-form order with deterministic labels.
    """
    if not 1 <= n <= _TREE_COUNT_MAX:
        raise ValueError(f"enumerate_trees supports 1 <= n <= {_TREE_COUNT_MAX}, got {n}")
    level: dict[str, Graph] = {tree_canonical_form(Graph(1, ())): Graph(1, ())}
    for size in range(2, n + 1):
        grown: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.n):
                cand = Graph(size, t.edges + ((v, size - 1),))
                key = tree_canonical_form(cand)
                if key not in grown:
                    grown[key] = cand
        level = grown
    return [_canonical_relabel(level[key]) for key in sorted(level)]


# ---------------------------------------------------------------------------
# small generators

def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def bridged_cliques(m: int) -> Graph:
    """Two disjoint m-cliques joined by a single edge between vertices 0 and m."""
    if m < 2:
        raise ValueError("cliques need at least 2 vertices")
    edges: list[tuple[int, int]] = list(combinations(range(m), 2))
    edges += [(u + m, v + m) for u, v in combinations(range(m), 2)]
    edges.append((0, m))
    return Graph(2 * m, tuple(edges))
