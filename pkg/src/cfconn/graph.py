"""Undirected simple graphs with stable 0-based vertex indices.

A :class:`Graph` is immutable once built. Adjacency lists are stored sorted so
every traversal below visits vertices in the same order on every run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import DisconnectedError, ParseError, ValidationError

__all__ = [
    "Graph",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "star_graph",
    "complete_graph",
    "cycle_graph",
    "is_connected",
    "cut_vertices",
    "is_two_connected",
    "delete_vertex_components",
    "is_tree",
    "spanning_tree",
]


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValidationError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for u, nbrs in enumerate(self.adj):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValidationError(f"neighbor {v} of {u} out of range [0, {self.n})")
                if v == u:
                    raise ValidationError(f"self-loop at vertex {u}")
                if v <= prev:
                    raise ValidationError(f"adjacency of {u} not strictly increasing")
                prev = v
                if u not in self.adj[v]:
                    raise ValidationError(f"edge {u}-{v} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, collapsing duplicate edges. Self-loops are rejected."""
        if n < 0:
            raise ValidationError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def size(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(indptr, indices, edge_ids)`` arrays for the numeric kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for u in range(self.n):
            indptr[u + 1] = indptr[u] + len(self.adj[u])
        indices = np.fromiter((v for nb in self.adj for v in nb), dtype=np.int64, count=int(indptr[-1]))
        eidx = self.edge_index
        edge_ids = np.fromiter(
            (eidx[(min(u, v), max(u, v))] for u in range(self.n) for v in self.adj[u]),
            dtype=np.int64,
            count=int(indptr[-1]),
        )
        return indptr, indices, edge_ids

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValidationError(f"no edge {u}-{v}")
        key = (min(u, v), max(u, v))
        return Graph.from_edges(self.n, (e for e in self.edges if e != key))

    def to_edge_list(self) -> str:
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format.

    An optional ``n <count>`` header fixes the order (so isolated vertices can
    be declared); otherwise the order is one more than the largest index seen.
    ``#`` starts a comment and blank lines are skipped.
    """
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges or len(parts) != 2:
                raise ParseError("header 'n <count>' must appear once, before any edge", lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if declared < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative endpoint in {line!r}", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if declared is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    else:
        n = declared
        for u, v in edges:
            if u >= n or v >= n:
                raise ValidationError(f"edge {u}-{v} exceeds declared order n={n}")
    return Graph.from_edges(n, edges)


def parse_graph6(data: str | bytes) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    s = data.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    vals = [ord(c) - 63 for c in s]
    if not vals or any(x < 0 or x > 63 for x in vals):
        raise ParseError("invalid graph6 characters")
    if vals[0] <= 62:
        n, body = vals[0], vals[1:]
    elif len(vals) > 1 and vals[1] <= 62:
        if len(vals) < 4:
            raise ParseError("truncated graph6 order")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise ParseError("truncated graph6 order")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        body = vals[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = [(x >> (5 - i)) & 1 for x in body for i in range(6)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"path order must be >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """``K_{1,n-1}`` with center 0."""
    if n < 1:
        raise ValidationError(f"star order must be >= 1, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValidationError(f"complete graph order must be >= 1, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"cycle order must be >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _components(g: Graph, removed: frozenset[int] = frozenset()) -> list[list[int]]:
    seen = [False] * g.n
    for v in removed:
        seen[v] = True
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(sorted(block))
    return blocks


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(_components(g)) == 1


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError(f"graph with n={g.n} is not connected")


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points via an iterative depth-first low-link traversal."""
    require_connected(g)
    if g.n <= 2:
        return frozenset()
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    timer = 0
    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    stack = [(root, -1, iter(g.adj[root]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, u, iter(g.adj[w])))
                advanced = True
                break
            low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[u])
        if parent == root:
            root_children += 1
        elif low[u] >= disc[parent]:
            cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def is_two_connected(g: Graph) -> bool:
    # K_1 and K_2 are excluded on purpose: 2-connectivity presumes order >= 3.
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def delete_vertex_components(g: Graph, v: int) -> list[list[int]]:
    """Connected components of ``g - v``, each a sorted vertex list."""
    if not 0 <= v < g.n:
        raise ValidationError(f"vertex {v} out of range [0, {g.n})")
    return _components(g, frozenset((v,)))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.size == g.n - 1 and is_connected(g)


def spanning_tree(g: Graph) -> Graph:
    """Breadth-first spanning tree rooted at vertex 0."""
    if g.n < 1:
        raise ValidationError("spanning tree needs at least one vertex")
    require_connected(g)
    seen = [False] * g.n
    seen[0] = True
    edges = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                edges.append((u, w))
                queue.append(w)
    return Graph.from_edges(g.n, edges)
