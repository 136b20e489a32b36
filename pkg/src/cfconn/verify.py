"""Conflict-free checks for vertex- and edge-colored graphs.

On trees only the unique path between each pair matters; those are checked
by a compiled O(n^2) sweep. General graphs enumerate simple paths per pair
by backtracking here in Python and stop at the first conflict-free one. The
exhaustive solvers use separate per-pair kernels; the test suite
cross-checks all routes.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import CapExceededError, ParseError, ValidationError
from .graph import Graph, is_tree, require_connected

DEFAULT_VERIFY_MAX_N = 16


@dataclass(frozen=True)
class VertexColoring:
    """Colors indexed by vertex, each a positive integer."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if c < 1:
                raise ValidationError(f"vertex {v} has color {c}; colors must be >= 1")

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    @property
    def is_normal(self) -> bool:
        """True when the colors used are exactly ``1..k``."""
        return set(self.colors) == set(range(1, self.k + 1))

    def normalized(self) -> "VertexColoring":
        """Relabel colors to ``1..k`` in order of first use."""
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return VertexColoring(tuple(relabel[c] for c in self.colors))


@dataclass(frozen=True)
class EdgeColoring:
    """Colors keyed by edge ``(u, v)`` with ``u < v``."""

    colors: Mapping[tuple[int, int], int]

    def __post_init__(self):
        norm = {}
        for (u, v), c in dict(self.colors).items():
            c = int(c)
            if c < 1:
                raise ValidationError(f"edge {u}-{v} has color {c}; colors must be >= 1")
            norm[(min(u, v), max(u, v))] = c
        object.__setattr__(self, "colors", norm)

    @classmethod
    def from_sequence(cls, g: Graph, seq: Sequence[int]) -> "EdgeColoring":
        """Colors listed in ``g.edges`` order."""
        if len(seq) != g.size:
            raise ValidationError(f"{len(seq)} colors for {g.size} edges")
        return cls(dict(zip(g.edges, seq)))

    @property
    def k(self) -> int:
        return len(set(self.colors.values()))

    def color(self, u: int, v: int) -> int:
        return self.colors[(min(u, v), max(u, v))]

    def as_sequence(self, g: Graph) -> tuple[int, ...]:
        return tuple(self.colors[e] for e in g.edges)


def _vertex_colors(coloring) -> Sequence[int]:
    return coloring.colors if isinstance(coloring, VertexColoring) else coloring


def path_is_conflict_free_vertex(coloring, path: Sequence[int]) -> bool:
    """Some color occurs on exactly one vertex of ``path``."""
    if len(path) == 0:
        raise ValidationError("path must be non-empty")
    colors = _vertex_colors(coloring)
    counts = Counter(colors[v] for v in path)
    return 1 in counts.values()


def path_is_conflict_free_edge(coloring: EdgeColoring, path: Sequence[int]) -> bool:
    """Some color occurs on exactly one edge of ``path``."""
    if len(path) < 2:
        raise ValidationError("edge-variant path needs at least two vertices")
    try:
        counts = Counter(coloring.color(a, b) for a, b in zip(path, path[1:]))
    except KeyError as exc:
        raise ValidationError(f"path uses uncolored or missing edge {exc.args[0]}") from None
    return 1 in counts.values()


def tree_path(t: Graph, u: int, v: int) -> list[int]:
    """The unique ``u``-``v`` path in tree ``t``."""
    parent = {u: -1}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for w in t.adj[x]:
            if w not in parent:
                parent[w] = x
                stack.append(w)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def simple_paths(g: Graph, u: int, v: int) -> Iterator[list[int]]:
    """All simple ``u``-``v`` paths, depth first in sorted-neighbor order."""
    if u == v:
        yield [u]
        return
    path = [u]
    on_path = {u}
    stack = [iter(g.adj[u])]
    while stack:
        for w in stack[-1]:
            if w in on_path:
                continue
            if w == v:
                yield path + [v]
                continue
            path.append(w)
            on_path.add(w)
            stack.append(iter(g.adj[w]))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())


def _verify_max_n() -> int:
    return int(os.environ.get("CFCONN_VERIFY_MAX_N", DEFAULT_VERIFY_MAX_N))


def _check_general_cap(g: Graph, max_n: int | None) -> None:
    limit = _verify_max_n() if max_n is None else max_n
    if g.n > limit:
        raise CapExceededError("verify_max_n", limit, g.n)


def first_failing_pair_vertex(g: Graph, coloring, *, method: str = "auto", max_n: int | None = None):
    """Return the first pair ``(u, v)`` with no conflict-free path, or ``None``.

    ``method`` is ``"tree"`` (unique path, trees only), ``"paths"`` (enumerate
    every simple path) or ``"auto"`` (tree shortcut when ``g`` is a tree).
    """
    require_connected(g)
    colors = _vertex_colors(coloring)
    if len(colors) != g.n:
        raise ValidationError(f"coloring covers {len(colors)} vertices, graph has {g.n}")
    if _pick_method(g, method, max_n):
        return _tree_sweep(g, colors, edge_mode=False)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not any(path_is_conflict_free_vertex(colors, p) for p in simple_paths(g, u, v)):
                return (u, v)
    return None


def first_failing_pair_edge(g: Graph, coloring: EdgeColoring, *, method: str = "auto", max_n: int | None = None):
    require_connected(g)
    if set(coloring.colors) != set(g.edges):
        raise ValidationError("edge coloring domain does not match the graph's edge set")
    if _pick_method(g, method, max_n):
        return _tree_sweep(g, coloring.as_sequence(g), edge_mode=True)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not any(path_is_conflict_free_edge(coloring, p) for p in simple_paths(g, u, v)):
                return (u, v)
    return None


def _tree_sweep(t: Graph, colors: Sequence[int], edge_mode: bool):
    if t.n < 2:
        return None
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    dense = np.fromiter((palette[c] for c in colors), dtype=np.int64, count=len(colors))
    indptr, indices, eids = t.csr
    code = kernels.tree_first_fail(indptr, indices, eids, dense, len(palette), edge_mode)
    return None if code < 0 else divmod(int(code), t.n)


def _pick_method(g: Graph, method: str, max_n: int | None) -> bool:
    if method == "auto":
        tree = is_tree(g)
    elif method == "tree":
        if not is_tree(g):
            raise ValidationError("method='tree' requires a tree")
        tree = True
    elif method == "paths":
        tree = False
    else:
        raise ValidationError(f"unknown method {method!r}")
    if not tree:
        _check_general_cap(g, max_n)
    return tree


def is_cf_vertex_connected(g: Graph, coloring, **kw) -> bool:
    return first_failing_pair_vertex(g, coloring, **kw) is None


def is_cf_edge_connected(g: Graph, coloring: EdgeColoring, **kw) -> bool:
    return first_failing_pair_edge(g, coloring, **kw) is None


def parse_coloring(text: str, n: int) -> VertexColoring:
    """Read ``vertex<TAB>color`` lines; every vertex ``0..n-1`` exactly once."""
    found: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'vertex<TAB>color', got {line!r}", lineno)
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if v in found:
            raise ParseError(f"vertex {v} colored twice", lineno)
        if c < 1:
            raise ParseError(f"color {c} is not positive", lineno)
        found[v] = c
    if set(found) != set(range(n)):
        raise ValidationError(f"coloring domain {sorted(found)} does not match vertices 0..{n - 1}")
    return VertexColoring(tuple(found[v] for v in range(n)))


def format_coloring(coloring: VertexColoring) -> str:
    return "".join(f"{v}\t{c}\n" for v, c in enumerate(coloring.colors))


def parse_edge_coloring(text: str, g: Graph) -> EdgeColoring:
    """Read ``u<TAB>v<TAB>color`` lines covering every edge of ``g`` once."""
    found: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u<TAB>v<TAB>color', got {line!r}", lineno)
        try:
            u, v, c = (int(x) for x in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        key = (min(u, v), max(u, v))
        if key in found:
            raise ParseError(f"edge {u}-{v} colored twice", lineno)
        if c < 1:
            raise ParseError(f"color {c} is not positive", lineno)
        found[key] = c
    if set(found) != set(g.edges):
        raise ValidationError("edge coloring domain does not match the graph's edge set")
    return EdgeColoring(found)


def format_edge_coloring(g: Graph, coloring: EdgeColoring) -> str:
    return "".join(f"{u}\t{v}\t{coloring.colors[(u, v)]}\n" for u, v in g.edges)
