"""Recursive splitter coloring of trees with at most ceil(log2(n+1)) colors.

The splitter of a tree is a vertex whose removal leaves components of order
at most floor(n/2). It receives the top color and each remaining component is
colored recursively from the lower palette. Any path through the splitter
then sees the top color exactly once; paths inside one component are handled
by the recursion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import ValidationError
from .graph import Graph, delete_vertex_components, is_tree, spanning_tree
from .verify import VertexColoring


def palette_size(n: int) -> int:
    """``ceil(log2(n + 1))`` computed exactly on integers."""
    if n < 0:
        raise ValidationError(f"order must be non-negative, got {n}")
    return n.bit_length()


@dataclass(frozen=True)
class SplitterResult:
    vertex: int
    moc: int
    components: list[list[int]]


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise ValidationError("input is not a tree")


def moc(t: Graph, v: int) -> int:
    """Order of the largest component left after deleting ``v`` from ``t``."""
    _require_tree(t)
    if t.n < 2:
        raise ValidationError("moc needs a tree with at least two vertices")
    return max(len(b) for b in delete_vertex_components(t, v))


def _split_scores(adj, verts: list[int], alive: list[bool]) -> dict[int, int]:
    """moc of every vertex in one live component, by subtree-size rerooting."""
    root = verts[0]
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if alive[w] and w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)
    m = len(order)
    size = dict.fromkeys(order, 1)
    biggest_child = dict.fromkeys(order, 0)
    for u in reversed(order):
        p = parent[u]
        if p != -1:
            size[p] += size[u]
            if size[u] > biggest_child[p]:
                biggest_child[p] = size[u]
    return {u: max(m - size[u], biggest_child[u]) for u in order}


def find_splitter(t: Graph) -> SplitterResult:
    """Vertex of minimum moc, smallest index on ties."""
    _require_tree(t)
    if t.n < 2:
        raise ValidationError("find_splitter needs a tree with at least two vertices")
    scores = _split_scores(t.adj, [0], [True] * t.n)
    best = min(range(t.n), key=lambda u: (scores[u], u))
    return SplitterResult(best, scores[best], delete_vertex_components(t, best))


def _components_after(adj, verts: list[int], alive: list[bool]) -> list[list[int]]:
    seen = set()
    blocks = []
    for s in verts:
        if not alive[s] or s in seen:
            continue
        seen.add(s)
        block = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if alive[w] and w not in seen:
                    seen.add(w)
                    block.append(w)
                    stack.append(w)
        blocks.append(sorted(block))
    return blocks


def color_tree(t: Graph) -> VertexColoring:
    """Conflict-free vertex coloring of ``t`` using at most ``palette_size(n)`` colors."""
    _require_tree(t)
    colors = [0] * t.n
    alive = [True] * t.n
    # explicit work stack; each entry is one live component (sorted vertices)
    work = [list(range(t.n))]
    while work:
        verts = work.pop()
        m = len(verts)
        if m == 1:
            colors[verts[0]] = 1
            alive[verts[0]] = False
            continue
        scores = _split_scores(t.adj, verts, alive)
        v = min(verts, key=lambda u: (scores[u], u))
        colors[v] = palette_size(m)
        alive[v] = False
        work.extend(reversed(_components_after(t.adj, verts, alive)))
    return VertexColoring(tuple(colors))


def color_graph(g: Graph) -> VertexColoring:
    """Color ``g`` through its breadth-first spanning tree."""
    return color_tree(spanning_tree(g))


def recursion_depth(t: Graph) -> int:
    """Number of nested splitter levels color_tree goes through on ``t``."""
    _require_tree(t)
    alive = [True] * t.n
    work = [(list(range(t.n)), 1)]
    deepest = 0
    while work:
        verts, depth = work.pop()
        deepest = max(deepest, depth)
        if len(verts) == 1:
            alive[verts[0]] = False
            continue
        scores = _split_scores(t.adj, verts, alive)
        v = min(verts, key=lambda u: (scores[u], u))
        alive[v] = False
        work.extend((b, depth + 1) for b in _components_after(t.adj, verts, alive))
    return deepest
