"""Brute-force exact values of vcfc, cfc and the ranking number.

Each solver scans k upward from the known lower bound and returns the first
k for which an exhaustive search finds a witness, so the value is certified
minimal. Vertex and edge colorings are enumerated as restricted growth
strings (colors appear in first-use order); rankings are not symmetric under
relabeling and are enumerated in full.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from .errors import CapExceededError, ValidationError
from .graph import Graph, is_tree, require_connected
from .verify import EdgeColoring, VertexColoring, tree_path

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 10
DEFAULT_MAX_EDGES = 10


@dataclass(frozen=True)
class Ranking:
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if any(x < 1 for x in self.labels):
            raise ValidationError("ranking labels must be >= 1")

    @property
    def k(self) -> int:
        return max(self.labels, default=0)


@dataclass(frozen=True)
class ExactResult:
    value: int
    witness: Union[VertexColoring, EdgeColoring, Ranking]
    explored: int


def default_max_n() -> int:
    return int(os.environ.get("CFCONN_MAX_N", DEFAULT_MAX_N))


def default_max_edges() -> int:
    return int(os.environ.get("CFCONN_MAX_EDGES", DEFAULT_MAX_EDGES))


def _cap(name, limit, value):
    if value > limit:
        raise CapExceededError(name, limit, value)


def _tree_schedule(g: Graph, edge_items: bool):
    """Pair paths of a tree grouped by the largest item index on them."""
    m = g.size if edge_items else g.n
    by_depth: list[list[list[int]]] = [[] for _ in range(max(m, 1))]
    eidx = g.edge_index
    for u in range(g.n):
        for v in range(u + 1, g.n):
            path = tree_path(g, u, v)
            if edge_items:
                items = [eidx[(min(a, b), max(a, b))] for a, b in zip(path, path[1:])]
            else:
                items = path
            by_depth[max(items)].append(items)
    sched_ptr = np.zeros(m + 1, dtype=np.int64)
    path_ptr = [0]
    path_items: list[int] = []
    for d in range(m):
        for items in by_depth[d]:
            path_items.extend(items)
            path_ptr.append(len(path_items))
        sched_ptr[d + 1] = sched_ptr[d] + len(by_depth[d])
    npairs = len(path_ptr) - 1
    return (
        sched_ptr,
        np.arange(npairs, dtype=np.int64),
        np.asarray(path_ptr, dtype=np.int64),
        np.asarray(path_items, dtype=np.int64),
    )


_EMPTY = np.zeros(1, dtype=np.int64)


def _run(g: Graph, mode: int, k_range, surjective: bool):
    tree = is_tree(g)
    edge_items = mode == kernels.MODE_EDGE
    m = g.size if edge_items else g.n
    if tree:
        sched_ptr, sched_pair, path_ptr, path_items = _tree_schedule(g, edge_items)
    else:
        sched_ptr = sched_pair = path_ptr = path_items = _EMPTY
    indptr, indices, eids = g.csr
    explored = 0
    for k in k_range:
        found, assignment, count = kernels.search(
            mode, m, k, surjective, tree, sched_ptr, sched_pair, path_ptr, path_items, indptr, indices, eids
        )
        explored += int(count)
        log.debug("mode=%d k=%d explored=%d found=%s", mode, k, count, found)
        if found:
            return k, [int(x) + 1 for x in assignment], explored
    raise AssertionError("search exhausted its range without a witness")


def exact_vcfc(g: Graph, max_n: int | None = None) -> ExactResult:
    require_connected(g)
    _cap("max_n", default_max_n() if max_n is None else max_n, g.n)
    if g.n == 1:
        # vacuous: no pairs, one color suffices
        return ExactResult(1, VertexColoring((1,)), 1)
    k, colors, explored = _run(g, kernels.MODE_VERTEX, range(2, g.n + 1), True)
    return ExactResult(k, VertexColoring(tuple(colors)), explored)


def exact_cfc(g: Graph, max_edges: int | None = None) -> ExactResult:
    require_connected(g)
    _cap("max_edges", default_max_edges() if max_edges is None else max_edges, g.size)
    if g.n == 1:
        return ExactResult(0, EdgeColoring({}), 1)
    k, colors, explored = _run(g, kernels.MODE_EDGE, range(1, g.n), True)
    return ExactResult(k, EdgeColoring.from_sequence(g, colors), explored)


def exact_ranking(g: Graph, max_n: int | None = None) -> ExactResult:
    require_connected(g)
    _cap("max_n", default_max_n() if max_n is None else max_n, g.n)
    k, labels, explored = _run(g, kernels.MODE_RANKING, range(1, g.n + 1), False)
    return ExactResult(k, Ranking(tuple(labels)), explored)


def is_valid_ranking(g: Graph, r: Ranking | tuple) -> bool:
    """Every path between two equal labels passes through a larger label.

    Trees are checked along the unique path of each equal-label pair; general
    graphs by backtracking over all simple paths, rejecting on the first path
    that avoids every larger label.
    """
    labels = r.labels if isinstance(r, Ranking) else tuple(r)
    if len(labels) != g.n:
        raise ValidationError(f"ranking covers {len(labels)} vertices, graph has {g.n}")
    tree = is_tree(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            lab = labels[u]
            if labels[v] != lab:
                continue
            if tree:
                if max(labels[x] for x in tree_path(g, u, v)) <= lab:
                    return False
            elif _low_path_exists(g, labels, u, v, lab):
                return False
    return True


def _low_path_exists(g: Graph, labels, u: int, v: int, lab: int) -> bool:
    # backtracking over simple u-v paths whose vertices all carry labels <= lab
    path = [u]
    on_path = {u}
    stack = [iter(g.adj[u])]
    while stack:
        for w in stack[-1]:
            if w in on_path or labels[w] > lab:
                continue
            if w == v:
                return True
            path.append(w)
            on_path.add(w)
            stack.append(iter(g.adj[w]))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())
    return False
