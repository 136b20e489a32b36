"""Isomorphism-class catalogs of small trees and connected graphs, and the
sweeps that check the vcfc/cfc claims over them.

Trees are canonicalized by the AHU parenthesis string rooted at a centroid
(the smaller string when there are two centroids). Connected graphs use the
minimum upper-triangle adjacency code over all ``n!`` vertex orders.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import CapExceededError, ValidationError
from .exact import exact_cfc, exact_vcfc
from .graph import Graph, cut_vertices, is_connected, is_two_connected
from .treecolor import color_tree, palette_size
from .verify import is_cf_vertex_connected

MAX_TREE_ORDER = 10
MAX_GRAPH_ORDER = 7


@dataclass(frozen=True)
class IsoClassCatalog:
    order: int
    members: tuple[Graph, ...]
    canonical_keys: tuple[str, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(zip(self.canonical_keys, self.members))


def _order_range(n: int, lo: int, hi: int, name: str) -> None:
    if n > hi:
        raise CapExceededError(name, hi, n)
    if n < lo:
        raise ValidationError(f"{name} needs n >= {lo}, got {n}")


# -- trees -------------------------------------------------------------------


def _rooted_code(adj, root: int) -> str:
    parent = {root: -1}
    order = [root]
    for u in order:
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    kids: dict[int, list[str]] = {u: [] for u in order}
    code = {}
    for u in reversed(order):
        code[u] = "(" + "".join(sorted(kids[u])) + ")"
        if parent[u] != -1:
            kids[parent[u]].append(code[u])
    return code[root]


def centroids(t: Graph) -> list[int]:
    if t.n == 1:
        return [0]
    parent = {0: -1}
    order = [0]
    for u in order:
        for w in t.adj[u]:
            if w not in parent:
                parent[w] = u
                order.append(w)
    size = dict.fromkeys(order, 1)
    worst = dict.fromkeys(order, 0)
    for u in reversed(order):
        p = parent[u]
        if p != -1:
            size[p] += size[u]
            worst[p] = max(worst[p], size[u])
    score = {u: max(worst[u], t.n - size[u]) for u in order}
    lo = min(score.values())
    return sorted(u for u in order if score[u] == lo)


def tree_key(t: Graph) -> str:
    """Canonical string of a free tree; equal keys iff isomorphic trees."""
    return min(_rooted_code(t.adj, c) for c in centroids(t))


def tree_from_key(key: str) -> Graph:
    """Rebuild a tree from a parenthesis code, numbering vertices in preorder."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in key:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == ")":
            stack.pop()
        else:
            raise ValidationError(f"bad character {ch!r} in tree key")
    return Graph.from_edges(nxt, edges)


@lru_cache(maxsize=None)
def _tree_keys(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("()",)
    keys = set()
    for key in _tree_keys(n - 1):
        t = tree_from_key(key)
        for v in range(t.n):
            grown = Graph.from_edges(n, list(t.edges) + [(v, n - 1)])
            keys.add(tree_key(grown))
    return tuple(sorted(keys))


def all_trees(n: int) -> IsoClassCatalog:
    """One tree per isomorphism class, grown leaf by leaf from order ``n - 1``."""
    _order_range(n, 1, MAX_TREE_ORDER, "tree_order")
    keys = _tree_keys(n)
    return IsoClassCatalog(n, tuple(tree_from_key(k) for k in keys), keys)


# -- connected graphs --------------------------------------------------------


@lru_cache(maxsize=None)
def _perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)


def graph_canonical(g: Graph) -> tuple[int, Graph]:
    """Minimum adjacency code of ``g`` and the relabeled graph attaining it."""
    if g.n > MAX_GRAPH_ORDER + 1:
        raise CapExceededError("graph_order", MAX_GRAPH_ORDER + 1, g.n)
    adjmat = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        adjmat[u, v] = adjmat[v, u] = 1
    perms = _perms(g.n)
    code, idx = kernels.min_adjacency_code(adjmat, perms)
    p = perms[idx]
    inv = np.empty(g.n, dtype=np.int64)
    inv[p] = np.arange(g.n)
    relabeled = Graph.from_edges(g.n, ((int(inv[u]), int(inv[v])) for u, v in g.edges))
    return int(code), relabeled


def graph_key(n: int, code: int) -> str:
    width = max(1, (n * (n - 1) // 2 + 3) // 4)
    return f"g{n}:{code:0{width}x}"


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[tuple[int, Graph], ...]:
    # every connected graph is a spanning tree plus extra edges
    found: dict[int, Graph] = {}
    frontier = []
    for t in all_trees(n).members:
        code, canon = graph_canonical(t)
        if code not in found:
            found[code] = canon
            frontier.append(canon)
    while frontier:
        nxt = []
        for g in frontier:
            for u in range(n):
                for v in range(u + 1, n):
                    if g.has_edge(u, v):
                        continue
                    code, canon = graph_canonical(Graph.from_edges(n, list(g.edges) + [(u, v)]))
                    if code not in found:
                        found[code] = canon
                        nxt.append(canon)
        frontier = nxt
    return tuple(sorted(found.items()))


def all_connected_graphs(n: int) -> IsoClassCatalog:
    _order_range(n, 1, MAX_GRAPH_ORDER, "graph_order")
    classes = _connected_classes(n)
    return IsoClassCatalog(n, tuple(g for _, g in classes), tuple(graph_key(n, c) for c, _ in classes))


# -- sweeps ------------------------------------------------------------------


@dataclass
class SearchReport:
    claim: str
    order: int
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)
    violations: list[tuple[Graph, object, object]] = field(default_factory=list)
    extremal: dict[str, tuple[int, list[str]]] = field(default_factory=dict)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_tsv(self) -> str:
        out = ["\t".join(self.columns)]
        out.extend("\t".join(str(x) for x in row) for row in self.rows)
        for name, (value, keys) in sorted(self.extremal.items()):
            out.append(f"# {name}={value} attained_by={','.join(keys)}")
        out.append(f"checked={self.checked} violations={len(self.violations)}")
        return "\n".join(out) + "\n"

    def summary(self) -> str:
        return f"checked={self.checked} violations={len(self.violations)}"


def _extremes(values: dict[str, int], label: str) -> dict[str, tuple[int, list[str]]]:
    if not values:
        return {}
    lo, hi = min(values.values()), max(values.values())
    return {
        f"min_{label}": (lo, [k for k, x in values.items() if x == lo]),
        f"max_{label}": (hi, [k for k, x in values.items() if x == hi]),
    }


def check_theorem_1_1(n: int) -> SearchReport:
    """vcfc == 2 exactly for connected graphs that are 2-connected or have one cut vertex."""
    _order_range(n, 3, 6, "thm11_order")
    rep = SearchReport("thm11", n, ("key", "n", "vcfc", "cut_vertices", "two_connected", "bound", "status"))
    values = {}
    for key, g in all_connected_graphs(n):
        vc = exact_vcfc(g).value
        cuts = len(cut_vertices(g))
        two = is_two_connected(g)
        predicted = two or cuts == 1
        good = (vc == 2) == predicted
        rep.rows.append((key, n, vc, cuts, int(two), "=2" if predicted else ">2", "pass" if good else "FAIL"))
        if not good:
            rep.violations.append((g, vc, "=2" if predicted else ">2"))
        values[key] = vc
    rep.checked = len(rep.rows)
    rep.extremal = _extremes(values, "vcfc")
    return rep


def check_conjecture_1_4(n: int, exact: bool | None = None) -> SearchReport:
    """Every tree of order n gets at most ceil(log2(n+1)) colors."""
    _order_range(n, 2, 9, "conj14_order")
    if exact is None:
        exact = n <= 8
    if exact and n > 8:
        raise CapExceededError("conj14_exact_order", 8, n)
    bound = palette_size(n)
    rep = SearchReport("conj14", n, ("key", "n", "colors", "verified", "exact_vcfc", "bound", "status"))
    values = {}
    for key, t in all_trees(n):
        coloring = color_tree(t)
        verified = is_cf_vertex_connected(t, coloring)
        vc = exact_vcfc(t).value if exact else None
        good = coloring.k <= bound and verified and (vc is None or vc <= bound)
        rep.rows.append((key, n, coloring.k, int(verified), "-" if vc is None else vc, bound, "pass" if good else "FAIL"))
        if not good:
            rep.violations.append((t, (coloring.k, verified, vc), bound))
        values[key] = coloring.k if vc is None else vc
    rep.checked = len(rep.rows)
    rep.extremal = _extremes(values, "exact_vcfc" if exact else "colors")
    return rep


def check_conjecture_3_1(n: int) -> SearchReport:
    """cfc(T) >= ceil(log2 n) for every tree of order n; surfaces the cfc-minimal trees."""
    _order_range(n, 2, 10, "conj31_order")
    bound = (n - 1).bit_length()  # ceil(log2 n)
    rep = SearchReport("conj31", n, ("key", "n", "cfc", "bound", "status"))
    values = {}
    for key, t in all_trees(n):
        cfc = exact_cfc(t).value
        good = cfc >= bound
        rep.rows.append((key, n, cfc, bound, "pass" if good else "FAIL"))
        if not good:
            rep.violations.append((t, cfc, bound))
        values[key] = cfc
    rep.checked = len(rep.rows)
    rep.extremal = _extremes(values, "cfc")
    return rep


def check_monotonicity(n: int, samples: int | None = None) -> SearchReport:
    """Deleting an edge (keeping the graph connected) never lowers vcfc or cfc.

    ``samples`` limits the sweep to the first that many classes in key order.
    """
    _order_range(n, 2, 6, "mono_order")
    rep = SearchReport("mono", n, ("key", "n", "deleted", "vcfc_G", "vcfc_H", "cfc_G", "cfc_H", "bound", "status"))
    memo: dict[int, tuple[int, int]] = {}

    def invariants(g: Graph) -> tuple[int, int]:
        code, _ = graph_canonical(g)
        if code not in memo:
            memo[code] = (exact_vcfc(g).value, exact_cfc(g, max_edges=max(g.size, 10)).value)
        return memo[code]

    catalog = list(all_connected_graphs(n))
    if samples is not None:
        catalog = catalog[:samples]
    for key, g in catalog:
        vg, cg = invariants(g)
        for u, v in g.edges:
            h = g.remove_edge(u, v)
            if not is_connected(h):
                continue
            vh, ch = invariants(h)
            good = vh >= vg and ch >= cg
            rep.rows.append((key, n, f"{u}-{v}", vg, vh, cg, ch, "H>=G", "pass" if good else "FAIL"))
            if not good:
                rep.violations.append((h, (vh, ch), (vg, cg)))
    rep.checked = len(catalog)
    return rep


CLAIMS = {
    "thm11": check_theorem_1_1,
    "conj14": check_conjecture_1_4,
    "conj31": check_conjecture_3_1,
    "mono": check_monotonicity,
}
