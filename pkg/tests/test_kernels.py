"""The compiled kernels against the pure-Python reference verifiers, and the
interpreter fallback against the compiled path."""

import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfconn import kernels
from cfconn.enumerate import all_connected_graphs, graph_canonical
from cfconn.exact import is_valid_ranking
from cfconn.graph import Graph, path_graph
from cfconn.verify import EdgeColoring, first_failing_pair_edge, first_failing_pair_vertex

import oracles

connected_case = st.integers(2, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sampled_from(list(itertools.combinations(range(n), 2))), unique=True, min_size=n - 1),
        st.lists(st.integers(0, 3), min_size=21, max_size=21),
    )
).filter(lambda c: oracles.brute_connected(c[0], c[1]))


def _decode(code, n):
    return None if code < 0 else divmod(int(code), n)


@given(connected_case)
@settings(max_examples=300, deadline=None)
def test_vertex_kernel_matches_reference(case):
    n, edges, raw = case
    g = Graph.from_edges(n, edges)
    colors = np.array(raw[:n], dtype=np.int64)
    indptr, indices, _ = g.csr
    got = kernels.vertex_first_fail(indptr, indices, colors, 4)
    assert _decode(got, n) == first_failing_pair_vertex(g, [c + 1 for c in raw[:n]], method="paths")


@given(connected_case)
@settings(max_examples=300, deadline=None)
def test_edge_kernel_matches_reference(case):
    n, edges, raw = case
    g = Graph.from_edges(n, edges)
    ecolors = np.array(raw[: g.size], dtype=np.int64)
    indptr, indices, eids = g.csr
    got = kernels.edge_first_fail(indptr, indices, eids, ecolors, 4)
    ref = first_failing_pair_edge(g, EdgeColoring.from_sequence(g, [c + 1 for c in raw[: g.size]]), method="paths")
    assert _decode(got, n) == ref


@given(connected_case)
@settings(max_examples=300, deadline=None)
def test_ranking_kernel_matches_reference(case):
    n, edges, raw = case
    g = Graph.from_edges(n, edges)
    labels = np.array(raw[:n], dtype=np.int64)
    indptr, indices, _ = g.csr
    kernel_ok = kernels.ranking_first_fail(indptr, indices, labels) < 0
    assert kernel_ok == is_valid_ranking(g, [x + 1 for x in raw[:n]])
    assert kernel_ok == oracles.ranking_ok(n, list(g.edges), [x + 1 for x in raw[:n]])


def test_search_returns_first_canonical_witness():
    # K_3 with two colors: the first restricted growth string 001 already passes
    from cfconn.graph import complete_graph

    g = complete_graph(3)
    indptr, indices, eids = g.csr
    empty = np.zeros(1, dtype=np.int64)
    found, col, explored = kernels.search(0, 3, 2, True, False, empty, empty, empty, empty, indptr, indices, eids)
    assert found and list(col) == [0, 0, 1] and explored == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_py_func_matches_compiled(n):
    for g in all_connected_graphs(n).members:
        indptr, indices, eids = g.csr
        for colors in itertools.product(range(2), repeat=n):
            arr = np.array(colors, dtype=np.int64)
            assert kernels.vertex_first_fail.py_func(indptr, indices, arr, 2) == kernels.vertex_first_fail(
                indptr, indices, arr, 2
            )


def test_canonical_code_invariant_under_relabeling():
    rng = np.random.default_rng(7)
    for g in all_connected_graphs(5).members:
        code, canon = graph_canonical(g)
        for _ in range(5):
            p = rng.permutation(5)
            h = Graph.from_edges(5, ((int(p[u]), int(p[v])) for u, v in g.edges))
            assert graph_canonical(h)[0] == code
        assert graph_canonical(canon)[1] == canon


def test_canonical_code_brute_force():
    g = path_graph(4)
    pairs = list(itertools.combinations(range(4), 2))
    best = min(
        int("".join("1" if g.has_edge(p[a], p[b]) else "0" for a, b in pairs), 2)
        for p in itertools.permutations(range(4))
    )
    assert graph_canonical(g)[0] == best


FALLBACK_SCRIPT = """
from cfconn import _accel, exact_vcfc, exact_cfc, exact_ranking, path_graph, cycle_graph, star_graph
from cfconn.enumerate import check_theorem_1_1
assert _accel.backend() == "python", _accel.backend()
out = []
for g in (path_graph(5), cycle_graph(5), star_graph(5)):
    for f in (exact_vcfc, exact_cfc, exact_ranking):
        r = f(g)
        w = r.witness
        out.append((r.value, r.explored, getattr(w, "colors", None) if not hasattr(w, "labels") else w.labels))
out.append(check_theorem_1_1(4).to_tsv())
print(repr(out))
"""


def test_interpreter_fallback_gives_identical_results():
    from cfconn import cycle_graph, exact_cfc, exact_ranking, exact_vcfc, star_graph
    from cfconn.enumerate import check_theorem_1_1

    env = dict(os.environ, CFCONN_DISABLE_NUMBA="1")
    proc = subprocess.run([sys.executable, "-c", FALLBACK_SCRIPT], env=env, capture_output=True, text=True, check=True)
    out = []
    for g in (path_graph(5), cycle_graph(5), star_graph(5)):
        for f in (exact_vcfc, exact_cfc, exact_ranking):
            r = f(g)
            w = r.witness
            out.append((r.value, r.explored, getattr(w, "colors", None) if not hasattr(w, "labels") else w.labels))
    out.append(check_theorem_1_1(4).to_tsv())
    assert proc.stdout.strip() == repr(out)
