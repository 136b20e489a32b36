import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfconn import ValidationError
from cfconn.enumerate import all_trees
from cfconn.errors import CapExceededError, DisconnectedError, ParseError
from cfconn.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph
from cfconn.verify import (
    EdgeColoring,
    VertexColoring,
    first_failing_pair_vertex,
    format_coloring,
    format_edge_coloring,
    is_cf_edge_connected,
    is_cf_vertex_connected,
    parse_coloring,
    parse_edge_coloring,
    path_is_conflict_free_edge,
    path_is_conflict_free_vertex,
    simple_paths,
)

import oracles


class TestPathPredicates:
    def test_vertex_examples(self):
        assert path_is_conflict_free_vertex(VertexColoring((1, 2, 1)), [0, 1, 2])
        assert not path_is_conflict_free_vertex(VertexColoring((1, 1)), [0, 1])
        assert path_is_conflict_free_vertex(VertexColoring((1, 2, 1, 3, 1, 2, 1)), range(7))

    def test_empty_path(self):
        with pytest.raises(ValidationError):
            path_is_conflict_free_vertex((1,), [])

    def test_edge_examples(self):
        g = path_graph(4)
        assert path_is_conflict_free_edge(EdgeColoring({(0, 1): 5}), [0, 1])
        assert not path_is_conflict_free_edge(EdgeColoring.from_sequence(path_graph(3), (1, 1)), [0, 1, 2])
        assert path_is_conflict_free_edge(EdgeColoring.from_sequence(g, (1, 2, 1)), [0, 1, 2, 3])

    def test_edge_path_too_short(self):
        with pytest.raises(ValidationError):
            path_is_conflict_free_edge(EdgeColoring({}), [0])


class TestColoringTypes:
    def test_nonpositive_color_rejected(self):
        with pytest.raises(ValidationError):
            VertexColoring((1, 0))

    def test_normal_form(self):
        c = VertexColoring((3, 3, 7))
        assert c.k == 2 and not c.is_normal
        assert c.normalized() == VertexColoring((1, 1, 2))


class TestVertexVerifier:
    def test_examples(self):
        assert is_cf_vertex_connected(path_graph(3), VertexColoring((1, 2, 1)))
        assert not is_cf_vertex_connected(path_graph(4), VertexColoring((1, 1, 1, 1)))

    def test_cycle_example_against_oracle(self):
        g = cycle_graph(5)
        colors = (1, 2, 1, 2, 2)
        expected = oracles.vertex_cf(5, list(g.edges), colors)
        # vertices 3 and 4 are adjacent and share color 2; their other path 3-2-1-0-4 reads 2,1,2,1,2
        assert expected is False
        assert is_cf_vertex_connected(g, VertexColoring(colors)) is expected
        assert first_failing_pair_vertex(g, colors) == (3, 4)

    def test_cycle_with_unique_color(self):
        g = cycle_graph(5)
        assert oracles.vertex_cf(5, list(g.edges), (1, 2, 1, 2, 3))
        assert is_cf_vertex_connected(g, VertexColoring((1, 2, 1, 2, 3)))

    def test_trivial_graph(self):
        assert is_cf_vertex_connected(path_graph(1), VertexColoring((4,)))

    def test_adjacent_same_color_fails(self):
        assert not is_cf_vertex_connected(path_graph(2), VertexColoring((1, 1)))

    def test_disconnected(self):
        with pytest.raises(DisconnectedError):
            is_cf_vertex_connected(Graph.from_edges(3, [(0, 1)]), (1, 2, 1))

    def test_domain_mismatch(self):
        with pytest.raises(ValidationError):
            is_cf_vertex_connected(path_graph(3), VertexColoring((1, 2)))

    def test_cap(self):
        g = cycle_graph(17)
        with pytest.raises(CapExceededError):
            is_cf_vertex_connected(g, tuple(range(1, 18)))
        assert is_cf_vertex_connected(g, tuple(range(1, 18)), max_n=17)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_star_with_unique_center(self, n):
        colors = (2,) + (1,) * (n - 1)
        assert is_cf_vertex_connected(star_graph(n), VertexColoring(colors))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_tree_shortcut_agrees_with_path_enumeration(self, n):
        for t in all_trees(n).members:
            for colors in itertools.islice(itertools.product((1, 2, 3), repeat=n), 400):
                assert is_cf_vertex_connected(t, colors, method="tree") == is_cf_vertex_connected(
                    t, colors, method="paths"
                )

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_refinement_is_monotone_on_trees(self, n):
        for t in all_trees(n).members:
            for colors in itertools.product((1, 2), repeat=n):
                if not is_cf_vertex_connected(t, colors):
                    continue
                for cls in (1, 2):
                    members = [v for v in range(n) if colors[v] == cls]
                    for r in range(1, len(members)):
                        for moved in itertools.combinations(members, r):
                            refined = tuple(9 if v in moved else c for v, c in enumerate(colors))
                            assert is_cf_vertex_connected(t, refined)

    def test_simple_paths_match_oracle(self):
        g = complete_graph(5)
        for u, v in itertools.combinations(range(5), 2):
            assert sorted(simple_paths(g, u, v)) == sorted(oracles.brute_paths(5, list(g.edges), u, v))


small_graph = st.integers(2, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sampled_from(list(itertools.combinations(range(n), 2))), unique=True),
        st.lists(st.integers(1, 3), min_size=n, max_size=n),
    )
)


@given(small_graph)
@settings(max_examples=150, deadline=None)
def test_vertex_verifier_matches_oracle(case):
    n, edges, colors = case
    g = Graph.from_edges(n, edges)
    if not oracles.brute_connected(n, edges):
        return
    assert is_cf_vertex_connected(g, colors) == oracles.vertex_cf(n, list(g.edges), colors)


@given(small_graph)
@settings(max_examples=80, deadline=None)
def test_pair_answer_is_symmetric(case):
    n, edges, colors = case
    g = Graph.from_edges(n, edges)
    if not oracles.brute_connected(n, edges):
        return
    for u, v in itertools.combinations(range(n), 2):
        forward = any(path_is_conflict_free_vertex(colors, p) for p in simple_paths(g, u, v))
        backward = any(path_is_conflict_free_vertex(colors, p) for p in simple_paths(g, v, u))
        assert forward == backward


class TestEdgeVerifier:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_complete_monochromatic(self, n):
        g = complete_graph(n)
        assert is_cf_edge_connected(g, EdgeColoring.from_sequence(g, [1] * g.size))

    def test_examples(self):
        assert not is_cf_edge_connected(path_graph(3), EdgeColoring.from_sequence(path_graph(3), (1, 1)))
        g = path_graph(4)
        assert oracles.edge_cf(4, list(g.edges), (1, 2, 1))
        assert is_cf_edge_connected(g, EdgeColoring.from_sequence(g, (1, 2, 1)))

    def test_domain_mismatch(self):
        with pytest.raises(ValidationError):
            is_cf_edge_connected(path_graph(3), EdgeColoring({(0, 1): 1}))

    @given(small_graph)
    @settings(max_examples=150, deadline=None)
    def test_matches_oracle(self, case):
        n, edges, _ = case
        g = Graph.from_edges(n, edges)
        if not oracles.brute_connected(n, edges) or g.size == 0:
            return
        ec = [1 + (i * 7 + n) % 3 for i in range(g.size)]
        assert is_cf_edge_connected(g, EdgeColoring.from_sequence(g, ec)) == oracles.edge_cf(n, list(g.edges), ec)


class TestColoringFiles:
    def test_round_trip(self):
        c = VertexColoring((1, 2, 1, 3))
        assert parse_coloring(format_coloring(c), 4) == c

    def test_domain_mismatch(self):
        with pytest.raises(ValidationError):
            parse_coloring("0\t1\n2\t1\n", 3)

    def test_duplicate_vertex(self):
        with pytest.raises(ParseError):
            parse_coloring("0\t1\n0\t2\n", 1)

    def test_edge_round_trip(self):
        g = cycle_graph(4)
        ec = EdgeColoring.from_sequence(g, (1, 2, 1, 3))
        assert parse_edge_coloring(format_edge_coloring(g, ec), g) == ec
