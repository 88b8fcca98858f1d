"""Graph type, family generators, Laplacians, and the edge-list format."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laptree.graphs import (
    Graph,
    GraphParseError,
    PartitionSpec,
    ThresholdSequence,
    bipartite_minus_matching,
    complete_graph,
    complete_multipartite,
    laplacian,
    parse_graph,
    serialize_graph,
    threshold_graph,
)
from laptree.verify import random_graph


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=10))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(n, frozenset(edges))


class TestGraphType:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(3, frozenset({(2, 2)}))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(1, 4)}))

    def test_rejects_unnormalized_pair(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(3, 1)}))

    def test_rejects_zero_vertices(self):
        with pytest.raises(ValueError):
            Graph(0)

    def test_from_edges_normalizes(self):
        g = Graph.from_edges(3, [(3, 1), (2, 3)])
        assert g.edges == frozenset({(1, 3), (2, 3)})

    def test_from_edges_rejects_duplicate_orientations(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edges(3, [(1, 2), (2, 1)])

    def test_has_edge_either_order(self):
        g = Graph.from_edges(3, [(1, 2)])
        assert g.has_edge(1, 2) and g.has_edge(2, 1)
        assert not g.has_edge(1, 3)

    def test_degree_bounds(self):
        g = complete_graph(3)
        with pytest.raises(IndexError):
            g.degree(0)
        with pytest.raises(IndexError):
            g.degree(4)

    def test_degrees_match_degree(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8))
            assert g.degrees() == [g.degree(v) for v in g.vertices()]

    def test_hashable(self):
        assert len({complete_graph(3), complete_graph(3)}) == 1


class TestCompleteGraph:
    def test_single_vertex(self):
        assert complete_graph(1).edges == frozenset()

    def test_triangle(self):
        assert complete_graph(3).edges == frozenset({(1, 2), (1, 3), (2, 3)})

    def test_k5(self):
        g = complete_graph(5)
        assert g.edge_count == 10
        assert all(g.degree(v) == 4 for v in g.vertices())

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            complete_graph(0)


class TestCompleteMultipartite:
    def test_single_part_is_empty_graph(self):
        g = complete_multipartite((4,))
        assert g.n == 4 and g.edge_count == 0

    def test_all_singletons_is_complete(self):
        assert complete_multipartite((1, 1, 1)) == complete_graph(3)
        for n in range(1, 7):
            assert complete_multipartite((1,) * n) == complete_graph(n)

    def test_two_two_is_four_cycle(self):
        g = complete_multipartite((2, 2))
        assert g.edges == frozenset({(1, 3), (1, 4), (2, 3), (2, 4)})

    def test_block_ordering(self):
        # first part is {1,2,3}, second is {4,5}: no edges inside either
        g = complete_multipartite(PartitionSpec((3, 2)))
        assert not g.has_edge(1, 2) and not g.has_edge(4, 5)
        assert g.has_edge(3, 4) and g.has_edge(1, 5)

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            PartitionSpec(())
        with pytest.raises(ValueError):
            complete_multipartite((2, 0))


class TestBipartiteMinusMatching:
    def test_single_pair(self):
        g = bipartite_minus_matching(1)
        assert g.n == 2 and g.edge_count == 0

    def test_two_pairs(self):
        assert bipartite_minus_matching(2).edges == frozenset({(1, 4), (2, 3)})

    def test_matched_edges_absent(self):
        g = bipartite_minus_matching(5)
        assert all(not g.has_edge(i, 5 + i) for i in range(1, 6))
        assert g.degree(1) == 4  # adjacent to 7, 8, 9, 10

    def test_regularity(self):
        for n in range(1, 7):
            g = bipartite_minus_matching(n)
            assert g.edge_count == n * (n - 1)
            assert all(g.degree(v) == n - 1 for v in g.vertices())

    def test_sides_stay_independent(self):
        g = bipartite_minus_matching(4)
        for i in range(1, 5):
            for j in range(i + 1, 5):
                assert not g.has_edge(i, j)
                assert not g.has_edge(4 + i, 4 + j)


class TestThresholdGraph:
    def test_empty_sequence(self):
        g = threshold_graph(ThresholdSequence(()))
        assert g.n == 1 and g.edge_count == 0

    def test_all_dominating_is_complete(self):
        assert threshold_graph("DD") == complete_graph(3)
        for n in range(2, 8):
            assert threshold_graph("D" * (n - 1)) == complete_graph(n)

    def test_star(self):
        g = threshold_graph("IID")
        assert g.edges == frozenset({(1, 4), (2, 4), (3, 4)})
        assert g.degree(4) == 3

    def test_word_roundtrip(self):
        seq = ThresholdSequence.from_word("idD")
        assert seq.word() == "IDD"
        assert seq.n == 4

    def test_rejects_bad_tag(self):
        with pytest.raises(ValueError):
            ThresholdSequence.from_word("IXD")


class TestLaplacian:
    def test_single_edge(self):
        assert laplacian(complete_graph(2)).rows == ((1, -1), (-1, 1))

    def test_triangle(self):
        assert laplacian(complete_graph(3)).rows == (
            (2, -1, -1), (-1, 2, -1), (-1, -1, 2)
        )

    def test_empty_graph_is_zero(self):
        assert laplacian(Graph(3)).rows == ((0,) * 3,) * 3

    def test_rows_and_columns_sum_to_zero(self):
        rng = random.Random(3)
        gs = [random_graph(rng, rng.randint(1, 9)) for _ in range(20)]
        gs += [complete_graph(5), complete_multipartite((3, 2, 1)),
               bipartite_minus_matching(4), threshold_graph("IDDI")]
        for g in gs:
            L = laplacian(g).rows
            assert all(sum(row) == 0 for row in L)
            assert all(sum(col) == 0 for col in zip(*L))


class TestEdgeListFormat:
    def test_parse_path(self):
        g = parse_graph("3\n1 2\n2 3\n")
        assert g == Graph.from_edges(3, [(1, 2), (2, 3)])

    def test_serialize_single_edge(self):
        assert serialize_graph(complete_graph(2)) == "2\n1 2\n"

    def test_serialize_sorted(self):
        assert serialize_graph(complete_graph(3)) == "3\n1 2\n1 3\n2 3\n"

    def test_comments_and_blank_lines(self):
        text = "# graph\n\n3  # n\n1 2\n# middle\n2 3  # edge\n\n"
        assert parse_graph(text) == parse_graph("3\n1 2\n2 3\n")

    def test_reversed_pair_normalized(self):
        assert parse_graph("3\n3 1\n") == parse_graph("3\n1 3\n")

    def test_loop_error_with_line(self):
        with pytest.raises(GraphParseError, match="line 2.*loop") as exc:
            parse_graph("2\n1 1\n")
        assert exc.value.lineno == 2

    def test_duplicate_error_with_line(self):
        with pytest.raises(GraphParseError, match="line 3.*duplicate"):
            parse_graph("3\n1 2\n2 1\n")

    def test_out_of_range_error_with_line(self):
        with pytest.raises(GraphParseError, match="line 2.*out of range"):
            parse_graph("3\n1 4\n")

    def test_malformed_line(self):
        with pytest.raises(GraphParseError, match="line 2"):
            parse_graph("3\n1 2 3\n")
        with pytest.raises(GraphParseError, match="line 2"):
            parse_graph("3\none two\n")

    def test_bad_vertex_count(self):
        with pytest.raises(GraphParseError, match="line 1"):
            parse_graph("zero\n")
        with pytest.raises(GraphParseError, match="positive"):
            parse_graph("0\n")

    def test_empty_input(self):
        with pytest.raises(GraphParseError, match="missing vertex count"):
            parse_graph("")

    def test_vertex_only_graph(self):
        g = parse_graph("4\n")
        assert g.n == 4 and g.edge_count == 0

    @given(graphs())
    @settings(max_examples=120)
    def test_roundtrip(self, g):
        assert parse_graph(serialize_graph(g)) == g
