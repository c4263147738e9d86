import pytest

from coloring_complexes.core import Polynomial, interpolate
from coloring_complexes.errors import LimitExceeded, ParseError
from coloring_complexes.graphs import (
    Graph,
    acyclic_orientation_count,
    chromatic_polynomial,
    corpus,
    format_graph,
    has_dominating_vertex,
    load_graph,
    parse_graph,
)

from oracles import count_acyclic_orientations, count_proper_colorings

K3 = Graph.complete(3)
C4 = Graph.cycle(4)


@pytest.fixture(scope="module")
def small_corpus():
    return corpus(5)


class TestChromatic:
    def test_k3(self):
        assert chromatic_polynomial(K3) == Polynomial((0, 2, -3, 1))

    def test_path(self):
        assert chromatic_polynomial(Graph.path(3)) == Polynomial((0, 1, -2, 1))

    def test_four_cycle_by_counting(self):
        # oracle: count colorings for k = 0..5 and interpolate
        pts = [(k, count_proper_colorings(4, C4.edges, k)) for k in range(6)]
        assert interpolate(pts) == Polynomial((0, -3, 6, -4, 1))
        assert chromatic_polynomial(C4) == Polynomial((0, -3, 6, -4, 1))

    def test_edgeless(self):
        assert chromatic_polynomial(Graph(4)) == Polynomial.monomial(4)

    def test_counts_colorings(self, small_corpus):
        for G in small_corpus:
            P = chromatic_polynomial(G)
            assert P.is_monic() and P.degree() == G.n and P.coeffs[0] == 0
            for k in range(5):
                assert P(k) == count_proper_colorings(G.n, G.edges, k), G

    def test_deletion_contraction(self, small_corpus):
        for G in small_corpus[::7]:
            P = chromatic_polynomial(G)
            for e in G.edges:
                assert P == chromatic_polynomial(G.delete(e)) - chromatic_polynomial(G.contract(e))

    def test_contract_merges_parallel_edges(self):
        g = K3.contract((1, 2))
        assert g == Graph(2, frozenset({(1, 2)}))


class TestAcyclicOrientations:
    def test_examples(self):
        assert acyclic_orientation_count(Graph(2, frozenset({(1, 2)}))) == 2
        assert acyclic_orientation_count(K3) == 6 == count_acyclic_orientations(3, K3.edges)
        assert acyclic_orientation_count(C4) == 14 == count_acyclic_orientations(4, C4.edges)

    def test_matches_enumeration(self, small_corpus):
        for G in small_corpus:
            assert acyclic_orientation_count(G) == count_acyclic_orientations(G.n, G.edges)

    def test_sampled_n6(self):
        for G in corpus(6, sample_seed=3)[-40:]:
            assert acyclic_orientation_count(G) == count_acyclic_orientations(G.n, G.edges)


class TestDominating:
    def test_examples(self):
        assert has_dominating_vertex(Graph.star(4)) == 1
        assert has_dominating_vertex(C4) is None
        assert has_dominating_vertex(K3) == 1
        assert has_dominating_vertex(Graph.star(4, center=3)) == 3


class TestCorpus:
    def test_sizes(self):
        assert corpus(2) == [Graph(2, frozenset({(1, 2)}))]
        c3 = corpus(3)
        assert len(c3) == 1 + 7
        assert len(corpus(5)) == 1 + 7 + 63 + 1023
        assert all(G.edges for G in corpus(5))

    def test_sampled_levels(self):
        c = corpus(7, sample_seed=1)
        assert sum(G.n == 6 for G in c) == 200
        assert sum(G.n == 7 for G in c) == 200
        assert len(set(G for G in c if G.n == 7)) == 200

    def test_deterministic(self):
        assert corpus(7, 5) == corpus(7, 5)
        assert corpus(7, 5) != corpus(7, 6)

    def test_limit(self):
        with pytest.raises(LimitExceeded):
            corpus(8)


class TestGraphFormat:
    def test_parse(self):
        g = parse_graph("# triangle\n3 3\n1 2\n\n1 3  # chord\n2 3\n")
        assert g == K3

    def test_isolated_vertices(self):
        assert parse_graph("4 1\n1 2\n") == Graph(4, frozenset({(1, 2)}))

    def test_roundtrip(self):
        for G in corpus(4)[::5]:
            assert parse_graph(format_graph(G)) == G

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3 1\n2 1\n", 2),
            ("3 2\n1 2\n1 2\n", 3),
            ("3 2\n1 2\n", 2),
            ("3 1\n1 2\n2 3\n", 3),
            ("3 x\n", 1),
            ("3 1\n1 4\n", 2),
        ],
    )
    def test_errors_name_line(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_graph(text, "g.txt")
        assert info.value.line == line
        assert str(info.value).startswith(f"g.txt:{line}:")

    def test_load_missing(self, tmp_path):
        with pytest.raises(ParseError):
            load_graph(tmp_path / "nope.graph")

    def test_invalid_graph(self):
        with pytest.raises(ValueError):
            Graph(2, frozenset({(1, 1)}))
        with pytest.raises(ValueError):
            Graph(0)
