"""Base graph layer: parsing, canonical trees, girth, generators."""

import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tokengraphs.graphs import (
    Graph,
    Graph6Error,
    bridged_cliques,
    complete_graph,
    cycle_graph,
    distance,
    emit_graph6,
    enumerate_trees,
    girth,
    parse_graph6,
    path_graph,
    star_graph,
    tree_canonical_form,
)

# free trees per vertex count, n = 1..12
TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]

PETERSEN_EDGES = (
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7),
    (3, 4), (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
)


def petersen() -> Graph:
    return Graph(10, PETERSEN_EDGES)


def nx_of(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# strategy: a random simple graph as (n, edge set)
@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    return Graph(n, tuple(edges))


class TestGraphBasics:
    def test_edge_normalisation(self):
        g = Graph(3, ((2, 1), (1, 2), (0, 1)))
        assert g.edges == ((0, 1), (1, 2))
        assert g.edge_count == 2

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 3),))

    def test_degrees(self):
        g = star_graph(3)
        assert g.degree(0) == 3
        assert g.min_degree() == 1
        assert sorted(g.neighbors(0)) == [1, 2, 3]

    def test_connectivity_flags(self):
        assert path_graph(4).is_connected()
        assert not Graph(4, ((0, 1), (2, 3))).is_connected()
        assert path_graph(4).is_tree()
        assert not cycle_graph(4).is_tree()
        assert complete_graph(4).is_complete()
        assert not path_graph(4).is_complete()


class TestGraph6:
    # strings produced independently by networkx for the same labelings
    FROZEN = [
        ("A_", complete_graph(2)),
        ("Bg", path_graph(3)),
        ("Ch", path_graph(4)),
        ("Cs", star_graph(3)),
        ("Dhc", cycle_graph(5)),
        ("C~", complete_graph(4)),
        ("DhC", path_graph(5)),
        ("F~~~w", complete_graph(7)),
        ("B?", Graph(3, ())),
        ("IheA@GUAo", petersen()),
    ]

    @pytest.mark.parametrize("text,graph", FROZEN)
    def test_parse_frozen(self, text, graph):
        assert parse_graph6(text) == graph

    @pytest.mark.parametrize("text,graph", FROZEN)
    def test_emit_frozen(self, text, graph):
        assert emit_graph6(graph) == text

    def test_header_stripped(self):
        assert parse_graph6(">>graph6<<Bg") == path_graph(3)

    def test_empty_payload(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6("")
        assert err.value.offset == 0

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error):
            parse_graph6("B\x1f")

    def test_truncated_bits(self):
        # C needs one data byte for 6 bits; none supplied
        with pytest.raises(Graph6Error):
            parse_graph6("C")

    def test_trailing_bytes(self):
        with pytest.raises(Graph6Error):
            parse_graph6("BgW")

    def test_nonzero_padding(self):
        # P3 uses 3 of 6 data bits; set a padding bit
        with pytest.raises(Graph6Error):
            parse_graph6("Bh")

    def test_multibyte_order_unsupported(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~??")

    def test_emit_rejects_large(self):
        with pytest.raises(ValueError):
            emit_graph6(Graph(63, ()))

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_graph6(emit_graph6(g)) == g

    @given(graphs())
    @settings(max_examples=60)
    def test_emit_matches_networkx(self, g):
        expected = nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()
        assert emit_graph6(g) == expected

    @given(graphs())
    @settings(max_examples=60)
    def test_parse_matches_networkx(self, g):
        text = nx.to_graph6_bytes(nx_of(g), header=False).decode().strip()
        assert parse_graph6(text) == g


class TestDistanceGirth:
    def test_path_distances(self):
        g = path_graph(4)
        assert distance(g, 0, 3) == 3
        assert distance(g, 1, 1) == 0

    def test_disconnected_distance(self):
        g = Graph(4, ((0, 1), (2, 3)))
        assert distance(g, 0, 3) == math.inf

    @pytest.mark.parametrize(
        "g,expected",
        [
            (complete_graph(3), 3),
            (complete_graph(4), 3),
            (cycle_graph(5), 5),
            (cycle_graph(6), 6),
            (petersen(), 5),
            (path_graph(5), math.inf),
            (star_graph(4), math.inf),
            (bridged_cliques(4), 3),
        ],
    )
    def test_girth_frozen(self, g, expected):
        assert girth(g) == expected

    @given(graphs())
    @settings(max_examples=60)
    def test_girth_matches_networkx(self, g):
        h = nx_of(g)
        try:
            expected = nx.girth(h)
        except Exception:  # pragma: no cover - very old networkx
            pytest.skip("nx.girth unavailable")
        assert girth(g) == expected

    @given(graphs())
    @settings(max_examples=40)
    def test_edge_removal_never_shrinks_girth(self, g):
        base = girth(g)
        for e in g.edges:
            reduced = Graph(g.n, tuple(x for x in g.edges if x != e))
            assert girth(reduced) >= base


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_counts(self, n):
        assert len(enumerate_trees(n)) == TREE_COUNTS[n - 1]

    @pytest.mark.parametrize("n", range(2, 10))
    def test_counts_match_networkx(self, n):
        assert len(enumerate_trees(n)) == sum(1 for _ in nx.nonisomorphic_trees(n))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_all_are_trees_and_distinct(self, n):
        trees = enumerate_trees(n)
        assert all(t.n == n and t.is_tree() for t in trees)
        forms = {tree_canonical_form(t) for t in trees}
        assert len(forms) == len(trees)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_prufer_closure(self, n):
        # every labeled tree's canonical form appears in the enumeration
        listed = {tree_canonical_form(t) for t in enumerate_trees(n)}
        if n == 2:
            seen = {tree_canonical_form(path_graph(2))}
        else:
            seen = set()
            for code in range(n ** (n - 2)):
                seq = []
                c = code
                for _ in range(n - 2):
                    seq.append(c % n)
                    c //= n
                t = nx.from_prufer_sequence(seq)
                seen.add(tree_canonical_form(Graph(n, tuple(t.edges()))))
        assert seen == listed

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            enumerate_trees(0)
        with pytest.raises(ValueError):
            enumerate_trees(13)

    @given(st.integers(min_value=2, max_value=8), st.randoms(use_true_random=False))
    @settings(max_examples=40)
    def test_canonical_form_is_invariant(self, n, rng):
        tree = rng.choice(enumerate_trees(n))
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Graph(n, tuple((perm[u], perm[v]) for u, v in tree.edges))
        assert tree_canonical_form(relabeled) == tree_canonical_form(tree)


class TestGenerators:
    def test_shapes(self):
        assert path_graph(5).edge_count == 4
        assert cycle_graph(5).edge_count == 5
        assert complete_graph(5).edge_count == 10
        assert star_graph(4).edge_count == 4

    def test_bridged_cliques(self):
        h = bridged_cliques(4)
        assert h.n == 8
        assert h.edge_count == 2 * 6 + 1
        assert h.has_edge(0, 4)
        assert h.is_connected()
