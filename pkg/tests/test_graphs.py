"""Multigraph structure: contraction, bridges, trees, circuits, codes."""

import pytest

from ghostgraph import (
    GraphError,
    Multigraph,
    betti1,
    canonical_code,
    contract_edges,
    enumerate_base_graphs,
    fundamental_circuits,
    is_tree_like,
    separating_edges,
    spanning_tree,
)
from ghostgraph.graphs import SizeBoundExceeded

from oracles import brute_bridges, connected_multigraphs


def vine(n, v0=0, v1=1):
    return Multigraph([v0, v1], [(v0, v1)] * n)


def triangle():
    return Multigraph(range(3), [(0, 1), (1, 2), (2, 0)])


def barbell():
    # two 2-vines joined by one edge
    return Multigraph(range(4), [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)])


class TestConstruction:
    def test_disconnected_rejected(self):
        with pytest.raises(GraphError):
            Multigraph([0, 1, 2], [(0, 1)])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(GraphError):
            Multigraph([0, 1], [(0, 5)])

    def test_duplicate_edge_ids_rejected(self):
        with pytest.raises(GraphError):
            Multigraph([0, 1], {"1": (0, 1), 1: (1, 0)})

    def test_darts(self):
        g = vine(2)
        assert g.tail((0, 0)) == 0
        assert g.head((0, 0)) == 1
        assert g.conj((0, 0)) == (0, 1)
        assert g.tail((0, 1)) == 1


class TestContraction:
    def test_triangle_one_edge(self):
        out = contract_edges(triangle(), {1})
        assert out.graph.n_vertices == 2
        assert out.graph.n_edges == 2
        assert not out.graph.loops()
        # surviving ids are preserved
        assert set(out.graph.edge_ids) == {0, 2}

    def test_parallel_pair_to_loop(self):
        out = contract_edges(vine(2), {0})
        assert out.graph.n_vertices == 1
        assert out.graph.loops() == frozenset({1})

    def test_empty_contraction_is_identity(self):
        g = triangle()
        out = contract_edges(g, set())
        assert out.graph == g
        assert out.vertex_map == {v: v for v in g.vertices}
        assert out.edge_map == {e: e for e in g.edge_ids}

    def test_unknown_edge(self):
        with pytest.raises(GraphError):
            contract_edges(triangle(), {99})

    def test_contract_loop_keeps_vertices(self):
        g = Multigraph([0, 1], [(0, 1), (0, 0)])
        out = contract_edges(g, {1})
        assert out.graph.n_vertices == 2


class TestSeparatingEdges:
    def test_path(self):
        g = Multigraph(range(3), [(0, 1), (1, 2)])
        assert separating_edges(g) == {0, 1}

    def test_vine(self):
        assert separating_edges(vine(3)) == set()

    def test_barbell(self):
        assert separating_edges(barbell()) == {2}

    def test_loops_never_separate(self):
        g = Multigraph([0], [(0, 0)])
        assert separating_edges(g) == set()

    @pytest.mark.parametrize("g", connected_multigraphs(4))
    def test_matches_removal_oracle(self, g):
        assert separating_edges(g) == brute_bridges(g)


class TestSpanningTree:
    def test_tree_input(self):
        g = Multigraph(range(4), [(0, 1), (1, 2), (1, 3)])
        assert spanning_tree(g) == {0, 1, 2}

    def test_vine_lowest_id(self):
        assert spanning_tree(vine(2)) == {0}

    @pytest.mark.parametrize("g", connected_multigraphs(4))
    def test_size_and_bridges(self, g):
        t = spanning_tree(g)
        assert len(t) == g.n_vertices - 1
        assert brute_bridges(g) <= t


class TestCircuits:
    def test_vine(self):
        g = vine(2)
        circs = fundamental_circuits(g, {0})
        assert circs == [[(1, 0), (0, 1)]]

    def test_loop(self):
        g = Multigraph([0], [(0, 0)])
        assert fundamental_circuits(g, set()) == [[(0, 0)]]

    def test_triangle(self):
        g = triangle()
        t = spanning_tree(g)
        (circ,) = fundamental_circuits(g, t)
        assert len(circ) == 3
        # closed path
        for d, d2 in zip(circ, circ[1:] + circ[:1]):
            assert g.head(d) == g.tail(d2)

    def test_bad_tree_rejected(self):
        with pytest.raises(GraphError):
            fundamental_circuits(vine(2), {0, 1})


class TestBetti:
    def test_examples(self):
        assert betti1(Multigraph(range(3), [(0, 1), (1, 2)])) == 0
        assert betti1(vine(4)) == 3
        assert betti1(vine(3)) == 2


class TestTreeLike:
    def test_examples(self):
        assert is_tree_like(Multigraph([0], [(0, 0)]))
        assert not is_tree_like(vine(2))
        assert is_tree_like(Multigraph(range(3), [(0, 1), (1, 2), (2, 2)]))

    @pytest.mark.parametrize("g", connected_multigraphs(4))
    def test_bridge_count_characterization(self, g):
        assert is_tree_like(g) == (len(brute_bridges(g)) == g.n_vertices - 1)


class TestCanonicalCode:
    def test_labelled_vine_swap(self):
        g = vine(2)
        neg = lambda m: (-m) % 5
        c1 = canonical_code(g, labels={0: 1, 1: 2}, reverse=neg)
        c2 = canonical_code(g, labels={0: 2, 1: 1}, reverse=neg)
        assert c1 == c2

    def test_labelled_vine_distinct(self):
        g = vine(2)
        neg = lambda m: (-m) % 5
        c1 = canonical_code(g, labels={0: 1, 1: 1}, reverse=neg)
        c2 = canonical_code(g, labels={0: 1, 1: 4}, reverse=neg)
        assert c1 != c2

    def test_self_equal_under_relabeling(self):
        g = Multigraph([3, 7, 9], [(3, 7), (7, 9), (9, 3), (3, 7)])
        h = Multigraph([0, 1, 2], [(1, 2), (2, 0), (0, 1), (1, 2)])
        assert canonical_code(g) == canonical_code(h)

    def test_distinguishes_orientation_classes(self):
        # directed labels around a triangle vs one edge flipped
        g = triangle()
        neg = lambda m: (-m) % 5
        aligned = canonical_code(g, labels={0: 1, 1: 1, 2: 1}, reverse=neg)
        flipped = canonical_code(g, labels={0: 1, 1: 1, 2: 4}, reverse=neg)
        assert aligned != flipped

    def test_size_bound(self):
        n = 9
        g = Multigraph(range(n), [(i, (i + 1) % n) for i in range(n)])
        with pytest.raises(SizeBoundExceeded):
            canonical_code(g)


class TestEnumerateBaseGraphs:
    def test_two_edges(self):
        (g,) = enumerate_base_graphs(2)
        assert canonical_code(g) == canonical_code(vine(2))

    def test_three_edges(self):
        codes = {canonical_code(g) for g in enumerate_base_graphs(3)}
        expected = {canonical_code(vine(2)), canonical_code(vine(3)), canonical_code(triangle())}
        assert codes == expected

    def test_matches_oracle_up_to_four_edges(self):
        got = {canonical_code(g) for g in enumerate_base_graphs(4)}
        expected = {
            canonical_code(g)
            for g in connected_multigraphs(4)
            if g.n_vertices >= 2 and not g.loops() and not brute_bridges(g)
        }
        assert got == expected

    def test_every_graph_valid(self):
        for g in enumerate_base_graphs(5):
            assert not g.loops()
            assert not separating_edges(g)
            assert all(g.degree(v) >= 2 for v in g.vertices)
            assert g.n_vertices >= 2

    def test_deterministic_order(self):
        a = [canonical_code(g) for g in enumerate_base_graphs(5)]
        b = [canonical_code(g) for g in enumerate_base_graphs(5)]
        assert a == b
        assert len(set(a)) == len(a)
