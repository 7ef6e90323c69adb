from itertools import combinations, product

import pytest

from diagonal_invariants import UnsupportedSizeException
from diagonal_invariants.graphlab import (
    SimpleGraph,
    boundary_kernel_dimension,
    complete_graph_edges,
    cycle_data,
    edge_sign_character,
    enumerate_graphs,
    epsilon_sign,
    fundamental_cycles,
    graph_stabilizer,
    iso_classes,
    spanning_forest,
    split_order,
)


def test_parse_and_normalize():
    graph = SimpleGraph.parse(4, "21 13 2-3")
    assert graph.edges == ((1, 2), (1, 3), (2, 3))
    assert str(graph) == "{12,13,23}"
    assert graph.name() == "K3"


def test_rejects_loops_and_out_of_range_vertices():
    with pytest.raises(ValueError):
        SimpleGraph(n=3, edges=((1, 1),))
    with pytest.raises(ValueError):
        SimpleGraph(n=3, edges=((1, 4),))


@pytest.mark.parametrize(("n", "l", "count", "classes"), [(4, 3, 20, 3), (4, 2, 15, 2), (3, 3, 1, 1), (4, 1, 6, 1)])
def test_enumeration_counts(n, l, count, classes):  # noqa: E741
    graphs = enumerate_graphs(n, l)
    assert len(graphs) == count
    assert len(iso_classes(graphs)) == classes


def test_enumeration_is_lex_ordered():
    graphs = enumerate_graphs(4, 2)
    assert [g.edges for g in graphs] == sorted(g.edges for g in graphs)


def test_enumeration_rejects_too_many_edges():
    with pytest.raises(UnsupportedSizeException):
        enumerate_graphs(3, 4)


def test_two_edge_classes_are_intersecting_and_disjoint():
    assert [iso.name for iso in iso_classes(enumerate_graphs(4, 2))] == ["A2", "B2"]


def test_three_edge_classes():
    assert {iso.name for iso in iso_classes(enumerate_graphs(4, 3))} == {"A3", "B3", "K3"}


def test_non_acyclic_classes_of_k4():
    graphs = [g for l in range(1, 7) for g in enumerate_graphs(4, l) if not g.is_acyclic()]  # noqa: E741
    assert {iso.name for iso in iso_classes(graphs)} == {"K3", "K3uJ", "C4", "C4uL", "K4"}


def test_class_sizes_add_up():
    for l in range(1, 7):  # noqa: E741
        graphs = enumerate_graphs(4, l)
        assert sum(iso.size for iso in iso_classes(graphs)) == len(graphs)


@pytest.mark.parametrize(("name", "rank"), [("K3", 1), ("K4", 3), ("B2", 0), ("C4uL", 2), ("K3uJ", 1)])
def test_cycle_rank(name, rank):
    graph = SimpleGraph.named(name)
    assert graph.cycle_rank == rank
    assert cycle_data(graph).rank == rank
    assert boundary_kernel_dimension(graph) == rank
    assert len(fundamental_cycles(graph)) == rank


def test_fundamental_cycles_are_closed():
    graph = SimpleGraph.named("K4")
    for cycle in fundamental_cycles(graph):
        vector = cycle.vector()
        for v in graph.vertices:
            outgoing = sum(c for (a, _), c in vector.items() if a == v)
            incoming = sum(c for (_, b), c in vector.items() if b == v)
            assert outgoing == incoming


def test_spanning_forest_is_lex_greedy():
    assert spanning_forest(SimpleGraph.named("K4")) == [(1, 2), (1, 3), (1, 4)]
    assert spanning_forest(SimpleGraph.named("B2")) == [(1, 2), (3, 4)]


def test_edge_sign_characters():
    k3 = edge_sign_character(SimpleGraph.named("K3"))
    assert k3.invariant_dim() == 0
    assert k3.degree == 1
    k4 = edge_sign_character(SimpleGraph.named("K4"))
    assert all(v == 1 for v in k4.values)


def test_epsilon_single_insertions():
    assert epsilon_sign(SimpleGraph(n=3, edges=((2, 3),)), SimpleGraph(n=3, edges=((1, 2), (2, 3)))) == 1
    assert epsilon_sign(SimpleGraph(n=3, edges=((1, 2),)), SimpleGraph(n=3, edges=((1, 2), (2, 3)))) == -1


def test_epsilon_squares_anticommute():
    """Inserting two edges in either order gives opposite signs, so the alternating differential squares to zero."""
    edges = complete_graph_edges(4)
    for size in range(0, 5):
        for chosen in combinations(edges, size):
            base = SimpleGraph(n=4, edges=chosen)
            missing = [e for e in edges if e not in chosen]
            for a, b in combinations(missing, 2):
                with_a = SimpleGraph(n=4, edges=chosen + (a,))
                with_b = SimpleGraph(n=4, edges=chosen + (b,))
                top = SimpleGraph(n=4, edges=chosen + (a, b))
                first = epsilon_sign(base, with_a) * epsilon_sign(with_a, top)
                second = epsilon_sign(base, with_b) * epsilon_sign(with_b, top)
                assert first == -second


def test_epsilon_is_multiplicative_along_lex_ordered_chains():
    """eps(G, G'') eps(G'', G') = eps(G, G') whenever the first step inserts only edges preceding those of the second."""
    edges = complete_graph_edges(4)
    checked = 0
    for labels in product(range(3), repeat=len(edges)):
        # 0: in G, 1: added by the first step, 2: added by the second step
        first_step = [e for e, label in zip(edges, labels) if label == 1]
        second_step = [e for e, label in zip(edges, labels) if label == 2]
        if first_step and second_step and max(first_step) > min(second_step):
            continue
        base = tuple(e for e, label in zip(edges, labels) if label == 0)
        bottom = SimpleGraph(n=4, edges=base)
        middle = SimpleGraph(n=4, edges=base + tuple(first_step))
        top = SimpleGraph(n=4, edges=base + tuple(first_step) + tuple(second_step))
        assert epsilon_sign(bottom, middle) * epsilon_sign(middle, top) == epsilon_sign(bottom, top)
        checked += 1
    assert checked > 0


def test_epsilon_chain_out_of_lex_order_flips_sign():
    bottom = SimpleGraph(n=3, edges=())
    middle = SimpleGraph(n=3, edges=((2, 3),))
    top = SimpleGraph(n=3, edges=((1, 2), (2, 3)))
    assert epsilon_sign(bottom, middle) * epsilon_sign(middle, top) == -epsilon_sign(bottom, top)


def test_epsilon_requires_subgraph():
    with pytest.raises(ValueError):
        epsilon_sign(SimpleGraph.named("K3"), SimpleGraph.named("B2"))


def test_split_order_matches_stabilizer():
    for l in range(1, 7):  # noqa: E741
        for iso in iso_classes(enumerate_graphs(4, l)):
            assert split_order(iso.representative) == graph_stabilizer(iso.representative).order
