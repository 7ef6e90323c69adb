import pytest
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import ring

from diagonal_invariants import UnsupportedSizeException
from diagonal_invariants.graphlab import SimpleGraph
from diagonal_invariants.koszul import (
    KoszulComplex,
    e1_dataframe,
    e1_page,
    expected_multitor_dims,
    koszul_homology,
    monomial_count,
    multitor_formula,
    multitor_oracle,
    reduced_forms,
    total_koszul_complex,
)


@pytest.fixture
def xy():
    _, x, y = ring("x,y", QQ, grevlex)
    return x, y


def test_monomial_count():
    assert monomial_count(2, 3) == 4
    assert monomial_count(0, 0) == 1
    assert monomial_count(0, 2) == 0
    assert monomial_count(3, -1) == 0


def test_regular_sequence_has_no_higher_homology(xy):
    x, y = xy
    assert [koszul_homology([x, y], 0, t) for t in range(4)] == [1, 0, 0, 0]
    assert all(koszul_homology([x, y], 1, t) == 0 for t in range(4))


def test_repeated_form_is_not_regular(xy):
    x, _ = xy
    assert koszul_homology([x, x], 1, 1) == 1


def test_koszul_complex_rejects_mixed_rings(xy):
    _, z = ring("z", QQ, grevlex)
    with pytest.raises(ValueError):
        KoszulComplex([xy[0], z])
    with pytest.raises(ValueError):
        KoszulComplex([])


def test_total_complex_squares_to_zero():
    complex_ = total_koszul_complex(SimpleGraph.named("K3"))
    assert complex_.length == 6
    assert complex_.is_complex(2, 2)
    assert complex_.is_complex(3, 3)


def test_reduced_forms_use_forest_coordinates():
    forms, used = reduced_forms(SimpleGraph.named("K3"))
    assert used == 4
    assert len(forms) == 6


@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_triangle_multitor_matches_free_module(q):
    graph = SimpleGraph.named("K3")
    assert multitor_oracle(graph, q, 4) == expected_multitor_dims(graph, q, 4)


def test_acyclic_graph_has_only_the_diagonal():
    graph = SimpleGraph.named("A2", n=3)
    assert set(multitor_oracle(graph, 1, 3).values()) == {0}
    assert multitor_oracle(graph, 0, 2) == {0: 1, 1: 2, 2: 3}


def test_multitor_degree_out_of_range():
    with pytest.raises(UnsupportedSizeException):
        multitor_oracle(SimpleGraph.named("K3"), 7, 2)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["C4", "K3uJ", "K4"])
def test_four_point_multitors_match_free_module(name):
    graph = SimpleGraph.named(name)
    for q in range(0, 2 * graph.cycle_rank + 1):
        assert multitor_oracle(graph, q, 4) == expected_multitor_dims(graph, q, 4)


def test_multitor_formula_ranks_and_invariants():
    assert multitor_formula(SimpleGraph.named("K4"), 1).rank == 6
    assert multitor_formula(SimpleGraph.named("K3"), 1).invariants == 2
    assert multitor_formula(SimpleGraph.named("K3"), 2).invariants == 0
    assert multitor_formula(SimpleGraph.named("C4"), 2).invariants == 0


def test_e1_triangle_terms():
    (linear,) = e1_page(3, 3, -1)
    assert linear.name == "K3"
    assert linear.terms == {"(1)": 1}
    (quadratic,) = e1_page(3, 3, -2)
    assert not quadratic.present
    assert quadratic.terms == {}


def test_e1_sign_twisted_diagonal_of_triangle_has_no_invariants():
    (term,) = e1_page(3, 3, 0)
    assert not term.present


def test_e1_complete_graph_cubic_term():
    (term,) = e1_page(4, 6, -3)
    assert term.name == "K4"
    assert term.terms == {"(3)": 1}


def test_e1_three_edges_on_four_points():
    terms = {t.name: t for t in e1_page(4, 3, -1)}
    assert set(terms) == {"A3", "B3", "K3"}
    assert not terms["A3"].present
    assert not terms["B3"].present
    assert terms["K3"].present


def test_e1_positive_q_is_empty():
    assert not any(t.present for t in e1_page(4, 2, 1))


def test_e1_point_count_guard():
    with pytest.raises(UnsupportedSizeException):
        e1_page(6, 1, 0)


def test_e1_dataframe_columns():
    frame = e1_dataframe(e1_page(4, 6, -3), 6, -3)
    assert list(frame.columns) == ["p", "q", "graph", "name", "stabilizer_order", "present", "terms"]
    assert frame.loc[0, "terms"] == "S(3)"
