import pytest

from diagonal_invariants import NotACharacterException, UnsupportedSizeException
from diagonal_invariants.charlab import (
    EXPECTED_CYCLE_CLASSES,
    EXPECTED_TABLE1,
    EXPECTED_TABLE2,
    Partition,
    builtin_table,
    cycle_characters,
    describe_cycle_representation,
    frobenius_identity_check,
    isotypic_multiplicities,
    partitions,
    presentation_for,
    schur_character,
    schur_invariants,
    symmetric_table,
    table1,
    table2,
    table3,
)
from diagonal_invariants.graphlab import SimpleGraph, edge_representation
from diagonal_invariants.symgroup import ClassFunction


def test_partition_parsing_and_conjugate():
    assert Partition.parse("(2,1^2)") == Partition.of(2, 1, 1)
    assert Partition.of(3, 1).conjugate() == Partition.of(2, 1, 1)
    assert str(Partition.parse("2 2")) == "(2,2)"
    with pytest.raises(ValueError):
        Partition.of(1, 2)


def test_partitions_enumeration():
    assert [p.parts for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert [p.parts for p in partitions(4, max_rows=2)] == [(4,), (3, 1), (2, 2)]
    assert [p.parts for p in partitions(4, max_columns=2)] == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_symmetric_tables_are_complete(n):
    assert symmetric_table(n).is_complete()


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "A3", "B3", "K3", "K3uJ", "C4", "C4uL", "K4"])
def test_builtin_tables_are_complete(name):
    graph = SimpleGraph.named(name, n=4)
    assert builtin_table(graph).is_complete()


def test_regular_representation_of_s3():
    table = symmetric_table(3)
    regular = ClassFunction.from_function(table.group, lambda g: 6 if g.is_identity() else 0)
    assert table.decompose(regular) == {"1": 1, "ε": 1, "ρ3": 2}


def test_decompose_rejects_non_characters():
    table = symmetric_table(3)
    half = ClassFunction(table.group, [1, 0, 0])
    with pytest.raises(NotACharacterException):
        table.decompose(half)


def test_exterior_square_of_a_line_vanishes():
    chi = cycle_characters(SimpleGraph.named("K3")).cycle
    assert all(v == 0 for v in schur_character(Partition.of(1, 1), chi).values)


def test_edge_representation_of_c4():
    graph = SimpleGraph.named("C4")
    data = cycle_characters(graph)
    chi = edge_representation(graph, data.group).character()
    assert builtin_table(graph, data.group).decompose(chi) == {"1": 0, "det": 1, "ℓ(-1_ρ,1_σ)": 1, "ℓ(-1_ρ,-1_σ)": 0, "θ": 1}


def test_edge_representation_of_k3_with_tail_has_two_invariants():
    graph = SimpleGraph.named("K3uJ")
    chi = edge_representation(graph, cycle_characters(graph).group).character()
    assert chi.degree == 4
    assert chi.invariant_dim() == 2


def test_cycle_representation_of_c4_with_chord_has_no_invariants():
    assert cycle_characters(SimpleGraph.named("C4uL")).cycle.invariant_dim() == 0


@pytest.mark.parametrize(("name", "expected"), sorted(EXPECTED_CYCLE_CLASSES.items()))
def test_cycle_representation_classification(name, expected):
    assert describe_cycle_representation(SimpleGraph.named(name)) == expected


@pytest.mark.parametrize("n", range(2, 8))
def test_frobenius_identity(n):
    assert frobenius_identity_check(n)


@pytest.mark.parametrize(("name", "partition", "dim"), [("C4uL", (2,), 2), ("K4", (2, 2, 2), 1), ("K4", (1, 1, 1), 1), ("K4", (3,), 0)])
def test_schur_invariants(name, partition, dim):
    assert schur_invariants(SimpleGraph.named(name), Partition(parts=partition)) == dim


def test_table1_reproduces_expected_grid():
    table = table1()
    assert table.matches_expected()
    assert {name: tuple(values) for name, values in table.rows.items()} == EXPECTED_TABLE1
    assert table.to_dataframe().shape == (2, 12)


def test_table2_edge_sign_labels():
    rows = {row.graph: row for row in table2(4)}
    assert {name: rows[name].edge_sign for name in EXPECTED_TABLE2} == EXPECTED_TABLE2
    assert rows["C4"].order == 8
    assert rows["K3uJ"].order == 2
    assert rows["B2"].order == 8


def test_b2_presentation_lists_its_generators():
    presentation = presentation_for(SimpleGraph.named("B2"))
    assert len(presentation.generators()) == 3


def test_isotypic_multiplicities_examples():
    assert not any(isotypic_multiplicities(SimpleGraph.named("K3uJ"), 2, 2).values())
    c4l = isotypic_multiplicities(SimpleGraph.named("C4uL"), 2, 2)
    assert c4l[Partition.of(1, 1)] == 2
    assert c4l[Partition.of(2)] == 0
    k4 = isotypic_multiplicities(SimpleGraph.named("K4"), 3, 2)
    assert k4[Partition.of(3)] == 1
    assert k4[Partition.of(2, 1)] == 0


def test_isotypic_multiplicities_reject_acyclic_graphs():
    with pytest.raises(UnsupportedSizeException):
        isotypic_multiplicities(SimpleGraph.named("A2"), 1, 2)


def test_table3_lists_every_cycle_class():
    entries = table3(d=2, n=4, max_q=6)
    assert {e.graph for e in entries} == {"K3", "K3uJ", "C4", "C4uL", "K4"}
    k4 = {e.q: e for e in entries if e.graph == "K4"}
    assert k4[3].terms == {"(3)": 1}
    assert k4[3].describe() == "S(3)"
