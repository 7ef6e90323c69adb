"""Cycle representations of small graphs: classification, Schur-functor invariants and edge-sign labels."""

import logging
from functools import lru_cache
from itertools import combinations
from math import comb

import pandas as pd
from pydantic import BaseModel, ConfigDict

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.graphlab import (
    SimpleGraph,
    cycle_representation,
    edge_sign_character,
    enumerate_graphs,
    graph_stabilizer,
    iso_classes,
    signed_edge_image,
)
from diagonal_invariants.symgroup import ClassFunction, PermGroup, Permutation

from .partitions import Partition, partitions
from .presentations import builtin_table, presentation_for
from .schur import schur_character
from .tables import CharacterTable

logger: logging.Logger = logging.getLogger(__name__)

TABLE1_GRAPHS: tuple[str, ...] = ("C4uL", "K4")

TABLE1_COLUMNS: tuple[Partition, ...] = tuple(
    Partition.parse(text) for text in ("(2)", "(3)", "(4)", "(3,1)", "(2,2)", "(3,1,1)", "(6)", "(5,1)", "(4,2)", "(2,2,2)", "(1,1,1)")
)

# The published K4 entry under (3) belongs to (1,1,1): S^3 of q_K4 has no invariants, Lambda^3 has one.
EXPECTED_TABLE1: dict[str, tuple[int, ...]] = {
    "C4uL": (2, 0, 3, 1, 1, 0, 4, 2, 2, 0, 0),
    "K4": (1, 0, 2, 0, 1, 1, 3, 1, 2, 1, 1),
}

EXPECTED_TABLE2: dict[str, str] = {
    "A1": "1",
    "A2": "ε",
    "B2": "1⊗1⊗ε",
    "A3": "ε",
    "B3": "ε",
    "K3": "ε",
    "K3uJ": "ε",
    "C4": "ℓ(-1_ρ,1_σ)",
    "C4uL": "1",
    "K4": "1",
}

EXPECTED_CYCLE_CLASSES: dict[str, str] = {
    "K3": "ε",
    "K3uJ": "ε",
    "C4": "det",
    "C4uL": "ε⊗1 ⊕ ε⊗ε",
    "K4": "Λ²ρ4",
}


class CycleCharacters(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    group: PermGroup
    cycle: ClassFunction
    edge_sign: ClassFunction
    rank: int


@lru_cache(maxsize=64)
def cycle_characters(graph: SimpleGraph) -> CycleCharacters:
    """Characters of q_Gamma and of the edge sign, on one shared stabilizer object."""
    group = graph_stabilizer(graph)
    cycle = cycle_representation(graph, group).character(label=f"q{graph}")
    return CycleCharacters(group=group, cycle=cycle, edge_sign=edge_sign_character(graph, group), rank=graph.cycle_rank)


def invariant_dim(chi: ClassFunction) -> object:
    return chi.invariant_dim()


def decompose(chi: ClassFunction, table: CharacterTable) -> dict[str, int]:
    return table.decompose(chi)


def _dimension(chi: ClassFunction) -> int:
    value = chi.invariant_dim()
    if int(value) != value:
        raise ArithmeticError(f"Invariant dimension of {chi.label} is not an integer: {value}")
    return int(value)


def schur_invariants(graph: SimpleGraph, partition: Partition) -> int:
    """dim (S^lambda q_Gamma)^Stab(Gamma)."""
    data = cycle_characters(graph)
    return _dimension(schur_character(partition, data.cycle))


def classify_cycle_representation(graph: SimpleGraph) -> dict[str, int]:
    """Multiplicities of the irreducibles of the stabilizer in q_Gamma."""
    data = cycle_characters(graph)
    return builtin_table(graph, data.group).decompose(data.cycle)


def describe_cycle_representation(graph: SimpleGraph) -> str:
    data = cycle_characters(graph)
    return builtin_table(graph, data.group).describe(data.cycle)


def isotypic_multiplicities(graph: SimpleGraph, q: int, d: int) -> dict[Partition, int]:
    """Coefficient of S^lambda Omega^1 in the invariants of Lambda^q(Omega^1 (x) q_Gamma) twisted by the edge sign.

    lambda runs over the partitions of q with at most d rows and at most c columns, c the cycle rank.
    """
    data = cycle_characters(graph)
    if data.rank < 1:
        raise UnsupportedSizeException("cycle rank", data.rank, ">= 1")
    if not 0 <= q <= d * data.rank:
        raise UnsupportedSizeException("multitor degree", q, f"0..{d * data.rank} for {graph} with d={d}")
    return {
        partition: _dimension(schur_character(partition.conjugate(), data.cycle) * data.edge_sign)
        for partition in partitions(q, max_rows=d, max_columns=data.rank)
    }


class FrobeniusRow(BaseModel):
    cycle_type: tuple[int, ...]
    standard_plus_exterior: int
    edge_trace: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.standard_plus_exterior == self.edge_trace == self.expected


def _cycle_type_representative(n: int, parts: tuple[int, ...]) -> Permutation:
    cycles: list[tuple[int, ...]] = []
    start = 1
    for part in parts:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return Permutation.from_cycles(n, [c for c in cycles if len(c) > 1])


def frobenius_identity_rows(n: int) -> list[FrobeniusRow]:
    """Per cycle type: chi_rho + chi_Lambda2rho, the trace of the signed edge action on K_n, and C(i1, 2) - i2."""
    if not 2 <= n <= 7:
        raise UnsupportedSizeException("point count", n, "2..7")
    rows: list[FrobeniusRow] = []
    edges = list(combinations(range(1, n + 1), 2))
    for partition in partitions(n):
        g = _cycle_type_representative(n, partition.parts)
        standard = len(g.fixed_points()) - 1
        squared = len((g * g).fixed_points()) - 1
        exterior, remainder = divmod(standard * standard - squared, 2)
        if remainder:
            raise ArithmeticError(f"Odd exterior square trace at {partition}")
        trace = 0
        for edge in edges:
            image, sign = signed_edge_image(g, edge)
            if image == edge:
                trace += sign
        i1, i2 = partition.parts.count(1), partition.parts.count(2)
        rows.append(FrobeniusRow(cycle_type=partition.parts, standard_plus_exterior=standard + exterior, edge_trace=trace, expected=comb(i1, 2) - i2))
    return rows


def frobenius_identity_check(n: int) -> bool:
    rows = frobenius_identity_rows(n)
    for row in rows:
        if not row.holds:
            logger.warning(f"Frobenius identity fails for n={n} at cycle type {row.cycle_type}: {row}")
    return all(row.holds for row in rows)


class Table1(BaseModel):
    columns: list[str]
    rows: dict[str, list[int]]
    unlisted: dict[str, list[str]]

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([{"graph": name} | dict(zip(self.columns, values)) for name, values in self.rows.items()])

    def matches_expected(self) -> bool:
        return all(tuple(self.rows[name]) == EXPECTED_TABLE1[name] for name in EXPECTED_TABLE1) and not any(self.unlisted.values())


def table1(max_weight: int = 6) -> Table1:
    """Invariant dimensions of S^lambda q_Gamma for C4uL and K4, plus every partition outside the columns with invariants."""
    rows: dict[str, list[int]] = {}
    unlisted: dict[str, list[str]] = {}
    listed = set(TABLE1_COLUMNS)
    for name in TABLE1_GRAPHS:
        graph = SimpleGraph.named(name)
        rows[name] = [schur_invariants(graph, partition) for partition in TABLE1_COLUMNS]
        rank = graph.cycle_rank
        unlisted[name] = [
            str(partition)
            for weight in range(1, max_weight + 1)
            for partition in partitions(weight, max_rows=rank)
            if partition not in listed and schur_invariants(graph, partition)
        ]
        logger.info(f"Table of S^lambda invariants for {name}: {rows[name]}")
    return Table1(columns=[str(p) for p in TABLE1_COLUMNS], rows=rows, unlisted=unlisted)


class Table2Row(BaseModel):
    graph: str
    edges: str
    stabilizer: str
    order: int
    edge_sign: str


def table2(n: int = 4) -> list[Table2Row]:
    """Stabilizers and restricted edge-sign characters of the nonempty subgraphs of K_n, one row per class."""
    rows: list[Table2Row] = []
    for size in range(1, n * (n - 1) // 2 + 1):
        for iso in iso_classes(enumerate_graphs(n, size)):
            graph = iso.representative
            name = graph.name()
            if name is None:
                continue
            presentation = presentation_for(graph)
            data = cycle_characters(graph)
            rows.append(
                Table2Row(
                    graph=name,
                    edges=str(graph),
                    stabilizer=presentation.description,
                    order=data.group.order,
                    edge_sign=presentation.label(data.edge_sign),
                )
            )
    return rows


class Table3Entry(BaseModel):
    graph: str
    q: int
    terms: dict[str, int]

    def describe(self) -> str:
        """E.g. "3 S(1,1,1,1) + S(2,1,1)"; "0" when there are no invariants."""
        parts = [f"S{p}" if m == 1 else f"{m} S{p}" for p, m in self.terms.items()]
        return " + ".join(parts) or "0"


def non_acyclic_classes(n: int) -> list[SimpleGraph]:
    graphs = [g for size in range(1, n * (n - 1) // 2 + 1) for g in enumerate_graphs(n, size) if not g.is_acyclic()]
    return [iso.representative for iso in iso_classes(graphs)] if graphs else []


def table3(d: int = 2, n: int = 4, max_q: int = 6) -> list[Table3Entry]:
    """Nonzero Schur multiplicities of the edge-sign twisted invariants, per non-acyclic class and degree q."""
    entries: list[Table3Entry] = []
    for graph in non_acyclic_classes(n):
        rank = graph.cycle_rank
        for q in range(1, min(max_q, d * rank) + 1):
            multiplicities = isotypic_multiplicities(graph, q, d)
            terms = {str(p): m for p, m in multiplicities.items() if m}
            entries.append(Table3Entry(graph=graph.name() or str(graph), q=q, terms=terms))
    return entries
