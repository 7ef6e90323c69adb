"""Named generators of the stabilizers of the small graphs, used to label one-dimensional characters."""

import logging
from itertools import permutations
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.graphlab import NAMED_GRAPHS, SimpleGraph, graph_stabilizer
from diagonal_invariants.symgroup import ClassFunction, PermGroup, Permutation

from .tables import CharacterTable, cyclic2_table, dihedral_table, product_name, product_table, symmetric_table

logger: logging.Logger = logging.getLogger(__name__)

_SIGN_LABELS: dict[int, str] = {1: "1", -1: "ε"}

_DIHEDRAL_LABELS: dict[tuple[int, int], str] = {
    (1, 1): "1",
    (1, -1): "det",
    (-1, 1): "ℓ(-1_ρ,1_σ)",
    (-1, -1): "ℓ(-1_ρ,-1_σ)",
}


class StabilizerFactor(BaseModel):
    """A symmetric group on some points, a group of order 2, or a D_4 given by (rotation, reflection)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["symmetric", "cyclic2", "dihedral"]
    n: int
    points: tuple[int, ...] = ()
    generators: tuple[Permutation, ...] = ()

    @classmethod
    def symmetric(cls, n: int, *points: int) -> "StabilizerFactor":
        chosen = tuple(sorted(points))
        transpositions = tuple(Permutation.from_cycles(n, [(a, b)]) for a, b in zip(chosen, chosen[1:]))
        return cls(kind="symmetric", n=n, points=chosen, generators=transpositions)

    @classmethod
    def cyclic2(cls, n: int, cycles: str) -> "StabilizerFactor":
        return cls(kind="cyclic2", n=n, generators=(Permutation.parse(n, cycles),))

    @classmethod
    def dihedral(cls, n: int, rho: str, sigma: str) -> "StabilizerFactor":
        return cls(kind="dihedral", n=n, generators=(Permutation.parse(n, rho), Permutation.parse(n, sigma)))

    def __str__(self) -> str:
        match self.kind:
            case "symmetric":
                return "S{" + ",".join(map(str, self.points)) + "}"
            case "cyclic2":
                return f"<{self.generators[0]}>"
            case _:
                return f"D4<{self.generators[0]},{self.generators[1]}>"

    def conjugated(self, tau: Permutation) -> "StabilizerFactor":
        """The same factor after relabeling the points by tau."""
        return self.model_copy(
            update={
                "points": tuple(sorted(tau(p) for p in self.points)),
                "generators": tuple(tau * g * tau.inverse() for g in self.generators),
            }
        )

    def table(self) -> CharacterTable:
        match self.kind:
            case "symmetric":
                return symmetric_table(self.n, self.points)
            case "cyclic2":
                return cyclic2_table(self.n, self.generators[0])
            case _:
                return dihedral_table(self.n, self.generators[0], self.generators[1])

    def label(self, chi: ClassFunction) -> str:
        """Name of the one-dimensional character with chi's values on the generators."""
        values = tuple(int(chi(g)) for g in self.generators)
        if self.kind == "dihedral":
            return _DIHEDRAL_LABELS[values]  # type: ignore[index]
        if len(set(values)) != 1:
            raise ValueError(f"{chi.label or chi} is not a character on {self}")
        return _SIGN_LABELS[values[0]]


class StabilizerPresentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: str
    n: int
    factors: tuple[StabilizerFactor, ...] = Field(description="Generators used to label one-dimensional characters.")
    table_factors: tuple[StabilizerFactor, ...] | None = Field(
        default=None, description="Direct factors the character table is built from, when they differ from `factors`."
    )

    @property
    def description(self) -> str:
        return "×".join(map(str, self.factors))

    def conjugated(self, tau: Permutation) -> "StabilizerPresentation":
        return self.model_copy(
            update={
                "factors": tuple(f.conjugated(tau) for f in self.factors),
                "table_factors": tuple(f.conjugated(tau) for f in self.table_factors) if self.table_factors else None,
            }
        )

    def generators(self) -> list[Permutation]:
        return [g for f in self.factors for g in f.generators]

    def label(self, chi: ClassFunction) -> str:
        """"1" or the factor labels joined by ⊗, for a one-dimensional character."""
        if chi.degree != 1:
            raise ValueError(f"{chi.label or chi} has degree {chi.degree}, not 1")
        return product_name([f.label(chi) for f in self.factors])

    def table(self, group: PermGroup | None = None) -> CharacterTable:
        factors = self.table_factors or self.factors
        table = factors[0].table() if len(factors) == 1 else product_table(*(f.table() for f in factors))
        return table.transfer(group) if group is not None else table


def _presentation(n: int, name: str, *factors: StabilizerFactor, table_factors: tuple[StabilizerFactor, ...] | None = None) -> StabilizerPresentation:
    return StabilizerPresentation(graph=name, n=n, factors=factors, table_factors=table_factors)


_S = StabilizerFactor.symmetric

PRESENTATIONS: dict[tuple[int, str], StabilizerPresentation] = {
    (3, "A1"): _presentation(3, "A1", _S(3, 1, 2)),
    (3, "A2"): _presentation(3, "A2", _S(3, 2, 3)),
    (3, "K3"): _presentation(3, "K3", _S(3, 1, 2, 3)),
    (4, "A1"): _presentation(4, "A1", _S(4, 1, 2), _S(4, 3, 4)),
    (4, "A2"): _presentation(4, "A2", _S(4, 2, 3)),
    (4, "B2"): _presentation(
        4,
        "B2",
        _S(4, 1, 2),
        _S(4, 3, 4),
        StabilizerFactor.cyclic2(4, "(1 3)(2 4)"),
        table_factors=(StabilizerFactor.dihedral(4, "(1 3 2 4)", "(3 4)"),),
    ),
    (4, "A3"): _presentation(4, "A3", StabilizerFactor.cyclic2(4, "(1 4)(2 3)")),
    (4, "B3"): _presentation(4, "B3", _S(4, 2, 3, 4)),
    (4, "K3"): _presentation(4, "K3", _S(4, 1, 2, 3)),
    (4, "K3uJ"): _presentation(4, "K3uJ", _S(4, 1, 2)),
    (4, "C4"): _presentation(4, "C4", StabilizerFactor.dihedral(4, "(1 2 3 4)", "(2 4)")),
    (4, "C4uL"): _presentation(4, "C4uL", _S(4, 1, 3), _S(4, 2, 4)),
    (4, "K4"): _presentation(4, "K4", _S(4, 1, 2, 3, 4)),
}


def _relabeling(source: SimpleGraph, target: SimpleGraph) -> Permutation:
    wanted = set(target.edges)
    for images in permutations(range(1, source.n + 1)):
        tau = Permutation.model_construct(images=images)
        if {tau.map_edge(e) for e in source.edges} == wanted:
            return tau
    raise ValueError(f"{source} and {target} are not isomorphic")


def presentation_for(graph: SimpleGraph) -> StabilizerPresentation:
    """The stored presentation, moved onto the actual edge set of `graph`."""
    name = graph.name()
    if name is None or (graph.n, name) not in PRESENTATIONS:
        raise UnsupportedSizeException("stabilizer presentation", str(graph), "nonempty subgraphs of K_3 and K_4")
    stored = PRESENTATIONS[(graph.n, name)]
    named = SimpleGraph(n=graph.n, edges=NAMED_GRAPHS[name])
    if named.edges == graph.edges:
        return stored
    return stored.conjugated(_relabeling(named, graph))


def builtin_table(graph: SimpleGraph, group: PermGroup | None = None) -> CharacterTable:
    """Irreducible characters of the stabilizer of `graph`, on `group` when it is given."""
    return presentation_for(graph).table(group or graph_stabilizer(graph))
