"""Subgraphs of the complete graph K_n without isolated vertices."""

import re
from itertools import combinations, permutations
from typing_extensions import Self

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.symgroup import Permutation

Edge = tuple[int, int]

NAMED_GRAPHS: dict[str, tuple[Edge, ...]] = {
    "A1": ((1, 2),),
    "A2": ((1, 2), (1, 3)),
    "B2": ((1, 2), (3, 4)),
    "A3": ((1, 2), (2, 3), (3, 4)),
    "B3": ((1, 2), (1, 3), (1, 4)),
    "K3": ((1, 2), (1, 3), (2, 3)),
    "K3uJ": ((1, 2), (1, 3), (2, 3), (3, 4)),
    "C4": ((1, 2), (1, 4), (2, 3), (3, 4)),
    "C4uL": ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4)),
    "K4": ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)),
}


class SimpleGraph(BaseModel):
    """An edge set inside K_n; the vertices are exactly the endpoints of the edges."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Vertex count of the ambient complete graph.")
    edges: tuple[Edge, ...] = Field(description="Edges (i, j) with i < j, strictly increasing in lex order.")

    @field_validator("edges", mode="before")
    @classmethod
    def normalize_edges(cls, value: object) -> tuple[Edge, ...]:
        edges: set[Edge] = set()
        for raw in value:  # type: ignore[union-attr]
            a, b = (int(x) for x in raw)
            if a == b:
                raise ValueError(f"Loops are not allowed: {raw}")
            edges.add((min(a, b), max(a, b)))
        return tuple(sorted(edges))

    @model_validator(mode="after")
    def validate_vertices(self) -> Self:
        if any(b > self.n for _, b in self.edges) or any(a < 1 for a, _ in self.edges):
            raise ValueError(f"Edges {self.edges} do not fit in K_{self.n}")
        return self

    @classmethod
    def parse(cls, n: int, text: str) -> "SimpleGraph":
        """Parse "12 13 23" (single-digit vertices) or "1-2 1-3 2-3"."""
        edges: list[Edge] = []
        for token in text.replace(",", " ").split():
            parts = re.split(r"[-:]", token) if re.search(r"[-:]", token) else list(token)
            if len(parts) != 2:
                raise ValueError(f"Cannot parse edge {token!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls(n=n, edges=tuple(edges))

    @classmethod
    def named(cls, name: str, n: int | None = None) -> "SimpleGraph":
        edges = NAMED_GRAPHS[name]
        return cls(n=n or max(b for _, b in edges), edges=edges)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for edge in self.edges for v in edge}))

    @property
    def v(self) -> int:
        return len(self.vertices)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
        return sorted(tuple(sorted(c)) for c in nx.connected_components(self.to_networkx()))

    @property
    def k(self) -> int:
        return len(self.components())

    @property
    def cycle_rank(self) -> int:
        return self.l - self.v + self.k

    def is_acyclic(self) -> bool:
        return self.cycle_rank == 0

    def permuted(self, sigma: Permutation) -> "SimpleGraph":
        return SimpleGraph(n=self.n, edges=tuple(sigma.map_edge(e) for e in self.edges))

    def is_subgraph_of(self, other: "SimpleGraph") -> bool:
        return set(self.edges) <= set(other.edges)

    def name(self) -> str | None:
        """Name of the isomorphism type among the named small graphs, if any."""
        for name, edges in NAMED_GRAPHS.items():
            if len(edges) != self.l or len({v for e in edges for v in e}) != self.v:
                continue
            if nx.is_isomorphic(self.to_networkx(), SimpleGraph(n=4, edges=edges).to_networkx()):
                return name
        return None

    def edge_list(self) -> list[list[int]]:
        return [list(e) for e in self.edges]

    def __str__(self) -> str:
        return "{" + ",".join(f"{a}{b}" if self.n < 10 else f"{a}-{b}" for a, b in self.edges) + "}"


def complete_graph_edges(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def enumerate_graphs(n: int, l: int) -> list[SimpleGraph]:  # noqa: E741
    """All subgraphs of K_n with `l` edges, in lex order of their edge lists."""
    total = n * (n - 1) // 2
    if not 1 <= l <= total:
        raise UnsupportedSizeException("edge count", l, f"1..{total} for n={n}")
    return [SimpleGraph(n=n, edges=edges) for edges in combinations(complete_graph_edges(n), l)]


class IsoClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    representative: SimpleGraph
    members: tuple[SimpleGraph, ...]

    @property
    def name(self) -> str | None:
        return self.representative.name()

    @property
    def size(self) -> int:
        return len(self.members)


def canonical_form(graph: SimpleGraph) -> tuple[Edge, ...]:
    """Lex-least edge list in the S_n-orbit of `graph`."""
    best: tuple[Edge, ...] | None = None
    for images in permutations(range(1, graph.n + 1)):
        sigma = Permutation.model_construct(images=images)
        candidate = tuple(sorted(sigma.map_edge(e) for e in graph.edges))
        if best is None or candidate < best:
            best = candidate
    return best or ()


def iso_classes(graphs: list[SimpleGraph]) -> list[IsoClass]:
    """Orbits of `graphs` under S_n, each represented by its lex-least member; ordered by representative."""
    if len({g.n for g in graphs}) > 1:
        raise ValueError("All graphs must share the same ambient n")
    buckets: dict[tuple[Edge, ...], list[SimpleGraph]] = {}
    for graph in graphs:
        buckets.setdefault(canonical_form(graph), []).append(graph)
    return [
        IsoClass(representative=SimpleGraph(n=members[0].n, edges=key), members=tuple(members))
        for key, members in sorted(buckets.items(), key=lambda item: (len(item[0]), item[0]))
    ]
