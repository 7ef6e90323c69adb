"""Cycle spaces, the signed edge representation W, the cycle representation q and edge-sign characters."""

import logging
from itertools import permutations
from math import factorial, prod

import networkx as nx
from networkx.utils import UnionFind
from pydantic import BaseModel, ConfigDict
from sympy.polys.domains import QQ

from diagonal_invariants.polycore import nullspace
from diagonal_invariants.symgroup import ClassFunction, MatrixRep, PermGroup, Permutation, stabilizer, symmetric_group

from .graph import Edge, SimpleGraph

logger: logging.Logger = logging.getLogger(__name__)


def connected_components(graph: SimpleGraph) -> list[tuple[int, ...]]:
    return graph.components()


def spanning_forest(graph: SimpleGraph) -> list[Edge]:
    """Lex-greedy spanning forest: an edge is kept when it joins two different trees."""
    trees = UnionFind(graph.vertices)
    forest: list[Edge] = []
    for a, b in graph.edges:
        if trees[a] != trees[b]:
            trees.union(a, b)
            forest.append((a, b))
    return forest


class OrientedCycle(BaseModel):
    """A closed walk without repeated vertices; the walk returns from the last vertex to the first."""

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...]

    def steps(self) -> list[tuple[int, int]]:
        return [(self.vertices[k], self.vertices[(k + 1) % len(self.vertices)]) for k in range(len(self.vertices))]

    def eta(self, edge: Edge) -> int:
        """+1 when the walk goes from the smaller to the larger endpoint of `edge`, -1 against it."""
        for a, b in self.steps():
            if (min(a, b), max(a, b)) == edge:
                return 1 if a < b else -1
        raise ValueError(f"Edge {edge} is not on the cycle {self.vertices}")

    def vector(self) -> dict[Edge, int]:
        """e_gamma = sum_I eta(I, gamma) e_I."""
        return {(min(a, b), max(a, b)): (1 if a < b else -1) for a, b in self.steps()}


def fundamental_cycles(graph: SimpleGraph) -> list[OrientedCycle]:
    """One cycle per non-forest edge (a, b): a, then the forest path from b back to a."""
    forest_edges = spanning_forest(graph)
    forest = nx.Graph()
    forest.add_nodes_from(graph.vertices)
    forest.add_edges_from(forest_edges)
    kept = set(forest_edges)
    cycles: list[OrientedCycle] = []
    for a, b in graph.edges:
        if (a, b) in kept:
            continue
        path = nx.shortest_path(forest, b, a)
        cycles.append(OrientedCycle(vertices=(a, *path[:-1])))
    return cycles


def boundary_matrix(graph: SimpleGraph) -> list[list[int]]:
    """Rows indexed by vertices, columns by edges: e_ij -> e_j - e_i."""
    rows = {v: k for k, v in enumerate(graph.vertices)}
    matrix = [[0] * graph.l for _ in graph.vertices]
    for column, (i, j) in enumerate(graph.edges):
        matrix[rows[j]][column] += 1
        matrix[rows[i]][column] -= 1
    return matrix


def graph_stabilizer(graph: SimpleGraph) -> PermGroup:
    return stabilizer(symmetric_group(graph.n), graph, label=f"Stab{graph}")


def signed_edge_image(sigma: Permutation, edge: Edge) -> tuple[Edge, int]:
    """sigma e_I = s e_{sigma(I)} with s = -1 when sigma reverses the endpoints' order."""
    a, b = sigma(edge[0]), sigma(edge[1])
    return ((a, b), 1) if a < b else ((b, a), -1)


def edge_representation(graph: SimpleGraph, group: PermGroup | None = None) -> MatrixRep:
    """The signed permutation representation W on the basis e_I, I in E."""
    group = group or graph_stabilizer(graph)
    column_of = {edge: k for k, edge in enumerate(graph.edges)}

    def matrix(sigma: Permutation) -> list[list[int]]:
        rows = [[0] * graph.l for _ in graph.edges]
        for column, edge in enumerate(graph.edges):
            image, sign = signed_edge_image(sigma, edge)
            if image not in column_of:
                raise ValueError(f"{sigma} does not preserve the edges of {graph}")
            rows[column_of[image]][column] = sign
        return rows

    return MatrixRep.from_function(group, graph.l, matrix, label=f"W{graph}")


class CycleData(BaseModel):
    model_config = ConfigDict(frozen=True)

    rank: int
    cycles: tuple[OrientedCycle, ...]
    basis: tuple[tuple[int, ...], ...]


def cycle_data(graph: SimpleGraph) -> CycleData:
    """Cycle rank, the fundamental cycles and their vectors (coordinates on the edge basis)."""
    cycles = fundamental_cycles(graph)
    basis = tuple(tuple(c.vector().get(edge, 0) for edge in graph.edges) for c in cycles)
    rank = graph.l - graph.v + graph.k
    if len(cycles) != rank:
        raise ArithmeticError(f"Found {len(cycles)} fundamental cycles in {graph}, expected cycle rank {rank}")
    return CycleData(rank=rank, cycles=tuple(cycles), basis=basis)


def boundary_kernel_dimension(graph: SimpleGraph) -> int:
    columns = [{k: QQ(v) for k, v in enumerate(col) if v} for col in zip(*boundary_matrix(graph))]
    return len(nullspace(columns))


def cycle_representation(graph: SimpleGraph, group: PermGroup | None = None) -> MatrixRep:
    """q = ker(boundary) inside W, with the restricted action, on the fundamental cycle basis."""
    edge_rep = edge_representation(graph, group)
    return edge_rep.restrict(cycle_data(graph).basis, label=f"q{graph}")


def edge_sign_character(graph: SimpleGraph, group: PermGroup | None = None) -> ClassFunction:
    """The sign of the (unsigned) permutation each group element induces on the edge set."""
    group = group or graph_stabilizer(graph)
    position = {edge: k for k, edge in enumerate(graph.edges)}

    def sign(sigma: Permutation) -> int:
        induced = [position[sigma.map_edge(edge)] + 1 for edge in graph.edges]
        return Permutation(images=tuple(induced)).sign if induced else 1

    return ClassFunction.from_function(group, sign, label=f"eps_E{graph}")


def epsilon_sign(sub: SimpleGraph, sup: SimpleGraph) -> int:
    """Product of the single-edge insertion signs (-1)^(a-1), inserting the missing edges in lex order.

    `a` is the position of the inserted edge in the lex-ordered edge list after insertion. Along a chain
    G < G'' < G' the signs multiply when every edge of G'' - G precedes every edge of G' - G''; other insertion
    orders can flip the sign.
    """
    if not sub.is_subgraph_of(sup):
        raise ValueError(f"{sub} is not a subgraph of {sup}")
    current = set(sub.edges)
    sign = 1
    for edge in sorted(set(sup.edges) - current):
        current.add(edge)
        position = sorted(current).index(edge) + 1
        sign *= -1 if (position - 1) % 2 else 1
    return sign


def _automorphism_count(graph: SimpleGraph, vertices: tuple[int, ...]) -> int:
    edges = {e for e in graph.edges if e[0] in vertices}
    count = 0
    for images in permutations(vertices):
        relabel = dict(zip(vertices, images))
        if {tuple(sorted((relabel[a], relabel[b]))) for a, b in edges} == edges:
            count += 1
    return count


def split_order(graph: SimpleGraph) -> int:
    """|Stab| from the split sequence: (n - v)! times the component automorphisms times permutations of isomorphic components."""
    components = graph.components()
    inner = prod(_automorphism_count(graph, c) for c in components)
    shapes: dict[tuple, int] = {}
    for c in components:
        sub = SimpleGraph(n=graph.n, edges=tuple(e for e in graph.edges if e[0] in c))
        relabel = {v: k + 1 for k, v in enumerate(c)}
        local = SimpleGraph(n=len(c), edges=tuple((relabel[a], relabel[b]) for a, b in sub.edges))
        key = next((key for key in shapes if nx.is_isomorphic(SimpleGraph(n=key[0], edges=key[1]).to_networkx(), local.to_networkx())), None)
        if key is None:
            shapes[(local.n, local.edges)] = 1
        else:
            shapes[key] += 1
    return factorial(graph.n - graph.v) * inner * prod(factorial(m) for m in shapes.values())
