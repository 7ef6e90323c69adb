"""Multitors of pairwise diagonals: a Koszul-complex oracle and the closed form as a free module with a character."""

import logging
from math import comb

from pydantic import BaseModel, ConfigDict, Field
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, ring

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.charlab import cycle_characters, exterior_character
from diagonal_invariants.graphlab import Edge, SimpleGraph, spanning_forest
from diagonal_invariants.polycore import PolyRing, coordinates
from diagonal_invariants.symgroup import ClassFunction

from .complex import KoszulComplex, monomial_count

logger: logging.Logger = logging.getLogger(__name__)


class KoszulFactor(BaseModel):
    """The rank-d bundle of one edge with the section whose components cut out its diagonal."""

    model_config = ConfigDict(frozen=True)

    edge: Edge
    d: int = Field(default=2, ge=1)

    def section(self, ambient: PolyRing) -> list[PolyElement]:
        a, b = self.edge
        return [ambient.var(a, i) - ambient.var(b, i) for i in range(1, self.d + 1)]

    def complex(self, ambient: PolyRing) -> KoszulComplex:
        return KoszulComplex(self.section(ambient), label=f"K(s_{self.edge[0]}{self.edge[1]})")


def total_koszul_complex(graph: SimpleGraph, d: int = 2) -> KoszulComplex:
    """Tensor product of the edge Koszul complexes, factors in lex order of the edges, over the full ring."""
    ambient = PolyRing(n=graph.n, d=d)
    forms = [f for edge in graph.edges for f in KoszulFactor(edge=edge, d=d).section(ambient)]
    return KoszulComplex(forms, label=f"K{graph}")


def reduced_forms(graph: SimpleGraph, d: int = 2) -> tuple[list[PolyElement], int]:
    """The same forms written in the forest-edge coordinates y_{k,i} = x_{a,i} - x_{b,i}.

    Returns the forms and the number r of coordinates used; the other coordinates of X^n never appear.
    """
    forest = spanning_forest(graph)
    names = [f"y{k}_{i}" for k in range(len(forest)) for i in range(1, d + 1)]
    target, *gens = ring(",".join(names), QQ, grevlex)
    basis = [{a: QQ.one, b: -QQ.one} for a, b in forest]
    forms: list[PolyElement] = []
    for a, b in graph.edges:
        coefficients = coordinates({a: QQ.one, b: -QQ.one}, basis)
        if coefficients is None:
            raise ArithmeticError(f"Edge {a}{b} is not spanned by the spanning forest of {graph}")
        for i in range(d):
            form = target.zero
            for k, c in enumerate(coefficients):
                if c:
                    form += gens[k * d + i] * c
            forms.append(form)
    return forms, len(names)


def _check_degree(graph: SimpleGraph, q: int, d: int) -> None:
    if not 0 <= q <= d * graph.l:
        raise UnsupportedSizeException("multitor degree", q, f"0..{d * graph.l} for {graph}")


def multitor_oracle(graph: SimpleGraph, q: int, degree_bound: int, d: int = 2) -> dict[int, int]:
    """dim of the degree-t piece of H^{-q} of the total Koszul complex, for t = 0..degree_bound.

    Computed over the forest coordinates, then spread over the free coordinates by counting monomials.
    """
    _check_degree(graph, q, d)
    forms, used = reduced_forms(graph, d)
    complex_ = KoszulComplex(forms, label=f"K{graph}")
    free = d * graph.n - used
    reduced = [complex_.homology(q, a) for a in range(degree_bound + 1)]
    logger.debug(f"Reduced multitor of {graph} at q={q}: {reduced}")
    return {t: sum(reduced[a] * monomial_count(free, t - a) for a in range(t + 1)) for t in range(degree_bound + 1)}


def expected_multitor_dims(graph: SimpleGraph, q: int, degree_bound: int, d: int = 2) -> dict[int, int]:
    """Free module of rank C(dc, q) over the coordinate ring of the diagonal, generated in degree q."""
    _check_degree(graph, q, d)
    free = d * graph.n - d * (graph.v - graph.k)
    return {t: comb(d * graph.cycle_rank, q) * monomial_count(free, t - q) for t in range(degree_bound + 1)}


class MultitorFormula(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    graph: str
    q: int
    rank: int
    character: ClassFunction
    invariants: int


def multitor_formula(graph: SimpleGraph, q: int, d: int = 2) -> MultitorFormula:
    """Rank C(dc, q) and the character of Lambda^q(C^d (x) q_Gamma) (x) eps_E on the stabilizer."""
    data = cycle_characters(graph)
    character = exterior_character(d * data.cycle, q) * data.edge_sign
    rank = comb(d * data.rank, q)
    if character.degree != rank:
        raise ArithmeticError(f"Character degree {character.degree} differs from rank {rank} for {graph}, q={q}")
    invariants = character.invariant_dim()
    return MultitorFormula(graph=str(graph), q=q, rank=rank, character=character, invariants=int(invariants))
