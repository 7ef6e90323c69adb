"""Invariant E1 terms of the spectral sequence of the pairwise diagonal ideals, one entry per graph class."""

import logging

import pandas as pd
from pydantic import BaseModel

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.charlab import cycle_characters, isotypic_multiplicities
from diagonal_invariants.graphlab import SimpleGraph, enumerate_graphs, iso_classes

logger: logging.Logger = logging.getLogger(__name__)


class E1Term(BaseModel):
    graph: str
    name: str | None
    stabilizer_order: int
    present: bool
    terms: dict[str, int] = {}


def diagonal_kernel_sign_trivial(graph: SimpleGraph) -> bool:
    """Whether the edge sign is trivial on the stabilizer elements that act trivially on the diagonal of `graph`.

    Those elements keep every component's vertex set in place and fix every vertex outside the graph; the
    functions on the diagonal contain the edge-sign twist among their invariants exactly in this case.
    """
    data = cycle_characters(graph)
    components = [set(c) for c in graph.components()]
    outside = set(range(1, graph.n + 1)) - set(graph.vertices)
    for g in data.group.elements:
        if any(g(p) != p for p in outside):
            continue
        if all({g(v) for v in c} == c for c in components) and data.edge_sign(g) != 1:
            return False
    return True


def e1_page(n: int, p: int, q: int, d: int = 2) -> list[E1Term]:
    """Invariant content of E1^{p,q}: one entry per class of graphs with p edges.

    q = 0 reports whether the edge-sign twisted diagonal has invariants; q < 0 lists the Schur multiplicities
    of the twisted multitor in degree -q; q > 0 is empty.
    """
    if not 1 <= n <= 5:
        raise UnsupportedSizeException("point count", n, "1..5")
    if n < 2 or not 1 <= p <= n * (n - 1) // 2:
        return []
    terms: list[E1Term] = []
    for iso in iso_classes(enumerate_graphs(n, p)):
        graph = iso.representative
        data = cycle_characters(graph)
        multiplicities: dict[str, int] = {}
        if q == 0:
            present = diagonal_kernel_sign_trivial(graph)
        elif q < 0 and -q <= d * graph.cycle_rank:
            multiplicities = {str(k): m for k, m in isotypic_multiplicities(graph, -q, d).items() if m}
            present = bool(multiplicities)
        else:
            present = False
        terms.append(E1Term(graph=str(graph), name=graph.name(), stabilizer_order=data.group.order, present=present, terms=multiplicities))
    logger.debug(f"E1^({p},{q}) for n={n}: {sum(t.present for t in terms)} of {len(terms)} classes contribute")
    return terms


def e1_dataframe(terms: list[E1Term], p: int, q: int) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"p": p, "q": q, "graph": t.graph, "name": t.name or "", "stabilizer_order": t.stabilizer_order, "present": t.present}
            | {"terms": " + ".join(f"{m} S{k}" if m > 1 else f"S{k}" for k, m in t.terms.items())}
            for t in terms
        ]
    )
