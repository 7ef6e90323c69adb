import logging
import threading
from collections.abc import Sequence
from typing import Protocol

from diagonal_invariants.base import UnsupportedSizeException, get_settings

from .permutation import Permutation

logger: logging.Logger = logging.getLogger(__name__)


class HasEdges(Protocol):
    @property
    def edges(self) -> tuple[tuple[int, int], ...]: ...


class ConjugacyClass:
    def __init__(self, representative: Permutation, elements: Sequence[Permutation]):
        self.representative = representative
        self.elements = tuple(elements)
        self.size = len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.representative}, size={self.size})"


class PermGroup:
    """A permutation group given by generators; elements and classes are enumerated lazily, once."""

    def __init__(self, degree: int, generators: Sequence[Permutation], label: str = ""):
        limit = get_settings().max_group_degree
        if degree > limit:
            raise UnsupportedSizeException("group degree", degree, f"<= {limit} (DIAG_MAX_GROUP_DEGREE)")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"Generator {g} does not act on 1..{degree}")
        self.degree = degree
        self.generators = tuple(g for g in generators if not g.is_identity())
        self.label = label or "<" + ", ".join(map(str, self.generators)) + ">"
        self._lock = threading.Lock()
        self._elements: tuple[Permutation, ...] | None = None
        self._classes: tuple[ConjugacyClass, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None

    @classmethod
    def from_elements(cls, degree: int, elements: Sequence[Permutation], label: str = "") -> "PermGroup":
        """The group with the given (closed) element set; generators are picked greedily in sorted order."""
        ordered = sorted(set(elements), key=lambda g: g.images)
        generators: list[Permutation] = []
        span: set[Permutation] = {Permutation.identity(degree)}
        for g in ordered:
            if g not in span:
                generators.append(g)
                span = set(PermGroup(degree, generators).elements)
        group = cls(degree, generators, label)
        group._elements = tuple(ordered)
        return group

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state: dict) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"PermGroup({self.label}, degree={self.degree})"

    @property
    def elements(self) -> tuple[Permutation, ...]:
        with self._lock:
            if self._elements is None:
                identity = Permutation.identity(self.degree)
                seen: set[Permutation] = {identity}
                frontier = [identity]
                while frontier:
                    nxt: list[Permutation] = []
                    for g in frontier:
                        for s in self.generators:
                            h = s * g
                            if h not in seen:
                                seen.add(h)
                                nxt.append(h)
                    frontier = nxt
                self._elements = tuple(sorted(seen, key=lambda g: g.images))
                logger.debug(f"Enumerated {self.label}: {len(self._elements)} elements")
            return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> frozenset[Permutation]:
        if self._element_set is None:
            self._element_set = frozenset(self.elements)
        return self._element_set

    def __contains__(self, g: Permutation) -> bool:
        return g in self.element_set

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Classes in the order their smallest elements appear; the identity class comes first."""
        elements = self.elements
        with self._lock:
            if self._classes is None:
                seen: set[Permutation] = set()
                classes: list[ConjugacyClass] = []
                for g in elements:
                    if g in seen:
                        continue
                    members = sorted({h * g * h.inverse() for h in elements}, key=lambda x: x.images)
                    seen.update(members)
                    classes.append(ConjugacyClass(members[0], members))
                self._classes = tuple(classes)
            return self._classes

    def class_index(self, g: Permutation) -> int:
        for k, cls in enumerate(self.conjugacy_classes()):
            if g in cls:
                return k
        raise ValueError(f"{g} is not an element of {self.label}")

    def subgroup(self, predicate, label: str = "") -> "PermGroup":
        return PermGroup.from_elements(self.degree, [g for g in self.elements if predicate(g)], label)


def symmetric_group(n: int, points: Sequence[int] | None = None) -> PermGroup:
    """S_n, or the symmetric group S(points) of a subset acting on 1..n."""
    chosen = sorted(points) if points is not None else list(range(1, n + 1))
    generators = [Permutation.from_cycles(n, [(a, b)]) for a, b in zip(chosen, chosen[1:])]
    label = f"S{n}" if points is None else "S{" + ",".join(map(str, chosen)) + "}"
    return PermGroup(n, generators, label)


def stabilizer(group: PermGroup, graph: HasEdges, label: str = "") -> PermGroup:
    """Elements of `group` mapping the edge set of `graph` onto itself."""
    edges = set(graph.edges)
    return group.subgroup(lambda g: {g.map_edge(e) for e in edges} == edges, label or f"Stab({sorted(edges)})")
