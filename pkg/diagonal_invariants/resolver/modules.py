"""Graded modules over the symmetric quotient, realized inside one ambient ring with differentials."""

import logging
from collections.abc import Callable, Sequence

from sympy.polys.rings import PolyElement

from diagonal_invariants.polycore import PolyRing, Vector, nullspace, poly_vector, tuple_vector
from diagonal_invariants.symgroup import PermGroup

logger: logging.Logger = logging.getLogger(__name__)

# A section is a polynomial or, for modules built from several charts, a tuple of polynomials.
Element = PolyElement | tuple[PolyElement, ...]


def element_vector(element: Element) -> Vector:
    return tuple_vector(element) if isinstance(element, tuple) else poly_vector(element)


def is_zero(element: Element) -> bool:
    return all(not part for part in element) if isinstance(element, tuple) else not element


def combine(elements: Sequence[Element], coefficients: Sequence[object]) -> Element:
    """sum_k coefficients[k] * elements[k]; tuples are combined componentwise."""
    first = elements[0]
    if isinstance(first, tuple):
        total = [part.ring.zero for part in first]
        for c, element in zip(coefficients, elements):
            if c:
                for k, part in enumerate(element):
                    total[k] += part * c
        return tuple(total)
    result = first.ring.zero
    for c, element in zip(coefficients, elements):
        if c:
            result += element * c
    return result


def kernel_elements(elements: Sequence[Element], apply: Callable[[Element], Element]) -> list[Element]:
    """A basis of the kernel of `apply` on the span of the independent family `elements`."""
    if not elements:
        return []
    relations = nullspace([element_vector(apply(e)) for e in elements])
    return [combine(elements, relation) for relation in relations]


def element_degree(element: Element) -> set[int]:
    """The set of total degrees of the terms of an element (dx counts 1)."""
    parts = element if isinstance(element, tuple) else (element,)
    return {sum(m) for part in parts for m in part.itermonoms()}


class InvariantModule:
    """A graded module given degreewise by a basis of elements of the ambient ring.

    `builder(t)` returns an independent family spanning the degree-t piece; results are cached per degree.
    `shift` moves every degree: the piece of degree t is the builder's piece of degree t - shift.
    """

    def __init__(
        self,
        name: str,
        ring: PolyRing,
        builder: Callable[[int], list[Element]],
        group: PermGroup | None = None,
        twist: str = "",
        shift: int = 0,
    ):
        self.name = name
        self.ring = ring
        self.group = group
        self.twist = twist
        self.shift = shift
        self._builder = builder
        self._cache: dict[int, list[Element]] = {}

    def __repr__(self) -> str:
        suffix = f"({self.shift:+d})" if self.shift else ""
        return f"InvariantModule({self.name}{suffix})"

    def basis(self, degree: int) -> list[Element]:
        inner = degree - self.shift
        if inner < 0:
            return []
        if inner not in self._cache:
            self._cache[inner] = self._builder(inner)
            logger.debug(f"{self.name} in degree {inner}: dimension {len(self._cache[inner])}")
        return self._cache[inner]

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def shifted(self, shift: int) -> "InvariantModule":
        module = InvariantModule(self.name, self.ring, self._builder, self.group, self.twist, self.shift + shift)
        module._cache = self._cache
        return module


def tuple_basis(parts: Sequence[list[PolyElement]], zero: PolyElement) -> list[tuple[PolyElement, ...]]:
    """Basis of a direct sum: each basis element of each summand, padded with zeros."""
    result: list[tuple[PolyElement, ...]] = []
    for k, basis in enumerate(parts):
        for element in basis:
            padded = [zero] * len(parts)
            padded[k] = element
            result.append(tuple(padded))
    return result
