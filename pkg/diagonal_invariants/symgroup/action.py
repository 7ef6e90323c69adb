"""The diagonal action of point permutations on the ambient ring, Reynolds averaging and invariant bases."""

import logging
from collections.abc import Sequence

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from diagonal_invariants.base import RingMismatchException
from diagonal_invariants.polycore import (
    GradedSpace,
    Monom,
    PolyRing,
    PolynomialSpace,
    QuotientSpace,
    independent_subset,
    nullspace,
)

from .group import PermGroup
from .permutation import Permutation

logger: logging.Logger = logging.getLogger(__name__)


def position_map(sigma: Permutation, ring: PolyRing) -> list[int]:
    """Where each exponent position moves under sigma: x_{j,i} goes to x_{sigma(j),i}; dx and t stay put."""
    if sigma.degree != ring.n:
        raise RingMismatchException(f"S_{sigma.degree}", ring.label)
    targets: list[int] = []
    for position in range(ring.ngens):
        kind, j, i = ring.locate(position)
        targets.append(ring.index(sigma(j), i) if kind == "x" else position)
    return targets


def permute_monomial(targets: Sequence[int], monom: Monom) -> Monom:
    moved = [0] * len(monom)
    for position, exponent in enumerate(monom):
        if exponent:
            moved[targets[position]] = exponent
    return tuple(moved)


def act(sigma: Permutation, p: PolyElement, ring: PolyRing) -> PolyElement:
    """The ring automorphism x_{j,i} -> x_{sigma(j),i}."""
    targets = position_map(sigma, ring)
    return p.ring.from_dict({permute_monomial(targets, m): c for m, c in p.items()})


def reynolds(group: PermGroup, p: PolyElement, ring: PolyRing) -> PolyElement:
    """(1/|G|) sum_g g.p"""
    total = p.ring.zero
    for g in group.elements:
        total += act(g, p, ring)
    return total * QQ(1, group.order)


def orbit(group: PermGroup, monom: Monom, ring: PolyRing) -> list[Monom]:
    maps = [position_map(g, ring) for g in group.elements]
    return sorted({permute_monomial(targets, monom) for targets in maps}, reverse=True)


def orbit_sum(group: PermGroup, monom: Monom, ring: PolyRing) -> PolyElement:
    """Sum of the distinct monomials in the orbit of `monom` (no 1/|G| normalization)."""
    return ring.sympy_ring().from_dict({m: QQ.one for m in orbit(group, monom, ring)})


def orbit_sums(group: PermGroup, monomials: Sequence[Monom], ring: PolyRing) -> list[PolyElement]:
    """One orbit sum per orbit met in `monomials`, in order of first appearance."""
    maps = [position_map(g, ring) for g in group.elements]
    seen: set[Monom] = set()
    sums: list[PolyElement] = []
    target = ring.sympy_ring()
    for monom in monomials:
        if monom in seen:
            continue
        members = {permute_monomial(targets, monom) for targets in maps}
        seen |= members
        sums.append(target.from_dict({m: QQ.one for m in members}))
    return sums


def _check_stable(space: GradedSpace, group: PermGroup) -> None:
    for g in group.generators:
        if not space.is_stable(lambda p, g=g: act(g, p, space.ring)):
            raise ValueError(f"{space.label} is not stable under {g} in {group.label}")


def invariant_basis(space: GradedSpace, group: PermGroup, degree: int) -> list[PolyElement]:
    """Canonical basis of the G-invariants in the degree-`degree` piece of `space`.

    Polynomial spaces: orbit sums. Quotients: an independent subset of the normal forms of orbit sums.
    Ideals and intersections: the kernel of the residue map restricted to orbit sums.
    """
    _check_stable(space, group)
    if degree < 0:
        return []
    ring = space.ring
    monomials = space.monomials(degree)
    sums = orbit_sums(group, monomials, ring)
    if isinstance(space, PolynomialSpace):
        return sums
    residues = [space.residue(s) for s in sums]
    if isinstance(space, QuotientSpace):
        target = ring.sympy_ring()
        return [target.from_dict(residues[k]) for k in independent_subset(residues)]
    target = ring.sympy_ring()
    basis: list[PolyElement] = []
    for relation in nullspace(residues):
        combo = target.zero
        for coefficient, s in zip(relation, sums):
            if coefficient:
                combo += s * coefficient
        basis.append(combo)
    logger.debug(f"{space.label}^{group.label} in degree {degree}: {len(basis)} of {len(sums)} orbit sums")
    return basis


def invariant_dimension(space: GradedSpace, group: PermGroup, degree: int) -> int:
    return len(invariant_basis(space, group, degree))
