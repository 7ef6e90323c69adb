"""Graded subquotients of the ambient ring and their Hilbert functions."""

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from math import comb

from sympy.polys.rings import PolyElement

from diagonal_invariants.base import ComputationTooLargeException, get_settings

from .ideal import Ideal
from .linalg import Vector, nullspace, poly_vector, rank, tuple_vector
from .ring import Monom, PolyRing

Transform = Callable[[PolyElement], PolyElement]


def guard_monomials(count: int) -> None:
    limit = get_settings().max_monomials
    if count > limit:
        raise ComputationTooLargeException(count, limit)


def degree_of(p: PolyElement) -> int:
    return max((sum(m) for m in p.itermonoms()), default=0)


class GradedSpace(ABC):
    """A graded subspace or quotient of a polynomial ring, sliced degree by degree."""

    ring: PolyRing
    label: str

    def monomials(self, degree: int) -> list[Monom]:
        """Spanning monomials of the ambient piece this space lives in."""
        monomials = list(self.ring.monomials(degree))
        guard_monomials(len(monomials))
        return monomials

    @abstractmethod
    def dimension(self, degree: int) -> int:
        """Dimension of the degree-`degree` piece.

        Args:
            degree (int): Internal degree, nonnegative.

        Returns:
            int: The Hilbert function value.
        """
        pass

    @abstractmethod
    def basis(self, degree: int) -> list[PolyElement]:
        """A basis of the degree-`degree` piece (representatives for quotients)."""
        pass

    @abstractmethod
    def residue(self, p: PolyElement) -> Vector:
        """A vector that vanishes exactly when `p` lies in the space (or is zero in the quotient)."""
        pass

    def contains(self, p: PolyElement) -> bool:
        return not self.residue(p)

    @abstractmethod
    def is_stable(self, transform: Transform) -> bool:
        """Whether the ring automorphism `transform` maps the space to itself."""
        pass


class PolynomialSpace(GradedSpace):
    """Polynomials in the coordinates of `points`, with exactly `dx_degree` differential factors."""

    def __init__(self, ring: PolyRing, points: Sequence[int] | None = None, dx_degree: int = 0):
        self.ring = ring
        self.points = tuple(sorted(points)) if points is not None else tuple(range(1, ring.n + 1))
        self.dx_degree = dx_degree
        self.label = f"Q[x_{''.join(map(str, self.points))}]" + (f"dx^{dx_degree}" if dx_degree else "")
        self._allowed = set(ring.point_positions(self.points))
        if dx_degree:
            self._allowed |= {ring.dx_index(i) for i in range(1, ring.d + 1)}

    def monomials(self, degree: int) -> list[Monom]:
        count = comb(len(self.points) * self.ring.d + degree - 1, degree) if degree >= 0 else 0
        guard_monomials(count)
        return list(self.ring.monomials(degree, self.points, self.dx_degree or None))

    def dimension(self, degree: int) -> int:
        return len(self.monomials(degree))

    def basis(self, degree: int) -> list[PolyElement]:
        return [self.ring.monomial(m) for m in self.monomials(degree)]

    def _supported(self, monom: Monom) -> bool:
        return all(e == 0 or k in self._allowed for k, e in enumerate(monom))

    def _inside(self, monom: Monom) -> bool:
        return self._supported(monom) and self.ring.dx_degree(monom) == self.dx_degree

    def residue(self, p: PolyElement) -> Vector:
        return {m: c for m, c in p.items() if not self._inside(m)}

    def is_stable(self, transform: Transform) -> bool:
        gens = self.ring.base.gens
        return all(self._supported(m) for k in self.ring.point_positions(self.points) for m in transform(gens[k]).itermonoms())


class IdealSpace(GradedSpace):
    """A homogeneous ideal, as a graded subspace of the ring."""

    def __init__(self, ideal: Ideal):
        self.ring = ideal.ring
        self.ideal = ideal
        self.label = ideal.label

    def dimension(self, degree: int) -> int:
        guard_monomials(comb(self.ring.ngens + degree - 1, degree))
        return self.ideal.piece_dimension(degree)

    def basis(self, degree: int) -> list[PolyElement]:
        return self.ideal.graded_basis(degree)

    def residue(self, p: PolyElement) -> Vector:
        return poly_vector(self.ideal.normal_form(p))

    def is_stable(self, transform: Transform) -> bool:
        return all(self.ideal.contains(transform(g)) for g in self.ideal.generators)


class QuotientSpace(GradedSpace):
    """The quotient ring by a homogeneous ideal; standard monomials form the basis."""

    def __init__(self, ideal: Ideal):
        self.ring = ideal.ring
        self.ideal = ideal
        self.label = f"R/{ideal.label}"

    def basis(self, degree: int) -> list[PolyElement]:
        self.ideal.check_degree(degree)
        return [self.ring.monomial(m) for m in self.monomials(degree) if self.ideal.divisor(m, degree) is None]

    def dimension(self, degree: int) -> int:
        return len(self.basis(degree))

    def residue(self, p: PolyElement) -> Vector:
        return poly_vector(self.ideal.normal_form(p))

    def is_stable(self, transform: Transform) -> bool:
        return all(self.ideal.contains(transform(g)) for g in self.ideal.generators)


class IntersectionSpace(GradedSpace):
    """The intersection of several ideals, computed degreewise as the common kernel of the normal-form maps."""

    def __init__(self, ideals: Sequence[Ideal], label: str = ""):
        if not ideals:
            raise ValueError("IntersectionSpace needs at least one ideal")
        self.ring = ideals[0].ring
        self.ideals = tuple(ideals)
        self.label = label or " & ".join(ideal.label for ideal in ideals)

    def residue(self, p: PolyElement) -> Vector:
        return tuple_vector([ideal.normal_form(p) for ideal in self.ideals])

    def _relations(self, degree: int) -> tuple[list[Monom], list[list[object]]]:
        monomials = self.monomials(degree)
        residues = [self.residue(self.ring.monomial(m)) for m in monomials]
        return monomials, nullspace(residues)

    def dimension(self, degree: int) -> int:
        monomials = self.monomials(degree)
        return len(monomials) - rank([self.residue(self.ring.monomial(m)) for m in monomials])

    def basis(self, degree: int) -> list[PolyElement]:
        monomials, relations = self._relations(degree)
        base = self.ring.base
        return [base.from_dict({m: c for m, c in zip(monomials, relation) if c}) for relation in relations]

    def is_stable(self, transform: Transform) -> bool:
        # the image of every member ideal must sit inside some member ideal
        return all(any(all(other.contains(transform(g)) for g in ideal.generators) for other in self.ideals) for ideal in self.ideals)


def hilbert_function(space: GradedSpace, degree: int) -> int:
    """Dimension of the degree-`degree` piece of `space`; negative degrees are empty."""
    if degree < 0:
        return 0
    return space.dimension(degree)
