"""Ideals of the ambient ring with cached reduced Groebner bases, and the diagonal ideal constructors."""

import logging
import threading
from collections.abc import Iterable, Sequence
from itertools import combinations

from sympy.polys.rings import PolyElement

from diagonal_invariants.base import RingMismatchException, UnsupportedSizeException

from .groebner import buchberger
from .ring import GREVLEX, Monom, MonomialOrder, PolyRing

logger: logging.Logger = logging.getLogger(__name__)


def _min_bound(*bounds: int | None) -> int | None:
    finite = [b for b in bounds if b is not None]
    return min(finite) if finite else None


class Ideal:
    """An ideal given by generators, with reduced Groebner bases cached per (order, degree bound).

    `valid_to` marks a generator list that is only known to generate the intended ideal in degrees up to
    that bound (the output of a truncated computation). Every answer it gives is then limited to those degrees.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[PolyElement], label: str = "", valid_to: int | None = None):
        self.ring = ring
        gens = [ring.convert(g) for g in generators if g]
        if valid_to is not None:
            gens = [g for g in gens if min(sum(m) for m in g.itermonoms()) <= valid_to]
        self.generators: tuple[PolyElement, ...] = tuple(gens)
        self.label = label
        self.valid_to = valid_to
        self._lock = threading.Lock()
        self._bases: dict[tuple[MonomialOrder, int | None], tuple[PolyElement, ...]] = {}

    def __getstate__(self) -> dict:
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state: dict) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"Ideal({self.label or len(self.generators)!r} in {self.ring.label})"

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(len({sum(m) for m in g.itermonoms()}) == 1 for g in self.generators)

    @property
    def min_degree(self) -> int:
        if not self.generators:
            return 0
        return min(min(sum(m) for m in g.itermonoms()) for g in self.generators)

    def effective_bound(self, degree_bound: int | None) -> int | None:
        bound = _min_bound(degree_bound, self.valid_to)
        if bound is not None and not self.is_homogeneous():
            raise ValueError(f"Degree-truncated computations need a homogeneous ideal, got {self!r}")
        return bound

    def check_degree(self, degree: int) -> None:
        if self.valid_to is not None and degree > self.valid_to:
            raise UnsupportedSizeException("degree", degree, f"<= {self.valid_to} for the truncated ideal {self.label}")

    def groebner_basis(self, order: MonomialOrder = GREVLEX, degree_bound: int | None = None) -> tuple[PolyElement, ...]:
        """Reduced Groebner basis under `order`, complete in degrees up to `degree_bound` (all degrees if None)."""
        bound = self.effective_bound(degree_bound)
        with self._lock:
            for (cached_order, cached_bound), basis in self._bases.items():
                if cached_order == order and (cached_bound is None or (bound is not None and cached_bound >= bound)):
                    return basis
            target = self.ring.sympy_ring(order)
            basis = tuple(buchberger([g.set_ring(target) for g in self.generators], degree_bound=bound))
            self._bases[(order, bound)] = basis
            logger.debug(f"Cached Groebner basis of {self!r} for {order.kind} up to degree {bound}: {len(basis)} elements")
            return basis

    def leading_monomials(self, degree_bound: int | None = None) -> list[Monom]:
        return [g.LM for g in self.groebner_basis(GREVLEX, degree_bound)]

    def normal_form(self, p: PolyElement, order: MonomialOrder = GREVLEX) -> PolyElement:
        degree = max((sum(m) for m in p.itermonoms()), default=0)
        if self.is_homogeneous():
            self.check_degree(degree)
        basis = self.groebner_basis(order, degree if self.is_homogeneous() else None)
        return self.ring.convert(p, order).rem(list(basis)) if basis else self.ring.convert(p, order)

    def contains(self, p: PolyElement) -> bool:
        return not self.normal_form(p)

    def divisor(self, monom: Monom, degree_bound: int | None = None) -> PolyElement | None:
        """First basis element whose leading monomial divides `monom`."""
        ring = self.ring.base
        for g in self.groebner_basis(GREVLEX, degree_bound):
            if ring.monomial_div(monom, g.LM) is not None:
                return g
        return None

    def graded_basis(self, degree: int) -> list[PolyElement]:
        """Basis of the degree-`degree` piece: m / LM(g) * g for every monomial m in the leading ideal."""
        self.check_degree(degree)
        ring = self.ring.base
        basis: list[PolyElement] = []
        for monom in self.ring.monomials(degree):
            g = self.divisor(monom, degree)
            if g is not None:
                basis.append(g.mul_monom(ring.monomial_div(monom, g.LM)))
        return basis

    def piece_dimension(self, degree: int) -> int:
        self.check_degree(degree)
        return sum(1 for monom in self.ring.monomials(degree) if self.divisor(monom, degree) is not None)


def _same_ring(a: Ideal, b: Ideal) -> None:
    if a.ring != b.ring:
        raise RingMismatchException(a.ring.label, b.ring.label)


def unit_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, [ring.base.one], label="(1)")


def diagonal_ideal(ring: PolyRing, pair: Sequence[int]) -> Ideal:
    """The ideal <x_{j,i} - x_{i',i}> of the pairwise diagonal x_{i'} = x_j."""
    if len(set(pair)) != 2 or len(pair) != 2:
        raise UnsupportedSizeException("diagonal index set", tuple(pair), "two distinct points")
    a, b = sorted(pair)
    ring.check_point(a)
    ring.check_point(b)
    return Ideal(ring, [ring.var(b, i) - ring.var(a, i) for i in range(1, ring.d + 1)], label=f"I_D{a}{b}")


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    return Ideal(a.ring, a.generators + b.generators, label=f"({a.label} + {b.label})", valid_to=_min_bound(a.valid_to, b.valid_to))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    valid_to: int | None = None
    if a.valid_to is not None or b.valid_to is not None:
        valid_to = _min_bound(
            a.valid_to + b.min_degree if a.valid_to is not None else None,
            b.valid_to + a.min_degree if b.valid_to is not None else None,
        )
    return Ideal(a.ring, [f * g for f in a.generators for g in b.generators], label=f"{a.label}*{b.label}", valid_to=valid_to)


def ideal_power(a: Ideal, k: int) -> Ideal:
    if k < 0:
        raise UnsupportedSizeException("ideal power", k, ">= 0")
    result = unit_ideal(a.ring)
    for _ in range(k):
        result = ideal_product(result, a)
    result.label = f"{a.label}^{k}"
    return result


def ideal_intersection(a: Ideal, b: Ideal, degree_bound: int | None = None) -> Ideal:
    """a ∩ b by eliminating t from t*a + (1 - t)*b under a block order; t has degree 0 for the truncation."""
    _same_ring(a, b)
    bound = _min_bound(degree_bound, a.valid_to, b.valid_to)
    if bound is not None and not (a.is_homogeneous() and b.is_homogeneous()):
        raise ValueError("Degree-truncated intersections need homogeneous ideals")
    if a.is_zero() or b.is_zero():
        return Ideal(a.ring, [], label=f"({a.label} & {b.label})")

    elimination = a.ring.elimination()
    order = elimination.elimination_order
    target = elimination.sympy_ring(order)
    t = target.gens[elimination.t_index]
    generators = [t * g.set_ring(target) for g in a.generators]
    generators += [(1 - t) * g.set_ring(target) for g in b.generators]

    basis = buchberger(generators, weight=elimination.weight, degree_bound=bound)
    kept = [g for g in basis if all(m[0] == 0 for m in g.itermonoms())]
    logger.debug(f"Intersection {a.label} & {b.label}: {len(kept)} of {len(basis)} basis elements are free of t")
    return Ideal(a.ring, [a.ring.convert(g) for g in kept], label=f"({a.label} & {b.label})", valid_to=bound)


def ideal_intersection_all(ideals: Sequence[Ideal], degree_bound: int | None = None) -> Ideal:
    result = ideals[0]
    for other in ideals[1:]:
        result = ideal_intersection(result, other, degree_bound)
    return result


def big_diagonal_ideal(ring: PolyRing, points: Sequence[int] | None = None, degree_bound: int | None = None) -> Ideal:
    """Ideal of the big diagonal of `points` (all points by default): the intersection of the pairwise diagonal ideals."""
    chosen = sorted(points) if points is not None else list(range(1, ring.n + 1))
    ideal = ideal_intersection_all([diagonal_ideal(ring, pair) for pair in combinations(chosen, 2)], degree_bound)
    ideal.label = "I_D" + "".join(map(str, chosen))
    return ideal


def ideal_equal(a: Ideal, b: Ideal, degree_bound: int | None = None) -> bool:
    """Equality of reduced grevlex Groebner bases (up to `degree_bound` for truncated data)."""
    _same_ring(a, b)
    bound = _min_bound(degree_bound, a.valid_to, b.valid_to)
    left = [g for g in a.groebner_basis(GREVLEX, bound) if bound is None or sum(g.LM) <= bound]
    right = [g for g in b.groebner_basis(GREVLEX, bound) if bound is None or sum(g.LM) <= bound]
    return left == right
