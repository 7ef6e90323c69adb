"""The explicit maps between invariant modules: restriction, d1, D, Ã, A, C and the higher Taylor differentials."""

import logging
from collections.abc import Callable
from functools import cached_property, lru_cache
from itertools import combinations
from random import Random

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.charlab import Partition
from diagonal_invariants.polycore import (
    IntersectionSpace,
    PolynomialSpace,
    PolyRing,
    diagonal_ideal,
    ideal_power,
    rank,
)
from diagonal_invariants.symgroup import PermGroup, invariant_basis, orbit_sums, symmetric_group

from .calculus import (
    diagonal_adapted_basis,
    dx_monomials,
    point_differential,
    point_polynomials,
    substitute_points,
    taylor_part,
)
from .modules import Element, InvariantModule, element_degree, element_vector, is_zero, kernel_elements, tuple_basis

logger: logging.Logger = logging.getLogger(__name__)

# Barycentric weights of the (triple, single) points in the second-order Taylor component of C.
C_WEIGHTS: tuple[int, int] = (3, 1)


class InvariantMap:
    """A degree-preserving linear map between two invariant modules, given on elements."""

    def __init__(self, name: str, source: InvariantModule, target: InvariantModule, apply: Callable[[Element], Element]):
        self.name = name
        self.source = source
        self.target = target
        self.apply = apply

    def __repr__(self) -> str:
        return f"InvariantMap({self.name}: {self.source.name} -> {self.target.name})"

    def image(self, degree: int) -> list[Element]:
        return [self.apply(b) for b in self.source.basis(degree)]

    def rank(self, degree: int) -> int:
        return rank([element_vector(e) for e in self.image(degree)])

    def kernel_dimension(self, degree: int) -> int:
        return self.source.dimension(degree) - self.rank(degree)

    def kernel(self, degree: int) -> list[Element]:
        return kernel_elements(self.source.basis(degree), self.apply)

    def is_degree_preserving(self, degree: int) -> bool:
        inner = degree - self.source.shift
        return all(element_degree(e) <= {inner} for e in self.image(degree))

    def lands_in_target(self, degree: int) -> bool:
        """Whether every image lies in the span of the target basis."""
        images = [element_vector(e) for e in self.image(degree) if not is_zero(e)]
        if not images:
            return True
        target = [element_vector(e) for e in self.target.basis(degree)]
        return rank(target + images) == len(target)

    def composes_to_zero(self, after: "InvariantMap", degree: int) -> bool:
        return all(is_zero(after.apply(e)) for e in self.image(degree))

    def shifted(self, shift: int) -> "InvariantMap":
        return InvariantMap(self.name, self.source.shifted(shift), self.target.shifted(shift), self.apply)


def form_coefficients(form: PolyElement, ring: PolyRing) -> list[PolyElement]:
    """[P_1, ..., P_d] for a one-form sum_i P_i dx_i."""
    positions = [ring.dx_index(i) for i in range(1, ring.d + 1)]
    parts: list[dict] = [{} for _ in positions]
    for monom, coefficient in form.items():
        hits = [k for k, position in enumerate(positions) if monom[position]]
        if len(hits) != 1 or monom[positions[hits[0]]] != 1:
            raise ValueError(f"Not a one-form: term {monom}")
        stripped = list(monom)
        stripped[positions[hits[0]]] = 0
        parts[hits[0]][tuple(stripped)] = coefficient
    return [form.ring.from_dict(part) for part in parts]


def one_forms(ring: PolyRing, coefficients: list[PolyElement]) -> list[PolyElement]:
    """P dx_i for every P in `coefficients` and every i."""
    return [p * ring.base.gens[ring.dx_index(i)] for p in coefficients for i in range(1, ring.d + 1)]


def times_dx(ring: PolyRing, coefficients: list[PolyElement], dx_degree: int) -> list[PolyElement]:
    return [p * m for p in coefficients for m in dx_monomials(ring, dx_degree)]


def triple_form(f: PolyElement, ring: PolyRing) -> PolyElement:
    """D(F) = (2 d_3 F - d_2 F) on the diagonal x_2 = x_3: F is seen on the double point 2 and the single point 3."""
    return substitute_points(2 * point_differential(f, ring, 3) - point_differential(f, ring, 2), ring, {2: 3})


class SymmetricQuotient:
    """S^nX for X the affine plane, n = 3 or 4, with the modules of its resolution of the invariants of the big diagonal.

    Every module is a space of sections over a product of copies of X (one per point of the stratum),
    written in the coordinates of points 2..n of the ambient ring: point 2 carries the double point of
    the stratum of w_2, point 3 the triple point of w_3 and the quadruple point of w_4.
    """

    def __init__(self, n: int):
        if n not in (3, 4):
            raise UnsupportedSizeException("resolution size", n, "n = 3 or 4")
        self.n = n
        self.ring = PolyRing(n=n, d=2, differentials=True)
        self.group = symmetric_group(n)
        self.pair_group = symmetric_group(n, (3, 4)) if n == 4 else None

    def _polys(self, points: tuple[int, ...], degree: int) -> list[PolyElement]:
        return point_polynomials(self.ring, points, degree)

    @cached_property
    def structure_sheaf(self) -> InvariantModule:
        space = PolynomialSpace(self.ring)
        return InvariantModule(f"O_S{self.n}X", self.ring, lambda t: invariant_basis(space, self.group, t), self.group)

    @cached_property
    def pairs(self) -> InvariantModule:
        """Sections of O over the stratum of one double point, before the condition of d1."""
        if self.n == 3:
            return InvariantModule("w2(O)", self.ring, lambda t: self._polys((2, 3), t))
        group = self.pair_group
        return InvariantModule(
            "w2(O)",
            self.ring,
            lambda t: orbit_sums(group, list(self.ring.monomials(t, (2, 3, 4))), self.ring),
            group,
        )

    @cached_property
    def pairs_closed(self) -> InvariantModule:
        if self.n == 3:
            return self.pairs
        return InvariantModule("w2(O)_0", self.ring, lambda t: kernel_elements(self.pairs.basis(t), self.merge_pairs), self.pair_group)

    @cached_property
    def algebra(self) -> InvariantModule:
        return InvariantModule("A4(O)", self.ring, lambda t: self._polys((3, 4), t))

    @cached_property
    def forms(self) -> InvariantModule:
        if self.n == 3:
            return InvariantModule("w3(Ω¹)", self.ring, lambda t: one_forms(self.ring, self._polys((3,), t - 1)), twist="Ω¹")
        return InvariantModule(
            "w3(Ω¹⊠I_Δ)",
            self.ring,
            lambda t: one_forms(self.ring, diagonal_adapted_basis(self.ring, 3, 4, t - 1, 1)),
            twist="Ω¹",
        )

    @cached_property
    def forms_closed(self) -> InvariantModule:
        if self.n == 3:
            return self.forms
        return InvariantModule("w3(Ω¹⊠I_Δ)_0", self.ring, lambda t: kernel_elements(self.forms.basis(t), self.wedge), twist="Ω¹")

    @cached_property
    def two_forms(self) -> InvariantModule:
        return InvariantModule("w3(Ω²)", self.ring, self._two_forms, twist="Ω²")

    def _two_forms(self, degree: int) -> list[PolyElement]:
        gens = self.ring.base.gens
        area = gens[self.ring.dx_index(1)] * gens[self.ring.dx_index(2)]
        return [p * area for p in self._polys((3,), degree - 2)]

    @cached_property
    def cubics(self) -> InvariantModule:
        return InvariantModule("w4(S³Ω¹)", self.ring, lambda t: times_dx(self.ring, self._polys((3,), t - 3), 3), twist="S³Ω¹")

    def restrict(self, f: PolyElement) -> PolyElement:
        return substitute_points(f, self.ring, {1: 2})

    def merge_pairs(self, f: PolyElement) -> PolyElement:
        """The two ways of colliding the remaining points: (2 -> 3, 3 -> 4) minus (2 -> 4, 4 -> 3)."""
        return substitute_points(f, self.ring, {2: 3, 3: 4}) - substitute_points(f, self.ring, {2: 4, 4: 3})

    def triple(self, f: PolyElement) -> PolyElement:
        return triple_form(f, self.ring)

    def wedge(self, form: PolyElement) -> PolyElement:
        """ω ∧ d_Δ of the coefficients along the single point 4, restricted to the diagonal."""
        p = form_coefficients(form, self.ring)
        gens = self.ring.base.gens
        normal = [gens[self.ring.index(4, i)] for i in (1, 2)]
        area = gens[self.ring.dx_index(1)] * gens[self.ring.dx_index(2)]
        return substitute_points(p[0].diff(normal[1]) - p[1].diff(normal[0]), self.ring, {4: 3}) * area

    def symmetrized_hessian(self, form: PolyElement) -> PolyElement:
        """sym(ω ⊗ d²_Δ f): second Taylor component of each coefficient around the weighted barycenter."""
        gens = self.ring.base.gens
        total = self.ring.base.zero
        for i, p in enumerate(form_coefficients(form, self.ring), start=1):
            total += gens[self.ring.dx_index(i)] * taylor_part(p, self.ring, 4, 3, 2, C_WEIGHTS)
        return total


@lru_cache(maxsize=None)
def symmetric_quotient(n: int) -> SymmetricQuotient:
    return SymmetricQuotient(n)


def map_r(n: int) -> InvariantMap:
    """Restriction of invariants to the stratum of one double point."""
    model = symmetric_quotient(n)
    return InvariantMap("r", model.structure_sheaf, model.pairs_closed, model.restrict)


def map_d1(n: int) -> InvariantMap:
    model = symmetric_quotient(n)
    if n != 4:
        raise UnsupportedSizeException("d1 size", n, "n = 4")
    return InvariantMap("d1", model.pairs, model.algebra, model.merge_pairs)


def map_D(n: int) -> InvariantMap:
    """D(a ⊗ b_1...b_{n-2}) = sum_i (2a db_i - b_i da) ⊗ b_1..^b_i..b_{n-2}."""
    model = symmetric_quotient(n)
    return InvariantMap("D", model.pairs_closed, model.forms_closed, model.triple)


def map_A(n: int = 4) -> InvariantMap:
    model = symmetric_quotient(n)
    if n != 4:
        raise UnsupportedSizeException("A size", n, "n = 4")
    return InvariantMap("A", model.forms, model.two_forms, model.wedge)


def map_C(n: int = 4) -> InvariantMap:
    model = symmetric_quotient(n)
    if n != 4:
        raise UnsupportedSizeException("C size", n, "n = 4")
    return InvariantMap("C", model.forms_closed, model.cubics, model.symmetrized_hessian)


def _merge(*pairs: tuple[int, int]) -> dict[int, int]:
    """Each point of the blocks generated by `pairs` goes to the smallest point of its block."""
    blocks: list[set[int]] = []
    for pair in pairs:
        touching = [b for b in blocks if b & set(pair)]
        merged = set(pair).union(*touching)
        blocks = [b for b in blocks if b not in touching] + [merged]
    return {point: min(block) for block in blocks for point in block}


class DiagonalData:
    """Tuples (f_I) of functions on the pairwise diagonals Δ_I of X^n, f_{ij} written without point j."""

    def __init__(self, n: int):
        if n not in (3, 4):
            raise UnsupportedSizeException("diagonal data size", n, "n = 3 or 4")
        self.n = n
        self.ring = PolyRing(n=n, d=2, differentials=True)
        self.pairs: list[tuple[int, int]] = list(combinations(range(1, n + 1), 2))
        self.triples: list[tuple[int, int, int]] = list(combinations(range(1, n + 1), 3))

    def _without(self, *dropped: int) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.n + 1) if j not in dropped)

    def restrictions(self, f: PolyElement) -> tuple[PolyElement, ...]:
        return tuple(substitute_points(f, self.ring, {j: i}) for i, j in self.pairs)

    def compatibility(self, data: tuple[PolyElement, ...]) -> tuple[PolyElement, ...]:
        """f_I - f_J on every Δ_I ∩ Δ_J."""
        differences = []
        for (a, first), (b, second) in combinations(enumerate(self.pairs), 2):
            merge = _merge(first, second)
            differences.append(substitute_points(data[a], self.ring, merge) - substitute_points(data[b], self.ring, merge))
        return tuple(differences)

    def second_differential(self, data: tuple[PolyElement, ...]) -> tuple[PolyElement, ...]:
        """Per triple i < j < k: (d_k f_ij + d_j f_ik - d_j f_jk) on the small diagonal, written at point i."""
        index = {pair: k for k, pair in enumerate(self.pairs)}
        result = []
        for i, j, k in self.triples:
            total = (
                point_differential(data[index[i, j]], self.ring, k)
                + point_differential(data[index[i, k]], self.ring, j)
                - point_differential(data[index[j, k]], self.ring, j)
            )
            result.append(substitute_points(total, self.ring, {j: i, k: i}))
        return tuple(result)

    @cached_property
    def source(self) -> InvariantModule:
        zero = self.ring.base.zero

        def build(t: int) -> list[Element]:
            parts = [point_polynomials(self.ring, self._without(j), t) for _, j in self.pairs]
            return kernel_elements(tuple_basis(parts, zero), self.compatibility)

        return InvariantModule("E^{1,0}", self.ring, build)

    @cached_property
    def target(self) -> InvariantModule:
        zero = self.ring.base.zero

        def build(t: int) -> list[Element]:
            return tuple_basis([one_forms(self.ring, point_polynomials(self.ring, self._without(j, k), t - 1)) for _, j, k in self.triples], zero)

        return InvariantModule("E^{3,-1}", self.ring, build, twist="Ω¹")


def map_Atilde(n: int) -> InvariantMap:
    """The non-invariant second differential on compatible tuples of functions on the pairwise diagonals."""
    data = DiagonalData(n)
    return InvariantMap("Ã", data.source, data.target, data.second_differential)


def stabilizer_of(mu: Partition) -> PermGroup:
    parts = mu.parts
    return symmetric_group(len(parts)).subgroup(lambda g: all(parts[g(j) - 1] == parts[j - 1] for j in range(1, len(parts) + 1)), label=f"Stab{mu}")


class TaylorDifferential:
    """The l-th Taylor component along every pairwise diagonal of X^{l(μ)}, on Stab(μ)-invariants vanishing to order l there."""

    def __init__(self, mu: Partition, l: int):
        if not 2 <= len(mu.parts) <= 4:
            raise UnsupportedSizeException("length of μ", len(mu.parts), "2..4")
        if l < 1:
            raise UnsupportedSizeException("Taylor order", l, ">= 1")
        self.mu = mu
        self.l = l
        self.n = len(mu.parts)
        self.ring = PolyRing(n=self.n, d=2, differentials=True)
        self.group = stabilizer_of(mu)
        self.pairs: list[tuple[int, int]] = list(combinations(range(1, self.n + 1), 2))

    def vanishing_space(self, order: int) -> IntersectionSpace:
        return IntersectionSpace([ideal_power(diagonal_ideal(self.ring, pair), order) for pair in self.pairs], label=f"∩I_Δ^{order}")

    def apply(self, f: PolyElement) -> tuple[PolyElement, ...]:
        return tuple(taylor_part(f, self.ring, j, i, self.l) for i, j in self.pairs)

    def source(self) -> InvariantModule:
        space = self.vanishing_space(self.l)
        return InvariantModule(f"L^{self.mu}(-{self.l}Δ)", self.ring, lambda t: invariant_basis(space, self.group, t), self.group)

    def target(self) -> InvariantModule:
        zero = self.ring.base.zero

        def build(t: int) -> list[Element]:
            parts = []
            for _, j in self.pairs:
                others = tuple(p for p in range(1, self.n + 1) if p != j)
                parts.append(times_dx(self.ring, point_polynomials(self.ring, others, t - self.l), self.l))
            return tuple_basis(parts, zero)

        return InvariantModule(f"S^{self.l}Ω¹", self.ring, build, twist=f"S^{self.l}Ω¹")


def map_dlDelta(mu: Partition, l: int) -> InvariantMap:
    differential = TaylorDifferential(mu, l)
    return InvariantMap("d^l_Δ", differential.source(), differential.target(), differential.apply)


def twisted_kernel_dimension(mu: Partition, l: int, degree: int) -> int:
    """dim ker d^l_Δ in `degree`: the Stab(μ)-invariants vanishing to order l + 1 along the pairwise diagonals."""
    return map_dlDelta(mu, l).kernel_dimension(degree)


def twisted_reference_dimension(mu: Partition, l: int, degree: int) -> int:
    """The same dimension from the ideals I_Δ^{l+1} directly."""
    differential = TaylorDifferential(mu, l)
    return len(invariant_basis(differential.vanishing_space(l + 1), differential.group, degree))


def sample_polynomial(ring: PolyRing, points: tuple[int, ...], degree: int, rng: Random) -> PolyElement:
    """Random small integer coefficients on every monomial of `degree` in the coordinates of `points`."""
    return ring.base.from_dict({m: QQ(rng.randint(-3, 3)) for m in ring.monomials(degree, points)})


def atilde_kills_restrictions(n: int, degree: int, seed: int = 0, samples: int = 3) -> bool:
    data = DiagonalData(n)
    rng = Random(seed)
    for _ in range(samples):
        f = sample_polynomial(data.ring, tuple(range(1, n + 1)), degree, rng)
        restrictions = data.restrictions(f)
        if any(data.compatibility(restrictions)) or any(data.second_differential(restrictions)):
            return False
    return True


def atilde_matches_D(degree: int, seed: int = 0, samples: int = 3) -> bool:
    """On three points, Ã of the data induced by F on the three pairwise diagonals is D(F) moved to point 1."""
    data = DiagonalData(3)
    ring = data.ring
    rng = Random(seed)
    for _ in range(samples):
        f = sample_polynomial(ring, (2, 3), degree, rng)
        induced = (
            substitute_points(f, ring, {2: 1}),
            substitute_points(f, ring, {2: 1, 3: 2}),
            substitute_points(f, ring, {3: 1}),
        )
        (value,) = data.second_differential(induced)
        if value != substitute_points(triple_form(f, ring), ring, {3: 1}):
            return False
    return True
