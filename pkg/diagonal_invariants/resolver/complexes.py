"""Complexes of invariant modules: the resolutions of the invariants of the big diagonal and their relatives."""

import logging
from collections.abc import Callable, Sequence
from itertools import combinations

from sympy.polys.rings import PolyElement

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.polycore import IntersectionSpace, PolynomialSpace, PolyRing, diagonal_ideal, ideal_power
from diagonal_invariants.symgroup import PermGroup, invariant_basis, symmetric_group

from .calculus import diagonal_adapted_basis, point_differential, point_polynomials, substitute_points, taylor_part
from .maps import C_WEIGHTS, InvariantMap, form_coefficients, map_C, map_D, map_r, one_forms, symmetric_quotient, times_dx
from .modules import InvariantModule, kernel_elements, tuple_basis

logger: logging.Logger = logging.getLogger(__name__)


class MapComplex:
    """M_0 -> M_1 -> ... -> M_k built from composable maps, with the expected kernel of the first map.

    `reference(t)` is the dimension the kernel at position 0 should have in degree t.
    """

    def __init__(
        self,
        name: str,
        n: int,
        maps: Sequence[InvariantMap],
        reference: Callable[[int], int],
        constants: dict[str, str] | None = None,
    ):
        for first, second in zip(maps, maps[1:]):
            if first.target is not second.source:
                raise ValueError(f"{first.name} and {second.name} are not composable: {first.target.name} vs {second.source.name}")
        self.name = name
        self.n = n
        self.maps = list(maps)
        self.reference = reference
        self.constants = constants or {}
        self.shift = 0

    def __repr__(self) -> str:
        return f"MapComplex({self.name}: {' -> '.join(m.name for m in self.modules)})"

    @property
    def modules(self) -> list[InvariantModule]:
        return [self.maps[0].source] + [m.target for m in self.maps]

    def dimensions(self, degree: int) -> list[int]:
        return [module.dimension(degree) for module in self.modules]

    def euler_characteristic(self, degree: int) -> int:
        """HF(kernel) - dim M_0 + dim M_1 - ...; zero for a resolution of the kernel."""
        return self.reference(degree) + sum((-1) ** (k + 1) * d for k, d in enumerate(self.dimensions(degree)))


class ShiftedComplex(MapComplex):
    """The same complex with every internal degree moved by `shift`."""

    def __init__(self, base: MapComplex, shift: int):
        modules = {id(module): module.shifted(shift) for module in base.modules}
        super().__init__(
            base.name,
            base.n,
            [InvariantMap(m.name, modules[id(m.source)], modules[id(m.target)], m.apply) for m in base.maps],
            lambda t: base.reference(t - shift) if t >= shift else 0,
            base.constants,
        )
        self.base = base
        self.shift = base.shift + shift


def _diagonal_invariants(ring: PolyRing, group: PermGroup, order: int = 1) -> Callable[[int], int]:
    pairs = combinations(range(1, ring.n + 1), 2)
    space = IntersectionSpace([ideal_power(diagonal_ideal(ring, pair), order) for pair in pairs])
    return lambda t: len(invariant_basis(space, group, t)) if t >= 0 else 0


def resolution_complex(n: int, shift: int = 0) -> MapComplex:
    """O_{S^nX} -> w2 -> w3 (-> w4), resolving the S_n-invariants of the ideal of the big diagonal."""
    if n not in (3, 4):
        raise UnsupportedSizeException("resolution size", n, "n = 3 or 4")
    model = symmetric_quotient(n)
    maps = [map_r(n), map_D(n)] + ([map_C(n)] if n == 4 else [])
    constants = {"D": "2a db - b da", "r": "restriction to x_1 = x_2"}
    if n == 4:
        constants["C"] = f"sym(ω ⊗ d²_Δ f), constant 1, barycentric weights {C_WEIGHTS}"
    complex_ = MapComplex(f"resolution-{n}", n, maps, _diagonal_invariants(model.ring, model.group), constants)
    return ShiftedComplex(complex_, shift) if shift else complex_


def prop211_complex(shift: int = 0) -> MapComplex:
    """O -> (functions on Δ_12, functions on Δ_23, agreeing on the small diagonal) -> one-forms on the small diagonal.

    Resolves the invariants under S({2,3}) of the ideal of the big diagonal of X^3.
    """
    ring = PolyRing(n=3, d=2, differentials=True)
    group = symmetric_group(3, (2, 3))
    zero = ring.base.zero
    space = PolynomialSpace(ring)

    def restrict(f: PolyElement) -> tuple[PolyElement, ...]:
        return (substitute_points(f, ring, {1: 2}), substitute_points(f, ring, {1: 3, 3: 2}))

    def agree(pair: tuple[PolyElement, ...]) -> PolyElement:
        return substitute_points(pair[0], ring, {3: 2}) - substitute_points(pair[1], ring, {3: 2})

    def collide(pair: tuple[PolyElement, ...]) -> PolyElement:
        return substitute_points(2 * point_differential(pair[0], ring, 3) - point_differential(pair[1], ring, 2), ring, {2: 3})

    source = InvariantModule("O_X3^S{2,3}", ring, lambda t: invariant_basis(space, group, t), group)
    middle = InvariantModule(
        "O_Δ12 ×_Δ123 O_Δ23",
        ring,
        lambda t: kernel_elements(tuple_basis([point_polynomials(ring, (2, 3), t)] * 2, zero), agree),
    )
    target = InvariantModule("Ω¹_Δ123", ring, lambda t: one_forms(ring, point_polynomials(ring, (3,), t - 1)), twist="Ω¹")
    maps = [InvariantMap("r", source, middle, restrict), InvariantMap("D", middle, target, collide)]
    complex_ = MapComplex("prop211", 3, maps, _diagonal_invariants(ring, group), {"D": "2 d_3 F_12 - d_2 F_23"})
    return ShiftedComplex(complex_, shift) if shift else complex_


def exact_l211_sequence(shift: int = 0) -> MapComplex:
    """(I_Δ3)^{S{2,3}} -> Ω¹ ⊗ I²_Δ13 -> S³Ω¹ via the first Taylor component along Δ_12, then the second along Δ_13.

    Its kernel is the S({2,3})-invariants vanishing to order two along every pairwise diagonal.
    """
    ring = PolyRing(n=3, d=2, differentials=True)
    group = symmetric_group(3, (2, 3))
    diagonals = IntersectionSpace([diagonal_ideal(ring, pair) for pair in combinations((1, 2, 3), 2)])
    gens = ring.base.gens

    def first_order(f: PolyElement) -> PolyElement:
        return taylor_part(f, ring, 2, 1, 1)

    def second_order(form: PolyElement) -> PolyElement:
        total = ring.base.zero
        for i, p in enumerate(form_coefficients(form, ring), start=1):
            total += gens[ring.dx_index(i)] * taylor_part(p, ring, 3, 1, 2)
        return total

    source = InvariantModule("(I_Δ3)^S{2,3}", ring, lambda t: invariant_basis(diagonals, group, t), group)
    middle = InvariantModule(
        "Ω¹⊗A(-2Δ)", ring, lambda t: one_forms(ring, diagonal_adapted_basis(ring, 1, 3, t - 1, 2)), twist="Ω¹"
    )
    target = InvariantModule("S³Ω¹", ring, lambda t: times_dx(ring, point_polynomials(ring, (1,), t - 3), 3), twist="S³Ω¹")
    maps = [InvariantMap("d¹_Δ", source, middle, first_order), InvariantMap("sym∘d²_Δ", middle, target, second_order)]
    complex_ = MapComplex("exact-l211", 3, maps, _diagonal_invariants(ring, group, order=2), {"d²_Δ": "centered Taylor component, weights (1, 1)"})
    return ShiftedComplex(complex_, shift) if shift else complex_
