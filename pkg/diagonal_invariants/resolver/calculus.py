"""Point substitutions, differentials along one point and Taylor components along pairwise diagonals."""

from collections.abc import Mapping
from itertools import combinations_with_replacement

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from diagonal_invariants.polycore import PolyRing


def substitute_points(p: PolyElement, ring: PolyRing, mapping: Mapping[int, int]) -> PolyElement:
    """x_{j,i} -> x_{mapping[j],i}; points missing from `mapping` and the differentials stay put."""
    targets = []
    for position in range(ring.ngens):
        kind, j, i = ring.locate(position)
        targets.append(ring.index(mapping.get(j, j), i) if kind == "x" else position)
    image: dict[tuple[int, ...], object] = {}
    for monom, coefficient in p.items():
        moved = [0] * ring.ngens
        for position, exponent in enumerate(monom):
            if exponent:
                moved[targets[position]] += exponent
        key = tuple(moved)
        image[key] = image.get(key, QQ.zero) + coefficient
    return p.ring.from_dict({m: c for m, c in image.items() if c})


def point_differential(p: PolyElement, ring: PolyRing, j: int) -> PolyElement:
    """d_j p = sum_i dp/dx_{j,i} dx_i."""
    gens = p.ring.gens
    total = p.ring.zero
    for i in range(1, ring.d + 1):
        total += p.diff(gens[ring.index(j, i)]) * gens[ring.dx_index(i)]
    return total


def taylor_part(p: PolyElement, ring: PolyRing, moving: int, base: int, order: int, weights: tuple[int, int] = (1, 1)) -> PolyElement:
    """The order-`order` Taylor component of p along the diagonal x_moving = x_base, as a polynomial in dx.

    The expansion is centered at the weighted barycenter: with weights (w_b, w_m) for (base, moving),
    x_base -> s - w_m/(w_b + w_m) dx and x_moving -> s + w_b/(w_b + w_m) dx, s written as x_base.
    """
    gens = p.ring.gens
    if any(ring.dx_degree(m) for m in p.itermonoms()):
        raise ValueError("Taylor components are taken of polynomials without differentials")
    w_base, w_moving = weights
    total = w_base + w_moving
    replacements = []
    for i in range(1, ring.d + 1):
        centre, step = gens[ring.index(base, i)], gens[ring.dx_index(i)]
        replacements.append((gens[ring.index(base, i)], centre - step * QQ(w_moving, total)))
        replacements.append((gens[ring.index(moving, i)], centre + step * QQ(w_base, total)))
    expanded = p.compose(replacements)
    return p.ring.from_dict({m: c for m, c in expanded.items() if ring.dx_degree(m) == order})


def dx_monomials(ring: PolyRing, degree: int) -> list[PolyElement]:
    """Monomials of `degree` in dx_1..dx_d, i.e. a basis of the symmetric power of the cotangent fiber."""
    gens = ring.base.gens
    result: list[PolyElement] = []
    for chosen in combinations_with_replacement(range(1, ring.d + 1), degree):
        term = ring.base.one
        for i in chosen:
            term *= gens[ring.dx_index(i)]
        result.append(term)
    return result


def point_polynomials(ring: PolyRing, points: tuple[int, ...], degree: int) -> list[PolyElement]:
    return [ring.monomial(m) for m in ring.monomials(degree, points)]


def diagonal_adapted_basis(ring: PolyRing, base: int, moving: int, degree: int, min_order: int) -> list[PolyElement]:
    """x_base^a (x_moving - x_base)^b with |a| + |b| = degree and |b| >= min_order.

    A basis of the degree-`degree` polynomials in the two points vanishing to order `min_order` on their diagonal.
    """
    gens = ring.base.gens
    coordinates = [gens[ring.index(base, i)] for i in range(1, ring.d + 1)]
    normals = [gens[ring.index(moving, i)] - gens[ring.index(base, i)] for i in range(1, ring.d + 1)]
    result: list[PolyElement] = []
    for normal_degree in range(min_order, degree + 1):
        for along in combinations_with_replacement(range(ring.d), degree - normal_degree):
            for across in combinations_with_replacement(range(ring.d), normal_degree):
                term = ring.base.one
                for i in along:
                    term *= coordinates[i]
                for i in across:
                    term *= normals[i]
                result.append(term)
    return result
