"""Buchberger's algorithm with the Gebauer-Moeller criteria, over exact rationals."""

import logging
from collections.abc import Callable, Sequence

from sympy.polys.rings import PolyElement

from .ring import Monom

logger: logging.Logger = logging.getLogger(__name__)


def spoly(p1: PolyElement, p2: PolyElement) -> PolyElement:
    """S-polynomial of two monic polynomials."""
    ring = p1.ring
    lcm12 = ring.monomial_lcm(p1.LM, p2.LM)
    return p1.mul_monom(ring.monomial_div(lcm12, p1.LM)) - p2.mul_monom(ring.monomial_div(lcm12, p2.LM))


def buchberger(
    generators: Sequence[PolyElement],
    weight: Callable[[Monom], int] = sum,
    degree_bound: int | None = None,
) -> list[PolyElement]:
    """Compute the reduced Groebner basis of the ideal generated by `generators` in their ring's order.

    Args:
        generators (Sequence[PolyElement]): Generators, all in the same sympy ring.
        weight (Callable[[Monom], int], optional): Grading used for truncation. Defaults to the total degree.
        degree_bound (int | None, optional): Drop S-pairs whose lcm has weight above this bound. For ideals that are
            homogeneous for `weight` the result is correct in every degree up to the bound. Defaults to None.

    Returns:
        list[PolyElement]: Monic basis sorted by leading monomial, largest first. Empty for the zero ideal.
    """
    f: list[PolyElement] = [g for g in generators if g]
    if not f:
        return []

    ring = f[0].ring
    order = ring.order
    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    # inter-reduce the input until it is stable
    f1 = f[:]
    while True:
        f = f1[:]
        f1 = []
        for i, p in enumerate(f):
            r = p.rem(f[:i])
            if r:
                f1.append(r.monic())
        if f == f1:
            break

    index: dict[PolyElement, int] = {}

    def normal(g: PolyElement, basis: Sequence[int]) -> int | None:
        h = g.rem([f[j] for j in basis])
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return index[h]

    def update(basis: set[int], pairs: set[tuple[int, int]], ih: int) -> tuple[set[int], set[tuple[int, int]]]:
        mh = f[ih].LM

        candidates = sorted(basis)
        kept: list[tuple[int, int]] = []
        while candidates:
            ig = candidates.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_div(lcm_hg, monomial_lcm(mh, f[ip].LM)) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ip) for ip in candidates) and not any(lcm_divides(pair[1]) for pair in kept)
            ):
                kept.append((ih, ig))

        # product criterion
        new_pairs = {(ih, ig) for ih, ig in kept if monomial_mul(mh, f[ig].LM) != monomial_lcm(mh, f[ig].LM)}

        # chain criterion on old pairs
        for ig1, ig2 in pairs:
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if monomial_div(lcm12, mh) is None or monomial_lcm(mg1, mh) == lcm12 or monomial_lcm(mg2, mh) == lcm12:
                new_pairs.add((ig1, ig2))

        new_basis = {ig for ig in basis if monomial_div(f[ig].LM, mh) is None}
        new_basis.add(ih)
        return new_basis, new_pairs

    for i, h in enumerate(f):
        index[h] = i

    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for ih in sorted(range(len(f)), key=lambda k: order(f[k].LM)):
        basis, pairs = update(basis, pairs, ih)

    def pair_lcm(pair: tuple[int, int]) -> Monom:
        return monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)

    dropped = 0
    reductions_to_zero = 0
    while pairs:
        pair = min(pairs, key=lambda pr: (order(pair_lcm(pr)), pr))
        pairs.remove(pair)
        if degree_bound is not None and weight(pair_lcm(pair)) > degree_bound:
            dropped += 1
            continue

        ordered = sorted(basis, key=lambda g: order(f[g].LM))
        ih = normal(spoly(f[pair[0]], f[pair[1]]), ordered)
        if ih is None:
            reductions_to_zero += 1
        else:
            basis, pairs = update(basis, pairs, ih)

    reduced: list[PolyElement] = []
    for ig in sorted(basis):
        ih = normal(f[ig], sorted(basis - {ig}))
        if ih is not None:
            reduced.append(f[ih])

    logger.debug(f"Groebner basis with {len(reduced)} elements ({reductions_to_zero} zero reductions, {dropped} pairs above the bound)")
    return sorted(reduced, key=lambda g: order(g.LM), reverse=True)
