"""Chain complexes of graded vector spaces, sliced by internal degree, and Koszul complexes of forms."""

import logging
from abc import ABC, abstractmethod
from collections.abc import Hashable, Iterator, Sequence
from itertools import combinations, combinations_with_replacement
from math import comb

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from diagonal_invariants.polycore import Monom, Vector, guard_monomials, rank

logger: logging.Logger = logging.getLogger(__name__)


def monomial_count(variables: int, degree: int) -> int:
    """Number of monomials of `degree` in `variables` variables."""
    if degree < 0:
        return 0
    if variables == 0:
        return 1 if degree == 0 else 0
    return comb(variables + degree - 1, degree)


def exponent_tuples(variables: int, degree: int) -> Iterator[Monom]:
    if degree < 0:
        return
    for chosen in combinations_with_replacement(range(variables), degree):
        exponents = [0] * variables
        for k in chosen:
            exponents[k] += 1
        yield tuple(exponents)


class GradedComplex(ABC):
    """C_q -> C_{q-1}, with an explicit finite basis of each internal-degree piece C_q(t)."""

    label: str = ""

    @abstractmethod
    def basis(self, q: int, t: int) -> list[Hashable]:
        """Basis keys of C_q in internal degree t; empty outside the complex's range."""
        pass

    @abstractmethod
    def differential(self, q: int, key: Hashable) -> Vector:
        """Image of a basis element of C_q, as a vector over the basis keys of C_{q-1}."""
        pass

    def dimension(self, q: int, t: int) -> int:
        return len(self.basis(q, t))

    def boundary_rank(self, q: int, t: int) -> int:
        return rank([self.differential(q, key) for key in self.basis(q, t)])

    def homology(self, q: int, t: int) -> int:
        """dim H_q in internal degree t: dim C_q(t) - rank d_q - rank d_{q+1}."""
        return self.dimension(q, t) - self.boundary_rank(q, t) - self.boundary_rank(q + 1, t)

    def _apply(self, q: int, vector: Vector) -> Vector:
        image: dict[Hashable, object] = {}
        for key, coefficient in vector.items():
            for target, value in self.differential(q, key).items():
                image[target] = image.get(target, QQ.zero) + coefficient * value
        return {key: value for key, value in image.items() if value}

    def is_complex(self, q: int, t: int) -> bool:
        """d_{q-1} d_q = 0 on C_q(t)."""
        return all(not self._apply(q - 1, self.differential(q, key)) for key in self.basis(q, t))


class KoszulComplex(GradedComplex):
    """The Koszul complex of homogeneous forms f_1..f_m: d e_S = sum_k (-1)^k f_{s_k} e_{S - s_k}.

    Basis keys are (S, monomial) with S an increasing index tuple; e_S sits in internal degree sum deg f_s.
    """

    def __init__(self, forms: Sequence[PolyElement], label: str = ""):
        if not forms:
            raise ValueError("A Koszul complex needs at least one form")
        self.ring = forms[0].ring
        if any(f.ring != self.ring for f in forms):
            raise ValueError("All forms must live in the same ring")
        self.forms = tuple(forms)
        self.degrees = tuple(max(sum(m) for m in f.itermonoms()) if f else 0 for f in forms)
        self.label = label or f"K({len(forms)} forms)"

    @property
    def length(self) -> int:
        return len(self.forms)

    def basis(self, q: int, t: int) -> list[Hashable]:
        if not 0 <= q <= self.length:
            return []
        ngens = self.ring.ngens
        subsets = list(combinations(range(self.length), q))
        guard_monomials(sum(monomial_count(ngens, t - sum(self.degrees[s] for s in subset)) for subset in subsets))
        return [(subset, monom) for subset in subsets for monom in exponent_tuples(ngens, t - sum(self.degrees[s] for s in subset))]

    def differential(self, q: int, key: Hashable) -> Vector:
        subset, monom = key  # type: ignore[misc]
        image: dict[Hashable, object] = {}
        for k, s in enumerate(subset):
            rest = subset[:k] + subset[k + 1 :]
            sign = -1 if k % 2 else 1
            for form_monom, coefficient in self.forms[s].items():
                target = (rest, tuple(a + b for a, b in zip(form_monom, monom)))
                image[target] = image.get(target, QQ.zero) + sign * coefficient
        return {target: value for target, value in image.items() if value}


def koszul_homology(forms: Sequence[PolyElement], q: int, t: int) -> int:
    """dim H_q(K(forms)) in internal degree t."""
    return KoszulComplex(forms).homology(q, t)
