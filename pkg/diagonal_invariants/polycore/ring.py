"""Ambient polynomial rings of X^n for X the affine d-space."""

from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import combinations_with_replacement
from operator import itemgetter
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from sympy import Symbol
from sympy.polys import rings
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyElement

from diagonal_invariants.base import UnsupportedSizeException

Monom = tuple[int, ...]


class MonomialOrder(BaseModel):
    """A monomial order: grevlex, lex, or a block order eliminating the first `split` variables."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["grevlex", "lex", "block"] = "grevlex"
    split: int = Field(default=0, ge=0)

    def to_sympy(self) -> SympyOrder:
        match self.kind:
            case "grevlex":
                return grevlex
            case "lex":
                return lex
            case "block":
                return ProductOrder((lex, itemgetter(slice(0, self.split))), (grevlex, itemgetter(slice(self.split, None))))


GREVLEX = MonomialOrder()
LEX = MonomialOrder(kind="lex")


@lru_cache(maxsize=None)
def _sympy_ring(symbols: tuple[Symbol, ...], order: MonomialOrder) -> rings.PolyRing:
    # one instance per (symbols, order): block orders only compare equal to themselves
    return rings.PolyRing(symbols, QQ, order.to_sympy())


class PolyRing(BaseModel):
    """The coordinate ring Q[x_{j,i}] of X^n, optionally with formal differentials dx_i and an elimination variable t.

    The differentials dx_1, ..., dx_d have degree 1 and are fixed by every point permutation.
    The auxiliary variable t is placed first and has degree 0.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Number of points.")
    d: int = Field(default=2, ge=1, description="Coordinates per point.")
    differentials: bool = Field(default=False, description="Whether the formal differentials dx_i are adjoined.")
    aux: bool = Field(default=False, description="Whether the elimination variable t is adjoined.")

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        head: tuple[Symbol, ...] = (Symbol("t"),) if self.aux else ()
        points = tuple(Symbol(f"x{j}_{i}") for j in range(1, self.n + 1) for i in range(1, self.d + 1))
        forms = tuple(Symbol(f"dx{i}") for i in range(1, self.d + 1)) if self.differentials else ()
        return head + points + forms

    @property
    def ngens(self) -> int:
        return self.n * self.d + (self.d if self.differentials else 0) + (1 if self.aux else 0)

    @property
    def label(self) -> str:
        extras = "".join(s for s, flag in ((", dx", self.differentials), (", t", self.aux)) if flag)
        return f"Q[x; n={self.n}, d={self.d}{extras}]"

    def sympy_ring(self, order: MonomialOrder = GREVLEX) -> rings.PolyRing:
        return _sympy_ring(self.symbols, order)

    @property
    def base(self) -> rings.PolyRing:
        return self.sympy_ring(GREVLEX)

    def elimination(self) -> "PolyRing":
        """The same ring with t adjoined."""
        return self.model_copy(update={"aux": True})

    @property
    def elimination_order(self) -> MonomialOrder:
        return MonomialOrder(kind="block", split=1)

    def check_point(self, j: int) -> None:
        if not 1 <= j <= self.n:
            raise UnsupportedSizeException("point index", j, f"1..{self.n}")

    def check_coordinate(self, i: int) -> None:
        if not 1 <= i <= self.d:
            raise UnsupportedSizeException("coordinate index", i, f"1..{self.d}")

    def index(self, j: int, i: int) -> int:
        """Position of x_{j,i} in the exponent vector."""
        self.check_point(j)
        self.check_coordinate(i)
        return (1 if self.aux else 0) + (j - 1) * self.d + (i - 1)

    def dx_index(self, i: int) -> int:
        if not self.differentials:
            raise ValueError(f"{self.label} has no differentials")
        self.check_coordinate(i)
        return (1 if self.aux else 0) + self.n * self.d + (i - 1)

    @property
    def t_index(self) -> int:
        if not self.aux:
            raise ValueError(f"{self.label} has no elimination variable")
        return 0

    def locate(self, position: int) -> tuple[Literal["x", "dx", "t"], int, int]:
        """Inverse of `index`/`dx_index`: ("x", j, i), ("dx", 0, i) or ("t", 0, 0)."""
        if self.aux:
            if position == 0:
                return ("t", 0, 0)
            position -= 1
        if position < self.n * self.d:
            return ("x", position // self.d + 1, position % self.d + 1)
        return ("dx", 0, position - self.n * self.d + 1)

    def var(self, j: int, i: int, order: MonomialOrder = GREVLEX) -> PolyElement:
        return self.sympy_ring(order).gens[self.index(j, i)]

    def dx(self, i: int, order: MonomialOrder = GREVLEX) -> PolyElement:
        return self.sympy_ring(order).gens[self.dx_index(i)]

    @property
    def t(self) -> PolyElement:
        return self.sympy_ring(self.elimination_order).gens[self.t_index]

    def weight(self, monom: Monom) -> int:
        """Standard degree of a monomial; t has degree 0."""
        return sum(monom[1:]) if self.aux else sum(monom)

    def dx_degree(self, monom: Monom) -> int:
        if not self.differentials:
            return 0
        start = (1 if self.aux else 0) + self.n * self.d
        return sum(monom[start:])

    def point_positions(self, points: Sequence[int]) -> list[int]:
        return [self.index(j, i) for j in points for i in range(1, self.d + 1)]

    def monomials(self, degree: int, points: Sequence[int] | None = None, dx_degree: int | None = None) -> Iterator[Monom]:
        """Monomials of total degree `degree` in the coordinates of `points` (all points by default).

        With `dx_degree` set, exactly that many of the degrees are carried by the differentials.
        """
        if degree < 0:
            return
        positions = self.point_positions(points if points is not None else range(1, self.n + 1))
        forms = [self.dx_index(i) for i in range(1, self.d + 1)] if dx_degree else []
        x_degree = degree - (dx_degree or 0)
        if x_degree < 0:
            return
        for x_part in combinations_with_replacement(positions, x_degree):
            for dx_part in combinations_with_replacement(forms, dx_degree or 0):
                exponents = [0] * self.ngens
                for position in x_part + dx_part:
                    exponents[position] += 1
                yield tuple(exponents)

    def monomial(self, monom: Monom, order: MonomialOrder = GREVLEX) -> PolyElement:
        ring = self.sympy_ring(order)
        return ring.from_dict({monom: QQ.one})

    def convert(self, p: PolyElement, order: MonomialOrder = GREVLEX) -> PolyElement:
        """Move `p` into this ring under `order`; works across the t-adjoined and plain variants."""
        return p.set_ring(self.sympy_ring(order))
