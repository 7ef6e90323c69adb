"""Chern characters on a surface and Hirzebruch-Riemann-Roch: χ(E) = rk(E) χ(O) - c₁(E)·K/2 + ch₂(E)."""

import logging
from functools import lru_cache

from pydantic import BaseModel, ConfigDict
from sympy import Poly, Rational, expand, symbols
from sympy.polys.polyfuncs import symmetrize

from diagonal_invariants.base import NonIntegralResultException, UnsupportedSizeException
from diagonal_invariants.charlab import Partition

from .surface import LineBundle, SurfaceNumerics

logger: logging.Logger = logging.getLogger(__name__)

_ALPHA, _BETA = symbols("alpha beta")
_S1, _S2 = symbols("s1 s2")


class CotangentClass(BaseModel):
    """ch of a bundle built from Ω¹, written through the Chern classes of X: c₁ = a·K, ch₂ = b·K² + c·c₂."""

    rank: int
    k_multiple: Rational
    k2_coefficient: Rational
    c2_coefficient: Rational

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class ChernPoly(BaseModel):
    """rank, c₁ as a line bundle class and ch₂ as a number."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rank: int
    c1: LineBundle
    ch2: Rational

    @classmethod
    def line(cls, surface: SurfaceNumerics, m: LineBundle) -> "ChernPoly":
        return cls(rank=1, c1=m, ch2=Rational(surface.intersect(m, m), 2))

    @classmethod
    def from_cotangent(cls, surface: SurfaceNumerics, data: CotangentClass) -> "ChernPoly":
        if data.k_multiple.q != 1:
            raise NonIntegralResultException("c₁ multiple of K", data.k_multiple)
        ch2 = data.k2_coefficient * surface.K2 + data.c2_coefficient * surface.c2
        return cls(rank=data.rank, c1=int(data.k_multiple) * surface.canonical, ch2=ch2)

    def twist(self, surface: SurfaceNumerics, m: LineBundle) -> "ChernPoly":
        """ch(E ⊗ M) = ch(E)·e^M."""
        ch2 = self.ch2 + surface.intersect(self.c1, m) + Rational(self.rank * surface.intersect(m, m), 2)
        return ChernPoly(rank=self.rank, c1=self.c1 + self.rank * m, ch2=ch2)

    def chi(self, surface: SurfaceNumerics, quantity: str = "χ") -> int:
        value = self.rank * surface.chi_O - Rational(surface.intersect(self.c1, surface.canonical), 2) + self.ch2
        if value.q != 1:
            raise NonIntegralResultException(quantity, value)
        return int(value)


def schur_weights(partition: Partition) -> list:
    """Chern roots of S^λΩ¹ in terms of the roots α, β of Ω¹."""
    if not 1 <= len(partition.parts) <= 2:
        raise UnsupportedSizeException("Schur functor of Ω¹", str(partition), "partitions with one or two rows")
    first = partition.parts[0]
    second = partition.parts[1] if len(partition.parts) == 2 else 0
    base = second * (_ALPHA + _BETA)
    return [base + k * _ALPHA + (first - second - k) * _BETA for k in range(first - second + 1)]


@lru_cache(maxsize=None)
def schur_cotangent_class(partition: Partition) -> CotangentClass:
    """ch(S^λΩ¹) by the splitting principle, symmetrized into c₁ = α + β = K and c₂ = αβ."""
    weights = schur_weights(partition)
    first, _, _ = symmetrize(expand(sum(weights)), _ALPHA, _BETA, formal=True, symbols=[_S1, _S2])
    second, _, _ = symmetrize(expand(sum(w**2 for w in weights) / 2), _ALPHA, _BETA, formal=True, symbols=[_S1, _S2])
    linear = Poly(first, _S1, _S2)
    quadratic = Poly(second, _S1, _S2)
    data = CotangentClass(
        rank=len(weights),
        k_multiple=Rational(linear.coeff_monomial(_S1)),
        k2_coefficient=Rational(quadratic.coeff_monomial(_S1**2)),
        c2_coefficient=Rational(quadratic.coeff_monomial(_S2)),
    )
    logger.debug(f"ch(S^{partition}Ω¹) = {data.rank} + {data.k_multiple}K + ({data.k2_coefficient}K² + {data.c2_coefficient}c₂)")
    return data


def chi_line(surface: SurfaceNumerics, m: LineBundle) -> int:
    """χ(M) = χ(O) + M·(M - K)/2."""
    return ChernPoly.line(surface, m).chi(surface, f"χ({m})")


def chi_schur_cotangent(surface: SurfaceNumerics, partition: Partition, m: LineBundle) -> int:
    ch = ChernPoly.from_cotangent(surface, schur_cotangent_class(partition)).twist(surface, m)
    return ch.chi(surface, f"χ(S^{partition}Ω¹ ⊗ {m})")
