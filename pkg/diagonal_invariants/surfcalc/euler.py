"""Euler characteristics of (det L^[n])² ⊗ D_A on the Hilbert scheme of n points, n = 3 or 4, from data on the surface."""

import logging
from math import factorial, prod

from pydantic import BaseModel

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.charlab import Partition

from .chern import chi_line, chi_schur_cotangent
from .surface import LineBundle, SurfaceNumerics

logger: logging.Logger = logging.getLogger(__name__)


def binomial(top: int, k: int) -> int:
    """top (top - 1) ... (top - k + 1) / k!, for any integer top."""
    return prod(top - i for i in range(k)) // factorial(k)


class EulerReport(BaseModel):
    surface: str
    n: int
    L: str
    A: str
    terms: dict[str, int]
    value: int


def euler_terms(surface: SurfaceNumerics, L: LineBundle, A: LineBundle, n: int) -> dict[str, int]:
    """Every χ entering the formula for n, named as in the formula."""
    if n not in (3, 4):
        raise UnsupportedSizeException("Hilbert scheme size", n, "n = 3 or 4")
    one_form = Partition.of(1)
    terms = {
        "χ(L²⊗A)": chi_line(surface, 2 * L + A),
        "χ(L⁴⊗A²)": chi_line(surface, 4 * L + 2 * A),
        "χ(Ω¹⊗L⁶⊗A³)": chi_schur_cotangent(surface, one_form, 6 * L + 3 * A),
    }
    if n == 4:
        terms["χ(Ω¹⊗L⁸⊗A⁴)"] = chi_schur_cotangent(surface, one_form, 8 * L + 4 * A)
        terms["χ(K⊗L⁸⊗A⁴)"] = chi_line(surface, surface.canonical + 8 * L + 4 * A)
        terms["χ(S³Ω¹⊗L⁸⊗A⁴)"] = chi_schur_cotangent(surface, Partition.of(3), 8 * L + 4 * A)
    return terms


def euler_det2(surface: SurfaceNumerics, L: LineBundle, A: LineBundle, n: int) -> int:
    t = euler_terms(surface, L, A, n)
    a, b, c = t["χ(L²⊗A)"], t["χ(L⁴⊗A²)"], t["χ(Ω¹⊗L⁶⊗A³)"]
    if n == 3:
        return binomial(a + 2, 3) - b * a + c
    return (
        binomial(a + 3, 4)
        - b * binomial(a + 1, 2)
        + binomial(b, 2)
        + c * a
        - t["χ(Ω¹⊗L⁸⊗A⁴)"]
        - t["χ(K⊗L⁸⊗A⁴)"]
        - t["χ(S³Ω¹⊗L⁸⊗A⁴)"]
    )


def euler_report(surface: SurfaceNumerics, L: LineBundle, A: LineBundle, n: int) -> EulerReport:
    report = EulerReport(
        surface=surface.name,
        n=n,
        L=str(L),
        A=str(A),
        terms=euler_terms(surface, L, A, n),
        value=euler_det2(surface, L, A, n),
    )
    logger.info(f"χ({surface.name}^[{n}], (det L^[{n}])²⊗D_A) = {report.value} for L = {L}, A = {A}")
    return report
