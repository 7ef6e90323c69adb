"""Castelnuovo-Mumford regularity bounds for the invariants of I^k of the big diagonal and for the product ideal."""

import logging
from typing import Literal

from pydantic import BaseModel, Field

from diagonal_invariants.base import GuardViolationException, UnsupportedSizeException

logger: logging.Logger = logging.getLogger(__name__)

RegularityMode = Literal["invariant", "product"]

# The product-mode argument needs log-canonical singularities of the symmetric product pair.
PRODUCT_MAX_N = 7


class RegularityReport(BaseModel):
    n: int
    k: int
    mode: RegularityMode
    w: int = Field(description="K_X = w B with B the generator of Pic(X).")
    r: int = Field(description="Degree of the very ample generator: O(r B) very ample.")
    ample_factors: int = Field(description="Very ample factors of L^m ⊗ K⁻¹ sufficient for the vanishing hypothesis.")
    threshold: int = Field(description="Smallest twist m covered by the theorem on a Picard rank one surface.")
    bound: int = Field(description="Regularity bound m + 2n at the threshold.")
    m0: int | None = None
    m0_bound: int | None = None
    plane_bound: int | None = Field(default=None, description="The closed form on the projective plane, when (w, r) = (-3, 1).")


def _check_product_mode(n: int) -> None:
    if n <= PRODUCT_MAX_N:
        return
    if n == 8:
        reason = "the symmetric product pair is only expected to have log-canonical singularities for n = 8; the bound is not asserted"
    else:
        reason = "log-canonicity of the symmetric product pair fails for n >= 9"
    logger.error(f"Product-mode regularity rejected for n = {n}: {reason}")
    raise GuardViolationException("product-mode regularity", reason)


def regularity_bounds(n: int, k: int, mode: RegularityMode = "invariant", w: int = 0, r: int = 1, m0: int | None = None) -> RegularityReport:
    if n < 2:
        raise UnsupportedSizeException("number of points", n, ">= 2")
    if k < 1:
        raise UnsupportedSizeException("ideal power", k, ">= 1")
    if r < 1:
        raise UnsupportedSizeException("very ample degree r", r, ">= 1")
    twist = -(-w // r)
    half = (k + 1) // 2
    match mode:
        case "invariant":
            factors = 2 * n * half - 2 * half + 1
        case "product":
            _check_product_mode(n)
            factors = (k + 1) * n - k
    threshold = factors + twist
    plane = None
    if (w, r) == (-3, 1):
        plane = 2 * n * (half + 1) - 2 * half - 2 if mode == "invariant" else (k + 3) * (n - 1)
    return RegularityReport(
        n=n,
        k=k,
        mode=mode,
        w=w,
        r=r,
        ample_factors=factors,
        threshold=threshold,
        bound=threshold + 2 * n,
        m0=m0,
        m0_bound=m0 + 2 * n if m0 is not None else None,
        plane_bound=plane,
    )
