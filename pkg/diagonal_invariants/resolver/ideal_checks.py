"""Graded dimension comparisons between ideals of the big diagonal: products, powers and intersections."""

import logging
from functools import lru_cache, reduce
from itertools import combinations
from typing import Literal

import pandas as pd
from pydantic import BaseModel, Field
from tqdm import tqdm

from diagonal_invariants.base import UnsupportedSizeException
from diagonal_invariants.polycore import (
    GradedSpace,
    IdealSpace,
    IntersectionSpace,
    PolyRing,
    big_diagonal_ideal,
    diagonal_ideal,
    hilbert_function,
    ideal_power,
    ideal_product,
)
from diagonal_invariants.symgroup import PermGroup, invariant_dimension, symmetric_group

logger: logging.Logger = logging.getLogger(__name__)

CheckKind = Literal["invprod", "inv2k", "haiman"]

# Sizes where the identities are asserted; everything else in SUPPORTED is an experiment.
ASSERTED: dict[str, set[int]] = {"invprod": {3, 4}, "inv2k": {2, 3}, "haiman": {3}}
SUPPORTED: dict[str, set[int]] = {"invprod": {3, 4, 5}, "inv2k": {2, 3}, "haiman": {3}}
PARAMETERS: dict[str, set[int]] = {"invprod": {1}, "inv2k": {1, 2}, "haiman": {2, 3}}


class IdealComparison(BaseModel):
    check: str
    n: int
    parameter: int = Field(description="k for inv2k, s for haiman, 1 otherwise.")
    degree: int
    left_label: str
    right_label: str
    left: int
    right: int
    experiment: bool = False

    @property
    def agree(self) -> bool:
        return self.left == self.right


def _check_sizes(kind: CheckKind, n: int, parameter: int) -> None:
    if n not in SUPPORTED[kind]:
        raise UnsupportedSizeException(f"{kind} size", n, ", ".join(map(str, sorted(SUPPORTED[kind]))))
    if parameter not in PARAMETERS[kind]:
        raise UnsupportedSizeException(f"{kind} parameter", parameter, ", ".join(map(str, sorted(PARAMETERS[kind]))))


@lru_cache(maxsize=None)
def comparison_spaces(kind: CheckKind, n: int, parameter: int, degree_cap: int) -> tuple[GradedSpace, GradedSpace, PermGroup | None]:
    """The two graded spaces compared by a check, and the group whose invariants are counted (None: plain dimensions)."""
    _check_sizes(kind, n, parameter)
    ring = PolyRing(n=n, d=2)
    diagonals = [diagonal_ideal(ring, pair) for pair in combinations(range(1, n + 1), 2)]
    match kind:
        case "invprod":
            product = reduce(ideal_product, diagonals)
            product.label = "∏I_Δij"
            return IdealSpace(product), IntersectionSpace(diagonals, label="∩I_Δij"), symmetric_group(n)
        case "inv2k":
            big = big_diagonal_ideal(ring, degree_bound=degree_cap)
            return IdealSpace(ideal_power(big, 2 * parameter - 1)), IdealSpace(ideal_power(big, 2 * parameter)), symmetric_group(n)
        case "haiman":
            big = big_diagonal_ideal(ring, degree_bound=degree_cap)
            powers = [ideal_power(ideal, parameter) for ideal in diagonals]
            return IntersectionSpace(powers, label=f"∩I_Δij^{parameter}"), IdealSpace(ideal_power(big, parameter)), None


def compare_degree(kind: CheckKind, n: int, parameter: int, degree: int, degree_cap: int) -> IdealComparison:
    left, right, group = comparison_spaces(kind, n, parameter, degree_cap)
    if group is None:
        dims = (hilbert_function(left, degree), hilbert_function(right, degree))
    else:
        dims = (invariant_dimension(left, group, degree), invariant_dimension(right, group, degree))
    row = IdealComparison(
        check=kind,
        n=n,
        parameter=parameter,
        degree=degree,
        left_label=left.label,
        right_label=right.label,
        left=dims[0],
        right=dims[1],
        experiment=n not in ASSERTED[kind],
    )
    logger.debug(f"{kind} n={n} parameter={parameter} degree {degree}: {row.left} vs {row.right}")
    return row


def ideal_check(kind: CheckKind, n: int, parameter: int, degree_cap: int, progress: bool = False) -> list[IdealComparison]:
    rows = [compare_degree(kind, n, parameter, t, degree_cap) for t in tqdm(range(degree_cap + 1), desc=kind, disable=not progress)]
    failed = [row.degree for row in rows if not row.agree]
    if failed and n in ASSERTED[kind]:
        logger.warning(f"{kind} n={n} parameter={parameter}: dimensions differ in degrees {failed}")
    return rows


def comparison_dataframe(rows: list[IdealComparison]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() | {"agree": row.agree} for row in rows])
