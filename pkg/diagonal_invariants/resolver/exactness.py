"""Degreewise exactness of map complexes: ranks in and out of every position against its dimension."""

import logging
from typing import Literal

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from .complexes import MapComplex

logger: logging.Logger = logging.getLogger(__name__)


class ExactnessRow(BaseModel):
    degree: int
    position: int
    module: str
    dim: int
    rank_in: int
    rank_out: int
    reference: int | None = Field(default=None, description="Expected kernel dimension at position 0.")
    closed: bool = Field(default=True, description="Whether the incoming images lie inside the module.")
    exact: bool


class DegreeSummary(BaseModel):
    degree: int
    euler: int = Field(description="HF(kernel) - dim M_0 + dim M_1 - ...")
    composes_to_zero: bool
    degree_preserving: bool
    exact: bool


class ExactnessReport(BaseModel):
    schema_version: Literal[1] = Field(default=1, alias="schema")
    name: str
    n: int
    degree_cap: int
    shift: int = 0
    constants: dict[str, str] = {}
    per_degree: list[ExactnessRow] = []
    summaries: list[DegreeSummary] = []

    model_config = ConfigDict(populate_by_name=True)

    @property
    def verdict(self) -> bool:
        return all(s.exact for s in self.summaries)

    def defects(self) -> list[ExactnessRow]:
        return [row for row in self.per_degree if not row.exact]

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([row.model_dump() for row in self.per_degree])

    def to_dict(self) -> dict:
        return self.model_dump(by_alias=True) | {"verdict": self.verdict}


def degree_rows(complex_: MapComplex, degree: int) -> tuple[list[ExactnessRow], DegreeSummary]:
    """Rows for every position of the complex in one degree."""
    maps = complex_.maps
    modules = complex_.modules
    ranks = [m.rank(degree) for m in maps]
    rows: list[ExactnessRow] = []
    for position, module in enumerate(modules):
        dim = module.dimension(degree)
        rank_in = ranks[position - 1] if position > 0 else 0
        rank_out = ranks[position] if position < len(maps) else 0
        closed = maps[position - 1].lands_in_target(degree) if position > 0 else True
        if position == 0:
            reference = complex_.reference(degree)
            exact = dim - rank_out == reference
        else:
            reference = None
            exact = closed and rank_in + rank_out == dim
        rows.append(
            ExactnessRow(
                degree=degree,
                position=position,
                module=module.name,
                dim=dim,
                rank_in=rank_in,
                rank_out=rank_out,
                reference=reference,
                closed=closed,
                exact=exact,
            )
        )
        if not exact:
            logger.warning(f"{complex_.name}: defect at position {position} ({module.name}) in degree {degree}: {rows[-1]}")
    composes = all(first.composes_to_zero(second, degree) for first, second in zip(maps, maps[1:]))
    preserving = all(m.is_degree_preserving(degree) for m in maps)
    summary = DegreeSummary(
        degree=degree,
        euler=complex_.euler_characteristic(degree),
        composes_to_zero=composes,
        degree_preserving=preserving,
        exact=composes and preserving and all(row.exact for row in rows),
    )
    logger.debug(f"{complex_.name} degree {degree}: dims {[row.dim for row in rows]}, exact={summary.exact}")
    return rows, summary


def exactness_check(complex_: MapComplex, degree_cap: int, progress: bool = False) -> ExactnessReport:
    """Check every degree 0..degree_cap of `complex_`; defects are reported, never raised."""
    report = ExactnessReport(
        name=complex_.name,
        n=complex_.n,
        degree_cap=degree_cap,
        shift=complex_.shift,
        constants=complex_.constants,
    )
    for degree in tqdm(range(degree_cap + 1), desc=complex_.name, disable=not progress):
        rows, summary = degree_rows(complex_, degree)
        report.per_degree.extend(rows)
        report.summaries.append(summary)
    logger.info(f"{complex_.name}: {'exact' if report.verdict else 'NOT exact'} in degrees 0..{degree_cap}")
    return report
