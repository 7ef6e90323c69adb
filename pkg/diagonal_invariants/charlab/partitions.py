"""Integer partitions, used to index Schur functors."""

import re
from collections.abc import Iterator
from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, field_validator


class Partition(BaseModel):
    model_config = ConfigDict(frozen=True)

    parts: tuple[int, ...] = ()

    @field_validator("parts", mode="before")
    @classmethod
    def validate_parts(cls, value: object) -> tuple[int, ...]:
        parts = tuple(int(p) for p in value)  # type: ignore[union-attr]
        if any(p <= 0 for p in parts):
            raise ValueError(f"Partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> Self:
        return cls(parts=parts)

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse "(2,1,1)", "2 1 1" or the exponent form "(2,1^2)"."""
        parts: list[int] = []
        for token in re.split(r"[,\s]+", text.strip().strip("()[]")):
            if not token:
                continue
            base, _, repeat = token.partition("^")
            parts.extend([int(base)] * int(repeat or 1))
        return cls(parts=tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def columns(self) -> int:
        return self.parts[0] if self.parts else 0

    def conjugate(self) -> "Partition":
        return Partition(parts=tuple(sum(1 for p in self.parts if p > k) for k in range(self.columns)))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(weight: int, max_rows: int | None = None, max_columns: int | None = None) -> Iterator[Partition]:
    """Partitions of `weight` in reverse lexicographic order, (weight) first."""

    def build(remaining: int, largest: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        if max_rows is not None and len(prefix) >= max_rows:
            return
        for part in range(min(remaining, largest), 0, -1):
            yield from build(remaining - part, part, (*prefix, part))

    if weight < 0:
        return
    top = weight if max_columns is None else min(weight, max_columns)
    for parts in build(weight, top, ()):
        yield Partition.model_construct(parts=parts)
