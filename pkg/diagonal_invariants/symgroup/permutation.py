import re
from collections.abc import Iterable, Sequence
from math import lcm
from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, model_validator

_CYCLE = re.compile(r"\(([\d\s,]*)\)")


class Permutation(BaseModel):
    """A permutation of {1..n} stored as its 1-based image list.

    Products compose right to left: (s * t)(i) = s(t(i)).
    """

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...]

    @model_validator(mode="after")
    def validate_bijection(self) -> Self:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"Not a permutation of 1..{len(self.images)}: {self.images}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls.model_construct(images=tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for k, point in enumerate(cycle):
                images[point - 1] = cycle[(k + 1) % len(cycle)]
        return cls(images=tuple(images))

    @classmethod
    def parse(cls, n: int, text: str) -> "Permutation":
        """Parse cycle notation such as "(1 2)(3 4)" or "(1,3)"; "()" is the identity."""
        cycles = [[int(p) for p in re.split(r"[\s,]+", body.strip()) if p] for body in _CYCLE.findall(text)]
        return cls.from_cycles(n, [c for c in cycles if c])

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError(f"Cannot compose permutations of degrees {self.degree} and {other.degree}")
        return Permutation.model_construct(images=tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation.model_construct(images=tuple(images))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(k) % self.order):
            result = base * result
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted by that point."""
        seen: set[int] = set()
        cycles: list[tuple[int, ...]] = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1 or include_fixed:
                cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    @property
    def order(self) -> int:
        return lcm(*self.cycle_type()) if self.degree else 1

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.degree + 1) if self(i) == i]

    def map_edge(self, edge: tuple[int, int]) -> tuple[int, int]:
        a, b = self(edge[0]), self(edge[1])
        return (a, b) if a < b else (b, a)

    def __str__(self) -> str:
        cycles = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) if cycles else "()"


def cycle_type(sigma: Permutation) -> tuple[int, ...]:
    return sigma.cycle_type()
