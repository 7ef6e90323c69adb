"""Numerical data of a smooth projective surface: χ(O), K², a lattice of named divisor classes and line bundles in it."""

import logging
from pathlib import Path
from typing import Any
from typing_extensions import Self

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator
from yaml import safe_load

logger: logging.Logger = logging.getLogger(__name__)

CANONICAL = "K"


class LineBundle(BaseModel):
    """An integer combination of named divisor classes, written additively: L^a ⊗ A^b is a*L + b*A."""

    model_config = ConfigDict(frozen=True)

    coefficients: dict[str, int] = {}

    @classmethod
    def of(cls, **coefficients: int) -> "LineBundle":
        return cls(coefficients=coefficients)

    def __add__(self, other: "LineBundle") -> "LineBundle":
        merged = dict(self.coefficients)
        for name, c in other.coefficients.items():
            merged[name] = merged.get(name, 0) + c
        return LineBundle(coefficients={name: c for name, c in merged.items() if c})

    def __rmul__(self, k: int) -> "LineBundle":
        return LineBundle(coefficients={name: k * c for name, c in self.coefficients.items() if k * c})

    def __neg__(self) -> "LineBundle":
        return -1 * self

    def __str__(self) -> str:
        return " + ".join(f"{c}{name}" if c != 1 else name for name, c in sorted(self.coefficients.items())) or "O"


class SurfaceNumerics(BaseModel):
    """χ(O_X), K² and an intersection pairing on named classes; c₂ follows from Noether's formula."""

    name: str = "X"
    chi_O: int = Field(validation_alias=AliasChoices("chi_O", "chiO"), description="Holomorphic Euler characteristic of O_X.")
    K2: int = Field(description="Self-intersection of the canonical class.")
    classes: list[str] = Field(description="Names of the divisor classes spanning the lattice; must include K.")
    pairing: list[list[int]] = Field(description="Symmetric intersection matrix of the named classes.")
    bundles: dict[str, dict[str, int]] = Field(default={}, description="Named line bundles as combinations of classes.")

    @model_validator(mode="after")
    def validate_lattice(self) -> Self:
        size = len(self.classes)
        if len(self.pairing) != size or any(len(row) != size for row in self.pairing):
            raise ValueError(f"'pairing' must be a {size}x{size} matrix")
        if any(self.pairing[i][j] != self.pairing[j][i] for i in range(size) for j in range(size)):
            raise ValueError("'pairing' must be symmetric")
        if CANONICAL not in self.classes:
            raise ValueError(f"'classes' must include the canonical class {CANONICAL!r}")
        for bundle, combination in self.bundles.items():
            unknown = set(combination) - set(self.classes)
            if unknown:
                raise ValueError(f"Bundle {bundle!r} uses unknown classes {sorted(unknown)}")
        if self.intersect(self.canonical, self.canonical) != self.K2:
            raise ValueError(f"K·K = {self.intersect(self.canonical, self.canonical)} from the pairing, but K2 = {self.K2}")
        return self

    @classmethod
    def load(cls, path: Path | str) -> "SurfaceNumerics":
        """Read a JSON or YAML surface description."""
        with open(path, encoding="utf-8") as file:
            data: Any = safe_load(file)
        surface = cls.model_validate(data)
        logger.debug(f"Loaded surface {surface.name} from {path}: χ(O)={surface.chi_O}, K²={surface.K2}, c₂={surface.c2}")
        return surface

    @property
    def c2(self) -> int:
        """Noether: 12 χ(O) = K² + c₂."""
        return 12 * self.chi_O - self.K2

    @property
    def canonical(self) -> LineBundle:
        return LineBundle.of(**{CANONICAL: 1})

    def bundle(self, name: str) -> LineBundle:
        if name == CANONICAL:
            return self.canonical
        if name not in self.bundles:
            raise KeyError(f"Unknown line bundle {name!r} on {self.name}; known: {sorted(self.bundles)}")
        return LineBundle(coefficients=self.bundles[name])

    def intersect(self, a: LineBundle, b: LineBundle) -> int:
        index = {name: k for k, name in enumerate(self.classes)}
        return sum(ca * cb * self.pairing[index[x]][index[y]] for x, ca in a.coefficients.items() for y, cb in b.coefficients.items())
