from functools import lru_cache
from pathlib import Path
from typing_extensions import Self

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class RingMismatchException(Exception):
    """Exception raised when two operands live in different polynomial rings."""

    def __init__(self, left: str, right: str):
        super().__init__(f"Ring mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class UnsupportedSizeException(Exception):
    """Exception raised when a point count, index or degree is outside the supported range."""

    def __init__(self, what: str, value: object, supported: str):
        super().__init__(f"Unsupported {what}: {value} (supported: {supported})")
        self.what = what
        self.value = value
        self.supported = supported


class NotACharacterException(Exception):
    """Exception raised when a class function does not decompose with nonnegative integer multiplicities."""

    def __init__(self, label: str, multiplicity: object):
        super().__init__(f"Not a character: multiplicity of {label} is {multiplicity}")
        self.label = label
        self.multiplicity = multiplicity


class ComputationTooLargeException(Exception):
    """Exception raised when a degreewise linear algebra problem exceeds the monomial guard."""

    def __init__(self, size: int, limit: int):
        super().__init__(f"Computation too large: {size} monomials exceed the limit of {limit} (raise DIAG_MAX_MONOMIALS to allow it)")
        self.size = size
        self.limit = limit


class GuardViolationException(Exception):
    """Exception raised when the hypotheses of a bound or a theorem are not met."""

    def __init__(self, guard: str, reason: str):
        super().__init__(f"{guard}: {reason}")
        self.guard = guard
        self.reason = reason


class NonIntegralResultException(Exception):
    """Exception raised when a Riemann-Roch computation returns a non-integer."""

    def __init__(self, quantity: str, value: object):
        super().__init__(f"Non-integral result for {quantity}: {value} (inconsistent intersection data)")
        self.quantity = quantity
        self.value = value


class DISettings(BaseSettings):
    cache_dir: Path | None = Field(
        default=None,
        description="Directory where per-degree check results are cached. Disabled when unset.",
    )
    max_group_degree: int = Field(
        default=6,
        ge=1,
        le=6,
        description="Largest n for which permutation groups are enumerated explicitly.",
    )
    max_monomials: int = Field(
        default=200_000,
        ge=1,
        description="Largest number of monomials allowed in a single degreewise linear algebra problem.",
    )
    log_config: Path = Field(
        default=Path("logconf.yaml"),
        description="Path to the logging dictConfig YAML file.",
    )

    @model_validator(mode="after")
    def validate_log_config(self) -> Self:
        if self.log_config.suffix.lower() not in (".yaml", ".yml"):
            raise ValueError("'log_config' must be a YAML file.")

        return self

    model_config = SettingsConfigDict(env_prefix="DIAG_")


@lru_cache(maxsize=1)
def get_settings() -> DISettings:
    return DISettings()
