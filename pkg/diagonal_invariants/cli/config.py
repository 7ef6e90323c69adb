"""Run configuration of the batch front-end: one subcommand plus its flags, from the command line, env or a YAML file."""

from pathlib import Path
from typing import Any, Literal
from typing_extensions import Self

from pydantic import AliasChoices, Field, FilePath, model_validator
from pydantic_settings import BaseSettings, CliPositionalArg, SettingsConfigDict
from yaml import safe_load

from diagonal_invariants.base import get_settings

Command = Literal[
    "graphs",
    "chartables",
    "table1",
    "table2",
    "table3",
    "multitor-check",
    "resolution-check",
    "invprod-check",
    "inv2k-check",
    "haiman-check",
    "euler",
    "regbound",
]

# Commands that enumerate permutation groups of degree n.
GROUP_COMMANDS: set[str] = {"graphs", "chartables", "table2", "table3", "multitor-check", "resolution-check", "invprod-check", "inv2k-check", "haiman-check"}

SIZES: dict[str, tuple[int, ...]] = {
    "resolution-check": (3, 4),
    "invprod-check": (3, 4, 5),
    "inv2k-check": (2, 3),
    "haiman-check": (3,),
    "euler": (3, 4),
}


class RunConfig(BaseSettings):
    command: CliPositionalArg[Command] = Field(description="Subcommand to run.")
    n: int | None = Field(
        default=None,
        ge=1,
        description="Number of points. Each subcommand has its own default.",
    )
    l: int | None = Field(  # noqa: E741
        default=None,
        ge=1,
        validation_alias=AliasChoices("l", "edges"),
        description="Edge count for 'graphs'; all edge counts when unset.",
    )
    k: int | None = Field(
        default=None,
        ge=1,
        description="Ideal power: k for 'inv2k-check' and 'regbound', s for 'haiman-check'.",
    )
    deg: int | None = Field(
        default=None,
        ge=0,
        validation_alias=AliasChoices("deg", "degree"),
        description="Degree cap of degreewise checks (weight cap for 'table1', q cap for 'table3').",
    )
    out: Path = Field(
        default=Path("reports"),
        validation_alias=AliasChoices("o", "out"),
        description="Directory the reports are written to.",
    )
    format: Literal["json", "csv", "text"] = Field(
        default="json",
        validation_alias=AliasChoices("f", "format"),
        description="Report format.",
    )
    jobs: int = Field(
        default=1,
        ge=1,
        validation_alias=AliasChoices("j", "jobs"),
        description="Parallel degreewise jobs.",
    )
    seed: int = Field(
        default=0,
        description="Random seed for sampled polynomials.",
    )
    surface: FilePath | None = Field(
        default=None,
        validation_alias=AliasChoices("s", "surface"),
        description="JSON or YAML surface description for 'euler'.",
    )
    mode: Literal["invariant", "product"] = Field(
        default="invariant",
        description="Regularity mode for 'regbound'.",
    )
    w: int = Field(
        default=0,
        description="K = wB on a surface with Pic = ZB.",
    )
    r: int = Field(
        default=1,
        ge=1,
        description="O(rB) is very ample.",
    )
    m0: int | None = Field(
        default=None,
        description="Twist m0 satisfying the vanishing hypotheses of the regularity theorems, if known.",
    )
    config: FilePath | None = Field(
        default=None,
        validation_alias=AliasChoices("c", "config"),
        description="YAML run file; explicit flags override its values.",
    )

    @model_validator(mode="before")
    @classmethod
    def merge_run_file(cls, data: Any) -> Any:
        """Fill values missing from `data` with those of the `--config` run file."""
        if not isinstance(data, dict):
            return data
        path = data.get("config", data.get("c"))
        if path is None:
            return data
        path = Path(path)
        if path.suffix.lower() not in (".yaml", ".yml"):
            raise ValueError("'config' must be a YAML file.")
        if not path.is_file():
            raise ValueError(f"Run file {path} does not exist.")
        with open(path, encoding="utf-8") as file:
            file_data: Any = safe_load(file) or {}
        if not isinstance(file_data, dict):
            raise ValueError(f"Run file {path} must hold a mapping.")
        file_data.pop("config", None)
        return file_data | data

    @model_validator(mode="after")
    def validate_command(self) -> Self:
        limit = get_settings().max_group_degree
        if self.command in GROUP_COMMANDS and self.n is not None and self.n > limit:
            raise ValueError(f"'{self.command}' enumerates permutation groups; n must be at most {limit} (DIAG_MAX_GROUP_DEGREE).")

        if self.command in SIZES and self.n is not None and self.n not in SIZES[self.command]:
            sizes = ", ".join(map(str, SIZES[self.command]))
            raise ValueError(f"'{self.command}' supports n in {{{sizes}}}, got {self.n}.")

        if self.command == "euler" and self.surface is None:
            raise ValueError("'euler' requires --surface.")

        return self

    @classmethod
    def from_file(cls, path: Path, **overrides: Any) -> "RunConfig":
        return cls.model_validate({"config": path} | overrides)

    model_config = SettingsConfigDict(env_prefix="DIAG_", populate_by_name=True)
