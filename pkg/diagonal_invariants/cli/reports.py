"""Report writers: JSON through orjson, tables through pandas, and the per-run metadata file."""

import logging
from pathlib import Path
from typing import Any

import orjson
import pandas as pd
from pydantic import BaseModel
from sympy.polys.domains import QQ

from diagonal_invariants.polycore import format_coefficient

from .config import RunConfig

logger: logging.Logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def _default(value: Any) -> Any:
    if isinstance(value, BaseModel):
        return value.model_dump(by_alias=True)
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    # exact rationals of sympy's ground types, written as p/q
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return format_coefficient(QQ.convert(value))
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def dumps(payload: Any) -> bytes:
    return orjson.dumps(payload, default=_default, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS)


def write_report(out: Path, name: str, payload: dict[str, Any], table: pd.DataFrame | None, fmt: str) -> list[Path]:
    """Write `payload` as JSON, or `table` as CSV/text; JSON always carries "schema": 1."""
    out.mkdir(parents=True, exist_ok=True)
    match fmt:
        case "json":
            path = out / f"{name}.json"
            path.write_bytes(dumps({"schema": SCHEMA_VERSION} | payload))
        case "csv":
            path = out / f"{name}.csv"
            _table(table, payload).to_csv(path, index=False)
        case "text":
            path = out / f"{name}.txt"
            path.write_text(_table(table, payload).to_string(index=False) + "\n", encoding="utf-8")
        case _:
            raise ValueError(f"Unsupported report format: {fmt}")
    logger.info(f"Wrote {path}")
    return [path]


def _table(table: pd.DataFrame | None, payload: dict[str, Any]) -> pd.DataFrame:
    if table is not None:
        return table
    return pd.DataFrame([{"key": key, "value": orjson.dumps(value, default=_default).decode()} for key, value in sorted(payload.items())])


def write_metadata(config: RunConfig, files: list[Path], verdict: bool | None) -> Path:
    """<command>_metadata.json: the run configuration, the written files and the verdict."""
    path = config.out / f"{config.command}_metadata.json"
    metadata = {
        "schema": SCHEMA_VERSION,
        "run_config": config.model_dump(mode="json"),
        "result_filenames": [str(f) for f in files],
        "verdict": verdict,
    }
    config.out.mkdir(parents=True, exist_ok=True)
    path.write_bytes(dumps(metadata))
    return path
