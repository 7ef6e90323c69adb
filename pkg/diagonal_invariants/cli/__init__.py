from .config import GROUP_COMMANDS, SIZES, Command, RunConfig
from .reports import SCHEMA_VERSION, dumps, write_metadata, write_report
from .runner import DEFAULT_DEGREES, run

__all__: list[str] = [
    "Command",
    "DEFAULT_DEGREES",
    "GROUP_COMMANDS",
    "RunConfig",
    "SCHEMA_VERSION",
    "SIZES",
    "dumps",
    "run",
    "write_metadata",
    "write_report",
]
