# ruff: noqa: E402 // ignore import not at top of file
from dotenv import load_dotenv

load_dotenv()

import sys
from logging import Logger, getLogger
from logging.config import dictConfig
from typing import Any

from pydantic import ValidationError
from yaml import safe_load

from diagonal_invariants import DISettings, get_settings
from diagonal_invariants.cli import RunConfig, run

logger: Logger = getLogger()


def configure_logging(settings: DISettings) -> None:
    if not settings.log_config.exists():
        return
    with open(settings.log_config, encoding="utf-8") as file:
        log_config: Any = safe_load(file)
    dictConfig(log_config)


def main(argv: list[str] | None = None) -> int:
    settings: DISettings = get_settings()
    configure_logging(settings)

    logger.info(f"Starting diagonal-invariants with settings: {settings.model_dump_json(indent=2)}")

    try:
        config: RunConfig = RunConfig(_cli_parse_args=argv if argv is not None else True)  # type: ignore[call-arg]
    except ValidationError as error:
        logger.error(f"Invalid run configuration: {error}")
        return 2

    logger.info(f"Run configuration: {config.model_dump_json(indent=2)}")

    return run(config)


if __name__ == "__main__":
    sys.exit(main())
