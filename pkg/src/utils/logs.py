"""
Logging Set-up
A single rich handler on standard error, so standard output carries only results
"""

import logging
from typing import Union

from rich.console import Console
from rich.logging import RichHandler

VERBOSITY_LEVELS = ("WARNING", "INFO", "DEBUG")


def level_for(verbose: int, default: str = "WARNING") -> str:
    """Log level for a repeated -v count; zero keeps the configured default"""
    if verbose <= 0:
        return default
    return VERBOSITY_LEVELS[min(verbose, len(VERBOSITY_LEVELS) - 1)]


def setup_logging(level: Union[str, int] = "WARNING") -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
