"""Run-scoped logging for the ``unproj`` package."""

from __future__ import annotations

import logging
import sys

from .io_utils import RunPaths

PACKAGE_LOGGER = "unproj"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def build_logger(run_paths: RunPaths, verbose: bool = False) -> logging.Logger:
    """Send every ``unproj.*`` logger to stderr and to the run's ``unproj.log``.

    stdout is left to the command output. Returns the child logger for the run itself.
    """
    package = logging.getLogger(PACKAGE_LOGGER)
    release_handlers(package)
    package.setLevel(logging.DEBUG)
    package.propagate = False

    formatter = logging.Formatter(fmt=LOG_FORMAT, datefmt="%H:%M:%S")
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if verbose else logging.INFO)
    console_handler.setFormatter(formatter)
    package.addHandler(console_handler)

    file_handler = logging.FileHandler(run_paths.log_path, encoding="utf-8")
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(formatter)
    package.addHandler(file_handler)

    return package.getChild(f"run.{run_paths.run_id}")


def release_handlers(logger: logging.Logger | None = None) -> None:
    """Close and detach the handlers a previous ``build_logger`` call installed."""
    target = logger or logging.getLogger(PACKAGE_LOGGER)
    for handler in list(target.handlers):
        target.removeHandler(handler)
        handler.close()
    target.propagate = True
