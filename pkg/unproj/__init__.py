"""Exact verification toolkit for binomial-Pfaffian unprojection formats."""

from importlib import metadata

try:
    __version__ = metadata.version("unproj")
except metadata.PackageNotFoundError:  # pragma: no cover
    __version__ = "0.0.0"

__all__ = ["__version__"]
