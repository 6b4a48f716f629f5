"""Fusion rings, exact factorizations, and group-theoretical data."""

from ._core import *  # noqa: F401,F403
from ._core import FusionError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]
