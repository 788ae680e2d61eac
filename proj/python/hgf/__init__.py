"""Hyperbolic-type metrics, quasiconformal special functions and inequality checks."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
