"""Discrete approximation operators for curves and image curves."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
