"""Extremal random polygons on the unit circle."""

from ._umax import *  # noqa: F401,F403
from ._umax import __version__  # noqa: F401
