"""Growth diagnostics for analytic and subharmonic functions on the unit disc."""

from discgrowth._core import *  # noqa: F401,F403
from discgrowth._core import __version__  # noqa: F401
