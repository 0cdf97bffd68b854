"""Casimir-Polder and van der Waals interactions of two-level atoms and dilute gases.

Natural units hbar = c = k_B = 1 throughout; see UNITS.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__, UNITS  # noqa: F401
