"""H^0 and Ext^1_B dimensions for Specht modules in characteristic p."""

from ._specht import *  # noqa: F401,F403
from ._specht import __doc__  # noqa: F401
