"""Exact rational-tangle calculus with an independent diagram oracle.

Thin re-export of the compiled extension; see the project README for the
operation reference.
"""

from ._tanglekit import *  # noqa: F401,F403
from ._tanglekit import __version__  # noqa: F401
