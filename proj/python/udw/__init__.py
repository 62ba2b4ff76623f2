"""Finite-time detector response toolkit (thin wrapper over the C++ core)."""

from ._udw import *  # noqa: F401,F403
from ._udw import gzk  # noqa: F401
