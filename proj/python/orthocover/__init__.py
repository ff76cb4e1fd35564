"""Orthogonal colourings and independent coverings of graphs."""

from ._orthocover import *  # noqa: F401,F403
from ._orthocover import __doc__  # noqa: F401
