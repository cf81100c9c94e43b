"""Affine permutations of type A: 321-avoidance, full commutativity and cells."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
