"""Extracting multiple solutions from randomised DFS and Bellman-Ford.

Predecessor arrays are lists of ints (``pi[v]`` is the parent of ``v``) and
parent distributions are square float64 numpy arrays (row = child).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
