"""Finite cycle sets, their braces, extensions and classification."""
from .core import *  # noqa: F401,F403
from .kernels import BACKEND  # noqa: F401

__version__ = "0.1.0"
