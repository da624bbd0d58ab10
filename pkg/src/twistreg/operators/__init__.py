"""Twisted operators, Weyl symbols and the solutions of the reduced equations."""

from .solutions import *  # noqa: F401,F403
from .solutions import __all__ as _sol_all
from .symbols import *  # noqa: F401,F403
from .symbols import __all__ as _sym_all

__all__ = list(_sym_all) + list(_sol_all)
