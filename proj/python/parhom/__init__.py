"""Parity homomorphism counting for cactus targets."""

from ._parhom import *  # noqa: F401,F403
from ._parhom import Error, ParseError, PreconditionError, BudgetError, InternalContradiction  # noqa: F401
