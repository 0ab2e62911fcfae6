"""Prime pairs, Hardy-Littlewood constants and zeta-zero sums."""

from ._ppz import *  # noqa: F401,F403
from ._ppz import PpzError, DomainError, CapacityError, ParseError, ConfigError  # noqa: F401

__version__ = "1.0.0"
