"""
Utility Functions
"""

from .formatting import point_text, tight_bounds, to_decimal
from .logs import level_for, setup_logging

__all__ = [
    "point_text",
    "tight_bounds",
    "to_decimal",
    "level_for",
    "setup_logging",
]
