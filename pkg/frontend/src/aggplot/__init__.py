"""Figure pipeline for aggsim CSV artifacts."""

from .csvio import SchemaError, read_error_table, read_profiles, read_rates
from .figures import KINDS, FigureSpec, make_figure

__all__ = [
    "KINDS",
    "FigureSpec",
    "SchemaError",
    "make_figure",
    "read_error_table",
    "read_profiles",
    "read_rates",
]

__version__ = "0.1.0"
