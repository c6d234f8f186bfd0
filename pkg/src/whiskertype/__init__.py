"""Exact combinatorics of zero-dimensional monomial ideals and their polarizations."""

from .core import (
    ArtinianContext,
    MonomialIdeal,
    build_context,
    context_from,
    format_ideal,
    h_vector,
    minimalize,
    parse_ideal,
    random_artinian,
    whisker_from_complex,
)
from .errors import NotZeroDimensional, ParseError, ScaleError, WhiskerError

__version__ = "0.1.0"
