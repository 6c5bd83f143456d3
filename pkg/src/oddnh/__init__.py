"""Exact computations with odd symmetric polynomials and the dg odd nilHecke algebra."""

from .skewpoly import SkewPoly
from .onh import ONHElement

__all__ = ["SkewPoly", "ONHElement"]
__version__ = "0.1.0"
