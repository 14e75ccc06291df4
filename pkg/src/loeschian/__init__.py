"""Loeschian numbers, Bezout certificates and order-3 elements of the orders O(d)."""

from .eisenstein import EisensteinInt, is_loeschian, represent
from .quaternion import QuatElement

__all__ = ["EisensteinInt", "QuatElement", "is_loeschian", "represent"]
__version__ = "0.1.0"
