"""Exact Grothendieck-group computations for d-cluster categories of type A_n."""

from .intlattice import AbelianGroupType, IntMatrix
from .polygon import Angulation, Diagonal, PolygonModel

__all__ = ["AbelianGroupType", "Angulation", "Diagonal", "IntMatrix", "PolygonModel"]
__version__ = "0.1.0"
