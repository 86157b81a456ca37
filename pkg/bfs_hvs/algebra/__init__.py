"""
Algebra layer for bfs-hvs.

Finite fields, hypervector spaces, bipolar fuzzy soft sets, the bfs-hvs
checkers, constructions and oracles.
"""

from .field import FiniteField
from .fuzzy import BipolarFuzzySet, BipolarFuzzySoftSet, LevelSoftSet
from .space import AxiomReport, HyperVectorSpace, VectorSubset

__all__ = [
    "AxiomReport",
    "BipolarFuzzySet",
    "BipolarFuzzySoftSet",
    "FiniteField",
    "HyperVectorSpace",
    "LevelSoftSet",
    "VectorSubset",
]
