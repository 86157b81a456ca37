"""
bfs-hvs - Bipolar fuzzy soft sets over finite hypervector spaces.

This package provides exact-arithmetic checking, construction and oracle
verification for bipolar fuzzy soft hypervector spaces given by tables.
"""

from importlib.metadata import PackageNotFoundError, version

from .algebra.checkers import Verdict, check_bfs_hvs, cross_check
from .algebra.constructions import generate_bfs_hvs, level_promote, normalize
from .algebra.field import FiniteField
from .algebra.fuzzy import BipolarFuzzySet, BipolarFuzzySoftSet
from .algebra.oracle import equivalence_suite
from .algebra.space import HyperVectorSpace, VectorSubset
from .client import Workbench, open_workbench
from .dsl import Document, parse_document, serialize_document
from .exceptions import (
    BfsHvsError,
    CapacityError,
    ConstructionError,
    DomainError,
    HypothesisError,
    NameNotFoundError,
    OracleError,
    ParseError,
    PreconditionError,
    SpaceMismatchError,
    StructureError,
)
from .types import EngineLimits, GradeGrid, SuiteConfig

try:
    __version__ = version("bfs-hvs")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    # Core functions
    "open_workbench",
    "parse_document",
    "serialize_document",
    "check_bfs_hvs",
    "cross_check",
    "generate_bfs_hvs",
    "level_promote",
    "normalize",
    "equivalence_suite",
    # Main classes
    "Workbench",
    "Document",
    "FiniteField",
    "HyperVectorSpace",
    "VectorSubset",
    "BipolarFuzzySet",
    "BipolarFuzzySoftSet",
    "Verdict",
    # Types
    "EngineLimits",
    "GradeGrid",
    "SuiteConfig",
    # Exceptions
    "BfsHvsError",
    "CapacityError",
    "ConstructionError",
    "DomainError",
    "HypothesisError",
    "NameNotFoundError",
    "OracleError",
    "ParseError",
    "PreconditionError",
    "SpaceMismatchError",
    "StructureError",
]
