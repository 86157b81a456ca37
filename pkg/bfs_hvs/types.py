"""
Type definitions for bfs-hvs.

Defines common data types, configuration records and type aliases used
throughout the engine.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Literal, Tuple

from .exceptions import DomainError

# Type aliases used for bfs-hvs checking
CheckMethod = Literal["direct", "iff1", "levels", "combo", "scalarsum"]
CHECK_METHODS: Tuple[CheckMethod, ...] = (
    "direct",
    "iff1",
    "levels",
    "combo",
    "scalarsum",
)

# Hypothesis each checker relies on
METHOD_HYPOTHESES: Dict[CheckMethod, str] = {
    "direct": "none",
    "iff1": "none",
    "levels": "none",
    "combo": "strongly left distributive hypervector space",
    "scalarsum": "strongly left distributive hypervector space",
}

# Type aliases used for constructions
NormalizeMode = Literal["shift", "scale"]
CharacteristicVariant = Literal["pos", "neg", "normal"]

# Axiom names in report order
AxiomName = Literal["H1", "H2", "H3", "H4", "H5", "srd", "sld", "invertible"]


@dataclass(frozen=True)
class EngineLimits:
    """Capacity limits for exhaustive scans."""

    max_subset_scan: int = 16
    max_oracle_candidates: int = 200_000


@dataclass(frozen=True)
class GradeGrid:
    """Finite grade levels the oracle and random generators draw from."""

    pos_levels: Tuple[Fraction, ...]
    neg_levels: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        pos = tuple(sorted({Fraction(g) for g in self.pos_levels}))
        neg = tuple(sorted({Fraction(g) for g in self.neg_levels}))
        if not pos or not neg:
            raise DomainError("Grade grid needs at least one level on each side")
        if pos[0] < 0 or pos[-1] > 1:
            raise DomainError(f"Positive levels must lie in [0, 1]: {pos}", value=pos)
        if neg[0] < -1 or neg[-1] > 0:
            raise DomainError(f"Negative levels must lie in [-1, 0]: {neg}", value=neg)
        object.__setattr__(self, "pos_levels", pos)
        object.__setattr__(self, "neg_levels", neg)

    @classmethod
    def default(cls) -> "GradeGrid":
        """The 3 x 3 grid {0, 1/2, 1} x {-1, -1/2, 0}."""
        half = Fraction(1, 2)
        return cls(
            (Fraction(0), half, Fraction(1)), (Fraction(-1), -half, Fraction(0))
        )

    @classmethod
    def uniform(cls, steps: int) -> "GradeGrid":
        """Evenly spaced grid with ``steps + 1`` levels on each side."""
        if steps < 1:
            raise DomainError("Grid needs at least one step", value=steps)
        pos = tuple(Fraction(i, steps) for i in range(steps + 1))
        return cls(pos, tuple(-g for g in pos))


@dataclass(frozen=True)
class SuiteConfig:
    """Configuration for the randomized equivalence suite."""

    instances: int = 200
    seed: int = 42
    grid: GradeGrid = field(default_factory=GradeGrid.default)
    params: Tuple[str, ...] = ("p",)
    workers: int = 1
    distributive_pairs: int = 50
    limits: EngineLimits = field(default_factory=EngineLimits)
