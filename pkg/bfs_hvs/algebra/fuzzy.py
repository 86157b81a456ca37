"""
Bipolar fuzzy soft sets over finite hypervector spaces.

Defines bipolar fuzzy sets, the soft sets that index them by parameter, and
the containment, sum, scalar-product, negation and level-set operations.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from ..exceptions import PreconditionError, SpaceMismatchError, StructureError
from .space import HyperVectorSpace, VectorSubset
from .utils.rational_utils import (
    GradeLike,
    check_negative_grade,
    check_positive_grade,
    check_thresholds,
    format_rational,
    join,
    meet,
    to_grade,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class BipolarFuzzySet:
    """Positive grades in [0, 1] and negative grades in [-1, 0] per vector."""

    pos: Tuple[Fraction, ...]
    neg: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        pos = tuple(to_grade(g) for g in self.pos)
        neg = tuple(to_grade(g) for g in self.neg)
        if len(pos) != len(neg):
            raise StructureError(
                f"Positive and negative grade vectors differ in length"
                f" ({len(pos)} vs {len(neg)})"
            )
        for g in pos:
            check_positive_grade(g)
        for g in neg:
            check_negative_grade(g)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "neg", neg)

    def __len__(self) -> int:
        return len(self.pos)


@dataclass(frozen=True)
class BipolarFuzzySoftSet:
    """
    A bipolar fuzzy soft set: one bipolar fuzzy set per parameter.

    ``table[i]`` holds the grades for ``params[i]``; parameter order is
    significant for iteration and serialization.
    """

    space: HyperVectorSpace
    params: Tuple[str, ...]
    table: Tuple[BipolarFuzzySet, ...]

    def __post_init__(self) -> None:
        params = tuple(self.params)
        table = tuple(self.table)
        if len(set(params)) != len(params):
            raise StructureError(f"Duplicate parameters in {params}")
        if len(params) != len(table):
            raise StructureError(
                f"{len(params)} parameters but {len(table)} grade rows"
            )
        for e, row in zip(params, table):
            if len(row) != self.space.size:
                raise StructureError(
                    f"Parameter {e} grades {len(row)} vectors,"
                    f" the carrier has {self.space.size}",
                    cell=e,
                )
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_grades(
        cls,
        space: HyperVectorSpace,
        grades: Mapping[str, Sequence[Tuple[GradeLike, GradeLike]]],
    ) -> "BipolarFuzzySoftSet":
        """
        Build a soft set from ``{param: [(pos, neg), ...]}`` in carrier order.

        Args:
            space: The underlying space
            grades: Grade pairs per parameter, one pair per vector

        Returns:
            The soft set, with parameters in mapping order
        """
        params = tuple(grades)
        table = tuple(
            BipolarFuzzySet(
                tuple(p for p, _ in grades[e]), tuple(n for _, n in grades[e])
            )
            for e in params
        )
        return cls(space, params, table)

    def __getitem__(self, param: str) -> BipolarFuzzySet:
        try:
            return self.table[self.params.index(param)]
        except ValueError:
            raise PreconditionError(
                f"Unknown parameter '{param}'", operation="lookup"
            ) from None

    def items(self) -> Iterator[Tuple[str, BipolarFuzzySet]]:
        return iter(zip(self.params, self.table))

    def with_table(
        self, params: Sequence[str], table: Sequence[BipolarFuzzySet]
    ) -> "BipolarFuzzySoftSet":
        return BipolarFuzzySoftSet(self.space, tuple(params), tuple(table))

    def to_dict(self) -> Dict[str, Dict[str, Tuple[str, str]]]:
        """Grades as ``{param: {vector: (pos, neg)}}`` with canonical literals."""
        return {
            e: {
                self.space.carrier[x]: (
                    format_rational(row.pos[x]),
                    format_rational(row.neg[x]),
                )
                for x in range(self.space.size)
            }
            for e, row in self.items()
        }


@dataclass(frozen=True)
class LevelSoftSet:
    """The (alpha, beta)-level soft set: one cut per parameter."""

    alpha: Fraction
    beta: Fraction
    params: Tuple[str, ...]
    cuts: Tuple[VectorSubset, ...]

    def __getitem__(self, param: str) -> VectorSubset:
        try:
            return self.cuts[self.params.index(param)]
        except ValueError:
            raise PreconditionError(
                f"Unknown parameter '{param}'", operation="lookup"
            ) from None

    def items(self) -> Iterator[Tuple[str, VectorSubset]]:
        return iter(zip(self.params, self.cuts))


def require_same_space(G: BipolarFuzzySoftSet, H: BipolarFuzzySoftSet) -> None:
    if G.space is not H.space and G.space != H.space:
        raise SpaceMismatchError("Soft sets live over different spaces")


def containment_witness(
    G: BipolarFuzzySoftSet, H: BipolarFuzzySoftSet
) -> Optional[Tuple[str, Optional[int], str]]:
    """
    First reason ``G`` is not contained in ``H``.

    Returns:
        ``None`` when ``G`` is contained in ``H``; otherwise
        ``(param, vector, side)`` where ``side`` is ``"param"``, ``"pos"`` or
        ``"neg"`` and ``vector`` is ``None`` for a missing parameter
    """
    require_same_space(G, H)
    for e, g in G.items():
        if e not in H.params:
            return e, None, "param"
        h = H[e]
        for x in range(G.space.size):
            if g.pos[x] > h.pos[x]:
                return e, x, "pos"
            if g.neg[x] < h.neg[x]:
                return e, x, "neg"
    return None


def bfs_contains(G: BipolarFuzzySoftSet, H: BipolarFuzzySoftSet) -> bool:
    """True when ``G`` is a bipolar fuzzy soft subset of ``H``."""
    return containment_witness(G, H) is None


def bfs_sum(G: BipolarFuzzySoftSet, H: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """
    Sum over the common parameters, in ``G``'s parameter order.

    The positive grade of ``x`` is the best ``min(G(y), H(z))`` over all
    decompositions ``x = y + z``; the negative grade is dual.
    """
    require_same_space(G, H)
    space = G.space
    params = [e for e in G.params if e in H.params]
    table = []
    for e in params:
        g, h = G[e], H[e]
        pos = []
        neg = []
        for pairs in space.decompositions:
            pos.append(join((min(g.pos[y], h.pos[z]) for y, z in pairs), ZERO))
            neg.append(meet((max(g.neg[y], h.neg[z]) for y, z in pairs), ZERO))
        table.append(BipolarFuzzySet(tuple(pos), tuple(neg)))
    return BipolarFuzzySoftSet(space, tuple(params), tuple(table))


def bfs_scalar(b: int, G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """
    Scalar product ``b o G``.

    The positive grade of ``x`` is the largest ``G(r)`` with ``x`` in
    ``b o r`` and 0 when there is none; the negative grade is the smallest
    such ``G(r)`` and 0 when there is none.
    """
    space = G.space
    if not 0 <= b < space.field.size:
        raise StructureError(f"Scalar index {b} is not a field element")
    preimages = space.preimages[b]
    table = []
    for _, g in G.items():
        pos = tuple(join((g.pos[r] for r in pre), ZERO) for pre in preimages)
        neg = tuple(meet((g.neg[r] for r in pre), ZERO) for pre in preimages)
        table.append(BipolarFuzzySet(pos, neg))
    return G.with_table(G.params, table)


def bfs_negate(G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """``-G``: grades read at the additive inverse."""
    negation = G.space.negation
    table = [
        BipolarFuzzySet(
            tuple(g.pos[negation[x]] for x in range(len(g))),
            tuple(g.neg[negation[x]] for x in range(len(g))),
        )
        for _, g in G.items()
    ]
    return G.with_table(G.params, table)


def level_cut(g: BipolarFuzzySet, alpha: Fraction, beta: Fraction) -> VectorSubset:
    """Vectors with positive grade at least ``alpha`` and negative at most ``beta``."""
    return VectorSubset(
        frozenset(
            x for x in range(len(g)) if g.pos[x] >= alpha and g.neg[x] <= beta
        )
    )


def level_soft_set(
    G: BipolarFuzzySoftSet, alpha: GradeLike, beta: GradeLike
) -> LevelSoftSet:
    """
    The (alpha, beta)-level soft set of ``G``.

    Args:
        G: The soft set
        alpha: Positive threshold in (0, 1]
        beta: Negative threshold in [-1, 0)

    Raises:
        DomainError: If a threshold is out of range
    """
    a, b = to_grade(alpha), to_grade(beta)
    check_thresholds(a, b)
    cuts = tuple(level_cut(g, a, b) for _, g in G.items())
    return LevelSoftSet(a, b, G.params, cuts)


def bfs_constant(
    space: HyperVectorSpace,
    params: Sequence[str],
    pos: GradeLike,
    neg: GradeLike,
) -> BipolarFuzzySoftSet:
    """The soft set with the same grade pair everywhere."""
    row = BipolarFuzzySet((pos,) * space.size, (neg,) * space.size)
    return BipolarFuzzySoftSet(space, tuple(params), (row,) * len(params))


def bfs_zero(space: HyperVectorSpace, params: Sequence[str]) -> BipolarFuzzySoftSet:
    return bfs_constant(space, params, 0, 0)


def restrict_params(
    G: BipolarFuzzySoftSet, params: Sequence[str]
) -> BipolarFuzzySoftSet:
    """Keep only ``params``, in the given order."""
    return G.with_table(params, [G[e] for e in params])
