"""
Constructions of bipolar fuzzy soft hypervector spaces.

Builds characteristic soft sets, promotes a level cut to full membership,
generates the smallest bfs-hvs containing a given soft set, and normalizes
a bfs-hvs so that the zero vector carries the extreme grades.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import ConstructionError, HypothesisError, PreconditionError
from ..types import CharacteristicVariant, NormalizeMode
from .checkers import is_bfs_hvs_direct
from .fuzzy import BipolarFuzzySet, BipolarFuzzySoftSet, level_soft_set
from .space import HyperVectorSpace, VectorSubset, is_subhyperspace, span
from .utils.rational_utils import GradeLike, format_rational

logger = logging.getLogger(__name__)

ONE = Fraction(1)
ZERO = Fraction(0)


@dataclass(frozen=True)
class Shell:
    """One step of the generated construction."""

    step: int
    generators: VectorSubset
    span: VectorSubset
    shell: VectorSubset
    pos: Tuple[Fraction, ...]
    neg: Tuple[Fraction, ...]


@dataclass(frozen=True)
class GeneratedBfsHvs:
    """The generated bfs-hvs with its shell decomposition."""

    result: BipolarFuzzySoftSet
    shells: Tuple[Shell, ...]

    def trace(self) -> List[str]:
        """Human-readable shell lines in step order."""
        space = self.result.space
        lines = []
        for s in self.shells:
            grades = ", ".join(
                f"{e}=({format_rational(p)},{format_rational(n)})"
                for e, p, n in zip(self.result.params, s.pos, s.neg)
            )
            lines.append(
                f"shell {s.step}: U={s.generators.describe(space)}"
                f" W={s.span.describe(space)} new={s.shell.describe(space)} {grades}"
            )
        return lines


def _require_bfs_hvs(F: BipolarFuzzySoftSet, operation: str) -> None:
    verdict = is_bfs_hvs_direct(F)
    if not verdict:
        detail = verdict.witness.describe(F.space) if verdict.witness else ""
        raise PreconditionError(
            f"'{operation}' needs a bfs-hvs; {detail}", operation=operation
        )


def characteristic_bfs(
    space: HyperVectorSpace,
    subset: VectorSubset,
    params: Sequence[str],
    variant: CharacteristicVariant = "pos",
) -> BipolarFuzzySoftSet:
    """
    Characteristic soft set of a subset.

    ``pos`` puts the indicator in the positive grade and 0 in the negative,
    ``neg`` puts minus the indicator in the negative grade and 0 in the
    positive, ``normal`` uses both and requires a subhyperspace.

    Args:
        space: The underlying space
        subset: The subset to characterize
        params: Parameters, all sharing the same grades
        variant: Which grades carry the indicator

    Returns:
        The characteristic soft set
    """
    if variant == "normal":
        return characteristic_normal_bfs(space, subset, params)
    indicator = tuple(ONE if x in subset else ZERO for x in range(space.size))
    zeros = (ZERO,) * space.size
    if variant == "pos":
        row = BipolarFuzzySet(indicator, zeros)
    elif variant == "neg":
        row = BipolarFuzzySet(zeros, tuple(-g for g in indicator))
    else:
        raise PreconditionError(
            f"Unknown characteristic variant '{variant}'", operation="characteristic"
        )
    return BipolarFuzzySoftSet(space, tuple(params), (row,) * len(params))


def characteristic_normal_bfs(
    space: HyperVectorSpace, subset: VectorSubset, params: Sequence[str]
) -> BipolarFuzzySoftSet:
    """Indicator in the positive grade and its negative in the negative grade."""
    if not is_subhyperspace(space, subset):
        raise PreconditionError(
            f"{subset.describe(space)} is not a subhyperspace",
            operation="characteristic_normal",
        )
    indicator = tuple(ONE if x in subset else ZERO for x in range(space.size))
    row = BipolarFuzzySet(indicator, tuple(-g for g in indicator))
    return BipolarFuzzySoftSet(space, tuple(params), (row,) * len(params))


def level_promotion_grid(
    F: BipolarFuzzySoftSet,
) -> List[Tuple[str, Fraction, Fraction]]:
    """Every ``(param, alpha, beta)`` with thresholds among realised grades."""
    grid = []
    for e, g in F.items():
        alphas = sorted({a for a in g.pos if a > 0}, reverse=True)
        betas = sorted({b for b in g.neg if b < 0})
        grid.extend((e, a, b) for a in alphas for b in betas)
    return grid


def level_promote(
    F: BipolarFuzzySoftSet, param: str, alpha: GradeLike, beta: GradeLike
) -> BipolarFuzzySoftSet:
    """
    Raise the (alpha, beta)-cut of one parameter to full membership.

    Every parameter's grades become 1 and -1 on the cut ``W`` of ``param``
    and stay unchanged elsewhere.

    The result is checked again; when the subhyperspaces do not form a chain
    the promoted set can fail the difference condition.

    Raises:
        PreconditionError: If ``F`` is not a bfs-hvs or ``param`` is unknown
        DomainError: If a threshold is out of range
        ConstructionError: If the promoted set is not a bfs-hvs
    """
    _require_bfs_hvs(F, "level_promote")
    if param not in F.params:
        raise PreconditionError(
            f"Unknown parameter '{param}'", operation="level_promote"
        )
    cut = level_soft_set(F, alpha, beta)[param]
    table = [
        BipolarFuzzySet(
            tuple(ONE if x in cut else g.pos[x] for x in range(len(g))),
            tuple(-ONE if x in cut else g.neg[x] for x in range(len(g))),
        )
        for _, g in F.items()
    ]
    promoted = F.with_table(F.params, table)
    verdict = is_bfs_hvs_direct(promoted)
    if not verdict:
        detail = verdict.witness.describe(F.space) if verdict.witness else ""
        raise ConstructionError(
            f"Promoting cut {cut.describe(F.space)} of '{param}' does not give"
            f" a bfs-hvs; {detail}"
        )
    logger.debug("Promoted cut %s of %s", sorted(cut.members), param)
    return promoted


def generate_bfs_hvs(F: BipolarFuzzySoftSet) -> GeneratedBfsHvs:
    """
    The smallest bfs-hvs containing ``F``.

    Each step looks at the vectors outside the previous span, keeps those
    that reach the supremum positive and infimum negative grade for every
    parameter at once, and spans them together with the previous span. The
    new shell gets exactly those extreme grades. The first step looks at
    the whole carrier.

    Raises:
        ConstructionError: If some step finds no vector reaching the
            extremes for every parameter at once
    """
    space = F.space
    carrier = range(space.size)
    rows = [g for _, g in F.items()]
    pos: List[List[Fraction]] = [[ZERO] * space.size for _ in rows]
    neg: List[List[Fraction]] = [[ZERO] * space.size for _ in rows]
    shells: List[Shell] = []
    previous: Optional[VectorSubset] = None
    step = 0
    while previous is None or len(previous) < space.size:
        domain = [x for x in carrier if previous is None or x not in previous]
        tops = tuple(max(g.pos[x] for x in domain) for g in rows)
        bottoms = tuple(min(g.neg[x] for x in domain) for g in rows)
        generators = frozenset(
            x
            for x in domain
            if all(
                g.pos[x] == top and g.neg[x] == bottom
                for g, top, bottom in zip(rows, tops, bottoms)
            )
        )
        if not generators:
            targets = ", ".join(
                f"{e}=({format_rational(t)},{format_rational(b)})"
                for e, t, b in zip(F.params, tops, bottoms)
            )
            raise ConstructionError(
                f"Generated construction is stuck at step {step}: no vector outside"
                f" the previous span reaches {targets}",
                step=step,
                details={"step": step, "tops": tops, "bottoms": bottoms},
            )
        seed = set(generators) | (set(previous.members) if previous else set())
        current = span(space, VectorSubset(frozenset(seed)))
        shell = VectorSubset(
            current.members - (previous.members if previous else frozenset())
        )
        for i in range(len(rows)):
            for x in shell:
                pos[i][x] = tops[i]
                neg[i][x] = bottoms[i]
        shells.append(
            Shell(step, VectorSubset(generators), current, shell, tops, bottoms)
        )
        logger.debug("Step %d: span %s", step, sorted(current.members))
        previous = current
        step += 1
    table = [BipolarFuzzySet(tuple(p), tuple(n)) for p, n in zip(pos, neg)]
    return GeneratedBfsHvs(F.with_table(F.params, table), tuple(shells))


def normalize_shift(
    G: BipolarFuzzySoftSet, strict: bool = False
) -> BipolarFuzzySoftSet:
    """
    Shift each parameter so the zero vector has grades (1, -1).

    Positive grades move by ``1 - G+(0)`` and negative grades by
    ``-1 - G-(0)``. With ``strict`` the negative shift is ``-1 + G-(0)``,
    which leaves [-1, 0] whenever ``G-(0) < 0`` and then raises
    ``DomainError``.

    Raises:
        PreconditionError: If ``G`` is not a bfs-hvs
    """
    _require_bfs_hvs(G, "normalize_shift")
    zero = G.space.zero
    table = []
    for _, g in G.items():
        up = ONE - g.pos[zero]
        down = -ONE + g.neg[zero] if strict else -ONE - g.neg[zero]
        table.append(
            BipolarFuzzySet(
                tuple(p + up for p in g.pos), tuple(n + down for n in g.neg)
            )
        )
    return G.with_table(G.params, table)


def normalize_scale(G: BipolarFuzzySoftSet) -> BipolarFuzzySoftSet:
    """
    Divide by the grades at the zero vector.

    Positive grades become ``G+ / G+(0)`` and negative grades
    ``-G- / G-(0)``.

    Raises:
        PreconditionError: If ``G`` is not a bfs-hvs
        HypothesisError: If some parameter has ``G+(0) = 0`` or ``G-(0) = 0``
    """
    _require_bfs_hvs(G, "normalize_scale")
    zero = G.space.zero
    table = []
    for e, g in G.items():
        top, bottom = g.pos[zero], g.neg[zero]
        if top == 0 or bottom == 0:
            raise HypothesisError(
                f"Scaling needs non-zero grades at the zero vector; parameter {e}"
                f" has ({format_rational(top)}, {format_rational(bottom)})",
                hypothesis="nonzero-origin",
            )
        table.append(
            BipolarFuzzySet(
                tuple(p / top for p in g.pos), tuple(-n / bottom for n in g.neg)
            )
        )
    return G.with_table(G.params, table)


def normalize(
    G: BipolarFuzzySoftSet, mode: NormalizeMode = "shift", strict: bool = False
) -> BipolarFuzzySoftSet:
    if mode == "shift":
        return normalize_shift(G, strict=strict)
    if mode == "scale":
        return normalize_scale(G)
    raise PreconditionError(f"Unknown normalize mode '{mode}'", operation="normalize")


def is_normal(G: BipolarFuzzySoftSet) -> bool:
    """True when every parameter grades the zero vector (1, -1)."""
    _require_bfs_hvs(G, "is_normal")
    zero = G.space.zero
    return all(g.pos[zero] == ONE and g.neg[zero] == -ONE for _, g in G.items())


def is_normal_by_shift(G: BipolarFuzzySoftSet) -> bool:
    """A bfs-hvs is normal exactly when shifting leaves it unchanged."""
    return normalize_shift(G) == G


def argmax_at_origin(G: BipolarFuzzySoftSet) -> Dict[str, bool]:
    """Per parameter: does the zero vector carry the extreme grades?"""
    zero = G.space.zero
    return {
        e: g.pos[zero] == max(g.pos) and g.neg[zero] == min(g.neg)
        for e, g in G.items()
    }
