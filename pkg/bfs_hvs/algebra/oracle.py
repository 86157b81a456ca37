"""
Brute-force and randomized oracles for bfs-hvs.

Seeded random soft sets, an exhaustive minimality search over grid-valued
candidates, and the equivalence suite that runs every applicable checker
on a stream of random instances.

Random draws use numpy's PCG64 bit generator. An integer seed ``s`` and
instance index ``i`` map to ``PCG64(SeedSequence([s, i]))``; within one
soft set all positive-grade ranks are drawn first, parameter-major, then
all negative-grade ranks.
"""

import logging
from bisect import bisect_left, bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..exceptions import CapacityError, ConstructionError, OracleError
from ..types import EngineLimits, GradeGrid, SuiteConfig
from .checkers import (
    is_bfs_hvs_combo,
    is_bfs_hvs_direct,
    is_bfs_hvs_iff1,
    is_bfs_hvs_levels,
    is_bfs_hvs_scalarsum,
)
from .constructions import (
    generate_bfs_hvs,
    is_normal,
    normalize_scale,
    normalize_shift,
)
from .fuzzy import (
    BipolarFuzzySet,
    BipolarFuzzySoftSet,
    bfs_contains,
    bfs_negate,
    bfs_scalar,
    bfs_sum,
)
from .space import HyperVectorSpace, enumerate_subhyperspaces

logger = logging.getLogger(__name__)

Seed = Union[int, Sequence[int]]


def _generator(seed: Seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_bfs(
    space: HyperVectorSpace,
    params: Sequence[str],
    grid: GradeGrid,
    seed: Seed,
) -> BipolarFuzzySoftSet:
    """
    A soft set with grades drawn uniformly from the grid levels.

    Args:
        space: The underlying space
        params: Parameters, in order
        grid: Levels to draw from
        seed: Integer seed or sequence of integers for ``SeedSequence``

    Returns:
        A deterministic function of ``(space, params, grid, seed)``
    """
    rng = _generator(seed)
    shape = (len(params), space.size)
    pos_ranks = rng.integers(0, len(grid.pos_levels), size=shape)
    neg_ranks = rng.integers(0, len(grid.neg_levels), size=shape)
    table = [
        BipolarFuzzySet(
            tuple(grid.pos_levels[r] for r in pos_ranks[i]),
            tuple(grid.neg_levels[r] for r in neg_ranks[i]),
        )
        for i in range(len(params))
    ]
    return BipolarFuzzySoftSet(space, tuple(params), tuple(table))


def random_bfs_hvs(
    space: HyperVectorSpace,
    params: Sequence[str],
    grid: GradeGrid,
    seed: Seed,
    limits: Optional[EngineLimits] = None,
) -> BipolarFuzzySoftSet:
    """
    A random bfs-hvs with grid-valued grades.

    For each parameter a random strictly increasing chain of subhyperspaces
    ending at the whole carrier is drawn; shells further out get
    non-increasing positive and non-decreasing negative grades, so every
    level cut is a member of the chain.
    """
    subspaces = enumerate_subhyperspaces(space, limits)
    rng = _generator(seed)
    table = []
    for _ in params:
        chain = [space.full]
        while True:
            smaller = [W for W in subspaces if W < chain[0]]
            pick = int(rng.integers(0, len(smaller) + 1))
            if pick == len(smaller):
                break
            chain.insert(0, smaller[pick])
        pos_ranks = sorted(rng.integers(0, len(grid.pos_levels), size=len(chain)))
        neg_ranks = sorted(rng.integers(0, len(grid.neg_levels), size=len(chain)))
        pos = [Fraction(0)] * space.size
        neg = [Fraction(0)] * space.size
        inner: frozenset = frozenset()
        for depth, W in enumerate(chain):
            for x in W.members - inner:
                pos[x] = grid.pos_levels[pos_ranks[-1 - depth]]
                neg[x] = grid.neg_levels[neg_ranks[depth]]
            inner = W.members
        table.append(BipolarFuzzySet(tuple(pos), tuple(neg)))
    return BipolarFuzzySoftSet(space, tuple(params), tuple(table))


def _candidate_masks(
    space: HyperVectorSpace,
    pos: np.ndarray,
    neg: np.ndarray,
    pos_floor: Sequence[int],
    neg_ceiling: Sequence[int],
) -> np.ndarray:
    """Rows of ``(pos, neg)`` rank arrays that are bfs-hvs rows above the bounds."""
    n = space.size
    ys, zs = np.divmod(np.arange(n * n), n)
    ds = np.array([space.sub(int(y), int(z)) for y, z in zip(ys, zs)])
    mask = np.all(pos[:, ds] >= np.minimum(pos[:, ys], pos[:, zs]), axis=1)
    mask &= np.all(neg[:, ds] <= np.maximum(neg[:, ys], neg[:, zs]), axis=1)
    for b in range(space.field.size):
        for y in range(n):
            image = sorted(space.scalar(b, y))
            mask &= pos[:, image].min(axis=1) >= pos[:, y]
            mask &= neg[:, image].max(axis=1) <= neg[:, y]
    mask &= np.all(pos >= np.asarray(pos_floor), axis=1)
    mask &= np.all(neg <= np.asarray(neg_ceiling), axis=1)
    return mask


def brute_force_min_bfs_hvs(
    F: BipolarFuzzySoftSet,
    grid: Optional[GradeGrid] = None,
    limits: Optional[EngineLimits] = None,
) -> BipolarFuzzySoftSet:
    """
    The smallest grid-valued bfs-hvs containing ``F``, by exhaustive search.

    Parameters are independent, so each one is searched separately over
    ``(|pos levels| * |neg levels|) ** |carrier|`` candidates.

    Raises:
        CapacityError: If a per-parameter search exceeds
            ``limits.max_oracle_candidates``
        OracleError: If no candidate contains ``F`` or the candidates
            containing ``F`` have no least element
    """
    grid = grid or GradeGrid.default()
    limits = limits or EngineLimits()
    space = F.space
    P, N = grid.pos_levels, grid.neg_levels
    count = (len(P) * len(N)) ** space.size
    if count > limits.max_oracle_candidates:
        raise CapacityError(
            f"Oracle would scan {count} candidates per parameter, limit is"
            f" {limits.max_oracle_candidates}",
            limit=limits.max_oracle_candidates,
        )
    combos = np.indices((len(P) * len(N),) * space.size).reshape(space.size, -1).T
    pos, neg = np.divmod(combos, len(N))
    table = []
    for e, g in F.items():
        pos_floor = [bisect_left(P, v) for v in g.pos]
        neg_ceiling = [bisect_right(N, v) - 1 for v in g.neg]
        mask = _candidate_masks(space, pos, neg, pos_floor, neg_ceiling)
        if not mask.any():
            raise OracleError(f"No grid-valued bfs-hvs contains parameter {e}")
        pos_ok, neg_ok = pos[mask], neg[mask]
        low_pos, high_neg = pos_ok.min(axis=0), neg_ok.max(axis=0)
        hit = np.all(pos_ok == low_pos, axis=1) & np.all(neg_ok == high_neg, axis=1)
        if not hit.any():
            raise OracleError(
                f"Candidates for parameter {e} have no least element",
                antichain=_minimal_rows(pos_ok, neg_ok, P, N),
            )
        logger.debug("Parameter %s: %d candidates", e, int(mask.sum()))
        table.append(
            BipolarFuzzySet(
                tuple(P[r] for r in low_pos), tuple(N[r] for r in high_neg)
            )
        )
    return F.with_table(F.params, table)


def _minimal_rows(
    pos: np.ndarray,
    neg: np.ndarray,
    P: Sequence[Fraction],
    N: Sequence[Fraction],
    cap: int = 16,
) -> List[Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]]:
    """Containment-minimal candidates, at most ``cap`` of them."""
    minimal = []
    for i in range(len(pos)):
        below = np.all(pos <= pos[i], axis=1) & np.all(neg >= neg[i], axis=1)
        if int(below.sum()) == 1:
            minimal.append(
                (tuple(P[r] for r in pos[i]), tuple(N[r] for r in neg[i]))
            )
            if len(minimal) >= cap:
                break
    return minimal


@dataclass(frozen=True)
class Disagreement:
    """One instance on which the checkers disagree."""

    index: int
    seed: Tuple[int, int]
    verdicts: Dict[str, bool]
    instance: Dict[str, Any]


@dataclass
class InstanceOutcome:
    """Everything the suite learns from one instance."""

    index: int
    verdicts: Dict[str, bool]
    is_bfs_hvs: bool
    checked: Dict[str, bool] = field(default_factory=dict)
    construction_step: Optional[int] = None
    instance: Dict[str, Any] = field(default_factory=dict)


@dataclass
class SuiteReport:
    """Merged outcome of the equivalence suite, ordered by instance index."""

    instances: int
    seed: int
    methods: List[str]
    refused: Dict[str, str] = field(default_factory=dict)
    agreements: Dict[str, int] = field(default_factory=dict)
    disagreements: List[Disagreement] = field(default_factory=list)
    bfs_hvs_instances: int = 0
    construction_failures: List[Dict[str, int]] = field(default_factory=list)
    property_checks: Dict[str, int] = field(default_factory=dict)
    property_failures: Dict[str, List[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not any(self.property_failures.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "instances": self.instances,
            "seed": self.seed,
            "methods": list(self.methods),
            "refused": dict(self.refused),
            "agreements": dict(self.agreements),
            "disagreements": [
                {
                    "index": d.index,
                    "seed": list(d.seed),
                    "verdicts": d.verdicts,
                    "instance": d.instance,
                }
                for d in self.disagreements
            ],
            "bfsHvsInstances": self.bfs_hvs_instances,
            "constructionFailures": list(self.construction_failures),
            "propertyChecks": dict(self.property_checks),
            "propertyFailures": {
                name: list(failed) for name, failed in self.property_failures.items()
            },
        }


def _sum_inequality_holds(
    G: BipolarFuzzySoftSet, H: BipolarFuzzySoftSet
) -> bool:
    space = G.space
    total = bfs_sum(G, H)
    for e, s in total.items():
        g, h = G[e], H[e]
        for y in range(space.size):
            for z in range(space.size):
                x = space.add[y][z]
                if s.pos[x] < min(g.pos[y], h.pos[z]):
                    return False
                if s.neg[x] > max(g.neg[y], h.neg[z]):
                    return False
    return True


def _run_instance(
    space: HyperVectorSpace,
    config: SuiteConfig,
    methods: Sequence[str],
    index: int,
) -> InstanceOutcome:
    K = space.field
    report = space.axioms
    G = random_bfs(space, config.params, config.grid, (config.seed, index))
    checkers = {
        "direct": is_bfs_hvs_direct,
        "iff1": is_bfs_hvs_iff1,
        "levels": is_bfs_hvs_levels,
        "combo": is_bfs_hvs_combo,
        "scalarsum": is_bfs_hvs_scalarsum,
    }
    verdicts = {m: bool(checkers[m](G)) for m in methods}
    outcome = InstanceOutcome(index, verdicts, verdicts["direct"])
    if len(set(verdicts.values())) > 1:
        outcome.instance = G.to_dict()
    checked = outcome.checked

    H = random_bfs(space, config.params, config.grid, (config.seed, index, 1))
    checked["sum-inequality"] = _sum_inequality_holds(G, H)
    if report.h4.passed and report.h5.passed:
        checked["unit-scalar-containment"] = bfs_contains(
            G, bfs_scalar(K.one, G)
        ) and bfs_contains(bfs_negate(G), bfs_scalar(K.minus_one, G))

    if report.invertible.passed and space.size <= config.limits.max_subset_scan:
        A = random_bfs_hvs(
            space, config.params, config.grid, (config.seed, index, 2), config.limits
        )
        nonzero = [b for b in range(K.size) if b != K.zero]
        checked["invertible-scalar-containment"] = all(
            bfs_contains(A, bfs_scalar(b, A)) for b in nonzero
        )
        if report.srd.passed and report.is_hvs and index < config.distributive_pairs:
            B = random_bfs_hvs(
                space,
                config.params,
                config.grid,
                (config.seed, index, 3),
                config.limits,
            )
            checked["scalar-distributes-over-sum"] = all(
                bfs_scalar(b, bfs_sum(A, B))
                == bfs_sum(bfs_scalar(b, A), bfs_scalar(b, B))
                for b in nonzero
            )

    generated: Optional[BipolarFuzzySoftSet] = None
    try:
        generated = generate_bfs_hvs(G).result
        checked["generate"] = bool(is_bfs_hvs_direct(generated)) and bfs_contains(
            G, generated
        )
    except ConstructionError as e:
        outcome.construction_step = e.step

    if generated is not None:
        shifted = normalize_shift(generated)
        checked["normalize-shift"] = is_normal(shifted) and normalize_shift(
            shifted
        ) == shifted
        zero = space.zero
        if all(g.pos[zero] > 0 and g.neg[zero] < 0 for _, g in generated.items()):
            scaled = normalize_scale(generated)
            checked["normalize-scale"] = is_normal(scaled) and normalize_scale(
                scaled
            ) == scaled
    return outcome


def _applicable_methods(space: HyperVectorSpace) -> Tuple[List[str], Dict[str, str]]:
    methods = ["direct", "iff1", "levels"]
    refused: Dict[str, str] = {}
    report = space.axioms
    for method in ("combo", "scalarsum"):
        if not report.sld.passed:
            refused[method] = "space is not strongly left distributive"
        elif not report.is_hvs:
            refused[method] = "space fails the hypervector space axioms"
        else:
            methods.append(method)
    return methods, refused


def equivalence_suite(
    space: HyperVectorSpace,
    instances: Optional[int] = None,
    seed: Optional[int] = None,
    grid: Optional[GradeGrid] = None,
    config: Optional[SuiteConfig] = None,
) -> SuiteReport:
    """
    Run every applicable checker on ``config.instances`` random soft sets.

    Besides checker agreement the suite checks the pointwise sum
    inequality, unit-scalar containment, invertible-scalar containment and
    scalar distributivity where the space supports them, the generated
    construction, and both normalizations of the generated bfs-hvs.

    Args:
        space: The space to test on
        instances: Overrides ``config.instances``
        seed: Overrides ``config.seed``
        grid: Overrides ``config.grid``
        config: Parameters, worker count and the remaining defaults

    Returns:
        A ``SuiteReport``; disagreements are report content, not errors
    """
    config = config or SuiteConfig()
    overrides = {"instances": instances, "seed": seed, "grid": grid}
    config = replace(config, **{k: v for k, v in overrides.items() if v is not None})
    methods, refused = _applicable_methods(space)
    run = partial(_run_instance, space, config, methods)
    indices = range(config.instances)
    if config.workers > 1 and config.instances > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(run, indices, chunksize=8))
    else:
        outcomes = [run(i) for i in indices]
    outcomes.sort(key=lambda o: o.index)

    report = SuiteReport(config.instances, config.seed, methods, refused)
    for method in methods[1:]:
        report.agreements[f"direct~{method}"] = 0
    for outcome in outcomes:
        for method in methods[1:]:
            if outcome.verdicts[method] == outcome.verdicts["direct"]:
                report.agreements[f"direct~{method}"] += 1
        if len(set(outcome.verdicts.values())) > 1:
            report.disagreements.append(
                Disagreement(
                    outcome.index,
                    (config.seed, outcome.index),
                    outcome.verdicts,
                    outcome.instance,
                )
            )
        report.bfs_hvs_instances += int(outcome.is_bfs_hvs)
        if outcome.construction_step is not None:
            report.construction_failures.append(
                {"index": outcome.index, "step": outcome.construction_step}
            )
        for name, passed in sorted(outcome.checked.items()):
            report.property_checks[name] = report.property_checks.get(name, 0) + 1
            failures = report.property_failures.setdefault(name, [])
            if not passed:
                failures.append(outcome.index)
    if report.disagreements:
        logger.warning(
            "%d of %d instances disagree", len(report.disagreements), config.instances
        )
    return report
