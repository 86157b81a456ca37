"""
Decision procedures for bipolar fuzzy soft hypervector spaces.

Five independent decision procedures for "G is a bipolar fuzzy soft
hypervector space": the direct definition, the sum/negation/scalar
containment criterion, the level-set criterion, the linear-combination
criterion and the scalar-sum criterion. All of them return a ``Verdict``
carrying the first counterexample found in table order.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Dict, FrozenSet, Optional, Sequence, Tuple

from ..exceptions import HypothesisError, PreconditionError
from ..types import CHECK_METHODS, METHOD_HYPOTHESES, CheckMethod
from .fuzzy import (
    BipolarFuzzySoftSet,
    bfs_negate,
    bfs_scalar,
    bfs_sum,
    containment_witness,
    level_cut,
)
from .space import HyperVectorSpace, VectorSubset, is_subhyperspace
from .utils.rational_utils import format_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BfsWitness:
    """
    A counterexample to the bfs-hvs property.

    ``condition`` names the failing inequality or containment, for example
    ``"difference+"``, ``"scalar-"``, ``"sum"`` or ``"level-cut"``.
    """

    param: str
    condition: str
    scalars: Tuple[int, ...] = ()
    vectors: Tuple[int, ...] = ()
    cut: Optional[VectorSubset] = None
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None

    def describe(self, space: HyperVectorSpace) -> str:
        parts = [f"param={self.param}"]
        parts += [f"scalar={space.field.elements[b]}" for b in self.scalars]
        parts += [f"vector={space.carrier[v]}" for v in self.vectors]
        if self.alpha is not None and self.beta is not None:
            parts.append(
                f"level=({format_rational(self.alpha)},{format_rational(self.beta)})"
            )
        if self.cut is not None:
            parts.append(f"cut={self.cut.describe(space)}")
        return f"{self.condition} fails at " + ", ".join(parts)

    def to_dict(self, space: HyperVectorSpace) -> Dict[str, Any]:
        return {
            "param": self.param,
            "condition": self.condition,
            "scalars": [space.field.elements[b] for b in self.scalars],
            "vectors": [space.carrier[v] for v in self.vectors],
            "cut": self.cut.ids(space) if self.cut is not None else None,
            "alpha": format_rational(self.alpha) if self.alpha is not None else None,
            "beta": format_rational(self.beta) if self.beta is not None else None,
        }


@dataclass(frozen=True)
class Verdict:
    """Result of one checker; truthy exactly when the property holds."""

    method: CheckMethod
    holds: bool
    witness: Optional[BfsWitness] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class CrossCheck:
    """Verdicts of several checkers on one soft set."""

    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    refusals: Dict[str, str] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len({v.holds for v in self.verdicts.values()}) <= 1

    @property
    def holds(self) -> bool:
        return self.agree and all(v.holds for v in self.verdicts.values())


def _refuted(
    method: CheckMethod,
    param: str,
    condition: str,
    scalars: Tuple[int, ...] = (),
    vectors: Tuple[int, ...] = (),
) -> Verdict:
    return Verdict(method, False, BfsWitness(param, condition, scalars, vectors))


def _require_hvs(space: HyperVectorSpace, operation: str) -> None:
    report = space.axioms
    if not report.is_hvs:
        failing = [r.name for r in report.results()[:5] if not r.passed]
        raise PreconditionError(
            f"Space fails hypervector space axioms {', '.join(failing)}",
            operation=operation,
        )


def _require_sld(space: HyperVectorSpace, method: CheckMethod) -> None:
    if not space.axioms.sld.passed:
        witness = space.axioms.sld.witness
        detail = f" ({witness.describe(space)})" if witness else ""
        raise HypothesisError(
            f"Method '{method}' needs a {METHOD_HYPOTHESES[method]}{detail}",
            hypothesis="sld",
        )
    _require_hvs(space, method)


def is_bfs_hvs_direct(G: BipolarFuzzySoftSet, require_hvs: bool = False) -> Verdict:
    """
    Check the defining inequalities for every parameter.

    For each parameter: ``G+(y - z) >= min(G+(y), G+(z))`` and
    ``G-(y - z) <= max(G-(y), G-(z))``, then
    ``min G+ over b o y >= G+(y)`` and ``max G- over b o y <= G-(y)``.

    Args:
        G: The soft set
        require_hvs: Reject spaces failing H1-H5 with ``PreconditionError``

    Returns:
        A ``Verdict`` with the first violated inequality
    """
    space = G.space
    if require_hvs:
        _require_hvs(space, "direct")
    n = space.size
    for e, g in G.items():
        for y, z in product(range(n), repeat=2):
            d = space.sub(y, z)
            if g.pos[d] < min(g.pos[y], g.pos[z]):
                return _refuted("direct", e, "difference+", (), (y, z))
            if g.neg[d] > max(g.neg[y], g.neg[z]):
                return _refuted("direct", e, "difference-", (), (y, z))
        for b, y in product(range(space.field.size), range(n)):
            image = space.scalar(b, y)
            if min(g.pos[t] for t in image) < g.pos[y]:
                return _refuted("direct", e, "scalar+", (b,), (y,))
            if max(g.neg[t] for t in image) > g.neg[y]:
                return _refuted("direct", e, "scalar-", (b,), (y,))
    return Verdict("direct", True)


def is_bfs_hvs_iff1(G: BipolarFuzzySoftSet, require_hvs: bool = False) -> Verdict:
    """
    Containment criterion: ``G + G``, ``-G`` and every ``b o G`` lie in ``G``.
    """
    space = G.space
    if require_hvs:
        _require_hvs(space, "iff1")
    checks = [("sum", (), bfs_sum(G, G)), ("negation", (), bfs_negate(G))]
    checks += [
        ("scalar-product", (b,), bfs_scalar(b, G)) for b in range(space.field.size)
    ]
    for condition, scalars, candidate in checks:
        failure = containment_witness(candidate, G)
        if failure is not None:
            e, x, side = failure
            vectors = () if x is None else (x,)
            sign = "+" if side == "pos" else "-"
            return _refuted("iff1", e, condition + sign, scalars, vectors)
    return Verdict("iff1", True)


def is_bfs_hvs_levels(G: BipolarFuzzySoftSet, require_hvs: bool = False) -> Verdict:
    """
    Level-set criterion: every non-empty level cut is a subhyperspace.

    Thresholds range over the realised grades of each parameter, boundary
    values 0 included. For each parameter alpha runs from high to low and
    beta from low to high.
    """
    space = G.space
    if require_hvs:
        _require_hvs(space, "levels")
    seen: Dict[FrozenSet[int], bool] = {}
    for e, g in G.items():
        for alpha in sorted(set(g.pos), reverse=True):
            for beta in sorted(set(g.neg)):
                cut = level_cut(g, alpha, beta)
                if not cut.members:
                    continue
                if cut.members not in seen:
                    seen[cut.members] = bool(is_subhyperspace(space, cut))
                if not seen[cut.members]:
                    witness = BfsWitness(
                        e, "level-cut", cut=cut, alpha=alpha, beta=beta
                    )
                    return Verdict("levels", False, witness)
    return Verdict("levels", True)


def is_bfs_hvs_combo(G: BipolarFuzzySoftSet) -> Verdict:
    """
    Linear-combination criterion on strongly left distributive spaces.

    For all ``a, b`` and ``x, y``: ``min G+ over a o x + b o y`` is at least
    ``min(G+(x), G+(y))`` and ``max G-`` is at most ``max(G-(x), G-(y))``.

    Raises:
        HypothesisError: If the space is not strongly left distributive
        PreconditionError: If the space fails H1-H5
    """
    space = G.space
    _require_sld(space, "combo")
    n, k = space.size, space.field.size
    combos: Dict[Tuple[int, int, int, int], FrozenSet[int]] = {}
    for e, g in G.items():
        for x, y in product(range(n), repeat=2):
            floor = min(g.pos[x], g.pos[y])
            ceiling = max(g.neg[x], g.neg[y])
            for a, b in product(range(k), repeat=2):
                key = (a, x, b, y)
                if key not in combos:
                    combos[key] = space.set_sum(space.scalar(a, x), space.scalar(b, y))
                targets = combos[key]
                if min(g.pos[t] for t in targets) < floor:
                    return _refuted("combo", e, "combination+", (a, b), (x, y))
                if max(g.neg[t] for t in targets) > ceiling:
                    return _refuted("combo", e, "combination-", (a, b), (x, y))
    return Verdict("combo", True)


def is_bfs_hvs_scalarsum(G: BipolarFuzzySoftSet) -> Verdict:
    """
    Scalar-sum criterion: ``b o G + c o G`` lies in ``G`` for all ``b, c``.

    Raises:
        HypothesisError: If the space is not strongly left distributive
        PreconditionError: If the space fails H1-H5
    """
    space = G.space
    _require_sld(space, "scalarsum")
    products = [bfs_scalar(b, G) for b in range(space.field.size)]
    for b, c in product(range(space.field.size), repeat=2):
        failure = containment_witness(bfs_sum(products[b], products[c]), G)
        if failure is not None:
            e, x, side = failure
            vectors = () if x is None else (x,)
            condition = "scalar-sum+" if side == "pos" else "scalar-sum-"
            return _refuted("scalarsum", e, condition, (b, c), vectors)
    return Verdict("scalarsum", True)


def check_bfs_hvs(
    G: BipolarFuzzySoftSet, method: CheckMethod = "direct", require_hvs: bool = False
) -> Verdict:
    """
    Dispatch to one checker by name.

    ``combo`` and ``scalarsum`` always require an hvs and ignore
    ``require_hvs``.
    """
    if method == "direct":
        return is_bfs_hvs_direct(G, require_hvs)
    if method == "iff1":
        return is_bfs_hvs_iff1(G, require_hvs)
    if method == "levels":
        return is_bfs_hvs_levels(G, require_hvs)
    if method == "combo":
        return is_bfs_hvs_combo(G)
    if method == "scalarsum":
        return is_bfs_hvs_scalarsum(G)
    raise PreconditionError(f"Unknown check method '{method}'", operation="check")


def cross_check(
    G: BipolarFuzzySoftSet,
    methods: Sequence[CheckMethod] = CHECK_METHODS,
    require_hvs: bool = False,
) -> CrossCheck:
    """
    Run several checkers and collect verdicts and refusals.

    A checker whose hypothesis does not hold is recorded as a refusal with
    the error message instead of a verdict.
    """
    result = CrossCheck()
    for method in methods:
        try:
            result.verdicts[method] = check_bfs_hvs(G, method, require_hvs)
        except (HypothesisError, PreconditionError) as e:
            if require_hvs and method in ("direct", "iff1", "levels"):
                raise
            result.refusals[method] = e.message
    if not result.agree:
        logger.warning(
            "Checkers disagree: %s",
            {m: v.holds for m, v in result.verdicts.items()},
        )
    return result


def describe_verdict(verdict: Verdict, space: HyperVectorSpace) -> str:
    text = f"{verdict.method}: {'true' if verdict.holds else 'false'}"
    if verdict.witness is not None:
        text += f" ({verdict.witness.describe(space)})"
    return text

