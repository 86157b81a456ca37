"""
Finite hypervector spaces for bfs-hvs.

Provides the table representation of a hypervector space over a finite
field, the H1-H5 axiom checker with its derived flags, subhyperspace tests,
spans and the exhaustive subhyperspace enumeration.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..exceptions import CapacityError, PreconditionError, StructureError
from ..types import AxiomName, EngineLimits
from .field import FiniteField
from .utils.table_utils import Table, check_abelian_group, freeze_table, inverse_table

logger = logging.getLogger(__name__)

HyperTable = Tuple[Tuple[FrozenSet[int], ...], ...]


def format_members(ids: Iterable[str]) -> str:
    return "{" + ",".join(ids) + "}"


@dataclass(frozen=True)
class VectorSubset:
    """A subset of a space's carrier, held as element indices."""

    members: FrozenSet[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", frozenset(self.members))

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "VectorSubset") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "VectorSubset") -> bool:
        return self.members < other.members

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Size first, then the sorted indices."""
        return len(self.members), tuple(sorted(self.members))

    def ids(self, space: "HyperVectorSpace") -> List[str]:
        return [space.carrier[x] for x in self]

    def describe(self, space: "HyperVectorSpace") -> str:
        return format_members(self.ids(space))


# Names of the bound vectors per condition; the rest use y and z.
VECTOR_LABELS: Dict[str, Tuple[str, ...]] = {"invertible": ("y", "x")}


@dataclass(frozen=True)
class Witness:
    """
    A concrete instance refuting an axiom or a closure condition.

    ``left`` and ``right`` are the two sets the condition compares.
    """

    condition: str
    scalars: Tuple[int, ...] = ()
    vectors: Tuple[int, ...] = ()
    left: FrozenSet[int] = frozenset()
    right: FrozenSet[int] = frozenset()

    def describe(self, space: "HyperVectorSpace") -> str:
        bound = [f"b={space.field.elements[b]}" for b in self.scalars[:1]]
        bound += [f"c={space.field.elements[c]}" for c in self.scalars[1:]]
        labels = VECTOR_LABELS.get(self.condition, ("y", "z"))
        bound += [f"{n}={space.carrier[v]}" for n, v in zip(labels, self.vectors)]
        left = format_members(space.carrier[x] for x in sorted(self.left))
        right = format_members(space.carrier[x] for x in sorted(self.right))
        return f"{self.condition} fails at {', '.join(bound)}: {left} vs {right}"

    def to_dict(self, space: "HyperVectorSpace") -> Dict[str, Any]:
        return {
            "condition": self.condition,
            "scalars": [space.field.elements[b] for b in self.scalars],
            "vectors": [space.carrier[v] for v in self.vectors],
            "left": [space.carrier[x] for x in sorted(self.left)],
            "right": [space.carrier[x] for x in sorted(self.right)],
        }


@dataclass(frozen=True)
class AxiomResult:
    """Outcome of one axiom or flag, with the first counterexample found."""

    name: AxiomName
    passed: bool
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom results for H1-H5 plus the srd, sld and invertible flags."""

    h1: AxiomResult
    h2: AxiomResult
    h3: AxiomResult
    h4: AxiomResult
    h5: AxiomResult
    srd: AxiomResult
    sld: AxiomResult
    invertible: AxiomResult

    @property
    def is_hvs(self) -> bool:
        return all(r.passed for r in self.results()[:5])

    def results(self) -> List[AxiomResult]:
        return [
            self.h1,
            self.h2,
            self.h3,
            self.h4,
            self.h5,
            self.srd,
            self.sld,
            self.invertible,
        ]

    def to_dict(self, space: "HyperVectorSpace") -> Dict[str, Any]:
        return {
            r.name: {
                "passed": r.passed,
                "witness": r.witness.to_dict(space) if r.witness else None,
            }
            for r in self.results()
        }


@dataclass(frozen=True)
class SubspaceCheck:
    """Verdict of a subhyperspace test; falsy when the subset is not one."""

    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class HyperVectorSpace:
    """
    A finite hypervector space given by tables.

    ``add[x][y]`` is the index of ``x + y`` in ``carrier`` and
    ``hyperop[b][x]`` is the non-empty set ``b o x`` for field index ``b``.
    Construction validates table shapes and the abelian group; the H1-H5
    axioms are reported by ``axioms`` rather than enforced.
    """

    carrier: Tuple[str, ...]
    add: Table
    zero: int
    field: FiniteField
    hyperop: HyperTable

    def __post_init__(self) -> None:
        carrier = tuple(self.carrier)
        if not carrier:
            raise StructureError("A space needs a non-empty carrier")
        if len(set(carrier)) != len(carrier):
            raise StructureError(f"Duplicate vector ids in {carrier}")
        size = len(carrier)
        if not 0 <= self.zero < size:
            raise StructureError(f"Zero index {self.zero} out of range", cell="zero")
        add = freeze_table(self.add, size, "+", carrier)
        check_abelian_group(add, self.zero, "+", carrier, range(size))

        scalars = self.field.elements
        if len(self.hyperop) != len(scalars):
            raise StructureError(
                f"Hyperoperation has {len(self.hyperop)} rows,"
                f" expected one per scalar ({len(scalars)})",
                cell="o",
            )
        rows = []
        for b, row in enumerate(self.hyperop):
            if len(row) != size:
                raise StructureError(
                    f"Hyperoperation row {scalars[b]} has {len(row)} cells,"
                    f" expected {size}",
                    cell=f"{scalars[b]} o *",
                )
            cells = []
            for x, cell in enumerate(row):
                members = frozenset(cell)
                name = f"{scalars[b]} o {carrier[x]}"
                if not members:
                    raise StructureError(f"Cell {name} is empty", cell=name)
                if any(not isinstance(v, int) or not 0 <= v < size for v in members):
                    raise StructureError(
                        f"Cell {name} holds a non-element", cell=name
                    )
                cells.append(members)
            rows.append(tuple(cells))
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "hyperop", tuple(rows))

    @classmethod
    def from_ids(
        cls,
        carrier: Sequence[str],
        add: Sequence[Sequence[str]],
        zero: str,
        field: FiniteField,
        hyperop: Sequence[Sequence[Iterable[str]]],
    ) -> "HyperVectorSpace":
        """Build a space from tables written with element ids."""
        position = {v: i for i, v in enumerate(carrier)}

        def lookup(ident: str) -> int:
            if ident not in position:
                raise StructureError(f"Unknown vector '{ident}'", cell=ident)
            return position[ident]

        return cls(
            carrier=tuple(carrier),
            add=tuple(tuple(lookup(v) for v in row) for row in add),
            zero=lookup(zero),
            field=field,
            hyperop=tuple(
                tuple(frozenset(lookup(v) for v in cell) for cell in row)
                for row in hyperop
            ),
        )

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def full(self) -> VectorSubset:
        return VectorSubset(frozenset(range(self.size)))

    def index(self, ident: str) -> int:
        """Position of the vector with id ``ident``."""
        try:
            return self.carrier.index(ident)
        except ValueError:
            raise StructureError(f"Unknown vector '{ident}'", cell=ident) from None

    def subset(self, ids: Iterable[str]) -> VectorSubset:
        return VectorSubset(frozenset(self.index(v) for v in ids))

    @cached_property
    def negation(self) -> Tuple[int, ...]:
        return inverse_table(self.add, self.zero)

    def neg(self, x: int) -> int:
        return self.negation[x]

    def sub(self, y: int, z: int) -> int:
        return self.add[y][self.negation[z]]

    def scalar(self, b: int, x: int) -> FrozenSet[int]:
        return self.hyperop[b][x]

    def scalar_set(self, b: int, members: Iterable[int]) -> FrozenSet[int]:
        """``b o S``, the union of ``b o x`` over ``x`` in ``S``."""
        out: set = set()
        for x in members:
            out |= self.hyperop[b][x]
        return frozenset(out)

    def set_sum(self, left: Iterable[int], right: Iterable[int]) -> FrozenSet[int]:
        right = tuple(right)
        return frozenset(self.add[y][z] for y in left for z in right)

    def set_neg(self, members: Iterable[int]) -> FrozenSet[int]:
        return frozenset(self.negation[x] for x in members)

    @cached_property
    def preimages(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """``preimages[b][x]`` lists every ``r`` with ``x`` in ``b o r``."""
        table = []
        for b in range(self.field.size):
            row: List[List[int]] = [[] for _ in range(self.size)]
            for r in range(self.size):
                for x in self.hyperop[b][r]:
                    row[x].append(r)
            table.append(tuple(tuple(cell) for cell in row))
        return tuple(table)

    @cached_property
    def decompositions(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """``decompositions[x]`` lists every pair ``(y, z)`` with ``y + z = x``."""
        return tuple(
            tuple((y, self.sub(x, y)) for y in range(self.size))
            for x in range(self.size)
        )

    @cached_property
    def axioms(self) -> AxiomReport:
        return check_hvs_axioms(self)


def check_hvs_axioms(space: HyperVectorSpace) -> AxiomReport:
    """
    Check H1-H5 and the srd, sld and invertible flags exhaustively.

    The first counterexample in table order is kept for each failing entry.

    Args:
        space: The space to check

    Returns:
        An ``AxiomReport`` with a witness for every failure
    """
    K = space.field
    scalars = range(K.size)
    vectors = range(space.size)
    found: Dict[str, Witness] = {}

    def record(name: str, witness: Witness) -> None:
        found.setdefault(name, witness)

    for b, y, z in product(scalars, vectors, vectors):
        left = space.scalar(b, space.add[y][z])
        right = space.set_sum(space.scalar(b, y), space.scalar(b, z))
        if not left <= right:
            record("H1", Witness("H1", (b,), (y, z), left, right))
        if left != right:
            record("srd", Witness("srd", (b,), (y, z), left, right))

    for b, c, y in product(scalars, scalars, vectors):
        left = space.scalar(K.add[b][c], y)
        right = space.set_sum(space.scalar(b, y), space.scalar(c, y))
        if not left <= right:
            record("H2", Witness("H2", (b, c), (y,), left, right))
        if left != right:
            record("sld", Witness("sld", (b, c), (y,), left, right))

    for b, c, y in product(scalars, scalars, vectors):
        left = space.scalar_set(b, space.scalar(c, y))
        right = space.scalar(K.mul[b][c], y)
        if left != right:
            record("H3", Witness("H3", (b, c), (y,), left, right))

    for b, y in product(scalars, vectors):
        first = space.scalar(b, space.neg(y))
        second = space.scalar(K.neg(b), y)
        third = space.set_neg(space.scalar(b, y))
        if first != second:
            record("H4", Witness("H4", (b,), (y,), first, second))
        elif first != third:
            record("H4", Witness("H4", (b,), (y,), first, third))

    for y in vectors:
        if y not in space.scalar(K.one, y):
            image = space.scalar(K.one, y)
            record("H5", Witness("H5", (K.one,), (y,), frozenset({y}), image))

    for b, y in product(scalars, vectors):
        if b == K.zero:
            continue
        for x in sorted(space.scalar(b, y)):
            back = space.scalar(K.inv(b), x)
            if y not in back:
                record(
                    "invertible",
                    Witness("invertible", (b,), (y, x), frozenset({y}), back),
                )
                break

    def result(name: AxiomName) -> AxiomResult:
        return AxiomResult(name, name not in found, found.get(name))

    report = AxiomReport(
        h1=result("H1"),
        h2=result("H2"),
        h3=result("H3"),
        h4=result("H4"),
        h5=result("H5"),
        srd=result("srd"),
        sld=result("sld"),
        invertible=result("invertible"),
    )
    logger.debug(
        "Axiom check on %d vectors: failing=%s", space.size, sorted(found) or "none"
    )
    return report


def replay_axiom(space: HyperVectorSpace, witness: Witness) -> bool:
    """
    Re-evaluate the condition named by ``witness`` at its instance.

    Returns:
        True when the condition holds there, so a genuine witness gives False
    """
    K = space.field
    name = witness.condition
    if name in ("H1", "srd"):
        (b,), (y, z) = witness.scalars, witness.vectors
        left = space.scalar(b, space.add[y][z])
        right = space.set_sum(space.scalar(b, y), space.scalar(b, z))
        return left <= right if name == "H1" else left == right
    if name in ("H2", "sld"):
        (b, c), (y,) = witness.scalars, witness.vectors
        left = space.scalar(K.add[b][c], y)
        right = space.set_sum(space.scalar(b, y), space.scalar(c, y))
        return left <= right if name == "H2" else left == right
    if name == "H3":
        (b, c), (y,) = witness.scalars, witness.vectors
        return space.scalar_set(b, space.scalar(c, y)) == space.scalar(K.mul[b][c], y)
    if name == "H4":
        (b,), (y,) = witness.scalars, witness.vectors
        first = space.scalar(b, space.neg(y))
        return first == space.scalar(K.neg(b), y) == space.set_neg(space.scalar(b, y))
    if name == "H5":
        (y,) = witness.vectors
        return y in space.scalar(K.one, y)
    if name == "invertible":
        (b,), (y, x) = witness.scalars, witness.vectors
        return x not in space.scalar(b, y) or y in space.scalar(K.inv(b), x)
    raise PreconditionError(f"Unknown axiom '{name}'", operation="replay_axiom")


def is_subhyperspace(space: HyperVectorSpace, subset: VectorSubset) -> SubspaceCheck:
    """
    Test whether ``subset`` is a subhyperspace of ``space``.

    A subhyperspace is non-empty and closed under ``y - z`` and ``b o y``.

    Args:
        space: The ambient space
        subset: Candidate subset

    Returns:
        A ``SubspaceCheck``; on failure its witness names the violated closure
    """
    members = subset.members
    if any(not 0 <= x < space.size for x in members):
        raise StructureError("Subset contains indices outside the carrier")
    if not members:
        return SubspaceCheck(False, Witness("non-empty"))
    ordered = sorted(members)
    for y, z in product(ordered, repeat=2):
        diff = space.sub(y, z)
        if diff not in members:
            return SubspaceCheck(
                False, Witness("difference", (), (y, z), frozenset({diff}), members)
            )
    for b, y in product(range(space.field.size), ordered):
        image = space.scalar(b, y)
        if not image <= members:
            return SubspaceCheck(
                False, Witness("scalar", (b,), (y,), image, members)
            )
    return SubspaceCheck(True)


def span(space: HyperVectorSpace, subset: VectorSubset) -> VectorSubset:
    """
    The smallest subhyperspace containing a non-empty subset.

    Computed as a fixed point that adds hyperoperation images, negations and
    pairwise sums until nothing new appears.
    """
    if not subset.members:
        raise PreconditionError("Cannot span the empty set", operation="span")
    members = set(subset.members)
    scalars = range(space.field.size)
    while True:
        grown = set(members)
        for x in members:
            grown.add(space.neg(x))
            for b in scalars:
                grown |= space.scalar(b, x)
        grown.update(space.add[x][y] for x in members for y in members)
        if grown == members:
            return VectorSubset(frozenset(members))
        members = grown


def enumerate_subhyperspaces(
    space: HyperVectorSpace, limits: Optional[EngineLimits] = None
) -> List[VectorSubset]:
    """
    Every subhyperspace, ordered by size and then lexicographically.

    Raises:
        CapacityError: If the carrier exceeds ``limits.max_subset_scan``
    """
    limits = limits or EngineLimits()
    if space.size > limits.max_subset_scan:
        raise CapacityError(
            f"Subset scan over {space.size} vectors exceeds the limit of"
            f" {limits.max_subset_scan}",
            limit=limits.max_subset_scan,
        )
    found = []
    zero_bit = 1 << space.zero
    for mask in range(1, 1 << space.size):
        # every subhyperspace contains y - y
        if not mask & zero_bit:
            continue
        candidate = VectorSubset(
            frozenset(x for x in range(space.size) if mask >> x & 1)
        )
        if is_subhyperspace(space, candidate):
            found.append(candidate)
    found.sort(key=lambda s: s.sort_key)
    logger.debug("Found %d subhyperspaces over %d vectors", len(found), space.size)
    return found


def classical_hvs_from_field(field: FiniteField) -> HyperVectorSpace:
    """The field as a space over itself with ``b o x = {b * x}``."""
    return HyperVectorSpace(
        carrier=field.elements,
        add=field.add,
        zero=field.zero,
        field=field,
        hyperop=tuple(
            tuple(frozenset({field.mul[b][x]}) for x in range(field.size))
            for b in range(field.size)
        ),
    )
