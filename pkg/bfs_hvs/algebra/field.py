"""
Finite fields for bfs-hvs.

A finite field is given by explicit addition and multiplication tables over
an ordered list of element ids. Tables are validated on construction.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Sequence, Tuple

from ..exceptions import PreconditionError, StructureError
from .utils.table_utils import Table, check_abelian_group, freeze_table, inverse_table


@dataclass(frozen=True)
class FiniteField:
    """
    A finite field over element ids.

    Tables are indexed by element position: ``add[a][b]`` is the index of
    ``a + b``. Construction fails with ``StructureError`` unless the tables
    form a field.
    """

    elements: Tuple[str, ...]
    add: Table
    mul: Table
    zero: int
    one: int

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if len(elements) < 2:
            raise StructureError("A field needs at least two elements")
        if len(set(elements)) != len(elements):
            raise StructureError(f"Duplicate field element ids in {elements}")
        size = len(elements)
        for label, index in (("zero", self.zero), ("one", self.one)):
            if not 0 <= index < size:
                raise StructureError(f"Field {label} index {index} out of range")
        if self.zero == self.one:
            raise StructureError("Field zero and one must differ", cell="one")
        add = freeze_table(self.add, size, "+", elements)
        mul = freeze_table(self.mul, size, "*", elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "add", add)
        object.__setattr__(self, "mul", mul)

        check_abelian_group(add, self.zero, "+", elements, range(size))
        nonzero = [a for a in range(size) if a != self.zero]
        check_abelian_group(mul, self.one, "*", elements, nonzero)
        for a, b, c in product(range(size), repeat=3):
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise StructureError(
                    f"'*' does not distribute over '+' at {elements[a]},"
                    f" {elements[b]}, {elements[c]}",
                    cell=f"{elements[a]} * {elements[add[b][c]]}",
                )

    @classmethod
    def from_ids(
        cls,
        elements: Sequence[str],
        add: Sequence[Sequence[str]],
        mul: Sequence[Sequence[str]],
        zero: str,
        one: str,
    ) -> "FiniteField":
        """Build a field from tables written with element ids."""
        position = {e: i for i, e in enumerate(elements)}

        def lookup(ident: str) -> int:
            if ident not in position:
                raise StructureError(f"Unknown field element '{ident}'", cell=ident)
            return position[ident]

        return cls(
            elements=tuple(elements),
            add=tuple(tuple(lookup(v) for v in row) for row in add),
            mul=tuple(tuple(lookup(v) for v in row) for row in mul),
            zero=lookup(zero),
            one=lookup(one),
        )

    @classmethod
    def prime(cls, p: int) -> "FiniteField":
        """The prime field Z_p with element ids ``"0"`` .. ``"p-1"``."""
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise StructureError(f"{p} is not a prime")
        return cls(
            elements=tuple(str(i) for i in range(p)),
            add=tuple(tuple((a + b) % p for b in range(p)) for a in range(p)),
            mul=tuple(tuple((a * b) % p for b in range(p)) for a in range(p)),
            zero=0,
            one=1,
        )

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, ident: str) -> int:
        """Position of the element with id ``ident``."""
        try:
            return self.elements.index(ident)
        except ValueError:
            raise StructureError(
                f"Unknown field element '{ident}'", cell=ident
            ) from None

    @cached_property
    def negation(self) -> Tuple[int, ...]:
        return inverse_table(self.add, self.zero)

    @cached_property
    def reciprocal(self) -> Tuple[int, ...]:
        """Multiplicative inverses; the zero slot holds ``-1``."""
        return tuple(
            -1 if a == self.zero else self.mul[a].index(self.one)
            for a in range(self.size)
        )

    @property
    def minus_one(self) -> int:
        return self.negation[self.one]

    def neg(self, a: int) -> int:
        return self.negation[a]

    def inv(self, a: int) -> int:
        if a == self.zero:
            raise PreconditionError("Zero has no inverse", operation="inv")
        return self.reciprocal[a]
