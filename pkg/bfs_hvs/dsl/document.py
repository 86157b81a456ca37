"""
In-memory structure documents.

A document maps names to fields, spaces and soft sets and remembers which
field each space is over and which space each soft set lives on.
"""

from dataclasses import dataclass, field
from typing import Dict, List

from ..algebra.field import FiniteField
from ..algebra.fuzzy import BipolarFuzzySoftSet
from ..algebra.space import HyperVectorSpace
from ..exceptions import NameNotFoundError, StructureError


@dataclass
class Document:
    """Named definitions; all names share a single namespace."""

    fields: Dict[str, FiniteField] = field(default_factory=dict)
    spaces: Dict[str, HyperVectorSpace] = field(default_factory=dict)
    bfs_sets: Dict[str, BipolarFuzzySoftSet] = field(default_factory=dict)
    space_fields: Dict[str, str] = field(default_factory=dict)
    bfs_spaces: Dict[str, str] = field(default_factory=dict)

    def names(self) -> List[str]:
        return [*self.fields, *self.spaces, *self.bfs_sets]

    def _claim(self, name: str) -> None:
        if name in self.names():
            raise StructureError(f"Duplicate definition name '{name}'", cell=name)

    def add_field(self, name: str, value: FiniteField) -> None:
        self._claim(name)
        self.fields[name] = value

    def add_space(self, name: str, value: HyperVectorSpace, over: str) -> None:
        if self.fields.get(over) != value.field:
            raise StructureError(
                f"Space '{name}' is not over field '{over}'", cell=over
            )
        self._claim(name)
        self.spaces[name] = value
        self.space_fields[name] = over

    def add_bfs(self, name: str, value: BipolarFuzzySoftSet, on: str) -> None:
        if self.spaces.get(on) != value.space:
            raise StructureError(f"Soft set '{name}' does not live on '{on}'", cell=on)
        self._claim(name)
        self.bfs_sets[name] = value
        self.bfs_spaces[name] = on

    def get_field(self, name: str) -> FiniteField:
        if name not in self.fields:
            raise NameNotFoundError(f"No field named '{name}'", name=name)
        return self.fields[name]

    def get_space(self, name: str) -> HyperVectorSpace:
        if name not in self.spaces:
            raise NameNotFoundError(f"No space named '{name}'", name=name)
        return self.spaces[name]

    def get_bfs(self, name: str) -> BipolarFuzzySoftSet:
        if name not in self.bfs_sets:
            raise NameNotFoundError(f"No soft set named '{name}'", name=name)
        return self.bfs_sets[name]

    def context(self, space_name: str) -> "Document":
        """A new document holding only ``space_name`` and its field."""
        space = self.get_space(space_name)
        over = self.space_fields[space_name]
        out = Document()
        out.add_field(over, self.get_field(over))
        out.add_space(space_name, space, over)
        return out
