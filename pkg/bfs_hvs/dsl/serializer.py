"""
Canonical serializer for structure documents.

Definitions are written fields first, then spaces, then soft sets, each
group sorted by name. Tables follow element order and grades are written in
lowest terms, so parsing the output gives back an equal document.
"""

from pathlib import Path
from typing import Iterable, List, Optional, Union

from ..algebra.field import FiniteField
from ..algebra.fuzzy import BipolarFuzzySoftSet
from ..algebra.space import HyperVectorSpace
from ..algebra.utils.rational_utils import format_rational
from .document import Document


def _field_lines(name: str, field: FiniteField) -> List[str]:
    ids = field.elements
    lines = [f"field {name}", f"  elements: {', '.join(ids)}"]
    lines.append(f"  zero: {ids[field.zero]}")
    lines.append(f"  one: {ids[field.one]}")
    for symbol, table in (("+", field.add), ("*", field.mul)):
        for a, row in enumerate(table):
            lines.extend(
                f"  {ids[a]} {symbol} {ids[b]} = {ids[c]}" for b, c in enumerate(row)
            )
    lines.append("end")
    return lines


def _space_lines(name: str, space: HyperVectorSpace, over: str) -> List[str]:
    ids = space.carrier
    scalars = space.field.elements
    lines = [f"space {name} over {over}", f"  carrier: {', '.join(ids)}"]
    lines.append(f"  zero: {ids[space.zero]}")
    for x, row in enumerate(space.add):
        lines.extend(f"  {ids[x]} + {ids[y]} = {ids[z]}" for y, z in enumerate(row))
    for b, cells in enumerate(space.hyperop):
        for x, cell in enumerate(cells):
            members = ", ".join(ids[v] for v in sorted(cell))
            lines.append(f"  {scalars[b]} o {ids[x]} = {{{members}}}")
    lines.append("end")
    return lines


def _bfs_lines(name: str, bfs: BipolarFuzzySoftSet, on: str) -> List[str]:
    ids = bfs.space.carrier
    lines = [f"bfs {name} on {on}", f"  params: {', '.join(bfs.params)}".rstrip()]
    for e, row in bfs.items():
        for x, vector in enumerate(ids):
            pos, neg = format_rational(row.pos[x]), format_rational(row.neg[x])
            lines.append(f"  {e}[{vector}] = {pos}, {neg}")
    lines.append("end")
    return lines


def serialize_document(
    document: Document, header: Optional[Iterable[str]] = None
) -> str:
    """
    Render a document in canonical form.

    Args:
        document: The document to render
        header: Optional comment lines written before the definitions

    Returns:
        The document source, ending with a newline
    """
    blocks: List[List[str]] = []
    for name in sorted(document.fields):
        blocks.append(_field_lines(name, document.fields[name]))
    for name in sorted(document.spaces):
        over = document.space_fields[name]
        blocks.append(_space_lines(name, document.spaces[name], over))
    for name in sorted(document.bfs_sets):
        on = document.bfs_spaces[name]
        blocks.append(_bfs_lines(name, document.bfs_sets[name], on))
    text = "\n\n".join("\n".join(block) for block in blocks)
    if header:
        text = "\n".join(f"# {line}" for line in header) + "\n\n" + text
    return text + "\n"


def write_document(document: Document, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_document(document), encoding="utf-8")
