"""
Table utility functions for bfs-hvs.

Contains helpers for validating finite operation tables.
"""

from itertools import product
from typing import Sequence, Tuple

from ...exceptions import StructureError

Table = Tuple[Tuple[int, ...], ...]


def freeze_table(
    rows: Sequence[Sequence[int]], size: int, label: str, names: Sequence[str]
) -> Table:
    """
    Validate a ``size`` x ``size`` table of element indices and freeze it.

    Args:
        rows: Table rows, ``rows[i][j]`` is the result of ``i op j``
        size: Number of elements
        label: Operation symbol used in error messages
        names: Element ids used in error messages

    Returns:
        The table as a tuple of tuples

    Raises:
        StructureError: If a row or cell is missing or out of range
    """
    if len(rows) != size:
        raise StructureError(
            f"Table '{label}' has {len(rows)} rows, expected {size}", cell=label
        )
    frozen = []
    for i, row in enumerate(rows):
        if len(row) != size:
            raise StructureError(
                f"Row {names[i]} of table '{label}' has {len(row)} cells,"
                f" expected {size}",
                cell=f"{names[i]} {label} *",
            )
        for j, value in enumerate(row):
            if not isinstance(value, int) or not 0 <= value < size:
                raise StructureError(
                    f"Cell {names[i]} {label} {names[j]} holds {value!r},"
                    " which is not an element",
                    cell=f"{names[i]} {label} {names[j]}",
                )
        frozen.append(tuple(row))
    return tuple(frozen)


def check_abelian_group(
    table: Table,
    identity: int,
    label: str,
    names: Sequence[str],
    members: Sequence[int],
) -> None:
    """
    Check that ``table`` restricted to ``members`` is an abelian group.

    Args:
        table: Operation table over indices
        identity: Index of the neutral element
        label: Operation symbol used in error messages
        names: Element ids used in error messages
        members: Indices the group lives on

    Raises:
        StructureError: Naming the first failing cell
    """
    allowed = set(members)
    if identity not in allowed:
        raise StructureError(
            f"Identity {names[identity]} of '{label}' is not in the group",
            cell=names[identity],
        )
    for x, y in product(members, repeat=2):
        if table[x][y] not in allowed:
            raise StructureError(
                f"'{label}' is not closed: {names[x]} {label} {names[y]}"
                f" = {names[table[x][y]]}",
                cell=f"{names[x]} {label} {names[y]}",
            )
        if table[x][y] != table[y][x]:
            raise StructureError(
                f"'{label}' is not commutative at {names[x]}, {names[y]}",
                cell=f"{names[x]} {label} {names[y]}",
            )
    for x in members:
        if table[identity][x] != x:
            raise StructureError(
                f"{names[identity]} is not neutral for '{label}' at {names[x]}",
                cell=f"{names[identity]} {label} {names[x]}",
            )
        if not any(table[x][y] == identity for y in members):
            raise StructureError(
                f"{names[x]} has no inverse under '{label}'",
                cell=f"{names[x]} {label} *",
            )
    for x, y, z in product(members, repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise StructureError(
                f"'{label}' is not associative at {names[x]}, {names[y]}, {names[z]}",
                cell=f"{names[x]} {label} {names[y]}",
            )


def inverse_table(table: Table, identity: int) -> Tuple[int, ...]:
    """Inverse of every element of a validated group table."""
    return tuple(row.index(identity) for row in table)
