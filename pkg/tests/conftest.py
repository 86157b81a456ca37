"""
Test configuration and fixtures for bfs-hvs tests.

This module provides common test fixtures and configuration for pytest.
"""

from pathlib import Path

import pytest

from bfs_hvs.algebra.field import FiniteField
from bfs_hvs.algebra.fuzzy import BipolarFuzzySoftSet
from bfs_hvs.algebra.space import HyperVectorSpace, classical_hvs_from_field
from bfs_hvs.client import Workbench

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    """Provide the directory holding the sample documents."""
    return FIXTURES


@pytest.fixture
def examples_path():
    """Provide the path of the worked-examples document."""
    return FIXTURES / "examples.hvs"


@pytest.fixture
def z2():
    """Provide the two-element field."""
    return FiniteField.prime(2)


@pytest.fixture
def z4(z2):
    """Provide the four-element hypervector space over Z2."""
    return HyperVectorSpace.from_ids(
        carrier=["0", "1", "2", "3"],
        add=[[str((a + b) % 4) for b in range(4)] for a in range(4)],
        zero="0",
        field=z2,
        hyperop=[
            [["0", "2"], ["0"], ["0"], ["0"]],
            [["0", "2"], ["1", "2", "3"], ["0", "2"], ["1", "2", "3"]],
        ],
    )


@pytest.fixture
def z5():
    """Provide Z5 as a classical space over itself."""
    return classical_hvs_from_field(FiniteField.prime(5))


@pytest.fixture
def g_coset(z4):
    """Provide a bfs-hvs that is constant on the cosets {0,2} and {1,3}."""
    high, low = {}, {}
    high["c"], low["c"] = ("1/2", "-2/5"), ("3/10", "-1/5")
    high["d"], low["d"] = ("7/10", "-3/5"), ("1/5", "-3/10")
    high["e"], low["e"] = ("4/5", "-7/10"), ("2/5", "-1/2")
    return BipolarFuzzySoftSet.from_grades(
        z4, {e: [high[e], low[e], high[e], low[e]] for e in ("c", "d", "e")}
    )


@pytest.fixture
def g_broken(z4):
    """Provide a soft set that is not a bfs-hvs."""
    grades = {
        "c": ["2/5 -1/10", "3/10 -3/10", "1/5 -3/5", "7/10 -3/5"],
        "d": ["1 -1/2", "1/2 -7/10", "2/5 -1/5", "1/10 -3/10"],
        "e": ["2/5 0", "0 -1/10", "1/5 -7/10", "4/5 -1/2"],
    }
    return BipolarFuzzySoftSet.from_grades(
        z4, {e: [tuple(cell.split()) for cell in row] for e, row in grades.items()}
    )


@pytest.fixture
def f_spike(z4):
    """Provide a single-parameter soft set peaking at vector 2."""
    low = ("1/10", "-1/10")
    return BipolarFuzzySoftSet.from_grades(
        z4, {"p": [low, low, ("4/5", "-9/10"), low]}
    )


@pytest.fixture
def workbench(examples_path):
    """Provide a workbench loaded with the worked-examples document."""
    return Workbench(examples_path).load()
