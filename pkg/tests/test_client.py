"""
Tests for the Workbench facade in bfs-hvs.

This module contains tests for document loading and the named operations.
"""

from fractions import Fraction as Fr

import pytest

from bfs_hvs import open_workbench
from bfs_hvs.client import Workbench
from bfs_hvs.dsl import serialize_document
from bfs_hvs.exceptions import (
    BfsHvsError,
    CapacityError,
    NameNotFoundError,
    StructureError,
)
from bfs_hvs.types import EngineLimits, SuiteConfig


class TestWorkbenchLoading:
    """Test cases for loading documents."""

    def test_open_workbench(self, examples_path):
        """Test the module-level loader."""
        wb = open_workbench(examples_path)

        assert isinstance(wb, Workbench)
        assert "G_ex29" in wb.document.bfs_sets

    def test_document_before_load(self):
        """Test that the document is unavailable before loading."""
        with pytest.raises(BfsHvsError, match="No document loaded"):
            Workbench().document

    def test_load_without_path(self):
        """Test that load needs a path."""
        with pytest.raises(BfsHvsError):
            Workbench().load()

    def test_load_text(self, examples_path):
        """Test loading from a string."""
        wb = Workbench().load_text(examples_path.read_text(encoding="utf-8"))

        assert wb.space("Z4").size == 4

    def test_missing_file(self, tmp_path):
        """Test that a missing file raises OSError."""
        with pytest.raises(OSError):
            Workbench(tmp_path / "absent.hvs").load()

    def test_unknown_name(self, workbench):
        """Test lookups of undefined names."""
        with pytest.raises(NameNotFoundError):
            workbench.bfs("nope")


class TestWorkbenchOperations:
    """Test cases for the named operations."""

    def test_check_space(self, workbench):
        """Test the axiom reports of both spaces."""
        assert not workbench.check_space("Z4").is_hvs
        assert workbench.check_space("Z5").is_hvs

    def test_check_bfs(self, workbench):
        """Test single checks and the cross check."""
        assert workbench.check_bfs("G_ex29", "levels")
        assert not workbench.check_bfs("G_ex38")
        assert workbench.cross_check("H_z5").agree

    def test_level(self, workbench):
        """Test level cuts by name."""
        level = workbench.level("G_ex29", "1/2", "-1/2")

        assert level["d"].ids(workbench.space("Z4")) == ["0", "2"]

    def test_span_and_enumeration(self, workbench):
        """Test spans and subhyperspace lists by name."""
        space = workbench.space("Z4")

        assert workbench.span("Z4", ["2"]).ids(space) == ["0", "2"]
        assert len(workbench.enumerate_subhyperspaces("Z4")) == 2

    def test_capacity_limit(self, examples_path):
        """Test that configured limits reach the enumeration."""
        wb = Workbench(examples_path, limits=EngineLimits(max_subset_scan=2)).load()

        with pytest.raises(CapacityError):
            wb.enumerate_subhyperspaces("Z4")

    def test_arithmetic(self, workbench):
        """Test sum, scalar product and negation by name."""
        total = workbench.sum("G_ex29", "F_ex53")

        assert total.params == ("c", "d", "e")
        assert workbench.scale("F_spike", "0")["p"].pos[1] == 0
        assert workbench.negate("G_ex38")["c"].pos[1] == Fr(7, 10)
        with pytest.raises(StructureError):
            workbench.scale("F_spike", "7")

    def test_constructions(self, workbench):
        """Test generate, normalize, promote and characteristic by name."""
        assert workbench.generate("F_spike").result["p"].pos[0] == Fr(4, 5)
        assert workbench.is_normal("F_ex53")
        assert workbench.normalize("G_ex29", "scale")["c"].pos[1] == Fr(3, 5)
        assert workbench.promote("G_ex29", "e", "4/5", "-7/10")["c"].pos[0] == 1
        chi = workbench.characteristic("Z4", ["0", "2"], ["c"], "normal")
        assert chi["c"].neg == (-1, 0, -1, 0)

    def test_verify(self, workbench):
        """Test the suite by space name."""
        report = workbench.verify("Z5", SuiteConfig(instances=10, seed=1))

        assert report.instances == 10
        assert report.ok

    def test_derived_document(self, workbench):
        """Test writing a derived soft set with its context."""
        negated = workbench.negate("F_spike")
        text = serialize_document(workbench.derived_document("neg", negated))

        assert text.startswith("field Z2\n")
        assert "space Z4 over Z2" in text
        assert "bfs neg on Z4" in text
        assert "Z5" not in text
