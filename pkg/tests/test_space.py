"""
Tests for hypervector spaces in bfs-hvs.

This module covers the axiom checker, subhyperspaces, spans and the
subhyperspace enumeration.
"""

import pytest

from bfs_hvs.algebra.space import (
    HyperVectorSpace,
    VectorSubset,
    Witness,
    enumerate_subhyperspaces,
    is_subhyperspace,
    replay_axiom,
    span,
)
from bfs_hvs.exceptions import CapacityError, PreconditionError, StructureError
from bfs_hvs.types import EngineLimits


def subset(*members):
    return VectorSubset(frozenset(members))


class TestConstruction:
    """Test cases for building spaces."""

    def test_carrier_and_tables(self, z4):
        """Test the basic accessors of the Z4 space."""
        assert z4.size == 4
        assert z4.neg(1) == 3
        assert z4.sub(1, 3) == 2
        assert z4.scalar(1, 1) == frozenset({1, 2, 3})
        assert z4.full == subset(0, 1, 2, 3)

    def test_empty_cell_is_rejected(self, z2):
        """Test that every hyperoperation cell must be non-empty."""
        with pytest.raises(StructureError) as exc_info:
            HyperVectorSpace.from_ids(
                ["0", "1"],
                [["0", "1"], ["1", "0"]],
                "0",
                z2,
                [[["0"], []], [["0"], ["1"]]],
            )

        assert exc_info.value.cell == "0 o 1"

    def test_missing_scalar_row(self, z2):
        """Test that the hyperoperation needs one row per scalar."""
        with pytest.raises(StructureError):
            HyperVectorSpace.from_ids(
                ["0", "1"], [["0", "1"], ["1", "0"]], "0", z2, [[["0"], ["1"]]]
            )

    def test_non_group_addition(self, z2):
        """Test that the addition table must be an abelian group."""
        with pytest.raises(StructureError):
            HyperVectorSpace.from_ids(
                ["0", "1"],
                [["0", "1"], ["1", "1"]],
                "0",
                z2,
                [[["0"], ["0"]], [["0"], ["1"]]],
            )

    def test_preimages_and_decompositions(self, z4):
        """Test the cached lookup tables."""
        assert z4.preimages[1][1] == (1, 3)
        assert z4.preimages[0][2] == (0,)
        assert (1, 3) in z4.decompositions[0]
        assert len(z4.decompositions[2]) == 4


class TestAxioms:
    """Test cases for the H1-H5 checker."""

    def test_z4_report(self, z4):
        """Test which axioms hold on the Z4 tables."""
        report = z4.axioms

        assert not report.h1.passed
        assert report.h2.passed
        assert not report.h3.passed
        assert report.h4.passed
        assert report.h5.passed
        assert not report.srd.passed
        assert not report.sld.passed
        assert not report.invertible.passed
        assert not report.is_hvs

    def test_z4_h1_witness(self, z4):
        """Test the first H1 counterexample."""
        witness = z4.axioms.h1.witness

        assert witness.scalars == (0,)
        assert witness.vectors == (1, 3)
        assert witness.left == frozenset({0, 2})
        assert witness.right == frozenset({0})
        assert "b=0, y=1, z=3" in witness.describe(z4)

    def test_z4_invertible_witness(self, z4):
        """Test that the invertible witness names the image vector x."""
        witness = z4.axioms.invertible.witness

        assert witness.vectors == (1, 2)
        assert witness.describe(z4) == (
            "invertible fails at b=1, y=1, x=2: {1} vs {0,2}"
        )

    def test_z4_h3_witness(self, z4):
        """Test the first H3 counterexample."""
        witness = z4.axioms.h3.witness

        assert witness.scalars == (0, 0)
        assert witness.vectors == (1,)
        assert witness.left == frozenset({0, 2})
        assert witness.right == frozenset({0})

    def test_witnesses_replay_as_failures(self, z4):
        """Test that every reported witness refutes its condition."""
        for result in z4.axioms.results():
            if result.witness is not None:
                assert replay_axiom(z4, result.witness) is False

    def test_classical_space_is_hvs(self, z5):
        """Test that Z5 over itself satisfies everything."""
        report = z5.axioms

        assert report.is_hvs
        assert report.srd.passed and report.sld.passed
        assert report.invertible.passed
        assert all(r.witness is None for r in report.results())

    def test_report_to_dict(self, z4):
        """Test the JSON form of the report."""
        data = z4.axioms.to_dict(z4)

        assert data["H1"]["passed"] is False
        assert data["H1"]["witness"]["vectors"] == ["1", "3"]
        assert data["H5"] == {"passed": True, "witness": None}

    def test_unknown_axiom_replay(self, z4):
        """Test that replaying an unknown condition is refused."""
        with pytest.raises(PreconditionError):
            replay_axiom(z4, Witness("H9"))


class TestSubhyperspaces:
    """Test cases for subhyperspace tests, spans and enumeration."""

    def test_is_subhyperspace(self, z4):
        """Test the subhyperspaces of Z4."""
        assert is_subhyperspace(z4, subset(0, 2))
        assert is_subhyperspace(z4, z4.full)
        assert not is_subhyperspace(z4, subset(0))

    def test_failure_witnesses(self, z4):
        """Test the witness kinds of failed subhyperspace tests."""
        empty = is_subhyperspace(z4, subset())
        difference = is_subhyperspace(z4, subset(0, 1))
        scalar = is_subhyperspace(z4, subset(0))

        assert empty.witness.condition == "non-empty"
        assert difference.witness.condition == "difference"
        assert scalar.witness.condition == "scalar"
        assert scalar.witness.left == frozenset({0, 2})

    def test_out_of_range_subset(self, z4):
        """Test that foreign indices are rejected."""
        with pytest.raises(StructureError):
            is_subhyperspace(z4, subset(9))

    def test_span(self, z4):
        """Test spans of small generator sets."""
        assert span(z4, subset(2)) == subset(0, 2)
        assert span(z4, subset(1)) == z4.full
        assert span(z4, subset(0)) == subset(0, 2)

    def test_span_is_smallest(self, z4):
        """Test that the span is contained in every subhyperspace holding the set."""
        shs = enumerate_subhyperspaces(z4)
        for mask in range(1, 16):
            S = subset(*(x for x in range(4) if mask >> x & 1))
            closure = span(z4, S)
            assert is_subhyperspace(z4, closure)
            assert S <= closure
            assert all(closure <= W for W in shs if S <= W)

    def test_span_of_empty_set(self, z4):
        """Test that the empty set has no span."""
        with pytest.raises(PreconditionError):
            span(z4, subset())

    def test_enumeration(self, z4, z5):
        """Test the subhyperspace lists of Z4 and Z5."""
        assert enumerate_subhyperspaces(z4) == [subset(0, 2), z4.full]
        assert enumerate_subhyperspaces(z5) == [subset(0), z5.full]

    def test_enumeration_capacity(self, z4):
        """Test that the scan respects its limit."""
        with pytest.raises(CapacityError) as exc_info:
            enumerate_subhyperspaces(z4, EngineLimits(max_subset_scan=3))

        assert exc_info.value.limit == 3

    def test_subset_helpers(self, z4):
        """Test ids, describe and ordering of subsets."""
        S = z4.subset(["2", "0"])

        assert S.ids(z4) == ["0", "2"]
        assert S.describe(z4) == "{0,2}"
        assert S < z4.full
        assert S.sort_key == (2, (0, 2))
        with pytest.raises(StructureError):
            z4.subset(["9"])
