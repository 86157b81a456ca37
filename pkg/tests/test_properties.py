"""
Property-based tests for the checkers, constructions and documents.

Grade tables are drawn from quarter steps so that ties between grades are
common, which is where the checkers are most likely to diverge.
"""

from fractions import Fraction

from hypothesis import example, given, settings
from hypothesis import strategies as st

from bfs_hvs import open_workbench
from bfs_hvs.algebra.checkers import cross_check, is_bfs_hvs_direct
from bfs_hvs.algebra.constructions import generate_bfs_hvs
from bfs_hvs.algebra.field import FiniteField
from bfs_hvs.algebra.fuzzy import (
    BipolarFuzzySet,
    BipolarFuzzySoftSet,
    bfs_contains,
    bfs_negate,
    bfs_scalar,
    bfs_sum,
    level_soft_set,
)
from bfs_hvs.algebra.oracle import random_bfs_hvs
from bfs_hvs.algebra.space import (
    HyperVectorSpace,
    VectorSubset,
    enumerate_subhyperspaces,
    is_subhyperspace,
    span,
)
from bfs_hvs.algebra.utils.rational_utils import format_rational
from bfs_hvs.dsl import Document, parse_document, serialize_document
from bfs_hvs.exceptions import ConstructionError
from bfs_hvs.types import GradeGrid

from .conftest import FIXTURES
from .test_parser import FIELD, SPACE

WORKBENCH = open_workbench(FIXTURES / "examples.hvs")
Z4 = WORKBENCH.space("Z4")
Z5 = WORKBENCH.space("Z5")
CASES = [(space, enumerate_subhyperspaces(space)) for space in (Z4, Z5)]

POS_LEVELS = [Fraction(i, 4) for i in range(5)]
NEG_LEVELS = [-g for g in POS_LEVELS]

# Numerator and denominator of a fraction in [0, 1]
FRACTIONS = st.integers(min_value=1, max_value=6).flatmap(
    lambda d: st.tuples(st.integers(min_value=0, max_value=d), st.just(d))
)


def grade_rows(space):
    """Positive and negative grade rows of the size of ``space``."""
    size = space.size
    pos = st.lists(st.sampled_from(POS_LEVELS), min_size=size, max_size=size)
    neg = st.lists(st.sampled_from(NEG_LEVELS), min_size=size, max_size=size)
    return st.tuples(pos, neg)


@st.composite
def soft_sets(draw, space, max_params=2):
    """Soft sets on ``space`` with quarter-step grades."""
    count = draw(st.integers(min_value=1, max_value=max_params))
    rows = [draw(grade_rows(space)) for _ in range(count)]
    table = [BipolarFuzzySet(tuple(pos), tuple(neg)) for pos, neg in rows]
    params = tuple("cdefg"[:count])
    return BipolarFuzzySoftSet(space, params, tuple(table))


@st.composite
def containment_chains(draw, space):
    """Soft sets ``G``, ``H`` and ``K`` with ``G`` below ``H`` below ``K``."""
    chain = [draw(soft_sets(space, max_params=3))]
    for _ in range(2):
        below = chain[-1]
        table = []
        for _, g in below.items():
            pos, neg = draw(grade_rows(space))
            table.append(
                BipolarFuzzySet(
                    tuple(max(a, b) for a, b in zip(g.pos, pos)),
                    tuple(min(a, b) for a, b in zip(g.neg, neg)),
                )
            )
        chain.append(below.with_table(below.params, table))
    return tuple(chain)


@st.composite
def spaces(draw):
    """Cyclic groups over a small prime field with a random hyperoperation."""
    field = FiniteField.prime(draw(st.sampled_from([2, 3, 5])))
    n = draw(st.integers(min_value=1, max_value=4))
    cells = st.frozensets(st.integers(min_value=0, max_value=n - 1), min_size=1)
    hyperop = tuple(tuple(draw(cells) for _ in range(n)) for _ in range(field.size))
    return HyperVectorSpace(
        carrier=tuple(f"v{i}" for i in range(n)),
        add=tuple(tuple((x + y) % n for y in range(n)) for x in range(n)),
        zero=0,
        field=field,
        hyperop=hyperop,
    )


def subsets(space):
    return st.frozensets(
        st.integers(min_value=0, max_value=space.size - 1), min_size=1
    ).map(VectorSubset)


def in_grade_ranges(F):
    return all(
        all(0 <= p <= 1 for p in g.pos) and all(-1 <= n <= 0 for n in g.neg)
        for _, g in F.items()
    )


class TestCheckerAgreement:
    """Every applicable checker gives the same verdict."""

    @settings(max_examples=150, deadline=None)
    @given(soft_sets(Z4))
    def test_z4(self, G):
        """Test direct, iff1 and levels on the Z4 tables."""
        result = cross_check(G)

        assert set(result.verdicts) == {"direct", "iff1", "levels"}
        assert result.agree

    @settings(max_examples=150, deadline=None)
    @given(soft_sets(Z5))
    def test_z5(self, G):
        """Test all five checkers on the classical space."""
        result = cross_check(G)

        assert result.refusals == {}
        assert result.agree


class TestContainmentLaws:
    """Order laws of soft set containment."""

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from([Z4, Z5]).flatmap(containment_chains))
    def test_transitive(self, chain):
        """Test that containment composes along a chain."""
        G, H, K = chain

        assert bfs_contains(G, H)
        assert bfs_contains(H, K)
        assert bfs_contains(G, K)

    @settings(max_examples=100, deadline=None)
    @given(st.sampled_from([Z4, Z5]).flatmap(containment_chains))
    def test_antisymmetric(self, chain):
        """Test that mutual containment happens only for equal soft sets."""
        G, H, _ = chain

        assert bfs_contains(H, G) == (G == H)

    @settings(max_examples=100, deadline=None)
    @given(soft_sets(Z4, max_params=3), soft_sets(Z4, max_params=3))
    def test_mutual_containment_of_random_pairs(self, G, H):
        """Test antisymmetry on independently drawn soft sets."""
        if bfs_contains(G, H) and bfs_contains(H, G):
            assert G == H


class TestLevelCutLaws:
    """Monotonicity of level cuts in both thresholds."""

    @settings(max_examples=150, deadline=None)
    @given(
        st.one_of(soft_sets(Z4, max_params=3), soft_sets(Z5, max_params=3)),
        st.lists(st.sampled_from(POS_LEVELS[1:]), min_size=2, max_size=2),
        st.lists(st.sampled_from(NEG_LEVELS[1:]), min_size=2, max_size=2),
    )
    def test_weaker_thresholds_give_larger_cuts(self, G, alphas, betas):
        """Test that a lower alpha and a higher beta give a superset."""
        low_alpha, high_alpha = sorted(alphas)
        low_beta, high_beta = sorted(betas)
        strict = level_soft_set(G, high_alpha, low_beta)
        loose = level_soft_set(G, low_alpha, high_beta)

        for e, cut in strict.items():
            assert cut.members <= loose[e].members


class TestOperationRanges:
    """Sum, scalar product and negation stay inside the grade ranges."""

    @settings(max_examples=100, deadline=None)
    @given(
        st.sampled_from([Z4, Z5]).flatmap(
            lambda space: st.tuples(soft_sets(space), soft_sets(space))
        )
    )
    def test_grades_stay_in_range(self, pair):
        """Test every result of sum, scale and negate for grade ranges."""
        G, H = pair

        assert in_grade_ranges(bfs_sum(G, H))
        assert in_grade_ranges(bfs_negate(G))
        for b in range(G.space.field.size):
            assert in_grade_ranges(bfs_scalar(b, G))


class TestConstructionLaws:
    """Laws of the generated bfs-hvs and the sum."""

    @settings(max_examples=80, deadline=None)
    @given(st.one_of(soft_sets(Z4), soft_sets(Z5)))
    def test_generated_contains_input(self, F):
        """Test that a successful construction is a bfs-hvs above its input."""
        try:
            generated = generate_bfs_hvs(F).result
        except ConstructionError:
            return

        assert bfs_contains(F, generated)
        assert is_bfs_hvs_direct(generated)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
    def test_sum_of_bfs_hvs_on_classical_space(self, a, b):
        """Test that the sum of two bfs-hvs on Z5 is again a bfs-hvs."""
        grid = GradeGrid.uniform(4)
        A = random_bfs_hvs(Z5, ["p"], grid, (a, 0))
        B = random_bfs_hvs(Z5, ["p"], grid, (b, 1))

        assert is_bfs_hvs_direct(bfs_sum(A, B))


class TestSpanLaws:
    """Closure laws of span."""

    @settings(max_examples=100, deadline=None)
    @given(
        st.sampled_from(CASES).flatmap(
            lambda case: subsets(case[0]).map(lambda s: (*case, s))
        )
    )
    def test_span_is_least_subhyperspace_above(self, case):
        """Test that span is the least subhyperspace containing the set."""
        space, shs, subset = case
        closed = span(space, subset)

        assert subset.members <= closed.members
        assert is_subhyperspace(space, closed).holds
        assert span(space, closed) == closed
        for W in shs:
            if subset.members <= W.members:
                assert closed.members <= W.members


class TestDocumentRoundTrip:
    """Documents parse back to themselves."""

    @settings(max_examples=100, deadline=None)
    @given(soft_sets(Z4, max_params=3))
    def test_round_trip(self, F):
        """Test serializing and parsing a document holding a random soft set."""
        document = WORKBENCH.derived_document("F", F)
        text = serialize_document(document)

        assert parse_document(text) == document

    @settings(max_examples=100, deadline=None)
    @given(
        spaces().flatmap(lambda space: st.tuples(st.just(space), soft_sets(space))),
        st.sampled_from(["K", "GF"]),
        st.sampled_from(["V", "W"]),
    )
    def test_random_field_and_space(self, case, field_name, space_name):
        """Test the round trip with a random field, space and soft set."""
        space, F = case
        document = Document()
        document.add_field(field_name, space.field)
        document.add_space(space_name, space, field_name)
        document.add_bfs("A", F, space_name)
        text = serialize_document(document)
        parsed = parse_document(text)

        assert parsed == document
        assert serialize_document(parsed) == text

    @settings(max_examples=100, deadline=None)
    @given(pos=FRACTIONS, neg=FRACTIONS, k=st.integers(min_value=2, max_value=5))
    @example(pos=(1, 2), neg=(0, 1), k=2)
    def test_grades_written_in_lowest_terms(self, pos, neg, k):
        """Test that a grade like 2/4 is written back as 1/2."""
        (a, b), (c, d) = pos, neg
        neg_text = f"-{c * k}/{d * k}" if c else f"0/{d * k}"
        text = (
            FIELD
            + SPACE
            + "bfs G on T\n  params: p\n"
            + f"  p[0] = {a * k}/{b * k}, {neg_text}\n"
            + "  p[1] = 0, 0\nend\n"
        )
        lines = serialize_document(parse_document(text)).splitlines()

        expected = (
            f"  p[0] = {format_rational(Fraction(a, b))},"
            f" {format_rational(-Fraction(c, d))}"
        )
        assert expected in lines
        assert "  p[1] = 0, 0" in lines


class TestEmptyInput:
    """Documents without definitions."""

    def test_empty_text(self):
        """Test that empty input parses to an empty document."""
        document = parse_document("")

        assert document == Document()
        assert document.names() == []

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.sampled_from(["", "# note", "  # indented note", "   "])))
    def test_blank_and_comment_lines(self, lines):
        """Test that blank and comment lines alone define nothing."""
        assert parse_document("\n".join(lines)) == Document()
