"""
Tests for the structure document scanner and parser.
"""

from fractions import Fraction as Fr

import pytest

from bfs_hvs.dsl import parse_document, read_document
from bfs_hvs.dsl.scanner import Scanner
from bfs_hvs.exceptions import NameNotFoundError, ParseError

FIELD = """field Z2
  elements: 0, 1
  zero: 0
  one: 1
  0 + 0 = 0
  0 + 1 = 1
  1 + 0 = 1
  1 + 1 = 0
  0 * 0 = 0
  0 * 1 = 0
  1 * 0 = 0
  1 * 1 = 1
end
"""

SPACE = """space T over Z2
  carrier: 0, 1
  zero: 0
  0 + 0 = 0
  0 + 1 = 1
  1 + 0 = 1
  1 + 1 = 0
  0 o 0 = {0}
  0 o 1 = {0}
  1 o 0 = {0}
  1 o 1 = {1}
end
"""


def parse_error(text):
    with pytest.raises(ParseError) as exc_info:
        parse_document(text)
    return exc_info.value


class TestScanner:
    """Test cases for the scanner."""

    def test_tokens_and_positions(self):
        """Test token kinds and their line and column."""
        scanner = Scanner("c[0] = 1/2, -2/5  # note\nend")
        kinds = []
        while scanner.lex().kind != "EOF":
            kinds.append((scanner.token.kind, scanner.token.text))

        assert kinds[:4] == [
            ("ATOM", "c"),
            ("LBRACKET", "["),
            ("ATOM", "0"),
            ("RBRACKET", "]"),
        ]
        assert ("ATOM", "-2/5") in kinds
        assert ("NEWLINE", "\n") in kinds
        assert kinds[-1] == ("ATOM", "end")

    def test_lex_stays_on_eof(self):
        """Test that lexing past the end keeps returning EOF."""
        scanner = Scanner("")

        assert scanner.lex().kind == "EOF"
        assert scanner.lex().kind == "EOF"

    def test_unexpected_character(self):
        """Test that stray characters are reported with their position."""
        error = parse_error(FIELD.replace("elements: 0, 1", "elements: 0, 1 $"))

        assert (error.line, error.column, error.token) == (2, 18, "$")


class TestParseDocument:
    """Test cases for well-formed documents."""

    def test_fixture_document(self, examples_path, g_coset, z4):
        """Test parsing the worked-examples document."""
        document = read_document(examples_path)

        assert sorted(document.fields) == ["F5", "Z2"]
        assert sorted(document.spaces) == ["Z4", "Z5"]
        assert document.get_space("Z4") == z4
        assert document.get_bfs("G_ex29") == g_coset
        assert document.bfs_spaces["F_spike"] == "Z4"

    def test_small_document(self):
        """Test a field, a space and a soft set with comments."""
        text = (
            "# header comment\n\n"
            + FIELD
            + "\n"
            + SPACE
            + "bfs B on T   # trailing comment\n"
            + "  params: c, d\n"
            + "  d[1] = 0.25, -1\n"
            + "  c[0] = 1, -1/2\n"
            + "  c[1] = 0, 0\n"
            + "  d[0] = 1/2, -0.5\n"
            + "end"
        )
        document = parse_document(text)
        B = document.get_bfs("B")

        assert B.params == ("c", "d")
        assert B["d"].pos == (Fr(1, 2), Fr(1, 4))
        assert B["c"].neg == (Fr(-1, 2), Fr(0))
        assert document.space_fields == {"T": "Z2"}
        assert document.bfs_spaces == {"B": "T"}

    def test_empty_params(self):
        """Test that a soft set may declare no parameters."""
        document = parse_document(FIELD + SPACE + "bfs E on T\n  params:\nend\n")

        assert document.get_bfs("E").params == ()

    def test_unknown_names(self):
        """Test lookups of names the document does not define."""
        document = parse_document(FIELD)

        with pytest.raises(NameNotFoundError):
            document.get_space("Z2")
        with pytest.raises(NameNotFoundError):
            document.get_bfs("G")


class TestParseErrors:
    """Test cases for malformed documents."""

    def test_missing_cell(self):
        """Test that a missing table cell is reported at 'end'."""
        error = parse_error(FIELD.replace("  1 * 1 = 1\n", ""))

        assert "Missing cell 1 * 1" in error.message
        assert (error.line, error.column, error.token) == (12, 1, "end")

    def test_not_a_field(self):
        """Test that invalid tables are reported at the block header."""
        error = parse_error(FIELD.replace("1 + 1 = 0", "1 + 1 = 1"))

        assert "Invalid structure" in error.message
        assert (error.line, error.column) == (1, 1)

    def test_unknown_field(self):
        """Test that a space must name a defined field."""
        error = parse_error(FIELD + "space T over K\nend\n")

        assert (error.line, error.column, error.token) == (14, 14, "K")

    def test_grade_out_of_range(self):
        """Test that grades are range checked at their token."""
        text = FIELD + SPACE + "bfs B on T\n  params: c\n  c[0] = 3/2, 0\n"
        error = parse_error(text)

        assert "outside [0, 1]" in error.message
        assert (error.line, error.column, error.token) == (28, 10, "3/2")

    def test_bad_grade_literal(self):
        """Test that non-numeric grades are rejected."""
        text = FIELD + SPACE + "bfs B on T\n  params: c\n  c[0] = half, 0\n"

        assert "Not a rational literal" in parse_error(text).message

    def test_empty_hyperoperation_cell(self):
        """Test that '{}' is rejected."""
        error = parse_error(FIELD + SPACE.replace("1 o 1 = {1}", "1 o 1 = {}"))

        assert error.message == "Empty hyperoperation cell"
        assert error.token == "{"

    def test_duplicate_name(self):
        """Test that names are unique across the document."""
        error = parse_error(FIELD + FIELD)

        assert error.message == "Duplicate name 'Z2'"
        assert error.line == 14

    def test_unterminated_block(self):
        """Test that a block must end with 'end'."""
        error = parse_error(FIELD.replace("end\n", ""))

        assert "Unterminated block" in error.message
        assert error.token == "eof"

    def test_missing_grades(self):
        """Test that every parameter grades every vector."""
        text = FIELD + SPACE + "bfs B on T\n  params: c\n  c[0] = 1, -1\nend\n"
        error = parse_error(text)

        assert error.message == "Missing grades for c[1]"

    def test_trailing_tokens(self):
        """Test that a line must end after its content."""
        text = FIELD + SPACE + "bfs B on T\n  params: c\n  c[0] = 1, -1 x\nend\n"

        assert parse_error(text).message == "Expected end of line"

    def test_unknown_block(self):
        """Test that only field, space and bfs blocks exist."""
        error = parse_error("group G\nend\n")

        assert (error.line, error.column, error.token) == (1, 1, "group")
