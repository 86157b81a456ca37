"""
Parser for structure documents.

A recursive-descent parser over the token stream of ``Scanner``. Every
error is a ``ParseError`` carrying the line and column of the offending
token, and a document that parses never holds a structurally invalid value.
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..algebra.field import FiniteField
from ..algebra.fuzzy import BipolarFuzzySet, BipolarFuzzySoftSet
from ..algebra.space import HyperVectorSpace
from ..algebra.utils.rational_utils import (
    check_negative_grade,
    check_positive_grade,
    parse_rational,
)
from ..exceptions import DomainError, ParseError, StructureError
from .document import Document
from .scanner import Scanner, Token

logger = logging.getLogger(__name__)

_IDENT = re.compile(r"^[A-Za-z0-9_]+$")

Cells = Dict[Tuple[str, str], Tuple[Token, Token]]


class Parser:
    """Parses one document; call ``parse`` once."""

    def __init__(self, text: str):
        self.scanner = Scanner(text)
        self.scanner.lex()
        self.document = Document()
        self.block_end: Optional[Token] = None

    def peek(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.scanner.token
        return (
            token is not None
            and token.kind == kind
            and (text is None or token.text == text)
        )

    def accept(self, kind: str, text: Optional[str] = None) -> Optional[Token]:
        if self.peek(kind, text):
            token = self.scanner.token
            self.scanner.lex()
            return token
        return None

    def expect(
        self, kind: str, text: Optional[str] = None, what: Optional[str] = None
    ) -> Token:
        token = self.accept(kind, text)
        if token is None:
            expected = what or (f"'{text}'" if text else kind.lower())
            raise self.scanner.error(f"Expected {expected}")
        return token

    def parse(self) -> Document:
        """Parse the whole document."""
        self._skip_blank_lines()
        while not self.peek("EOF"):
            head = self.expect("ATOM", what="'field', 'space' or 'bfs'")
            if head.text == "field":
                self._field_block(head)
            elif head.text == "space":
                self._space_block(head)
            elif head.text == "bfs":
                self._bfs_block(head)
            else:
                raise self.scanner.error("Expected 'field', 'space' or 'bfs'", head)
            self._skip_blank_lines()
        logger.debug("Parsed document with names %s", self.document.names())
        return self.document

    def _skip_blank_lines(self) -> None:
        while self.accept("NEWLINE"):
            pass

    def _end_of_line(self) -> None:
        if not self.peek("EOF"):
            self.expect("NEWLINE", what="end of line")

    def _ident(self, token: Token) -> str:
        if not _IDENT.match(token.text):
            raise self.scanner.error("Expected an identifier", token)
        return token.text

    def _new_name(self) -> Token:
        token = self.expect("ATOM", what="a name")
        self._ident(token)
        if token.text in self.document.names():
            raise self.scanner.error(f"Duplicate name '{token.text}'", token)
        return token

    def _atom_list(self) -> List[Token]:
        items = [self.expect("ATOM")]
        while self.accept("COMMA"):
            items.append(self.expect("ATOM"))
        return items

    def _next_line(self) -> Optional[Token]:
        """First token of the next body line, or ``None`` at ``end``."""
        self._skip_blank_lines()
        if self.peek("EOF"):
            raise self.scanner.error("Unterminated block, expected 'end'")
        first = self.expect("ATOM")
        if first.text == "end" and (self.peek("NEWLINE") or self.peek("EOF")):
            self.block_end = first
            self._end_of_line()
            return None
        return first

    def _closing(self) -> Token:
        if self.block_end is None:
            raise self.scanner.error("Expected 'end'")
        return self.block_end

    def _directive(self, first: Token, names: Tuple[str, ...]) -> Optional[str]:
        if first.text in names and self.accept("COLON"):
            return first.text
        return None

    def _distinct_ids(self, tokens: List[Token], what: str) -> List[str]:
        ids: List[str] = []
        for token in tokens:
            ident = self._ident(token)
            if ident in ids:
                raise self.scanner.error(f"Duplicate {what} '{ident}'", token)
            ids.append(ident)
        return ids

    def _record(
        self, cells: Cells, key: Tuple[str, str], at: Token, value: Token
    ) -> None:
        if key in cells:
            raise self.scanner.error(f"Duplicate cell for {key[0]}, {key[1]}", at)
        cells[key] = (at, value)

    def _table(
        self, cells: Cells, rows: List[str], cols: List[str], label: str, end: Token
    ) -> List[List[int]]:
        for (a, b), (at, value) in cells.items():
            for ident, token in ((a, at), (b, at), (value.text, value)):
                if ident not in rows and ident not in cols:
                    raise self.scanner.error(f"Unknown element '{ident}'", token)
        table = []
        for a in rows:
            row = []
            for b in cols:
                if (a, b) not in cells:
                    raise self.scanner.error(f"Missing cell {a} {label} {b}", end)
                value = cells[(a, b)][1]
                if value.text not in cols:
                    raise self.scanner.error(f"Unknown element '{value.text}'", value)
                row.append(cols.index(value.text))
            table.append(row)
        return table

    def _require(self, token: Optional[Token], what: str, end: Token) -> Token:
        if token is None:
            raise self.scanner.error(f"Missing '{what}:' line", end)
        return token

    def _structure_error(self, e: StructureError, head: Token) -> ParseError:
        return self.scanner.error(f"Invalid structure: {e.message}", head)

    def _field_block(self, head: Token) -> None:
        name = self._new_name()
        self._end_of_line()
        elements: Optional[List[Token]] = None
        zero: Optional[Token] = None
        one: Optional[Token] = None
        add: Cells = {}
        mul: Cells = {}
        while True:
            first = self._next_line()
            if first is None:
                break
            directive = self._directive(first, ("elements", "zero", "one"))
            if directive == "elements":
                elements = self._atom_list()
            elif directive == "zero":
                zero = self.expect("ATOM")
            elif directive == "one":
                one = self.expect("ATOM")
            else:
                op = self.accept("PLUS") or self.expect("STAR", what="'+' or '*'")
                second = self.expect("ATOM")
                self.expect("EQUALS")
                value = self.expect("ATOM")
                cells = add if op.kind == "PLUS" else mul
                self._record(cells, (first.text, second.text), first, value)
            self._end_of_line()

        end = self._closing()
        elements = self._require_list(elements, "elements", end)
        ids = self._distinct_ids(elements, "element")
        zero_token = self._require(zero, "zero", end)
        one_token = self._require(one, "one", end)
        for token in (zero_token, one_token):
            if token.text not in ids:
                raise self.scanner.error(f"Unknown element '{token.text}'", token)
        try:
            value = FiniteField(
                elements=tuple(ids),
                add=tuple(map(tuple, self._table(add, ids, ids, "+", end))),
                mul=tuple(map(tuple, self._table(mul, ids, ids, "*", end))),
                zero=ids.index(zero_token.text),
                one=ids.index(one_token.text),
            )
        except StructureError as e:
            raise self._structure_error(e, head) from e
        self.document.add_field(name.text, value)

    def _require_list(
        self, tokens: Optional[List[Token]], what: str, end: Token
    ) -> List[Token]:
        if tokens is None:
            raise self.scanner.error(f"Missing '{what}:' line", end)
        return tokens

    def _space_block(self, head: Token) -> None:
        name = self._new_name()
        self.expect("ATOM", "over")
        over = self.expect("ATOM", what="a field name")
        if over.text not in self.document.fields:
            raise self.scanner.error(f"Unknown field '{over.text}'", over)
        field = self.document.get_field(over.text)
        self._end_of_line()
        carrier: Optional[List[Token]] = None
        zero: Optional[Token] = None
        add: Cells = {}
        hyperop: Dict[Tuple[str, str], Tuple[Token, List[Token]]] = {}
        while True:
            first = self._next_line()
            if first is None:
                break
            directive = self._directive(first, ("carrier", "zero"))
            if directive == "carrier":
                carrier = self._atom_list()
            elif directive == "zero":
                zero = self.expect("ATOM")
            elif self.accept("PLUS"):
                second = self.expect("ATOM")
                self.expect("EQUALS")
                self._record(add, (first.text, second.text), first, self.expect("ATOM"))
            else:
                self.expect("ATOM", "o", what="'+' or 'o'")
                vector = self.expect("ATOM")
                self.expect("EQUALS")
                brace = self.expect("LBRACE")
                if self.peek("RBRACE"):
                    raise self.scanner.error("Empty hyperoperation cell", brace)
                members = self._atom_list()
                self.expect("RBRACE")
                key = (first.text, vector.text)
                if key in hyperop:
                    raise self.scanner.error(
                        f"Duplicate cell {key[0]} o {key[1]}", first
                    )
                hyperop[key] = (first, members)
            self._end_of_line()

        end = self._closing()
        carrier = self._require_list(carrier, "carrier", end)
        ids = self._distinct_ids(carrier, "vector")
        zero_token = self._require(zero, "zero", end)
        if zero_token.text not in ids:
            raise self.scanner.error(f"Unknown vector '{zero_token.text}'", zero_token)
        add_table = self._table(add, ids, ids, "+", end)
        scalars = list(field.elements)
        for (b, x), (at, members) in hyperop.items():
            if b not in scalars:
                raise self.scanner.error(f"Unknown scalar '{b}'", at)
            if x not in ids:
                raise self.scanner.error(f"Unknown vector '{x}'", at)
            for token in members:
                if token.text not in ids:
                    raise self.scanner.error(f"Unknown vector '{token.text}'", token)
        rows = []
        for b in scalars:
            row = []
            for x in ids:
                if (b, x) not in hyperop:
                    raise self.scanner.error(f"Missing cell {b} o {x}", end)
                row.append(frozenset(ids.index(t.text) for t in hyperop[(b, x)][1]))
            rows.append(tuple(row))
        try:
            value = HyperVectorSpace(
                carrier=tuple(ids),
                add=tuple(map(tuple, add_table)),
                zero=ids.index(zero_token.text),
                field=field,
                hyperop=tuple(rows),
            )
        except StructureError as e:
            raise self._structure_error(e, head) from e
        self.document.add_space(name.text, value, over.text)

    def _grade(self, token: Token, positive: bool) -> Fraction:
        try:
            grade = parse_rational(token.text)
            if positive:
                return check_positive_grade(grade)
            return check_negative_grade(grade)
        except (ValueError, DomainError) as e:
            message = e.message if isinstance(e, DomainError) else str(e)
            raise self.scanner.error(message, token) from e

    def _bfs_block(self, head: Token) -> None:
        name = self._new_name()
        self.expect("ATOM", "on")
        on = self.expect("ATOM", what="a space name")
        if on.text not in self.document.spaces:
            raise self.scanner.error(f"Unknown space '{on.text}'", on)
        space = self.document.spaces[on.text]
        self._end_of_line()
        params: Optional[List[Token]] = None
        grades: Dict[Tuple[str, str], Tuple[Token, Fraction, Fraction]] = {}
        while True:
            first = self._next_line()
            if first is None:
                break
            if self._directive(first, ("params",)):
                at_end = self.peek("NEWLINE") or self.peek("EOF")
                params = [] if at_end else self._atom_list()
            else:
                self.expect("LBRACKET", what="'[' or 'params:'")
                vector = self.expect("ATOM")
                self.expect("RBRACKET")
                self.expect("EQUALS")
                pos = self._grade(self.expect("ATOM", what="a grade"), True)
                self.expect("COMMA")
                neg = self._grade(self.expect("ATOM", what="a grade"), False)
                key = (first.text, vector.text)
                if key in grades:
                    raise self.scanner.error(
                        f"Duplicate grades for {key[0]}[{key[1]}]", first
                    )
                grades[key] = (first, pos, neg)
            self._end_of_line()

        end = self._closing()
        params = self._require_list(params, "params", end)
        names = self._distinct_ids(params, "parameter")
        for (e, x), (at, _, _) in grades.items():
            if e not in names:
                raise self.scanner.error(f"Unknown parameter '{e}'", at)
            if x not in space.carrier:
                raise self.scanner.error(f"Unknown vector '{x}'", at)
        table = []
        for e in names:
            pos: List[Fraction] = []
            neg: List[Fraction] = []
            for x in space.carrier:
                if (e, x) not in grades:
                    raise self.scanner.error(f"Missing grades for {e}[{x}]", end)
                pos.append(grades[(e, x)][1])
                neg.append(grades[(e, x)][2])
            table.append(BipolarFuzzySet(tuple(pos), tuple(neg)))
        value = BipolarFuzzySoftSet(space, tuple(names), tuple(table))
        self.document.add_bfs(name.text, value, on.text)


def parse_document(text: str) -> Document:
    """
    Parse a structure document.

    Args:
        text: Document source

    Returns:
        The parsed ``Document``

    Raises:
        ParseError: On the first syntax or structure error
    """
    return Parser(text).parse()


def read_document(path: Union[str, Path]) -> Document:
    """Read and parse a ``.hvs`` file."""
    return parse_document(Path(path).read_text(encoding="utf-8"))
