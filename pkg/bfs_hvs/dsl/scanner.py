"""
Scanner for structure documents.

Splits a document into tokens with line and column positions. Comments run
from ``#`` to the end of the line; newlines are significant.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional

from ..exceptions import ParseError

TOKEN_PATTERNS = (
    ("NEWLINE", r"\n"),
    ("SPACE", r"[ \t\r]+"),
    ("COMMENT", r"#[^\n]*"),
    ("COLON", r":"),
    ("COMMA", r","),
    ("PLUS", r"\+"),
    ("STAR", r"\*"),
    ("EQUALS", r"="),
    ("LBRACE", r"\{"),
    ("RBRACE", r"\}"),
    ("LBRACKET", r"\["),
    ("RBRACKET", r"\]"),
    ("ATOM", r"-?[A-Za-z0-9_][A-Za-z0-9_./]*"),
)

_MASTER = re.compile("|".join(f"(?P<{name}>{rx})" for name, rx in TOKEN_PATTERNS))
_SKIPPED = ("SPACE", "COMMENT")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


class Scanner:
    """Tokenizer with one token of lookahead in ``token``."""

    def __init__(self, text: str):
        self.text = text
        self._tokens = self._tokenize(text)
        self.token: Optional[Token] = None

    def _tokenize(self, text: str) -> Iterator[Token]:
        line, line_start, pos = 1, 0, 0
        while pos < len(text):
            match = _MASTER.match(text, pos)
            column = pos - line_start + 1
            if match is None:
                raise ParseError(
                    "Unexpected character", line, column, token=text[pos]
                )
            kind = match.lastgroup or ""
            if kind not in _SKIPPED:
                yield Token(kind, match.group(), line, column)
            pos = match.end()
            if kind == "NEWLINE":
                line, line_start = line + 1, pos
        yield Token("EOF", "", line, pos - line_start + 1)

    def lex(self) -> Token:
        """Advance to the next token and return it."""
        if self.token is not None and self.token.kind == "EOF":
            return self.token
        self.token = next(self._tokens)
        return self.token

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        at = token or self.token
        if at is None:
            return ParseError(message, 1, 1)
        text = at.text if at.kind not in ("NEWLINE", "EOF") else at.kind.lower()
        return ParseError(message, at.line, at.column, token=text)
