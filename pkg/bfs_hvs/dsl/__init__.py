"""
Structure documents for bfs-hvs.

A small line-oriented language describing finite fields, hypervector spaces
and bipolar fuzzy soft sets by their tables.
"""

from .document import Document
from .parser import Parser, parse_document, read_document
from .serializer import serialize_document, write_document

__all__ = [
    "Document",
    "Parser",
    "parse_document",
    "read_document",
    "serialize_document",
    "write_document",
]
