"""
Exception classes for bfs-hvs.

Defines custom exceptions used throughout the engine.
"""

from typing import Any, Dict, Optional, Sequence

from typing_extensions import override


class BfsHvsError(Exception):
    """Base exception class for all bfs-hvs errors."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        """
        Initialize the exception.

        Args:
            message: Error message
            error_code: Optional error code
            details: Optional additional error details
        """
        super().__init__(message)
        self.message: str = message
        self.error_code: Optional[str] = error_code
        self.details: Optional[Dict[str, Any]] = details or {}

    @override
    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message


class StructureError(BfsHvsError):
    """Raised when a table is malformed or violates the group/field axioms."""

    def __init__(self, message: str, cell: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="STRUCTURE_ERROR", **kwargs)
        self.cell: Optional[str] = cell


class DomainError(BfsHvsError):
    """Raised when a grade or threshold lies outside its allowed range."""

    def __init__(self, message: str, value: Optional[Any] = None, **kwargs):
        super().__init__(message, error_code="DOMAIN_ERROR", **kwargs)
        self.value: Optional[Any] = value


class SpaceMismatchError(BfsHvsError):
    """Raised when two bfs sets live over different hypervector spaces."""

    def __init__(self, message: str, **kwargs):
        super().__init__(message, error_code="SPACE_MISMATCH", **kwargs)


class PreconditionError(BfsHvsError):
    """Raised when an operation is called outside its precondition."""

    def __init__(self, message: str, operation: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="PRECONDITION_ERROR", **kwargs)
        self.operation: Optional[str] = operation


class HypothesisError(BfsHvsError):
    """Raised when the hypothesis of a characterization does not hold."""

    def __init__(self, message: str, hypothesis: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="HYPOTHESIS_ERROR", **kwargs)
        self.hypothesis: Optional[str] = hypothesis


class CapacityError(BfsHvsError):
    """Raised when an exhaustive scan would exceed its configured limit."""

    def __init__(self, message: str, limit: Optional[int] = None, **kwargs):
        super().__init__(message, error_code="CAPACITY_ERROR", **kwargs)
        self.limit: Optional[int] = limit


class ConstructionError(BfsHvsError):
    """Raised when the generated bfs-hvs construction gets stuck."""

    def __init__(self, message: str, step: Optional[int] = None, **kwargs):
        super().__init__(message, error_code="CONSTRUCTION_ERROR", **kwargs)
        self.step: Optional[int] = step


class OracleError(BfsHvsError):
    """Raised when a brute-force oracle cannot produce a unique answer."""

    def __init__(
        self, message: str, antichain: Optional[Sequence[Any]] = None, **kwargs
    ):
        super().__init__(message, error_code="ORACLE_ERROR", **kwargs)
        self.antichain: Sequence[Any] = list(antichain or [])


class ParseError(BfsHvsError):
    """Raised when a structure document cannot be parsed."""

    def __init__(
        self,
        message: str,
        line: int = 0,
        column: int = 0,
        token: Optional[str] = None,
        **kwargs,
    ):
        super().__init__(message, error_code="PARSE_ERROR", **kwargs)
        self.line: int = line
        self.column: int = column
        self.token: Optional[str] = token

    @override
    def __str__(self) -> str:
        where = f"line {self.line}, column {self.column}"
        if self.token is not None:
            return f"[{self.error_code}] {where}: {self.message} (at '{self.token}')"
        return f"[{self.error_code}] {where}: {self.message}"


class NameNotFoundError(BfsHvsError):
    """Raised when a document has no definition with the requested name."""

    def __init__(self, message: str, name: Optional[str] = None, **kwargs):
        super().__init__(message, error_code="NAME_NOT_FOUND", **kwargs)
        self.name: Optional[str] = name
