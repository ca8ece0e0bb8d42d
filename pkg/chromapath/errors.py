# chromapath/errors.py — exception hierarchy shared by the library and the CLI

from __future__ import annotations
from typing import Optional


class ChromapathError(Exception):
    """Base class for every error raised by chromapath."""


class InputError(ChromapathError):
    """A value handed to an operation is malformed (bad vertex, bad set, bad coloring)."""


class ParseError(InputError):
    """
    Arc-list text could not be parsed.
    kind is one of: malformed, out_of_range, duplicate, digon, loop, count.
    """
    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.kind = kind
        self.line = line


class PreconditionError(ChromapathError):
    """An operation was called outside the range where its guarantee holds."""


class ScopeError(PreconditionError):
    """Enumeration or scan scope is beyond the supported desk scale."""
    def __init__(self, message: str, cap: Optional[int] = None):
        super().__init__(message)
        self.cap = cap


class InternalInconsistency(ChromapathError):
    """A certificate the mathematics guarantees could not be produced."""
