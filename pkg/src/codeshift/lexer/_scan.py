"""Scanning primitives shared by the language lexers."""

from __future__ import annotations

from ..errors import LexError


class Cursor:
    __slots__ = ("src", "pos", "line", "col")

    def __init__(self, src: str):
        self.src = src
        self.pos = 0
        self.line = 1
        self.col = 1

    def peek(self, k: int = 0) -> str:
        i = self.pos + k
        return self.src[i] if i < len(self.src) else ""

    def startswith(self, s: str) -> bool:
        return self.src.startswith(s, self.pos)

    def at_end(self) -> bool:
        return self.pos >= len(self.src)

    def advance(self, n: int = 1) -> str:
        chunk = self.src[self.pos:self.pos + n]
        for ch in chunk:
            if ch == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
        self.pos += len(chunk)
        return chunk

    def error(self, reason: str, line: int | None = None, col: int | None = None) -> LexError:
        return LexError(self.line if line is None else line, self.col if col is None else col, reason)


def is_ident_start(ch: str) -> bool:
    return ch == "_" or ch.isalpha()


def is_ident_char(ch: str) -> bool:
    return ch == "_" or ch.isalnum()


def scan_identifier(cur: Cursor, extra: str = "") -> str:
    start = cur.pos
    cur.advance()
    while not cur.at_end() and (is_ident_char(cur.peek()) or cur.peek() in extra):
        cur.advance()
    return cur.src[start:cur.pos]


def _digits(cur: Cursor, allowed: str) -> None:
    while not cur.at_end() and (cur.peek().lower() in allowed or cur.peek() == "_"):
        cur.advance()


def scan_number(cur: Cursor, suffixes: str) -> str:
    """Integer, float and radix-prefixed literals with ``_`` separators.

    ``suffixes`` lists single trailing letters accepted after the literal
    (``j`` for Python, ``lLfFdD`` for Java).
    """
    start = cur.pos
    dec = "0123456789"
    if cur.peek() == "0" and cur.peek(1).lower() in ("x", "o", "b"):
        radix = cur.peek(1).lower()
        cur.advance(2)
        _digits(cur, {"x": dec + "abcdef", "o": "01234567", "b": "01"}[radix])
    else:
        _digits(cur, dec)
        if cur.peek() == "." and cur.peek(1) != "." :
            cur.advance()
            _digits(cur, dec)
        if cur.peek().lower() == "e" and (cur.peek(1).isdigit() or (cur.peek(1) in "+-" and cur.peek(2).isdigit())):
            cur.advance(2)
            _digits(cur, dec)
    if cur.peek() and cur.peek() in suffixes:
        cur.advance()
    if not cur.at_end() and is_ident_char(cur.peek()):
        raise cur.error(f"invalid number literal {cur.src[start:cur.pos + 1]!r}")
    return cur.src[start:cur.pos]


def scan_operator(cur: Cursor, table: tuple[str, ...]) -> str | None:
    """Longest match from ``table`` (which must be sorted longest first)."""
    for op in table:
        if cur.startswith(op):
            cur.advance(len(op))
            return op
    return None


def longest_first(*groups) -> tuple[str, ...]:
    items = {s for g in groups for s in g}
    return tuple(sorted(items, key=lambda s: (-len(s), s)))
