"""Python lexer with INDENT/DEDENT tracking."""

from __future__ import annotations

from ._scan import Cursor, is_ident_start, longest_first, scan_identifier, scan_number, scan_operator
from .tokens import Category, Token

KEYWORDS = frozenset("""
False None True and as assert async await break class continue def del elif else except
finally for from global if import in is lambda nonlocal not or pass raise return try while
with yield
""".split())

OPERATORS = frozenset(
    "+ - * / // % ** @ << >> & | ^ ~ < > <= >= == != = := -> "
    "+= -= *= /= //= %= **= @= <<= >>= &= |= ^=".split()
)
PUNCTUATION = frozenset("( ) [ ] { } , : ; . ...".split())
SYMBOLS = longest_first(OPERATORS, PUNCTUATION)
OPEN, CLOSE = "([{", ")]}"

_STRING_PREFIXES = {"r", "u", "b", "f", "br", "rb", "fr", "rf"}

TAB_SIZE = 8


def _string_start(cur: Cursor) -> int | None:
    """Length of a string prefix if a string literal starts here, else None."""
    for n in (2, 1, 0):
        prefix = cur.src[cur.pos:cur.pos + n]
        if n and prefix.lower() not in _STRING_PREFIXES:
            continue
        if cur.peek(n) in ("'", '"'):
            return n
    return None


def _scan_string(cur: Cursor, prefix_len: int) -> str:
    start, line, col = cur.pos, cur.line, cur.col
    cur.advance(prefix_len)
    q = cur.peek()
    triple = cur.startswith(q * 3)
    delim = q * 3 if triple else q
    cur.advance(len(delim))
    while True:
        if cur.at_end():
            raise cur.error("unterminated string literal", line, col)
        ch = cur.peek()
        if ch == "\\":
            cur.advance(2)
            continue
        if ch == "\n" and not triple:
            raise cur.error("unterminated string literal", line, col)
        if cur.startswith(delim):
            cur.advance(len(delim))
            return cur.src[start:cur.pos]
        cur.advance()


def _measure_indent(cur: Cursor) -> int:
    width = 0
    while cur.peek() in (" ", "\t", "\f"):
        ch = cur.advance()
        if ch == " ":
            width += 1
        elif ch == "\t":
            width = (width // TAB_SIZE + 1) * TAB_SIZE
        else:
            width = 0
    return width


def tokenize_python(src: str) -> list[Token]:
    cur = Cursor(src)
    out: list[Token] = []
    indents = [0]
    depth = 0  # bracket nesting; newlines inside brackets are implicit joins
    at_line_start = True
    line_has_code = False

    while True:
        if at_line_start and depth == 0:
            width = _measure_indent(cur)
            ch = cur.peek()
            # blank and comment-only lines don't affect indentation
            if ch in ("\n", "\r", "#", "") or cur.startswith("\\\n"):
                pass
            elif width > indents[-1]:
                indents.append(width)
                out.append(Token(Category.INDENT, ""))
            elif width < indents[-1]:
                while width < indents[-1]:
                    indents.pop()
                    out.append(Token(Category.DEDENT, ""))
                if width != indents[-1]:
                    raise cur.error("unindent does not match any outer indentation level")
            at_line_start = False

        if cur.at_end():
            break
        ch = cur.peek()

        if ch in " \t\f":
            cur.advance()
        elif ch == "\r":
            cur.advance()
        elif ch == "\n":
            cur.advance()
            if depth == 0:
                if line_has_code:
                    out.append(Token(Category.NEWLINE, "\n"))
                line_has_code = False
                at_line_start = True
        elif cur.startswith("\\\n") or cur.startswith("\\\r\n"):
            cur.advance(2 if cur.peek(1) == "\n" else 3)
        elif ch == "#":
            start = cur.pos
            while not cur.at_end() and cur.peek() != "\n":
                cur.advance()
            out.append(Token(Category.COMMENT, cur.src[start:cur.pos].rstrip("\r")))
        elif (n := _string_start(cur)) is not None:
            out.append(Token(Category.STRING_LIT, _scan_string(cur, n)))
            line_has_code = True
        elif is_ident_start(ch):
            word = scan_identifier(cur)
            out.append(Token(Category.KEYWORD if word in KEYWORDS else Category.IDENTIFIER, word))
            line_has_code = True
        elif ch.isdigit() or (ch == "." and cur.peek(1).isdigit()):
            out.append(Token(Category.NUMBER, scan_number(cur, "jJ")))
            line_has_code = True
        elif (sym := scan_operator(cur, SYMBOLS)) is not None:
            if sym in PUNCTUATION:
                out.append(Token(Category.PUNCTUATION, sym))
                if sym in OPEN:
                    depth += 1
                elif sym in CLOSE:
                    depth = max(0, depth - 1)
            else:
                out.append(Token(Category.OPERATOR, sym))
            line_has_code = True
        else:
            raise cur.error(f"illegal character {ch!r}")

    for _ in indents[1:]:
        out.append(Token(Category.DEDENT, ""))
    return out
