"""Java lexer."""

from __future__ import annotations

from ._scan import Cursor, is_ident_start, longest_first, scan_identifier, scan_number, scan_operator
from .tokens import Category, Token

# reserved words plus the literals true/false/null and the contextual var/record/yield
KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue default do double
else enum extends final finally float for goto if implements import instanceof int interface
long native new package private protected public return short static strictfp super switch
synchronized this throw throws transient try void volatile while true false null var record
yield
""".split())

OPERATORS = frozenset(
    "= > < ! ~ ? : -> == <= >= != && || ++ -- + - * / & | ^ % << >> >>> "
    "+= -= *= /= &= |= ^= %= <<= >>= >>>=".split()
)
PUNCTUATION = frozenset("( ) [ ] { } ; , . ... @ ::".split())
SYMBOLS = longest_first(OPERATORS, PUNCTUATION)


def _scan_quoted(cur: Cursor, q: str) -> str:
    start, line, col = cur.pos, cur.line, cur.col
    cur.advance()
    while True:
        ch = cur.peek()
        if ch == "" or ch == "\n":
            what = "character" if q == "'" else "string"
            raise cur.error(f"unterminated {what} literal", line, col)
        if ch == "\\":
            cur.advance(2)
            continue
        cur.advance()
        if ch == q:
            return cur.src[start:cur.pos]


def tokenize_java(src: str) -> list[Token]:
    cur = Cursor(src)
    out: list[Token] = []
    while not cur.at_end():
        ch = cur.peek()
        if ch in " \t\r\n\f":
            cur.advance()
        elif cur.startswith("//"):
            start = cur.pos
            while not cur.at_end() and cur.peek() != "\n":
                cur.advance()
            out.append(Token(Category.COMMENT, cur.src[start:cur.pos].rstrip("\r")))
        elif cur.startswith("/*"):
            start, line, col = cur.pos, cur.line, cur.col
            end = cur.src.find("*/", cur.pos + 2)
            if end < 0:
                raise cur.error("unterminated block comment", line, col)
            cur.advance(end + 2 - cur.pos)
            out.append(Token(Category.COMMENT, cur.src[start:cur.pos]))
        elif ch in ('"', "'"):
            out.append(Token(Category.STRING_LIT, _scan_quoted(cur, ch)))
        elif is_ident_start(ch) or ch == "$":
            word = scan_identifier(cur, extra="$")
            out.append(Token(Category.KEYWORD if word in KEYWORDS else Category.IDENTIFIER, word))
        elif ch.isdigit() or (ch == "." and cur.peek(1).isdigit()):
            out.append(Token(Category.NUMBER, scan_number(cur, "lLfFdD")))
        elif (sym := scan_operator(cur, SYMBOLS)) is not None:
            cat = Category.PUNCTUATION if sym in PUNCTUATION else Category.OPERATOR
            out.append(Token(cat, sym))
        else:
            raise cur.error(f"illegal character {ch!r}")
    return out
