"""Lexing source files into token sequences, and per-task token statistics."""

from __future__ import annotations

from ..corpus import CodeFile, Language
from ..errors import UnsupportedLanguage
from .histogram import TokenHistogram, build_histogram, token_keys, token_rarity
from .java import tokenize_java
from .python import tokenize_python
from .tokens import LAYOUT, Category, Token, TokenSeq

_LEXERS = {Language.PYTHON: tokenize_python, Language.JAVA: tokenize_java}


def tokenize_source(source: str, language: Language | str) -> list[Token]:
    try:
        lex = _LEXERS[Language(language)]
    except (KeyError, ValueError):
        raise UnsupportedLanguage(f"no lexer for language {language!r}") from None
    return lex(source)


def tokenize_file(f: CodeFile) -> TokenSeq:
    return TokenSeq(f.file_id, tuple(tokenize_source(f.source, f.language)))


__all__ = [
    "LAYOUT", "Category", "Token", "TokenSeq", "TokenHistogram",
    "build_histogram", "token_keys", "token_rarity",
    "tokenize_file", "tokenize_source", "tokenize_python", "tokenize_java",
]
