from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


class Category(str, enum.Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    NUMBER = "number"
    STRING_LIT = "string_lit"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"
    INDENT = "indent"
    DEDENT = "dedent"
    NEWLINE = "newline"
    COMMENT = "comment"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


LAYOUT = frozenset({Category.INDENT, Category.DEDENT, Category.NEWLINE})


class Token(NamedTuple):
    """A lexical token. The (category, text) pair is its histogram identity."""

    category: Category
    text: str

    def identity(self) -> tuple[str, str]:
        return (self.category.value, self.text)


@dataclass(frozen=True)
class TokenSeq:
    file_id: str
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def code_tokens(self, include_comments: bool = False) -> list[Token]:
        if include_comments:
            return list(self.tokens)
        return [t for t in self.tokens if t.category is not Category.COMMENT]

    def to_dict(self) -> dict:
        return {"file_id": self.file_id, "tokens": [[t.category.value, t.text] for t in self.tokens]}

    @classmethod
    def from_dict(cls, d: dict) -> "TokenSeq":
        return cls(str(d["file_id"]), tuple(Token(Category(c), t) for c, t in d["tokens"]))
