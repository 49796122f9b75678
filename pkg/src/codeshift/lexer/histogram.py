"""Per-task token statistics and the IDF rarity score built on them."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from ..errors import SchemaError, UnknownToken
from .tokens import Category, TokenSeq

TokenKey = tuple[str, str]  # (category, text)


def token_keys(seq: TokenSeq, include_comments: bool = False) -> list[TokenKey]:
    return [t.identity() for t in seq.code_tokens(include_comments)]


@dataclass
class TokenHistogram:
    task_id: str
    counts: Counter = field(default_factory=Counter)
    doc_freq: Counter = field(default_factory=Counter)
    n_files: int = 0

    @property
    def n_bins(self) -> int:
        return len(self.counts)

    def __add__(self, other: "TokenHistogram") -> "TokenHistogram":
        return TokenHistogram(self.task_id, self.counts + other.counts,
                              self.doc_freq + other.doc_freq, self.n_files + other.n_files)

    def without(self, key: TokenKey) -> "TokenHistogram":
        counts, df = Counter(self.counts), Counter(self.doc_freq)
        del counts[key], df[key]
        return TokenHistogram(self.task_id, counts, df, self.n_files)

    def to_dict(self) -> dict:
        bins = [{"category": c, "text": t, "count": self.counts[(c, t)], "doc_freq": self.doc_freq[(c, t)]}
                for c, t in sorted(self.counts)]
        return {"task_id": self.task_id, "n_files": self.n_files, "bins": bins}

    @classmethod
    def from_dict(cls, d: dict) -> "TokenHistogram":
        try:
            h = cls(str(d["task_id"]), n_files=int(d["n_files"]))
            for b in d["bins"]:
                key = (Category(b["category"]).value, b["text"])
                h.counts[key] = int(b["count"])
                h.doc_freq[key] = int(b["doc_freq"])
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"malformed histogram: {exc}") from exc
        return h


def build_histogram(seqs: Iterable[TokenSeq], task_id: str, include_comments: bool = False) -> TokenHistogram:
    h = TokenHistogram(task_id)
    for seq in seqs:
        keys = token_keys(seq, include_comments)
        h.counts.update(keys)
        h.doc_freq.update(set(keys))
        h.n_files += 1
    return h


def token_rarity(h: TokenHistogram, seq: TokenSeq, include_comments: bool = False) -> float:
    """Sum of ln(n_files / doc_freq) over the distinct tokens of ``seq``."""
    terms = []
    for key in sorted(set(token_keys(seq, include_comments))):
        df = h.doc_freq.get(key, 0)
        if df <= 0:
            raise UnknownToken(f"token {key!r} of {seq.file_id!r} not in histogram for {h.task_id!r}")
        terms.append(math.log(h.n_files / df))
    return math.fsum(terms)
