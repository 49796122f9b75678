"""Concrete syntax trees and the rooted, multiset Robinson-Foulds distance.

Trees are built either by the skeleton parser below or loaded from
s-expression files produced by an external full-grammar parser. The distance
looks only at leaf labels: each node holding at least one leaf contributes the
multiset of leaf labels beneath it (its *cluster*), and two trees are compared
by the multiset symmetric difference of their clusters.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .corpus import Language
from .errors import EmptyTree, MatrixMismatch, ParseError, SExprSyntaxError, TooFewFiles
from .lexer import Category, Token, TokenSeq


@dataclass(frozen=True)
class CstNode:
    label: str
    children: tuple["Child", ...] = ()


Child = Union[CstNode, str]  # a str child is a leaf holding token text


@dataclass(frozen=True)
class CstTree:
    root: CstNode
    file_id: str = ""

    def leaves(self) -> list[str]:
        return list(iter_leaves(self.root))

    def same_shape(self, other: "CstTree") -> bool:
        return self.root == other.root


def iter_leaves(node: Child) -> Iterator[str]:
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, str):
            yield n
        else:
            stack.extend(reversed(n.children))


# ---------------------------------------------------------------- skeleton parser

class _Builder:
    __slots__ = ("label", "children")

    def __init__(self, label: str, first: str | None = None):
        self.label = label
        self.children: list = [] if first is None else [first]

    def freeze(self) -> CstNode:
        return CstNode(self.label, tuple(c if isinstance(c, str) else c.freeze() for c in self.children))


_BRACKETS = {"(": ("paren", ")"), "[": ("bracket", "]"), "{": ("brace", "}")}
_CLOSERS = {v[1] for v in _BRACKETS.values()}


def parse_structural(seq: TokenSeq, language: Language | str, include_comments: bool = False) -> CstTree:
    """Build a skeleton CST: root, statement groups, and nested regions.

    Layout tokens (NEWLINE/INDENT/DEDENT) become structure rather than
    leaves; comments are dropped unless ``include_comments``.
    """
    language = Language(language)
    if language is Language.PYTHON:
        root = _parse_python(seq.tokens, include_comments)
    elif language is Language.JAVA:
        root = _parse_java(seq.tokens, include_comments)
    else:
        raise ParseError(0, f"no structural grammar for language {language.value!r}")
    return CstTree(root, seq.file_id)


def _parse_python(tokens: Sequence[Token], include_comments: bool) -> CstNode:
    root = _Builder("root")
    containers = [root]  # root plus open indentation blocks
    stmt: _Builder | None = None

    def close_stmt():
        nonlocal stmt
        if stmt is not None and stmt.children:
            containers[-1].children.append(stmt)
        stmt = None

    for pos, tok in enumerate(tokens):
        cat = tok.category
        if cat is Category.NEWLINE:
            close_stmt()
        elif cat is Category.INDENT:
            close_stmt()
            owner = containers[-1].children[-1] if containers[-1].children else None
            if not isinstance(owner, _Builder) or owner.label != "stmt":
                raise ParseError(pos, "unexpected indent")
            block = _Builder("block")
            owner.children.append(block)
            containers.append(block)
        elif cat is Category.DEDENT:
            close_stmt()
            if len(containers) == 1:
                raise ParseError(pos, "dedent without matching indent")
            containers.pop()
        elif cat is Category.COMMENT and not include_comments:
            continue
        else:
            if stmt is None:
                stmt = _Builder("stmt")
            stmt.children.append(tok.text)
    close_stmt()
    if len(containers) != 1:
        raise ParseError(len(tokens), "indented block not closed")
    return root.freeze()


class _Frame:
    __slots__ = ("node", "has_stmts", "stmt", "closer")

    def __init__(self, node: _Builder, has_stmts: bool, closer: str | None):
        self.node = node
        self.has_stmts = has_stmts
        self.stmt: _Builder | None = None
        self.closer = closer

    def emit(self, child) -> None:
        if self.has_stmts:
            if self.stmt is None:
                self.stmt = _Builder("stmt")
            self.stmt.children.append(child)
        else:
            self.node.children.append(child)

    def end_stmt(self) -> None:
        if self.stmt is not None and self.stmt.children:
            self.node.children.append(self.stmt)
        self.stmt = None


def _parse_java(tokens: Sequence[Token], include_comments: bool) -> CstNode:
    # braces hold statement sequences; parens and brackets hold flat content
    stack = [_Frame(_Builder("root"), True, None)]
    for pos, tok in enumerate(tokens):
        if tok.category is Category.COMMENT and not include_comments:
            continue
        top = stack[-1]
        text = tok.text
        if tok.category is Category.PUNCTUATION and text in _BRACKETS:
            label, closer = _BRACKETS[text]
            node = _Builder(label, text)
            top.emit(node)
            stack.append(_Frame(node, text == "{", closer))
        elif tok.category is Category.PUNCTUATION and text in _CLOSERS:
            if top.closer != text:
                want = f"expected {top.closer!r}" if top.closer else "nothing open"
                raise ParseError(pos, f"unbalanced {text!r} ({want})")
            top.end_stmt()
            top.node.children.append(text)
            stack.pop()
            if text == "}" and stack[-1].has_stmts:
                stack[-1].end_stmt()
        else:
            top.emit(text)
            if text == ";" and top.has_stmts:
                top.end_stmt()
    if len(stack) != 1:
        raise ParseError(len(tokens), f"unclosed {stack[-1].node.label}")
    stack[0].end_stmt()
    return stack[0].node.freeze()


# ---------------------------------------------------------------- s-expressions

_ATOM = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_sexpr(tree: CstTree | CstNode) -> str:
    node = tree.root if isinstance(tree, CstTree) else tree
    parts: list[str] = []
    stack: list[Child | None] = [node]  # None closes the innermost open node
    while stack:
        n = stack.pop()
        if n is None:
            parts.append(")")
        elif isinstance(n, str):
            parts.append(" " + _quote(n))
        else:
            if not _ATOM.fullmatch(n.label):
                raise ValueError(f"label {n.label!r} is not a valid atom")
            parts.append(("(" if not parts else " (") + n.label)
            stack.append(None)
            stack.extend(reversed(n.children))
    return "".join(parts)


def parse_sexpr(text: str, file_id: str = "") -> CstTree:
    i, n = 0, len(text)

    def skip_ws():
        nonlocal i
        while i < n and text[i] in " \t\r\n":
            i += 1

    def fail(msg):
        return SExprSyntaxError(f"{msg} at offset {i}")

    skip_ws()
    if i == n:
        raise EmptyTree("no tree in input")
    if text[i] != "(":
        raise fail("expected '('")

    # iterative to survive deep trees
    stack: list[tuple[str, list]] = []
    result: CstNode | None = None
    while True:
        skip_ws()
        if i == n:
            raise fail("unexpected end of input")
        ch = text[i]
        if ch == "(":
            i += 1
            m = _ATOM.match(text, i)
            if not m:
                raise fail("expected a node label")
            i = m.end()
            if i < n and text[i] not in " \t\r\n()\"":
                raise fail("invalid character in label")
            stack.append((m.group(), []))
        elif ch == ")":
            if not stack:
                raise fail("unbalanced ')'")
            i += 1
            label, kids = stack.pop()
            node = CstNode(label, tuple(kids))
            if stack:
                stack[-1][1].append(node)
            else:
                result = node
                break
        elif ch == '"':
            i += 1
            buf = []
            while True:
                if i >= n:
                    raise fail("unterminated string")
                c = text[i]
                if c == "\\":
                    if i + 1 >= n or text[i + 1] not in '"\\':
                        raise fail("invalid escape")
                    buf.append(text[i + 1])
                    i += 2
                elif c == '"':
                    i += 1
                    break
                else:
                    buf.append(c)
                    i += 1
            if not stack:
                raise fail("leaf outside a node")
            stack[-1][1].append("".join(buf))
        else:
            raise fail(f"unexpected character {ch!r}")
    skip_ws()
    if i != n:
        raise fail("trailing content after tree")
    return CstTree(result, file_id)


def load_external_tree(path, file_id: str | None = None) -> CstTree:
    path = Path(path)
    return parse_sexpr(path.read_text(encoding="utf-8"), file_id if file_id is not None else path.stem)


# ---------------------------------------------------------------- distance

Cluster = tuple[str, ...]


def cluster_multisets(t: CstTree | CstNode) -> Counter:
    """Counter mapping each cluster (sorted leaf labels) to its multiplicity.

    Tuples are hashed for bucketing and compared in full on collision, so
    distinct clusters never merge.
    """
    root = t.root if isinstance(t, CstTree) else t
    clusters: Counter = Counter()

    # post-order: each node's leaf list is the concatenation of its children's
    stack: list[tuple[CstNode, bool]] = [(root, False)]
    leaves_of: dict[int, list[str]] = {}
    while stack:
        node, done = stack.pop()
        if not done:
            stack.append((node, True))
            for c in node.children:
                if not isinstance(c, str):
                    stack.append((c, False))
            continue
        acc: list[str] = []
        for c in node.children:
            if isinstance(c, str):
                acc.append(c)
            else:
                acc.extend(leaves_of.pop(id(c)))
        if acc:
            clusters[tuple(sorted(acc))] += 1
        leaves_of[id(node)] = acc
    return clusters


def rf_from_clusters(c1: Counter, c2: Counter) -> tuple[int, float]:
    raw = sum(((c1 - c2) + (c2 - c1)).values())
    total = sum(c1.values()) + sum(c2.values())
    return raw, (raw / total if total else 0.0)


def rf_distance(t1: CstTree, t2: CstTree) -> tuple[int, float]:
    """(raw, normalized) distance; normalized = raw / (|C1| + |C2|), 0 if both empty."""
    return rf_from_clusters(cluster_multisets(t1), cluster_multisets(t2))


@dataclass
class DistanceMatrix:
    task_id: str
    file_ids: list[str]
    d: list[list[float]]
    avg: list[float]

    def avg_by_file(self) -> dict[str, float]:
        return dict(zip(self.file_ids, self.avg))

    def to_dict(self) -> dict:
        sig = lambda x: float(f"{x:.9g}")
        return {
            "task_id": self.task_id,
            "file_ids": list(self.file_ids),
            "d": [[sig(x) for x in row] for row in self.d],
            "avg": [sig(x) for x in self.avg],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DistanceMatrix":
        m = cls(str(d["task_id"]), list(d["file_ids"]), [list(map(float, r)) for r in d["d"]],
                list(map(float, d["avg"])))
        n = len(m.file_ids)
        if len(m.d) != n or any(len(r) != n for r in m.d) or len(m.avg) != n:
            raise MatrixMismatch(f"matrix for {m.task_id!r} is not {n}x{n}")
        return m


_shared_clusters: list[Counter] = []


def _share(clusters: list[Counter]) -> None:
    global _shared_clusters
    _shared_clusters = clusters


def _row(i: int) -> list[float]:
    clusters = _shared_clusters
    ci = clusters[i]
    return [rf_from_clusters(ci, clusters[j])[1] for j in range(i + 1, len(clusters))]


def distance_matrix(trees: Iterable[CstTree], task_id: str, jobs: int = 1) -> DistanceMatrix:
    """Pairwise normalized distances with rows/columns in file_id order."""
    trees = sorted(trees, key=lambda t: t.file_id)
    n = len(trees)
    if n < 2:
        raise TooFewFiles(f"task {task_id!r}: distance matrix needs at least 2 trees, got {n}")
    clusters = [cluster_multisets(t) for t in trees]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_share, initargs=(clusters,)) as ex:
            upper = list(ex.map(_row, range(n), chunksize=max(1, n // (jobs * 4))))
    else:
        _share(clusters)
        upper = [_row(i) for i in range(n)]
    d = [[0.0] * n for _ in range(n)]
    for i, row in enumerate(upper):
        for k, v in enumerate(row):
            j = i + 1 + k
            d[i][j] = d[j][i] = v
    avg = [math.fsum(d[i][j] for j in range(n) if j != i) / (n - 1) for i in range(n)]
    return DistanceMatrix(task_id, [t.file_id for t in trees], d, avg)
