"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import numpy as np

from codeshift.cst import CstNode, CstTree


def auc_pairs(id_scores, ood_scores) -> float:
    """All-pairs P(id > ood) + 0.5 P(id == ood)."""
    total = 0.0
    for a, b in itertools.product(id_scores, ood_scores):
        total += 1.0 if a > b else 0.5 if a == b else 0.0
    return total / (len(id_scores) * len(ood_scores))


def clusters_sorted(tree) -> list[tuple]:
    """Every internal node with leaves below it, as a sorted leaf-label tuple."""
    out = []

    def walk(node) -> list[str]:
        if isinstance(node, str):
            return [node]
        below = []
        for c in node.children:
            below += walk(c)
        if below:
            out.append(tuple(sorted(below)))
        return below

    walk(tree.root if isinstance(tree, CstTree) else tree)
    return sorted(out)


def rf_oracle(t1, t2) -> tuple[int, float]:
    a, b = clusters_sorted(t1), clusters_sorted(t2)
    rest = list(b)
    unmatched = 0
    for c in a:
        if c in rest:
            rest.remove(c)
        else:
            unmatched += 1
    raw = unmatched + len(rest)
    total = len(a) + len(b)
    return raw, (raw / total if total else 0.0)


def random_tree(rng: random.Random, max_leaves: int = 8, alphabet: str = "abcd") -> CstTree:
    """Random rooted tree with 0..max_leaves leaves and occasional empty internal nodes."""
    n = rng.randint(0, max_leaves)
    items: list = [rng.choice(alphabet) for _ in range(n)]
    if rng.random() < 0.2:
        items.append(CstNode("empty", ()))
    while len(items) > 1 and rng.random() < 0.8:
        i = rng.randrange(len(items))
        j = rng.randint(i + 1, min(len(items), i + 3))
        items[i:j] = [CstNode(rng.choice(["stmt", "paren", "block"]), tuple(items[i:j]))]
    return CstTree(CstNode("root", tuple(items)))


def adjugate_inverse(A) -> np.ndarray:
    """Exact inverse of a small matrix through cofactors, in rationals."""
    M = [[Fraction(float(x)) for x in row] for row in np.asarray(A)]
    n = len(M)

    def det(m):
        if len(m) == 1:
            return m[0][0]
        return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))

    d = det(M)
    if n == 1:
        return np.array([[float(1 / d)]])
    adj = [[(-1) ** (i + j) * det([r[:i] + r[i + 1:] for k, r in enumerate(M) if k != j])
            for j in range(n)] for i in range(n)]
    return np.array([[float(adj[i][j] / d) for j in range(n)] for i in range(n)])


def central_diff(f, theta: np.ndarray, h: float = 1e-5) -> np.ndarray:
    g = np.zeros_like(theta)
    for idx in np.ndindex(theta.shape):
        old = theta[idx]
        theta[idx] = old + h
        up = f()
        theta[idx] = old - h
        down = f()
        theta[idx] = old
        g[idx] = (up - down) / (2 * h)
    return g
