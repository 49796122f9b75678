"""Bag-of-tokens multinomial logistic regression, with optional Outlier Exposure.

Training is full-batch gradient descent from a zero initialization, so a run
is fully determined by its inputs. The OE objective adds, for each auxiliary
outlier, the cross-entropy between the uniform distribution and the model's
softmax, weighted by ``lambda_oe``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DegenerateLabels,
    DimensionMismatch,
    EmptyOutliers,
    EmptyTraining,
    NonFinite,
    SchemaError,
)
from .io import iter_jsonl, read_json
from .lexer import TokenSeq, token_keys

log = logging.getLogger(__name__)

TokenKey = tuple[str, str]


@dataclass(frozen=True)
class Vocabulary:
    index: dict[TokenKey, int]

    @property
    def size(self) -> int:
        return len(self.index)

    @property
    def oov(self) -> int:
        return len(self.index)

    def lookup(self, key: TokenKey) -> int:
        return self.index.get(key, self.oov)

    def tokens(self) -> list[TokenKey]:
        return sorted(self.index, key=self.index.__getitem__)


def build_vocab(train_seqs: Iterable[TokenSeq], include_comments: bool = False) -> Vocabulary:
    keys: set[TokenKey] = set()
    n = 0
    for seq in train_seqs:
        keys.update(token_keys(seq, include_comments))
        n += 1
    if n == 0:
        raise EmptyTraining("cannot build a vocabulary from zero training files")
    return Vocabulary({k: i for i, k in enumerate(sorted(keys))})


def vectorize(seq: TokenSeq, v: Vocabulary, normalize: bool = False, include_comments: bool = False) -> np.ndarray:
    x = np.zeros(v.size + 1)
    for key in token_keys(seq, include_comments):
        x[v.lookup(key)] += 1.0
    if normalize:
        norm = np.linalg.norm(x)
        if norm > 0:
            x /= norm
    return x


def vectorize_many(seqs: Sequence[TokenSeq], v: Vocabulary, normalize: bool = False) -> np.ndarray:
    if not seqs:
        return np.zeros((0, v.size + 1))
    return np.stack([vectorize(s, v, normalize) for s in seqs])


@dataclass
class SoftmaxModel:
    classes: list[str]
    W: np.ndarray  # C x (V+1)
    b: np.ndarray  # C
    meta: dict = field(default_factory=dict)

    @property
    def n_features(self) -> int:
        return self.W.shape[1]

    def to_dict(self) -> dict:
        return {
            "classes": list(self.classes),
            "vocab_size": int(self.W.shape[1] - 1),
            "W": self.W.tolist(),
            "b": self.b.tolist(),
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SoftmaxModel":
        try:
            W = np.asarray(d["W"], dtype=float).reshape(len(d["classes"]), int(d["vocab_size"]) + 1)
            b = np.asarray(d["b"], dtype=float)
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"malformed model file: {exc}") from exc
        if b.shape != (len(d["classes"]),):
            raise SchemaError("bias length does not match class count")
        return cls(list(d["classes"]), W, b, dict(d.get("meta", {})))


# ----------------------------------------------------------------- objective

def _log_softmax(Z: np.ndarray) -> np.ndarray:
    Z = Z - Z.max(axis=1, keepdims=True)
    return Z - np.log(np.exp(Z).sum(axis=1, keepdims=True))


def objective(W: np.ndarray, b: np.ndarray, X: np.ndarray, y: np.ndarray, l2: float = 0.0,
              X_out: np.ndarray | None = None, lambda_oe: float = 0.0) -> tuple[float, np.ndarray, np.ndarray]:
    """Loss and gradients (dW, db).

    loss = mean_i CE(y_i, softmax(W x_i + b)) + l2/2 ||W||^2
           + lambda_oe * mean_j CE(uniform, softmax(W u_j + b))
    """
    n, C = X.shape[0], W.shape[0]
    logp = _log_softmax(X @ W.T + b)
    loss = -logp[np.arange(n), y].mean() + 0.5 * l2 * float(np.sum(W * W))
    G = np.exp(logp)
    G[np.arange(n), y] -= 1.0
    G /= n
    dW = G.T @ X + l2 * W
    db = G.sum(axis=0)
    if X_out is not None and lambda_oe > 0 and len(X_out):
        m = X_out.shape[0]
        logq = _log_softmax(X_out @ W.T + b)
        loss += lambda_oe * float(-logq.mean(axis=1).mean())
        H = (np.exp(logq) - 1.0 / C) * (lambda_oe / m)
        dW += H.T @ X_out
        db += H.sum(axis=0)
    return float(loss), dW, db


def _encode_labels(labels: Sequence[str], classes: Sequence[str] | None) -> tuple[list[str], np.ndarray]:
    if classes is None:
        classes = sorted(set(labels))
    classes = list(classes)
    if len(classes) < 2:
        raise DegenerateLabels(f"need at least 2 classes, got {len(classes)}")
    pos = {c: i for i, c in enumerate(classes)}
    try:
        y = np.array([pos[l] for l in labels], dtype=int)
    except KeyError as exc:
        raise DegenerateLabels(f"label {exc.args[0]!r} not among classes") from None
    present = set(y.tolist())
    absent = [c for i, c in enumerate(classes) if i not in present]
    if absent:
        raise DegenerateLabels(f"classes without training examples: {absent}")
    return classes, y


DEFAULTS = {"epochs": 1000, "lr": 1.0, "l2": 1e-4, "seed": 0, "lambda_oe": 0.5}


def _descend(X, y, C, epochs, lr, l2, X_out=None, lambda_oe=0.0, check_monotone=False):
    W = np.zeros((C, X.shape[1]))
    b = np.zeros(C)
    history = []
    prev = math.inf
    for epoch in range(epochs):
        loss, dW, db = objective(W, b, X, y, l2, X_out, lambda_oe)
        if not math.isfinite(loss):
            raise NonFinite(f"loss diverged at epoch {epoch} (lr={lr})")
        if check_monotone and loss > prev + 1e-12:
            raise NonFinite(f"loss increased at epoch {epoch}: {prev} -> {loss} (lr={lr} too large)")
        prev = loss
        history.append(loss)
        W -= lr * dW
        b -= lr * db
    if not (np.all(np.isfinite(W)) and np.all(np.isfinite(b))):
        raise NonFinite("parameters are not finite")
    return W, b, history


def train_softmax(X: np.ndarray, labels: Sequence[str], *, classes: Sequence[str] | None = None,
                  epochs: int = DEFAULTS["epochs"], lr: float = DEFAULTS["lr"], l2: float = DEFAULTS["l2"],
                  seed: int = DEFAULTS["seed"], check_monotone: bool = False) -> SoftmaxModel:
    X = np.asarray(X, dtype=float)
    if X.shape[0] == 0:
        raise EmptyTraining("no training vectors")
    classes, y = _encode_labels(labels, classes)
    W, b, hist = _descend(X, y, len(classes), epochs, lr, l2, check_monotone=check_monotone)
    meta = {"seed": seed, "epochs": epochs, "lr": lr, "l2": l2, "lambda_oe": 0.0,
            "final_loss": hist[-1] if hist else None}
    return SoftmaxModel(classes, W, b, meta)


def train_softmax_oe(X: np.ndarray, labels: Sequence[str], outliers: np.ndarray, *,
                     classes: Sequence[str] | None = None, lambda_oe: float = DEFAULTS["lambda_oe"],
                     epochs: int = DEFAULTS["epochs"], lr: float = DEFAULTS["lr"], l2: float = DEFAULTS["l2"],
                     seed: int = DEFAULTS["seed"], check_monotone: bool = False) -> SoftmaxModel:
    X = np.asarray(X, dtype=float)
    outliers = np.asarray(outliers, dtype=float)
    if X.shape[0] == 0:
        raise EmptyTraining("no training vectors")
    if outliers.ndim != 2 or outliers.shape[0] == 0:
        raise EmptyOutliers("Outlier Exposure needs at least one outlier vector")
    if outliers.shape[1] != X.shape[1]:
        raise DimensionMismatch(f"outliers have dim {outliers.shape[1]}, training data {X.shape[1]}")
    classes, y = _encode_labels(labels, classes)
    W, b, hist = _descend(X, y, len(classes), epochs, lr, l2, outliers, lambda_oe, check_monotone)
    meta = {"seed": seed, "epochs": epochs, "lr": lr, "l2": l2, "lambda_oe": lambda_oe,
            "final_loss": hist[-1] if hist else None}
    return SoftmaxModel(classes, W, b, meta)


def predict_logits(model: SoftmaxModel, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != model.n_features:
        raise DimensionMismatch(f"input has dim {x.shape[-1]}, model expects {model.n_features}")
    return x @ model.W.T + model.b


def extract_features(model: SoftmaxModel, x: np.ndarray) -> np.ndarray:
    """Feature representation for the Mahalanobis detector.

    The model has no hidden layer, so this is the logit vector. Deep models
    supply their own penultimate activations through a features file.
    """
    return predict_logits(model, x)


# ----------------------------------------------------------------- record files

def logits_rows(file_ids: Sequence[str], labels: Sequence[str], logits: np.ndarray) -> list[dict]:
    return [{"file_id": f, "label": l, "logits": [float(v) for v in row]}
            for f, l, row in zip(file_ids, labels, logits)]


def features_rows(file_ids: Sequence[str], feats: np.ndarray) -> list[dict]:
    return [{"file_id": f, "features": [float(v) for v in row]} for f, row in zip(file_ids, feats)]


def load_logits(path, n_classes: int | None = None) -> dict[str, tuple[str, np.ndarray]]:
    out = {}
    for row in iter_jsonl(path):
        try:
            fid, label, vec = str(row["file_id"]), str(row["label"]), np.asarray(row["logits"], dtype=float)
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"{path}: bad logits record {row!r}: {exc}") from exc
        if vec.ndim != 1 or (n_classes is not None and len(vec) != n_classes):
            raise SchemaError(f"{path}: logits for {fid!r} have length {vec.size}, expected {n_classes}")
        out[fid] = (label, vec)
    return out


def load_features(path, dim: int | None = None) -> dict[str, np.ndarray]:
    out = {}
    for row in iter_jsonl(path):
        try:
            fid, vec = str(row["file_id"]), np.asarray(row["features"], dtype=float)
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"{path}: bad features record: {exc}") from exc
        if vec.ndim != 1 or (dim is not None and len(vec) != dim):
            raise SchemaError(f"{path}: features for {fid!r} have length {vec.size}, declared dim {dim}")
        if dim is None:
            dim = len(vec)
        out[fid] = vec
    return out


def load_model(path) -> SoftmaxModel:
    return SoftmaxModel.from_dict(read_json(path))
