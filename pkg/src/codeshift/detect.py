"""OOD detectors. Every score is oriented so that higher means more in-distribution."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ClassTooSmall,
    DimensionMismatch,
    MissingRecord,
    NonFiniteLogits,
    NonPositiveTemperature,
    SingularCovariance,
)
from .splitgen import Partition, SplitManifest

DEFAULT_TEMPERATURE = 1000.0


class Detector(str, enum.Enum):
    MSP = "msp"
    ODIN = "odin"
    MAHALANOBIS = "mahalanobis"
    OE = "oe"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ScoreRecord:
    file_id: str
    detector: Detector
    score: float
    is_ood: bool

    def to_dict(self) -> dict:
        return {"file_id": self.file_id, "detector": self.detector.value, "score": self.score, "is_ood": self.is_ood}

    @classmethod
    def from_dict(cls, d: dict) -> "ScoreRecord":
        return cls(str(d["file_id"]), Detector(d["detector"]), float(d["score"]), bool(d["is_ood"]))


def odin_score(logits, temperature: float = DEFAULT_TEMPERATURE) -> float:
    """Max softmax probability of ``logits / temperature``."""
    if not temperature > 0:
        raise NonPositiveTemperature(f"temperature must be positive, got {temperature}")
    z = np.asarray(logits, dtype=float)
    if z.size == 0 or not np.all(np.isfinite(z)):
        raise NonFiniteLogits("logits must be a non-empty finite vector")
    z = z / temperature
    e = np.exp(z - z.max())
    return float(e.max() / e.sum())


def msp_score(logits) -> float:
    return odin_score(logits, 1.0)


def oe_score(logits) -> float:
    # the OE detector's strength lives in the training objective; scoring is MSP
    return msp_score(logits)


@dataclass
class MahalanobisStats:
    classes: list[str]
    means: np.ndarray       # C x D
    covariance: np.ndarray  # D x D, pooled within-class, unregularized
    epsilon: float
    chol: np.ndarray        # lower Cholesky factor of covariance + epsilon*I

    @property
    def dim(self) -> int:
        return self.means.shape[1]


def fit_mahalanobis(features: np.ndarray, labels: Sequence[str], epsilon: float | None = None) -> MahalanobisStats:
    """Class means and tied covariance (pooled, divided by N - C).

    Default regularization is 1e-6 * trace / D, floored at 1e-6 when the
    scatter is identically zero.
    """
    X = np.asarray(features, dtype=float)
    if X.ndim != 2:
        raise DimensionMismatch("features must be a 2-D array")
    classes = sorted(set(labels))
    labels = np.asarray(labels)
    N, D = X.shape
    means = np.zeros((len(classes), D))
    scatter = np.zeros((D, D))
    for k, c in enumerate(classes):
        Xc = X[labels == c]
        if len(Xc) < 2:
            raise ClassTooSmall(f"class {c!r} has {len(Xc)} feature vector(s); at least 2 required")
        means[k] = Xc.mean(axis=0)
        R = Xc - means[k]
        scatter += R.T @ R
    cov = scatter / (N - len(classes))
    cov = (cov + cov.T) / 2
    if epsilon is None:
        epsilon = 1e-6 * float(np.trace(cov)) / D
        if epsilon <= 0:
            epsilon = 1e-6
    try:
        chol = np.linalg.cholesky(cov + epsilon * np.eye(D))
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance(f"covariance not positive definite with epsilon={epsilon}") from exc
    if not np.all(np.isfinite(chol)):
        raise SingularCovariance("covariance factorization produced non-finite values")
    return MahalanobisStats(classes, means, cov, float(epsilon), chol)


def mahalanobis_score(stats: MahalanobisStats, x) -> float:
    """max over classes of -(x - mu_c)^T (Sigma + eps I)^-1 (x - mu_c)."""
    x = np.asarray(x, dtype=float)
    if x.shape != (stats.dim,):
        raise DimensionMismatch(f"feature dim {x.shape}, stats expect ({stats.dim},)")
    diffs = (x - stats.means).T  # D x C
    z = np.linalg.solve(stats.chol, diffs)
    d2 = (z * z).sum(axis=0)
    return 0.0 - float(d2.min())


def score_split(split: SplitManifest, logits: Mapping[str, tuple[str, np.ndarray]] | None,
                features: Mapping[str, np.ndarray] | None, detector: Detector | str, *,
                temperature: float = DEFAULT_TEMPERATURE, epsilon: float | None = None) -> list[ScoreRecord]:
    """Score every id_test and ood_test file of ``split``.

    ``logits`` maps file_id to (true label, logit vector); Mahalanobis also
    needs ``features`` for the training partition, labelled through ``logits``.
    """
    detector = Detector(detector)
    test = sorted(f for f, p in split.assignments.items() if p is not Partition.TRAIN)

    if detector is Detector.MAHALANOBIS:
        if features is None or logits is None:
            raise MissingRecord("<features file>")
        train = split.files_in(Partition.TRAIN)
        for fid in train:
            if fid not in features:
                raise MissingRecord(fid)
            if fid not in logits:
                raise MissingRecord(fid)
        stats = fit_mahalanobis(np.stack([features[f] for f in train]), [logits[f][0] for f in train], epsilon)
        fn = lambda fid: mahalanobis_score(stats, features[fid])
        source = features
    else:
        if logits is None:
            raise MissingRecord("<logits file>")
        if detector is Detector.ODIN:
            fn = lambda fid: odin_score(logits[fid][1], temperature)
        else:
            fn = lambda fid: msp_score(logits[fid][1])
        source = logits

    out = []
    for fid in test:
        if fid not in source:
            raise MissingRecord(fid)
        out.append(ScoreRecord(fid, detector, fn(fid), split.assignments[fid] is Partition.OOD_TEST))
    return out
