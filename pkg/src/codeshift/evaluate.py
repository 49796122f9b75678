"""Accuracy, AUC-ROC and the per-shift degradation report."""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .config import ShiftType
from .detect import Detector, ScoreRecord
from .errors import EmptyInput, KeyMismatch, OneClassOnly, SchemaError

DETECTOR_ORDER = (Detector.MSP, Detector.ODIN, Detector.MAHALANOBIS, Detector.OE)
DETECTOR_TITLES = {Detector.MSP: "MSP", Detector.ODIN: "ODIN-T", Detector.MAHALANOBIS: "Mahalanobis", Detector.OE: "OE"}


def accuracy(predictions: Mapping[str, str], truth: Mapping[str, str]) -> float:
    if set(predictions) != set(truth):
        raise KeyMismatch(f"{len(set(predictions) ^ set(truth))} file ids differ between predictions and truth")
    if not truth:
        raise EmptyInput("accuracy of an empty set is undefined")
    correct = sum(predictions[k] == truth[k] for k in truth)
    return 100.0 * correct / len(truth)


def auc_roc(scores: Iterable[ScoreRecord]) -> float:
    """P(random ID score > random OOD score), ties counting one half.

    Computed from midranks in one sort (Mann-Whitney U).
    """
    recs = sorted(scores, key=lambda r: r.score)
    n_ood = sum(r.is_ood for r in recs)
    n_id = len(recs) - n_ood
    if n_id == 0 or n_ood == 0:
        raise OneClassOnly(f"AUC needs both ID and OOD records (got {n_id} ID, {n_ood} OOD)")
    rank_sum_id = 0.0
    i = 0
    while i < len(recs):
        j = i
        while j + 1 < len(recs) and recs[j + 1].score == recs[i].score:
            j += 1
        midrank = (i + j + 2) / 2  # 1-based ranks i+1..j+1
        rank_sum_id += midrank * sum(not r.is_ood for r in recs[i:j + 1])
        i = j + 1
    u = rank_sum_id - n_id * (n_id + 1) / 2
    return u / (n_id * n_ood)


@dataclass
class EvalReport:
    corpus_id: str
    shift: ShiftType
    auc: dict[str, float | None]  # percentages; None marks a detector that could not run
    id_accuracy: float
    ood_accuracy: float
    excluded: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.shift = ShiftType(self.shift)

    @property
    def delta(self) -> float:
        return self.id_accuracy - self.ood_accuracy

    @property
    def direction(self) -> str:
        """'down' when OOD accuracy is lower, 'up' when higher, '' when equal."""
        if round(self.delta, 2) > 0:
            return "down"
        if round(self.delta, 2) < 0:
            return "up"
        return ""

    @property
    def average_auc(self) -> float | None:
        vals = [self.auc.get(d.value) for d in DETECTOR_ORDER]
        vals = [v for v in vals if v is not None]
        return math.fsum(vals) / len(vals) if vals else None

    def to_dict(self) -> dict:
        auc = {d.value: self.auc.get(d.value) for d in DETECTOR_ORDER}
        auc["average"] = self.average_auc
        return {
            "corpus_id": self.corpus_id,
            "shift": self.shift.value,
            "auc": auc,
            "id_accuracy": self.id_accuracy,
            "ood_accuracy": self.ood_accuracy,
            "delta": self.delta,
            "direction": self.direction,
            "excluded_detectors": list(self.excluded),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvalReport":
        try:
            auc = {k: (None if v is None else float(v)) for k, v in d["auc"].items() if k != "average"}
            return cls(str(d["corpus_id"]), ShiftType(d["shift"]), auc, float(d["id_accuracy"]),
                       float(d["ood_accuracy"]), list(d.get("excluded_detectors", [])))
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"malformed report: {exc}") from exc


def degradation_report(corpus_id: str, shift: ShiftType | str, id_preds: Mapping[str, str],
                       ood_preds: Mapping[str, str], truth: Mapping[str, str],
                       score_sets: Mapping[str, Sequence[ScoreRecord] | None]) -> EvalReport:
    """One report row. A detector mapped to None (it failed on this split)
    is reported as n/a and listed in ``excluded``."""
    id_acc = accuracy(id_preds, {k: truth[k] for k in id_preds})
    ood_acc = accuracy(ood_preds, {k: truth[k] for k in ood_preds})
    auc: dict[str, float | None] = {}
    excluded = []
    for d in DETECTOR_ORDER:
        recs = score_sets.get(d.value)
        if recs is None:
            auc[d.value] = None
            excluded.append(d.value)
        else:
            auc[d.value] = 100.0 * auc_roc(recs)
    return EvalReport(corpus_id, ShiftType(shift), auc, id_acc, ood_acc, excluded)


# ----------------------------------------------------------------- emitters

_ARROWS = {"down": "↓", "up": "↑", "": ""}
_SIGNS = {"down": "-", "up": "+", "": ""}
SHIFT_TITLES = {s: ("CST" if s is ShiftType.CST else s.value.capitalize()) for s in ShiftType}
HEADER = ["Shift", "MSP", "ODIN-T", "Mahalanobis", "OE", "Average", "ID test", "OOD test"]


def _fmt(v: float | None) -> str:
    return "n/a" if v is None else f"{v:.2f}"


def _ood_cell(r: EvalReport) -> str:
    arrow = _ARROWS[r.direction]
    inner = f"{abs(r.delta):.2f} {arrow}" if arrow else f"{abs(r.delta):.2f}"
    return f"{r.ood_accuracy:.2f} ({inner})"


def _row_cells(r: EvalReport) -> list[str]:
    return [SHIFT_TITLES[r.shift], *(_fmt(r.auc.get(d.value)) for d in DETECTOR_ORDER),
            _fmt(r.average_auc), _fmt(r.id_accuracy)]


def to_markdown(reports: Sequence[EvalReport]) -> str:
    lines = []
    corpora = sorted({r.corpus_id for r in reports})
    if corpora:
        lines.append(f"Corpus: {', '.join(corpora)}\n")
    lines.append("| " + " | ".join(HEADER) + " |")
    lines.append("|" + "|".join(["---"] + [":---:"] * (len(HEADER) - 1)) + "|")
    notes = []
    for r in reports:
        lines.append("| " + " | ".join(_row_cells(r) + [_ood_cell(r)]) + " |")
        if r.excluded:
            notes.append(f"{r.shift.value}: average excludes {', '.join(r.excluded)} (detector failed)")
    if notes:
        lines.append("")
        lines.extend(f"* {n}" for n in notes)
    return "\n".join(lines) + "\n"


def to_csv(reports: Sequence[EvalReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["corpus_id", "shift", "msp", "odin", "mahalanobis", "oe", "average",
                "id_accuracy", "ood_accuracy", "delta"])
    for r in reports:
        sign = _SIGNS[r.direction]
        w.writerow([r.corpus_id, r.shift.value, *(_fmt(r.auc.get(d.value)) for d in DETECTOR_ORDER),
                    _fmt(r.average_auc), _fmt(r.id_accuracy), _fmt(r.ood_accuracy),
                    f"{sign}{abs(r.delta):.2f}"])
    return buf.getvalue()


_CELL_NUM = re.compile(r"^(-?\d+\.\d+)")


def read_markdown(text: str) -> list[dict]:
    """Parse tables written by :func:`to_markdown` back into numbers (2 decimals)."""
    rows = []
    for line in text.splitlines():
        if not line.startswith("| ") or line.startswith("| Shift"):
            continue
        cells = [c.strip() for c in line.strip().strip("|").split("|")]
        if len(cells) != len(HEADER):
            raise SchemaError(f"unexpected markdown row: {line!r}")
        vals = {}
        for name, cell in zip(["msp", "odin", "mahalanobis", "oe", "average", "id_accuracy"], cells[1:7]):
            vals[name] = None if cell == "n/a" else float(cell)
        m = re.match(r"^(-?\d+\.\d+) \((\d+\.\d+)\s*([↑↓]?)\)$", cells[7])
        if not m:
            raise SchemaError(f"unexpected OOD cell {cells[7]!r}")
        vals["ood_accuracy"] = float(m.group(1))
        vals["delta"] = float(m.group(2)) * (-1 if m.group(3) == "↑" else 1)
        vals["shift"] = cells[0].lower()
        rows.append(vals)
    return rows
