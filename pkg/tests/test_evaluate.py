import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from codeshift.config import ShiftType
from codeshift.detect import Detector, ScoreRecord
from codeshift.errors import EmptyInput, KeyMismatch, OneClassOnly
from codeshift.evaluate import EvalReport, accuracy, auc_roc, degradation_report, read_markdown, to_csv, to_markdown

from oracles import auc_pairs


def recs(id_scores, ood_scores):
    out = [ScoreRecord(f"i{k}", Detector.MSP, s, False) for k, s in enumerate(id_scores)]
    return out + [ScoreRecord(f"o{k}", Detector.MSP, s, True) for k, s in enumerate(ood_scores)]


def test_accuracy_examples():
    truth = {"a": "x", "b": "y", "c": "x", "d": "y"}
    assert accuracy({"a": "x", "b": "y", "c": "x", "d": "x"}, truth) == 75.0
    assert accuracy(dict(truth), truth) == 100.0
    assert accuracy({"a": "id1", "b": "id2"}, {"a": "ood1", "b": "ood2"}) == 0.0
    with pytest.raises(KeyMismatch):
        accuracy({"a": "x"}, {"b": "x"})
    with pytest.raises(EmptyInput):
        accuracy({}, {})


def test_accuracy_permutation_invariant():
    rng = random.Random(1)
    keys = [f"f{i}" for i in range(50)]
    truth = {k: rng.choice("abc") for k in keys}
    pred = {k: rng.choice("abc") for k in keys}
    rng.shuffle(keys)
    assert accuracy({k: pred[k] for k in keys}, {k: truth[k] for k in keys}) == accuracy(pred, truth)


def test_auc_examples():
    assert auc_roc(recs([0.9, 0.8], [0.2, 0.1])) == 1.0
    assert auc_roc(recs([0.3, 0.5, 0.5], [0.5, 0.3, 0.5])) == 0.5
    assert auc_roc(recs([0.9, 0.3], [0.5, 0.1])) == 0.75
    with pytest.raises(OneClassOnly):
        auc_roc(recs([0.1, 0.2], []))


scores = st.lists(st.integers(0, 20).map(lambda v: v / 4), min_size=1, max_size=40)


@settings(max_examples=200)
@given(scores, scores)
def test_auc_properties(a, b):
    base = auc_roc(recs(a, b))
    assert abs(base - auc_pairs(a, b)) <= 1e-12
    assert auc_roc(recs([2 * x + 1 for x in a], [2 * x + 1 for x in b])) == pytest.approx(base, abs=1e-12)
    assert auc_roc(recs([x ** 3 for x in a], [x ** 3 for x in b])) == pytest.approx(base, abs=1e-12)
    flipped = [ScoreRecord(r.file_id, r.detector, r.score, not r.is_ood) for r in recs(a, b)]
    assert auc_roc(flipped) == pytest.approx(1 - base, abs=1e-12)


def report(**kw):
    base = dict(corpus_id="c", shift="task", auc={"msp": 91.33, "odin": 61.42, "mahalanobis": 70.54, "oe": 61.11},
                id_accuracy=97.5, ood_accuracy=0.0)
    base.update(kw)
    return EvalReport(**base)


def test_detector_average():
    assert f"{report().average_auc:.2f}" == "71.10"


def test_excluded_detector_flagged():
    r = report(auc={"msp": 60.0, "odin": 70.0, "mahalanobis": None, "oe": 80.0}, excluded=["mahalanobis"])
    assert r.average_auc == pytest.approx(70.0)
    md = to_markdown([r])
    assert "n/a" in md and "excludes mahalanobis" in md


def test_degradation_report_handles_missing_detector():
    truth = {"a": "x", "b": "x", "c": "x", "d": "y"}
    sets = {"msp": recs([0.9, 0.8], [0.1, 0.2]), "odin": recs([0.9], [0.1]), "mahalanobis": None,
            "oe": recs([0.5], [0.5])}
    r = degradation_report("c", "random", {"a": "x", "b": "y"}, {"c": "x", "d": "y"}, truth, sets)
    assert r.id_accuracy == 50.0 and r.ood_accuracy == 100.0 and r.direction == "up"
    assert r.excluded == ["mahalanobis"]
    assert r.average_auc == pytest.approx((100 + 100 + 50) / 3)


def test_report_round_trips_through_json_and_markdown():
    reports = [report(), report(shift="cst", id_accuracy=100.0, ood_accuracy=47.9166),
               report(shift="random", id_accuracy=95.0, ood_accuracy=95.1)]
    again = [EvalReport.from_dict(json.loads(json.dumps(r.to_dict()))) for r in reports]
    assert [a.to_dict() for a in again] == [r.to_dict() for r in reports]
    rows = read_markdown(to_markdown(again))
    for r, row in zip(reports, rows):
        assert row["msp"] == round(r.auc["msp"], 2)
        assert row["average"] == round(r.average_auc, 2)
        assert row["id_accuracy"] == round(r.id_accuracy, 2)
        assert row["ood_accuracy"] == round(r.ood_accuracy, 2)
        assert row["delta"] == round(r.delta, 2)
    assert rows[1]["shift"] == "cst"


def test_markdown_and_csv_layout():
    md = to_markdown([report(shift="cst", id_accuracy=100.0, ood_accuracy=47.92)])
    assert "| MSP | ODIN-T | Mahalanobis | OE | Average | ID test | OOD test |" in md
    assert "| CST | 91.33 | 61.42 | 70.54 | 61.11 | 71.10 | 100.00 | 47.92 (52.08 ↓) |" in md
    csv_text = to_csv([report(), report(shift="time", id_accuracy=90.0, ood_accuracy=90.1)])
    lines = csv_text.strip().splitlines()
    assert lines[1].endswith(",97.50,0.00,-97.50")
    assert lines[2].endswith(",+0.10")


def test_shift_type_coerced():
    assert report(shift="token").shift is ShiftType.TOKEN
