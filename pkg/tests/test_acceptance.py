"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line in ``RESULTS``; conftest prints them at the
end of the run. Running this file directly prints the same lines.
"""

from __future__ import annotations

import filecmp
import random
import sys
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from codeshift.checks import check_split  # noqa: E402
from codeshift.cli import run  # noqa: E402
from codeshift.cst import CstNode, CstTree, rf_distance  # noqa: E402
from codeshift.detect import Detector, MahalanobisStats, ScoreRecord, fit_mahalanobis, mahalanobis_score  # noqa: E402
from codeshift.evaluate import EvalReport, auc_roc  # noqa: E402
from codeshift.pipeline import load_pipeline_config, outlier_partition, prepare, run_shift  # noqa: E402
from codeshift.refmodel import build_vocab, objective, predict_logits, vectorize_many  # noqa: E402
from codeshift.detect import msp_score  # noqa: E402
from codeshift.splitgen import Partition, make_split  # noqa: E402
from codeshift.config import ShiftType  # noqa: E402

from conftest import DEMO_CONFIG  # noqa: E402
from oracles import adjugate_inverse, auc_pairs, central_diff, random_tree, rf_oracle  # noqa: E402

RESULTS: dict[int, str] = {}
SEEDS = (1, 2, 3, 4, 5)


def record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(RESULTS[n])
    assert ok, RESULTS[n]


@lru_cache(maxsize=None)
def demo():
    cfg = load_pipeline_config(DEMO_CONFIG)
    return cfg, prepare(cfg)


@lru_cache(maxsize=None)
def result(shift: str, seed: int):
    cfg, prep = demo()
    return run_shift(prep, cfg, shift, seed)


# 1 -------------------------------------------------------------------------

def test_c01_auc_oracle():
    rng = random.Random(101)
    worst = 0.0
    for _ in range(1000):
        n = rng.randint(2, 200)
        n_ood = rng.randint(1, n - 1)
        levels = rng.choice([3, 10, 1000])  # few levels forces many ties
        vals = [rng.randrange(levels) / levels for _ in range(n)]
        a, b = vals[:n - n_ood], vals[n - n_ood:]
        recs = [ScoreRecord(f"i{k}", Detector.MSP, s, False) for k, s in enumerate(a)]
        recs += [ScoreRecord(f"o{k}", Detector.MSP, s, True) for k, s in enumerate(b)]
        worst = max(worst, abs(auc_roc(recs) - auc_pairs(a, b)))
    sep = auc_roc([ScoreRecord("a", Detector.MSP, 0.9, False), ScoreRecord("b", Detector.MSP, 0.1, True)])
    same_scores = [0.1, 0.5, 0.5, 0.7]
    same = auc_roc([ScoreRecord(f"i{k}", Detector.MSP, s, False) for k, s in enumerate(same_scores)]
                   + [ScoreRecord(f"o{k}", Detector.MSP, s, True) for k, s in enumerate(same_scores)])
    record(1, worst <= 1e-12 and sep == 1.0 and same == 0.5,
           f"max |rank - pairs| = {worst:.1e} over 1000 instances; separated={sep}, identical={same}")


# 2 -------------------------------------------------------------------------

def test_c02_rf_oracle():
    rng = random.Random(202)
    bad = 0
    for _ in range(1000):
        t1, t2 = random_tree(rng), random_tree(rng)
        d12 = rf_distance(t1, t2)
        if d12 != rf_oracle(t1, t2) or d12 != rf_distance(t2, t1) or rf_distance(t1, t1) != (0, 0.0):
            bad += 1
    disjoint_bad = 0
    for _ in range(200):
        t1, t2 = random_tree(rng, alphabet="abc"), random_tree(rng, alphabet="xyz")
        if not t1.leaves() or not t2.leaves():
            continue
        if rf_distance(t1, t2)[1] != 1.0:
            disjoint_bad += 1
    record(2, bad == 0 and disjoint_bad == 0,
           f"{bad} oracle/symmetry/identity mismatches in 1000 pairs; {disjoint_bad} disjoint pairs not at 1.0")


# 3 -------------------------------------------------------------------------

def test_c03_split_validity():
    cfg, prep = demo()
    problems = []
    for seed in SEEDS:
        for shift in ShiftType:
            split = make_split(shift, prep.corpus, cfg.split_config(shift, seed), histograms=prep.histograms,
                               seqs=prep.seqs, matrices=prep.matrices)
            problems += [f"{shift.value}/{seed}: {p}" for p in check_split(split, prep.corpus, prep.matrices)]
    record(3, not problems, f"6 shifts x {len(SEEDS)} seeds checked; {len(problems)} violations"
           + (f" (first: {problems[0]})" if problems else ""))


# 4 -------------------------------------------------------------------------

def test_c04_task_shift_zero_accuracy():
    accs = [result("task", s).report.ood_accuracy for s in SEEDS]
    record(4, all(a == 0.0 for a in accs), f"task-shift OOD accuracy per seed: {accs}")


# 5 -------------------------------------------------------------------------

def test_c05_random_neutrality():
    rows = [result("random", s).report for s in SEEDS]
    deltas = [abs(r.delta) for r in rows]
    aucs = [r.auc["msp"] / 100 for r in rows]
    ok = all(d <= 5 for d in deltas) and all(0.40 <= a <= 0.60 for a in aucs)
    record(5, ok, f"|delta acc| = {[round(d, 2) for d in deltas]}, MSP AUC = {[round(a, 3) for a in aucs]}")


# 6 -------------------------------------------------------------------------

def test_c06_directional_degradation():
    lines, ok = [], True
    for s in SEEDS:
        rnd, tok, cst, task = (result(x, s).report for x in ("random", "token", "cst", "task"))
        cond = (tok.delta > rnd.delta + 5 and cst.delta > rnd.delta + 5
                and task.auc["msp"] / 100 > rnd.auc["msp"] / 100 + 0.15)
        ok &= cond
        lines.append(f"seed {s}: drop rnd/tok/cst {rnd.delta:.1f}/{tok.delta:.1f}/{cst.delta:.1f}, "
                     f"MSP AUC task/rnd {task.auc['msp']:.1f}/{rnd.auc['msp']:.1f}")
    record(6, ok, "; ".join(lines))


# 7 -------------------------------------------------------------------------

def test_c07_gradient_checks():
    rng = np.random.default_rng(7)
    C, D = 3, 5
    W, b = rng.normal(size=(C, D)), rng.normal(size=C)
    X, y, U = rng.normal(size=(9, D)), rng.integers(0, C, 9), rng.normal(size=(6, D))
    errs = {}
    for name, (out, lam) in {"plain": (None, 0.0), "oe": (U, 0.5)}.items():
        f = lambda: objective(W, b, X, y, 1e-3, out, lam)[0]
        _, dW, db = objective(W, b, X, y, 1e-3, out, lam)
        a = np.concatenate([dW.ravel(), db])
        n = np.concatenate([central_diff(f, W, 1e-5).ravel(), central_diff(f, b, 1e-5)])
        errs[name] = float(np.max(np.abs(a - n) / np.maximum(np.maximum(np.abs(a), np.abs(n)), 1e-8)))
    record(7, all(e <= 1e-6 for e in errs.values()),
           ", ".join(f"{k} max rel err {v:.1e}" for k, v in errs.items()))


# 8 -------------------------------------------------------------------------

def test_c08_outlier_exposure():
    cfg, prep = demo()
    lines, ok = [], True
    for s in SEEDS:
        res = result("random", s)
        _, held_out = outlier_partition(prep.full, cfg.outlier_tasks, s, cfg.outlier_holdout)
        vocab = build_vocab([prep.seqs[f] for f in res.split.files_in(Partition.TRAIN)])
        U = vectorize_many([prep.seqs[f] for f in held_out], vocab, cfg.train.normalize)
        plain = np.mean([msp_score(z) for z in predict_logits(res.model, U)])
        oe = np.mean([msp_score(z) for z in predict_logits(res.oe_model, U)])
        ids = res.split.files_in(Partition.ID_TEST)
        acc_oe = 100 * np.mean([res.oe_model.classes[int(np.argmax(res.oe_logits[f][1]))] == res.oe_logits[f][0]
                                for f in ids])
        drop = round(res.report.id_accuracy - acc_oe, 9) + 0.0
        ok &= bool(oe < plain and drop <= 2)
        lines.append(f"seed {s}: outlier MSP {plain:.3f} -> {oe:.3f}, ID acc drop {drop:.2f}")
    record(8, ok, "; ".join(lines))


# 9 -------------------------------------------------------------------------

def test_c09_mahalanobis():
    rng = np.random.default_rng(9)
    exact = True
    for _ in range(200):
        D = int(rng.integers(1, 4))
        means = rng.normal(size=(int(rng.integers(1, 4)), D))
        x = rng.normal(size=D)
        stats = MahalanobisStats([str(i) for i in range(len(means))], means, np.eye(D), 0.0, np.eye(D))
        exact &= mahalanobis_score(stats, x) == -min(float(np.sum((x - m) ** 2)) for m in means)
    zero = fit_mahalanobis(np.full((6, 2), 3.0), ["a"] * 3 + ["b"] * 3)
    zero_ok = mahalanobis_score(zero, np.array([3.0, 3.0])) == 0.0
    worst = 0.0
    for _ in range(200):
        D = int(rng.integers(1, 4))
        labels = [c for c in "ab" for _ in range(int(rng.integers(2, 5)))]
        X = rng.normal(size=(len(labels), D))
        stats = fit_mahalanobis(X, labels)
        inv = adjugate_inverse(stats.covariance + stats.epsilon * np.eye(D))
        x = rng.normal(size=D) * 2
        expected = max(-float((x - m) @ inv @ (x - m)) for m in stats.means)
        worst = max(worst, abs(mahalanobis_score(stats, x) - expected) / max(1.0, abs(expected)))
    record(9, exact and zero_ok and worst <= 1e-9,
           f"identity exact={exact}, zero-scatter fit ok={zero_ok}, adjugate max err {worst:.1e}")


# 10 ------------------------------------------------------------------------

def tree_diff(a: Path, b: Path) -> list[str]:
    out = []
    cmp = filecmp.dircmp(a, b)
    out += cmp.left_only + cmp.right_only
    for name in cmp.common_files:
        if not filecmp.cmp(a / name, b / name, shallow=False):
            out.append(name)
    for sub in cmp.common_dirs:
        out += [f"{sub}/{x}" for x in tree_diff(a / sub, b / sub)]
    return out


def test_c10_determinism(tmp_path):
    args = ["pipeline", "--config", str(DEMO_CONFIG)]
    for name, extra in [("a", ["--seed", "7", "--jobs", "1"]), ("b", ["--seed", "7", "--jobs", "1"]),
                        ("c", ["--seed", "7", "--jobs", "8"]), ("d", ["--seed", "8", "--jobs", "1"])]:
        assert run([*args, "--out-dir", str(tmp_path / name), *extra]) == 0
    twice = tree_diff(tmp_path / "a", tmp_path / "b")
    jobs = tree_diff(tmp_path / "a", tmp_path / "c")
    n_files = sum(1 for p in (tmp_path / "a").rglob("*") if p.is_file())
    seeds_differ = (tmp_path / "a" / "random" / "split.json").read_bytes() != \
        (tmp_path / "d" / "random" / "split.json").read_bytes()
    record(10, not twice and not jobs and seeds_differ,
           f"{n_files} artifacts; rerun diffs {twice}, jobs 1 vs 8 diffs {jobs}, seeds 7/8 random split differ={seeds_differ}")


# 11 ------------------------------------------------------------------------

def test_c11_detector_average():
    r = EvalReport("python75", "task", {"msp": 91.33, "odin": 61.42, "mahalanobis": 70.54, "oe": 61.11}, 0.0, 0.0)
    text = f"{r.average_auc:.2f}"
    record(11, text == "71.10", f"average of 91.33, 61.42, 70.54, 61.11 -> {text}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
