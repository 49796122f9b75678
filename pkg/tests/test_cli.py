import json
import os
import subprocess
import sys

import pytest

from codeshift.cli import run
from codeshift.io import write_atomic

from conftest import ROOT, SMALL


@pytest.fixture(scope="module")
def staged(tmp_path_factory):
    """ingest -> tokenize -> parse -> split -> train -> infer on the small fixture."""
    d = tmp_path_factory.mktemp("staged")
    c = ["--corpus", str(d / "corpus.jsonl"), "--root", str(SMALL)]
    assert run(["ingest", "--root", str(SMALL), "--manifest", str(SMALL / "manifest.jsonl"),
                "--out", str(d / "corpus.jsonl")]) == 0
    assert run(["tokenize", *c, "--out", str(d / "tokens.jsonl"), "--histograms", str(d / "hist.json")]) == 0
    assert run(["parse", *c, "--tokens", str(d / "tokens.jsonl"), "--out", str(d / "trees.jsonl"),
                "--matrices", str(d / "mat.json")]) == 0
    sizes = ["--n-id-classes", "3", "--n-train-per-class", "2", "--n-id-test-per-class", "1",
             "--n-ood-test-per-class", "1"]
    assert run(["split", *c, "--shift", "cst", *sizes, "--trees", str(d / "trees.jsonl"),
                "--out", str(d / "split.json"), "--seed", "4"]) == 0
    assert run(["train", *c, "--tokens", str(d / "tokens.jsonl"), "--split", str(d / "split.json"),
                "--out", str(d / "model.json"), "--epochs", "100"]) == 0
    assert run(["infer", *c, "--tokens", str(d / "tokens.jsonl"), "--split", str(d / "split.json"),
                "--model", str(d / "model.json"), "--out", str(d / "logits.jsonl"),
                "--features", str(d / "features.jsonl")]) == 0
    return d, c, sizes


def test_stage_outputs(staged):
    d, _, _ = staged
    split = json.loads((d / "split.json").read_text())
    assert split["shift"] == "cst" and len(split["assignments"]) == 12
    assert len((d / "logits.jsonl").read_text().splitlines()) == 12


def test_odin_t1_equals_msp(staged):
    d, _, _ = staged
    split, logits = str(d / "split.json"), str(d / "logits.jsonl")
    assert run(["score", "--split", split, "--logits", logits, "--detector", "msp", "--out", str(d / "msp.jsonl")]) == 0
    assert run(["score", "--split", split, "--logits", logits, "--detector", "odin", "--temperature", "1",
                "--out", str(d / "odin1.jsonl")]) == 0
    msp = (d / "msp.jsonl").read_text()
    odin = (d / "odin1.jsonl").read_text()
    assert odin.replace('"detector":"odin"', '"detector":"msp"') == msp


def test_evaluate_and_report(staged, capsys):
    d, _, _ = staged
    split, logits = str(d / "split.json"), str(d / "logits.jsonl")
    run(["score", "--split", split, "--logits", logits, "--detector", "msp", "--out", str(d / "m.jsonl")])
    assert run(["evaluate", "--split", split, "--logits", logits, "--scores", str(d / "m.jsonl"),
                "--out", str(d / "report.json")]) == 0
    rep = json.loads((d / "report.json").read_text())
    assert rep["excluded_detectors"] == ["odin", "mahalanobis", "oe"]
    capsys.readouterr()
    assert run(["report", str(d / "report.json"), "--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("corpus_id,shift,msp")


def test_time_split_without_timestamps_exits_3(staged, capsys):
    d, c, sizes = staged
    code = run(["split", *c, "--shift", "time", *sizes, "--out", str(d / "never.json")])
    assert code == 3
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "MissingTimestamps"
    assert not (d / "never.json").exists()


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        run(["split", "--shift", "sideways"])
    assert info.value.code == 2


def test_lex_failure_is_data_error(tmp_path, capsys):
    (tmp_path / "a.py").write_text("x = 'open\n")
    (tmp_path / "b.py").write_text("y = 2\n")
    rows = [{"file_id": f, "path": f"{f}.py", "language": "python", "task_id": "t", "programmer_id": "p"}
            for f in ("a", "b")]
    (tmp_path / "m.jsonl").write_text("".join(json.dumps(r) + "\n" for r in rows))
    run(["ingest", "--root", str(tmp_path), "--manifest", str(tmp_path / "m.jsonl"), "--out", str(tmp_path / "c.jsonl")])
    c = ["--corpus", str(tmp_path / "c.jsonl"), "--root", str(tmp_path)]
    assert run(["tokenize", *c, "--out", str(tmp_path / "t.jsonl")]) == 4
    assert json.loads(capsys.readouterr().err.strip().splitlines()[-1])["error"] in ("LexError", "DataError")
    assert run(["tokenize", *c, "--max-error-rate", "0.5", "--out", str(tmp_path / "t.jsonl")]) == 0
    assert len((tmp_path / "t.jsonl").read_text().splitlines()) == 1


def test_global_flags_in_either_position(staged):
    d, c, sizes = staged
    a, b = str(d / "s1.json"), str(d / "s2.json")
    assert run(["--seed", "9", "split", *c, "--shift", "random", *sizes, "--out", a]) == 0
    assert run(["split", *c, "--shift", "random", *sizes, "--out", b, "--seed", "9"]) == 0
    assert open(a).read() == open(b).read()


def test_log_env_override(staged, monkeypatch, capsys):
    d, c, sizes = staged
    monkeypatch.setenv("CODESHIFT_LOG", "INFO")
    import logging
    root = logging.getLogger()
    for h in list(root.handlers):
        root.removeHandler(h)
    assert run(["ingest", "--root", str(SMALL), "--manifest", str(SMALL / "manifest.jsonl"),
                "--out", str(d / "again.jsonl"), "--log-level", "ERROR"]) == 0
    assert "ingested 12 files" in capsys.readouterr().err


def test_atomic_write_leaves_old_content_on_failure(tmp_path):
    target = tmp_path / "out.txt"
    target.write_text("old")

    class Boom:
        def __str__(self):
            raise RuntimeError("boom")

    with pytest.raises(Exception):
        write_atomic(target, Boom())
    assert target.read_text() == "old"
    assert os.listdir(tmp_path) == ["out.txt"]


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "codeshift", "--version"], capture_output=True, text=True, cwd=ROOT)
    assert proc.returncode == 0 and "codeshift" in proc.stdout


def test_bad_pipeline_config_exits_3(tmp_path, capsys):
    cfg = tmp_path / "c.toml"
    cfg.write_text('[corpus]\nroot = "."\nmanifest = "m.jsonl"\n[train]\nepochz = 3\n')
    assert run(["pipeline", "--config", str(cfg), "--out-dir", str(tmp_path / "o")]) == 3
    assert json.loads(capsys.readouterr().err.strip())["error"] == "ConfigError"
