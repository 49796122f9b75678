import json

import pytest

from codeshift.config import ShiftType, SplitConfig
from codeshift.corpus import CorpusManifest, ingest_corpus, validate_manifest
from codeshift.errors import DuplicateId, EmptySource, EmptyTask, InvalidEncoding, MissingFile, SchemaError

from conftest import SMALL, make_corpus, make_file


def write_manifest(tmp_path, rows, sources=None):
    (tmp_path / "src").mkdir(exist_ok=True)
    for r in rows:
        (tmp_path / r["path"]).write_bytes((sources or {}).get(r["file_id"], b"x = 1\n"))
    with open(tmp_path / "m.jsonl", "w") as fh:
        for r in rows:
            fh.write(json.dumps(r) + "\n")
    return tmp_path / "m.jsonl"


def row(fid, task="t", prog="p", ts=None):
    return {"file_id": fid, "path": f"src/{fid}.py", "language": "python", "task_id": task,
            "programmer_id": prog, "timestamp": ts}


def test_empty_manifest(tmp_path):
    (tmp_path / "m.jsonl").write_text("")
    assert len(ingest_corpus(tmp_path, tmp_path / "m.jsonl").files) == 0


def test_files_sorted_by_id(tmp_path):
    m = ingest_corpus(tmp_path, write_manifest(tmp_path, [row("b"), row("a")]))
    assert [f.file_id for f in m.files] == ["a", "b"]


def test_small_fixture_counts(small_corpus):
    assert len(small_corpus.files) == 12
    assert small_corpus.task_ids == ["rev", "square", "sum"]
    assert {f.language.value for f in small_corpus.files} == {"python", "java"}


def test_ingest_is_deterministic_and_round_trips(tmp_path, small_corpus):
    again = ingest_corpus(SMALL, SMALL / "manifest.jsonl", corpus_id="small", jobs=3)
    assert again.serialize() == small_corpus.serialize()
    # re-serialized descriptors are themselves a valid manifest
    out = tmp_path / "corpus.jsonl"
    small_corpus.write(out)
    third = ingest_corpus(SMALL, out)
    assert third.serialize() == small_corpus.serialize()


def test_duplicate_id_rejected(tmp_path):
    with pytest.raises(DuplicateId):
        ingest_corpus(tmp_path, write_manifest(tmp_path, [row("a"), row("a")]))


def test_empty_task_rejected(tmp_path):
    with pytest.raises(EmptyTask):
        ingest_corpus(tmp_path, write_manifest(tmp_path, [row("a", task="")]))


def test_missing_file(tmp_path):
    p = write_manifest(tmp_path, [row("a")])
    (tmp_path / "src" / "a.py").unlink()
    with pytest.raises(MissingFile):
        ingest_corpus(tmp_path, p)


def test_invalid_encoding_aborts(tmp_path):
    with pytest.raises(InvalidEncoding):
        ingest_corpus(tmp_path, write_manifest(tmp_path, [row("a")], {"a": b"\xff\xfe x"}))


def test_empty_source(tmp_path):
    with pytest.raises(EmptySource):
        ingest_corpus(tmp_path, write_manifest(tmp_path, [row("a")], {"a": b""}))


def test_bad_timestamp_type(tmp_path):
    with pytest.raises(SchemaError):
        ingest_corpus(tmp_path, write_manifest(tmp_path, [row("a", ts="yesterday")]))


def test_duplicate_id_in_constructor():
    with pytest.raises(DuplicateId):
        make_corpus([make_file("a"), make_file("a")])


def test_time_shift_without_timestamps_all_infeasible(small_corpus):
    cfg = SplitConfig(3, 2, 1, 1)
    rep = validate_manifest(small_corpus, ShiftType.TIME, cfg)
    assert sorted(rep.infeasible) == small_corpus.task_ids


def test_programmer_single_programmer_infeasible():
    m = make_corpus([make_file(f"a{i}", task="t1", programmer="solo") for i in range(6)]
                    + [make_file(f"b{i}", task="t2", programmer=f"p{i % 3}") for i in range(6)])
    rep = validate_manifest(m, ShiftType.PROGRAMMER, SplitConfig(2, 2, 1, 1))
    assert rep.infeasible == ["t1"]


def test_token_shift_feasible_on_small(small_corpus):
    rep = validate_manifest(small_corpus, ShiftType.TOKEN, SplitConfig(3, 1, 1, 2))
    assert rep.ok and rep.infeasible == []


def test_task_shift_too_few_tasks(small_corpus):
    rep = validate_manifest(small_corpus, ShiftType.TASK, SplitConfig(3, 1, 1, 1, n_ood_classes=1))
    assert not rep.ok and rep.problems
