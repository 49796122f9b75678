"""The independent validator must catch each kind of broken manifest."""

from dataclasses import replace

from codeshift.checks import check_split
from codeshift.config import SplitConfig
from codeshift.splitgen import Partition, split_programmer, split_random, split_time, split_task

from conftest import make_corpus, make_file


def corpus():
    files = []
    for t in ("A", "B"):
        for i in range(8):
            files.append(make_file(f"{t}{i}", task=t, programmer=f"{t}p{i // 2}", timestamp=100 + i))
    return make_corpus(files)


def test_valid_manifest_passes():
    m = corpus()
    assert check_split(split_random(m, SplitConfig(2, 3, 2, 2)), m) == []


def test_catches_unknown_file_and_quota():
    m = corpus()
    s = split_random(m, SplitConfig(2, 3, 2, 2))
    s.assignments["ghost"] = Partition.TRAIN
    assert any("not in the corpus" in p for p in check_split(s, m))
    s = split_random(m, SplitConfig(2, 3, 2, 2))
    victim = s.files_in(Partition.TRAIN)[0]
    del s.assignments[victim]
    assert check_split(s, m)


def test_catches_time_order_violation():
    m = corpus()
    s = split_time(m, SplitConfig(2, 3, 2, 2))
    old = min(s.files_in(Partition.TRAIN))
    new = s.files_in(Partition.OOD_TEST)[0]
    s.assignments[old], s.assignments[new] = Partition.OOD_TEST, Partition.TRAIN
    assert any("time" in p or "timestamp" in p for p in check_split(s, m))


def test_catches_programmer_overlap():
    m = corpus()
    s = split_programmer(m, SplitConfig(2, 2, 1, 2, seed=3))
    assert check_split(s, m) == []
    ood = s.files_in(Partition.OOD_TEST)[0]
    prog = m.by_id()[ood].programmer_id
    sibling = next(f.file_id for f in m.files if f.programmer_id == prog and f.file_id != ood)
    other = next(f for f in s.files_in(Partition.TRAIN) if m.by_id()[f].task_id == m.by_id()[ood].task_id)
    s.assignments.pop(other)
    s.assignments[sibling] = Partition.TRAIN
    assert any("programmer" in p for p in check_split(s, m))


def test_catches_task_label_overlap():
    m = corpus()
    s = split_task(m, SplitConfig(1, 3, 2, 4, n_ood_classes=1))
    bad = replace(s, label_space_ood=s.label_space_ood + s.label_space_id)
    assert check_split(bad, m)
