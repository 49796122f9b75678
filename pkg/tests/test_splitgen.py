import json

import pytest

from codeshift.checks import check_split
from codeshift.config import ShiftType, SplitConfig, profile_config
from codeshift.cst import CstNode, CstTree, distance_matrix
from codeshift.errors import InsufficientFiles, InsufficientProgrammers, InsufficientTasks, MissingTimestamps
from codeshift.lexer.histogram import build_histogram
from codeshift.lexer.tokens import Category, Token, TokenSeq
from codeshift.splitgen import (
    Partition,
    SplitManifest,
    make_split,
    programmer_partition,
    split_cst,
    split_programmer,
    split_random,
    split_task,
    split_time,
    split_token,
)

from conftest import GOLDEN, make_corpus, make_file


def parts(split):
    return {p: sorted(split.files_in(p)) for p in Partition}


def test_random_exact_quota_uses_every_file():
    m = make_corpus([make_file(f"f{i}") for i in range(6)])
    s = split_random(m, SplitConfig(1, 3, 2, 1, seed=5))
    assert len(s.assignments) == 6
    assert [len(v) for v in parts(s).values()] == [3, 2, 1]
    assert check_split(s, m) == []


def test_random_is_deterministic_and_seed_sensitive():
    m = make_corpus([make_file(f"f{i:02d}", task=f"t{i % 2}") for i in range(40)])
    cfg = SplitConfig(2, 6, 4, 4)
    assert split_random(m, cfg).to_json() == split_random(m, cfg).to_json()
    differing = sum(split_random(m, cfg.with_seed(s)).assignments != split_random(m, cfg.with_seed(s + 100)).assignments
                    for s in range(10))
    assert differing == 10


def test_random_golden_seed7(demo_cfg, demo_prep):
    s = split_random(demo_prep.corpus, demo_cfg.split_config("random", 7))
    assert s.to_json() == (GOLDEN / "demo_random_seed7.json").read_text()


def test_random_insufficient():
    m = make_corpus([make_file(f"f{i}") for i in range(5)])
    with pytest.raises(InsufficientFiles) as info:
        split_random(m, SplitConfig(1, 3, 2, 1))
    assert info.value.task_id == "t"


def test_task_python75_sizing():
    cfg = profile_config("python75", "task", seed=1)
    files = [make_file(f"t{t:02d}-{i:04d}", task=f"t{t:02d}", programmer="p") for t in range(75) for i in range(1000)]
    m = make_corpus(files)
    s = split_task(m, cfg)
    id_files = s.files_in(Partition.TRAIN) + s.files_in(Partition.ID_TEST)
    assert len(id_files) == 65 * 1000
    assert len(s.files_in(Partition.OOD_TEST)) == 10 * 1000
    assert len(s.files_in(Partition.TRAIN)) == 65 * 846
    assert not set(s.label_space_id) & set(s.label_space_ood)
    assert check_split(s, m) == []


def test_task_uses_every_task_when_sizes_add_up():
    m = make_corpus([make_file(f"f{t}{i}", task=f"t{t}") for t in range(4) for i in range(3)])
    s = split_task(m, SplitConfig(2, 2, 1, 2, n_ood_classes=2))
    assert sorted(s.label_space_id + s.label_space_ood) == ["t0", "t1", "t2", "t3"]
    with pytest.raises(InsufficientTasks):
        split_task(m, SplitConfig(3, 2, 1, 2, n_ood_classes=2))


def programmer_corpus():
    files = [make_file(f"a{i}", task="T", programmer="p1") for i in range(5)]
    files += [make_file(f"b{i}", task="T", programmer="p2") for i in range(3)]
    files += [make_file(f"c{i}", task="T", programmer="p3") for i in range(2)]
    return files


def test_programmer_hand_trace():
    # seed 1 shuffles [p1, p2, p3] into [p3, p1, p2] for task "T"
    cfg = SplitConfig(1, 4, 2, 2, seed=1)
    part = programmer_partition("T", programmer_corpus(), cfg)
    assert part.ood_programmers == ["p3"]
    assert part.ood_files == ["c0", "c1"]
    assert {f.programmer_id for f in part.id_pool} == {"p1", "p2"}


def test_programmer_truncates_last_programmer():
    # same order; a quota of 3 takes p3 whole, then p1's first file
    part = programmer_partition("T", programmer_corpus(), SplitConfig(1, 2, 1, 3, seed=1))
    assert part.ood_programmers == ["p3", "p1"] and part.ood_files == ["c0", "c1", "a0"]
    assert {f.programmer_id for f in part.id_pool} == {"p2"}


def test_programmer_singletons_never_in_id():
    files = programmer_corpus() + [make_file(f"s{i}", task="T", programmer=f"solo{i}") for i in range(4)]
    for seed in range(20):
        m = make_corpus(files)
        try:
            s = split_programmer(m, SplitConfig(1, 3, 2, 2, seed=seed))
        except (InsufficientFiles, InsufficientProgrammers):
            continue
        ids = s.files_in(Partition.TRAIN) + s.files_in(Partition.ID_TEST)
        assert not any(f.startswith("s") for f in ids)
        assert check_split(s, m) == []


def test_programmer_single_programmer_fails():
    m = make_corpus([make_file(f"f{i}", programmer="only") for i in range(6)])
    with pytest.raises(InsufficientProgrammers):
        split_programmer(m, SplitConfig(1, 2, 1, 1))


def test_time_newest_go_ood():
    m = make_corpus([make_file(f"f{i:02d}", timestamp=i) for i in range(1, 11)])
    s = split_time(m, SplitConfig(1, 4, 3, 3))
    assert sorted(s.files_in(Partition.OOD_TEST)) == ["f08", "f09", "f10"]


def test_time_tie_prefers_greater_file_id():
    m = make_corpus([make_file("a", timestamp=1), make_file("b", timestamp=5), make_file("c", timestamp=5)])
    s = split_time(m, SplitConfig(1, 1, 1, 1))
    assert s.files_in(Partition.OOD_TEST) == ["c"]


def test_time_without_timestamps():
    with pytest.raises(MissingTimestamps):
        split_time(make_corpus([make_file("a"), make_file("b")]), SplitConfig(1, 1, 0 + 1, 0 + 1))


def ident_seq(fid, *names):
    return TokenSeq(fid, tuple(Token(Category.IDENTIFIER, n) for n in names))


def test_token_rare_token_files_go_ood():
    files = [make_file(f"f{i}") for i in range(1, 11)]
    seqs = {f.file_id: ident_seq(f.file_id, "x", "y", *(["zebra"] if f.file_id in ("f7", "f8") else []))
            for f in files}
    m = make_corpus(files)
    h = {"t": build_histogram(seqs.values(), "t")}
    s = split_token(m, h, seqs, SplitConfig(1, 5, 3, 2))
    assert sorted(s.files_in(Partition.OOD_TEST)) == ["f7", "f8"]


def test_token_ties_by_file_id():
    files = [make_file(f"f{i}") for i in range(6)]
    seqs = {f.file_id: ident_seq(f.file_id, "x") for f in files}
    s = split_token(make_corpus(files), {"t": build_histogram(seqs.values(), "t")}, seqs, SplitConfig(1, 2, 2, 2))
    assert sorted(s.files_in(Partition.OOD_TEST)) == ["f4", "f5"]


def tree(fid, *leaves):
    return CstTree(CstNode("root", (CstNode("s", tuple(leaves)),)), fid)


def test_cst_outlier_tree_goes_ood():
    files = [make_file(f"f{i}") for i in (1, 2, 3)]
    trees = [tree("f1", "a", "b"), tree("f2", "a", "b"), tree("f3", "z")]
    s = split_cst(make_corpus(files), {"t": distance_matrix(trees, "t")}, SplitConfig(1, 1, 1, 1))
    assert s.files_in(Partition.OOD_TEST) == ["f3"]


def test_cst_identical_trees_tie_break():
    files = [make_file(f"f{i}") for i in range(5)]
    mats = {"t": distance_matrix([tree(f.file_id, "a") for f in files], "t")}
    s = split_cst(make_corpus(files), mats, SplitConfig(1, 2, 1, 2))
    assert sorted(s.files_in(Partition.OOD_TEST)) == ["f3", "f4"]


def test_dedup_per_programmer_limits_id_pool():
    files = [make_file(f"f{i}", programmer=f"p{i % 3}") for i in range(9)]
    s = split_random(make_corpus(files), SplitConfig(1, 1, 1, 1, dedup_per_programmer=True))
    progs = {f.file_id: f.programmer_id for f in files}
    assert len({progs[f] for f in s.assignments}) == 3


def test_manifest_round_trip(demo_cfg, demo_prep):
    s = make_split("cst", demo_prep.corpus, demo_cfg.split_config("cst", 3), matrices=demo_prep.matrices)
    assert SplitManifest.from_dict(json.loads(s.to_json())).to_json() == s.to_json()


@pytest.mark.parametrize("shift", list(ShiftType))
def test_demo_splits_validate(shift, demo_cfg, demo_prep):
    for seed in (0, 7):
        s = make_split(shift, demo_prep.corpus, demo_cfg.split_config(shift, seed), histograms=demo_prep.histograms,
                       seqs=demo_prep.seqs, matrices=demo_prep.matrices)
        assert check_split(s, demo_prep.corpus, demo_prep.matrices) == []
