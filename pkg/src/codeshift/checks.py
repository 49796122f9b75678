"""Post-hoc validation of a split manifest against its corpus.

Deliberately shares no code with the splitters: it re-derives every
invariant from the manifest and corpus metadata alone.
"""

from __future__ import annotations

from collections import Counter, defaultdict

from .config import ShiftType
from .corpus import CorpusManifest
from .cst import DistanceMatrix
from .splitgen import SplitManifest

ID_PARTS = ("train", "id_test")


def check_split(split: SplitManifest, corpus: CorpusManifest,
                matrices: dict[str, DistanceMatrix] | None = None) -> list[str]:
    """Return a list of violations (empty when the manifest is valid)."""
    problems: list[str] = []
    files = corpus.by_id()
    cfg = split.config
    shift = split.shift
    parts = {fid: str(p.value if hasattr(p, "value") else p) for fid, p in split.assignments.items()}

    for fid, p in parts.items():
        if fid not in files:
            problems.append(f"assigned file {fid!r} is not in the corpus")
        if p not in ("train", "id_test", "ood_test"):
            problems.append(f"file {fid!r} has unknown partition {p!r}")
    if problems:
        return problems

    counts: dict[str, Counter] = defaultdict(Counter)
    for fid, p in parts.items():
        counts[files[fid].task_id][p] += 1

    id_labels, ood_labels = set(split.label_space_id), set(split.label_space_ood)
    if shift is ShiftType.TASK:
        if id_labels & ood_labels:
            problems.append(f"task shift label spaces overlap: {sorted(id_labels & ood_labels)}")
        if len(id_labels) != cfg.n_id_classes or len(ood_labels) != cfg.n_ood_classes:
            problems.append("task shift class counts do not match config")
    else:
        if id_labels != ood_labels:
            problems.append("non-task shift must keep the same label space for ID and OOD")
        if len(id_labels) != cfg.n_id_classes:
            problems.append(f"{len(id_labels)} ID classes, config says {cfg.n_id_classes}")

    for task, c in counts.items():
        in_id, in_ood = task in id_labels, task in ood_labels
        if c["train"] or c["id_test"]:
            if not in_id:
                problems.append(f"task {task!r} has ID files but is not an ID label")
        if c["ood_test"] and not in_ood:
            problems.append(f"task {task!r} has OOD files but is not an OOD label")
        if shift is ShiftType.TASK and in_ood and (c["train"] or c["id_test"]):
            problems.append(f"OOD-class task {task!r} leaked into train/id_test")

    for task in id_labels:
        c = counts.get(task, Counter())
        if c["train"] != cfg.n_train_per_class:
            problems.append(f"task {task!r}: {c['train']} train files, expected {cfg.n_train_per_class}")
        if c["id_test"] != cfg.n_id_test_per_class:
            problems.append(f"task {task!r}: {c['id_test']} id_test files, expected {cfg.n_id_test_per_class}")
    for task in ood_labels:
        c = counts.get(task, Counter())
        if c["ood_test"] != cfg.n_ood_test_per_class:
            problems.append(f"task {task!r}: {c['ood_test']} ood_test files, expected {cfg.n_ood_test_per_class}")

    by_task: dict[str, dict[str, list]] = defaultdict(lambda: {"id": [], "ood": []})
    for fid, p in parts.items():
        by_task[files[fid].task_id]["ood" if p == "ood_test" else "id"].append(files[fid])

    if shift is ShiftType.TIME:
        for task, g in by_task.items():
            if g["id"] and g["ood"]:
                lo = min(f.timestamp for f in g["ood"])
                hi = max(f.timestamp for f in g["id"])
                if lo < hi:
                    problems.append(f"task {task!r}: OOD min timestamp {lo} < ID max timestamp {hi}")

    if shift is ShiftType.PROGRAMMER:
        for task, g in by_task.items():
            id_progs = {f.programmer_id for f in g["id"]}
            ood_progs = {f.programmer_id for f in g["ood"]}
            if id_progs & ood_progs:
                problems.append(f"task {task!r}: programmers in both ID and OOD: {sorted(id_progs & ood_progs)}")
            per_prog = Counter(f.programmer_id for f in corpus.files if f.task_id == task)
            singles = [f.file_id for f in g["id"] if per_prog[f.programmer_id] < 2]
            if singles:
                problems.append(f"task {task!r}: single-submission programmers in ID: {singles}")

    if shift is ShiftType.CST and matrices:
        for task, g in by_task.items():
            avg = matrices[task].avg_by_file()
            if g["id"] and g["ood"]:
                lo = min(avg[f.file_id] for f in g["ood"])
                hi = max(avg[f.file_id] for f in g["id"])
                if lo < hi:
                    problems.append(f"task {task!r}: OOD min avg distance {lo} < ID max {hi}")

    return problems
