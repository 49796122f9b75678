"""Training / ID-test / OOD-test partitions for each shift type.

Every splitter is a pure function of its inputs and ``cfg.seed``. Each task
gets its own random stream derived from (seed, shift, task_id), so results
do not depend on task processing order. Every ranking breaks ties on
file_id, descending, so the greatest file_ids win ties for OOD.
"""

from __future__ import annotations

import enum
import json
import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .config import ShiftType, SplitConfig, derive_seed
from .corpus import CodeFile, CorpusManifest
from .cst import DistanceMatrix
from .errors import (
    HistogramMismatch,
    InsufficientFiles,
    InsufficientProgrammers,
    InsufficientTasks,
    MatrixMismatch,
    MissingTimestamps,
    SchemaError,
)
from .io import write_atomic
from .lexer import TokenHistogram, TokenSeq, token_rarity

log = logging.getLogger(__name__)


class Partition(str, enum.Enum):
    TRAIN = "train"
    ID_TEST = "id_test"
    OOD_TEST = "ood_test"

    def __str__(self) -> str:
        return self.value


@dataclass
class SplitManifest:
    shift: ShiftType
    config: SplitConfig
    assignments: dict[str, Partition]
    label_space_id: list[str]
    label_space_ood: list[str]

    def files_in(self, part: Partition | str) -> list[str]:
        part = Partition(part)
        return sorted(f for f, p in self.assignments.items() if p is part)

    def to_dict(self) -> dict:
        return {
            "shift": self.shift.value,
            "config": self.config.to_dict(),
            "label_space_id": list(self.label_space_id),
            "label_space_ood": list(self.label_space_ood),
            "assignments": {k: self.assignments[k].value for k in sorted(self.assignments)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def write(self, path) -> None:
        write_atomic(path, self.to_json())

    @classmethod
    def from_dict(cls, d: dict) -> "SplitManifest":
        try:
            return cls(
                ShiftType(d["shift"]),
                SplitConfig.from_dict(d["config"]),
                {str(k): Partition(v) for k, v in d["assignments"].items()},
                list(d["label_space_id"]),
                list(d["label_space_ood"]),
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"malformed split manifest: {exc}") from exc


def task_rng(cfg: SplitConfig, shift: ShiftType, task_id: str) -> random.Random:
    return random.Random(derive_seed(cfg.seed, shift.value, task_id))


def _dedup(files: Sequence[CodeFile]) -> list[CodeFile]:
    """Keep the lowest file_id per programmer."""
    seen, out = set(), []
    for f in sorted(files, key=lambda f: f.file_id):
        if f.programmer_id not in seen:
            seen.add(f.programmer_id)
            out.append(f)
    return out


def _fill_id(task_id: str, pool: Sequence[CodeFile], cfg: SplitConfig, rng: random.Random,
             out: dict[str, Partition]) -> None:
    """Shuffle ``pool`` and take the train then id_test quotas from it."""
    if cfg.dedup_per_programmer:
        pool = _dedup(pool)
    need = cfg.n_train_per_class + cfg.n_id_test_per_class
    if len(pool) < need:
        raise InsufficientFiles(task_id, f"ID pool has {len(pool)} files, {need} required")
    ids = sorted(f.file_id for f in pool)
    rng.shuffle(ids)
    for fid in ids[:cfg.n_train_per_class]:
        out[fid] = Partition.TRAIN
    for fid in ids[cfg.n_train_per_class:need]:
        out[fid] = Partition.ID_TEST


def _select_tasks(m: CorpusManifest, cfg: SplitConfig, shift: ShiftType) -> dict[str, list[CodeFile]]:
    groups = m.by_task()
    if len(groups) < cfg.n_id_classes:
        raise InsufficientTasks(f"{len(groups)} tasks available, {cfg.n_id_classes} required")
    if len(groups) == cfg.n_id_classes:
        return groups
    names = list(groups)
    random.Random(derive_seed(cfg.seed, shift.value, "__tasks__")).shuffle(names)
    return {t: groups[t] for t in sorted(names[:cfg.n_id_classes])}


def _ranked_split(m: CorpusManifest, cfg: SplitConfig, shift: ShiftType,
                  score: Callable[[str, list[CodeFile]], dict[str, float]]) -> SplitManifest:
    """Shared body of the time/token/cst splitters: top-scored files go OOD."""
    groups = _select_tasks(m, cfg, shift)
    out: dict[str, Partition] = {}
    for task_id, files in groups.items():
        if len(files) < cfg.quota:
            raise InsufficientFiles(task_id, f"{len(files)} files, {cfg.quota} required")
        scores = score(task_id, files)
        ranked = sorted(files, key=lambda f: (scores[f.file_id], f.file_id), reverse=True)
        for f in ranked[:cfg.n_ood_test_per_class]:
            out[f.file_id] = Partition.OOD_TEST
        _fill_id(task_id, ranked[cfg.n_ood_test_per_class:], cfg, task_rng(cfg, shift, task_id), out)
    labels = sorted(groups)
    return SplitManifest(shift, cfg, out, labels, list(labels))


def split_random(m: CorpusManifest, cfg: SplitConfig) -> SplitManifest:
    shift = ShiftType.RANDOM
    groups = _select_tasks(m, cfg, shift)
    out: dict[str, Partition] = {}
    for task_id, files in groups.items():
        pool = _dedup(files) if cfg.dedup_per_programmer else files
        if len(pool) < cfg.quota:
            raise InsufficientFiles(task_id, f"{len(pool)} files, {cfg.quota} required")
        ids = [f.file_id for f in pool]
        task_rng(cfg, shift, task_id).shuffle(ids)
        a, b = cfg.n_train_per_class, cfg.n_train_per_class + cfg.n_id_test_per_class
        for fid in ids[:a]:
            out[fid] = Partition.TRAIN
        for fid in ids[a:b]:
            out[fid] = Partition.ID_TEST
        for fid in ids[b:cfg.quota]:
            out[fid] = Partition.OOD_TEST
    labels = sorted(groups)
    return SplitManifest(shift, cfg, out, labels, list(labels))


def split_task(m: CorpusManifest, cfg: SplitConfig) -> SplitManifest:
    shift = ShiftType.TASK
    groups = m.by_task()
    need = cfg.n_id_classes + cfg.n_ood_classes
    if cfg.n_ood_classes <= 0:
        raise InsufficientTasks("task shift needs n_ood_classes > 0")
    if len(groups) < need:
        raise InsufficientTasks(f"{len(groups)} tasks available, {need} required")
    names = list(groups)
    random.Random(derive_seed(cfg.seed, shift.value, "__tasks__")).shuffle(names)
    id_tasks = sorted(names[:cfg.n_id_classes])
    ood_tasks = sorted(names[cfg.n_id_classes:need])

    out: dict[str, Partition] = {}
    for task_id in id_tasks:
        _fill_id(task_id, groups[task_id], cfg, task_rng(cfg, shift, task_id), out)
    for task_id in ood_tasks:
        files = groups[task_id]
        if len(files) < cfg.n_ood_test_per_class:
            raise InsufficientFiles(task_id, f"{len(files)} files, {cfg.n_ood_test_per_class} OOD required")
        ids = [f.file_id for f in files]
        task_rng(cfg, shift, task_id).shuffle(ids)
        for fid in ids[:cfg.n_ood_test_per_class]:
            out[fid] = Partition.OOD_TEST
    return SplitManifest(shift, cfg, out, id_tasks, ood_tasks)


@dataclass
class ProgrammerPartition:
    ood_programmers: list[str]
    ood_files: list[str]
    id_pool: list[CodeFile] = field(default_factory=list)


def programmer_partition(task_id: str, files: Sequence[CodeFile], cfg: SplitConfig) -> ProgrammerPartition:
    """Pick whole programmers for OOD, then build the ID pool from the rest.

    Programmers are walked in seeded order until the OOD quota is reached;
    the last one's files are cut to the exact quota in file_id order. Only
    the remaining programmers with two or more submissions may enter ID.
    """
    by_prog: dict[str, list[CodeFile]] = defaultdict(list)
    for f in sorted(files, key=lambda f: f.file_id):
        by_prog[f.programmer_id].append(f)
    order = sorted(by_prog)
    if len(order) < 2:
        raise InsufficientProgrammers(task_id, f"{len(order)} programmer(s)")
    task_rng(cfg, ShiftType.PROGRAMMER, task_id).shuffle(order)

    taken: list[str] = []
    ood: list[str] = []
    for p in order:
        if len(ood) >= cfg.n_ood_test_per_class:
            break
        taken.append(p)
        ood.extend(f.file_id for f in by_prog[p])
    if len(ood) < cfg.n_ood_test_per_class:
        raise InsufficientFiles(task_id, f"{len(ood)} files for OOD, {cfg.n_ood_test_per_class} required")
    ood = ood[:cfg.n_ood_test_per_class]
    rest = [p for p in order if p not in set(taken)]
    pool = [f for p in sorted(rest) if len(by_prog[p]) >= 2 for f in by_prog[p]]
    if not pool:
        raise InsufficientProgrammers(task_id, "no programmer with two or more submissions left for ID")
    return ProgrammerPartition(taken, ood, pool)


def split_programmer(m: CorpusManifest, cfg: SplitConfig) -> SplitManifest:
    shift = ShiftType.PROGRAMMER
    groups = _select_tasks(m, cfg, shift)
    out: dict[str, Partition] = {}
    for task_id, files in groups.items():
        part = programmer_partition(task_id, files, cfg)
        for fid in part.ood_files:
            out[fid] = Partition.OOD_TEST
        # a second stream so the ID shuffle is independent of the programmer walk
        rng = random.Random(derive_seed(cfg.seed, shift.value, task_id, "id"))
        _fill_id(task_id, part.id_pool, cfg, rng, out)
    labels = sorted(groups)
    return SplitManifest(shift, cfg, out, labels, list(labels))


def split_time(m: CorpusManifest, cfg: SplitConfig) -> SplitManifest:
    missing = [f.file_id for f in m.files if f.timestamp is None]
    if missing:
        raise MissingTimestamps(f"{len(missing)} of {len(m)} files have no timestamp (e.g. {missing[0]!r})")
    return _ranked_split(m, cfg, ShiftType.TIME, lambda _t, files: {f.file_id: f.timestamp for f in files})


def split_token(m: CorpusManifest, histograms: Mapping[str, TokenHistogram],
                seqs: Mapping[str, TokenSeq], cfg: SplitConfig, include_comments: bool = False) -> SplitManifest:
    """Files whose distinct tokens are rarest within their task go OOD."""

    def score(task_id: str, files: list[CodeFile]) -> dict[str, float]:
        h = histograms.get(task_id)
        if h is None:
            raise HistogramMismatch(f"no histogram for task {task_id!r}")
        if h.n_files != len(files):
            raise HistogramMismatch(f"histogram for {task_id!r} covers {h.n_files} files, task has {len(files)}")
        out = {}
        for f in files:
            if f.file_id not in seqs:
                raise HistogramMismatch(f"no token sequence for {f.file_id!r}")
            out[f.file_id] = token_rarity(h, seqs[f.file_id], include_comments)
        return out

    return _ranked_split(m, cfg, ShiftType.TOKEN, score)


def split_cst(m: CorpusManifest, matrices: Mapping[str, DistanceMatrix], cfg: SplitConfig) -> SplitManifest:
    """Files with the greatest average tree distance to their task go OOD."""

    def score(task_id: str, files: list[CodeFile]) -> dict[str, float]:
        mat = matrices.get(task_id)
        if mat is None:
            raise MatrixMismatch(f"no distance matrix for task {task_id!r}")
        if sorted(mat.file_ids) != [f.file_id for f in files]:
            raise MatrixMismatch(f"distance matrix for {task_id!r} does not cover exactly the task's files")
        return mat.avg_by_file()

    return _ranked_split(m, cfg, ShiftType.CST, score)


def make_split(shift: ShiftType | str, m: CorpusManifest, cfg: SplitConfig, *,
               histograms: Mapping[str, TokenHistogram] | None = None,
               seqs: Mapping[str, TokenSeq] | None = None,
               matrices: Mapping[str, DistanceMatrix] | None = None) -> SplitManifest:
    shift = ShiftType(shift)
    if shift is ShiftType.RANDOM:
        return split_random(m, cfg)
    if shift is ShiftType.TASK:
        return split_task(m, cfg)
    if shift is ShiftType.PROGRAMMER:
        return split_programmer(m, cfg)
    if shift is ShiftType.TIME:
        return split_time(m, cfg)
    if shift is ShiftType.TOKEN:
        if histograms is None or seqs is None:
            raise HistogramMismatch("token shift needs histograms and token sequences")
        return split_token(m, histograms, seqs, cfg)
    if matrices is None:
        raise MatrixMismatch("cst shift needs distance matrices")
    return split_cst(m, matrices, cfg)
