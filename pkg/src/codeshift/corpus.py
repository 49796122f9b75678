"""Corpus ingestion: a JSONL metadata manifest plus the source files it names."""

from __future__ import annotations

import enum
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .config import ShiftType, SplitConfig
from .errors import (
    CodeShiftError,
    DuplicateId,
    EmptySource,
    EmptyTask,
    InvalidEncoding,
    MissingFile,
    SchemaError,
)
from .io import dumps, iter_jsonl, parallel_map, write_atomic

log = logging.getLogger(__name__)


class Language(str, enum.Enum):
    PYTHON = "python"
    JAVA = "java"
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CodeFile:
    file_id: str
    path: str
    language: Language
    task_id: str
    programmer_id: str
    source: str = field(repr=False)
    timestamp: int | None = None

    def __post_init__(self):
        if not self.task_id:
            raise EmptyTask(f"file {self.file_id!r} has no task_id")
        if not self.source:
            raise EmptySource(f"file {self.file_id!r} is empty")

    def descriptor(self) -> dict:
        return {
            "file_id": self.file_id,
            "path": self.path,
            "language": self.language.value,
            "task_id": self.task_id,
            "programmer_id": self.programmer_id,
            "timestamp": self.timestamp,
        }


@dataclass(frozen=True)
class CorpusManifest:
    files: tuple[CodeFile, ...]
    language_default: Language = Language.PYTHON
    corpus_id: str = "corpus"

    def __post_init__(self):
        ordered = tuple(sorted(self.files, key=lambda f: f.file_id))
        seen = set()
        for f in ordered:
            if f.file_id in seen:
                raise DuplicateId(f"duplicate file_id {f.file_id!r}")
            seen.add(f.file_id)
        object.__setattr__(self, "files", ordered)

    def __len__(self) -> int:
        return len(self.files)

    def by_id(self) -> dict[str, CodeFile]:
        return {f.file_id: f for f in self.files}

    def by_task(self) -> dict[str, list[CodeFile]]:
        """Files grouped per task, tasks in sorted order, files in file_id order."""
        groups: dict[str, list[CodeFile]] = defaultdict(list)
        for f in self.files:
            groups[f.task_id].append(f)
        return {t: groups[t] for t in sorted(groups)}

    @property
    def task_ids(self) -> list[str]:
        return sorted({f.task_id for f in self.files})

    def subset(self, keep: Iterable[str]) -> "CorpusManifest":
        keep = set(keep)
        return CorpusManifest(tuple(f for f in self.files if f.file_id in keep),
                              self.language_default, self.corpus_id)

    def without_tasks(self, tasks: Iterable[str]) -> "CorpusManifest":
        tasks = set(tasks)
        return CorpusManifest(tuple(f for f in self.files if f.task_id not in tasks),
                              self.language_default, self.corpus_id)

    def serialize(self) -> str:
        rows = []
        for f in self.files:
            d = f.descriptor()
            d["corpus_id"] = self.corpus_id
            rows.append(dumps(d) + "\n")
        return "".join(rows)

    def write(self, path) -> None:
        write_atomic(path, self.serialize())


_REQUIRED = ("file_id", "path", "task_id")


def _parse_line(obj: dict, where: str) -> dict:
    for key in _REQUIRED:
        if key not in obj:
            if key == "task_id":
                raise EmptyTask(f"{where}: task_id missing")
            raise SchemaError(f"{where}: missing field {key!r}")
    if not obj["task_id"]:
        raise EmptyTask(f"{where}: task_id is empty")
    ts = obj.get("timestamp")
    if ts is not None and (isinstance(ts, bool) or not isinstance(ts, int)):
        raise SchemaError(f"{where}: timestamp must be an integer or null")
    try:
        lang = Language(obj.get("language", "other"))
    except ValueError:
        raise SchemaError(f"{where}: unknown language {obj.get('language')!r}") from None
    return {
        "file_id": str(obj["file_id"]),
        "path": str(obj["path"]),
        "language": lang,
        "task_id": str(obj["task_id"]),
        "programmer_id": str(obj.get("programmer_id") or ""),
        "timestamp": ts,
    }


def _read_source(args: tuple[str, str]) -> str | CodeShiftError:
    full, file_id = args
    try:
        raw = Path(full).read_bytes()
    except FileNotFoundError:
        return MissingFile(f"file {file_id!r}: {full} does not exist")
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        return InvalidEncoding(f"file {file_id!r}: not valid UTF-8 ({exc.reason} at byte {exc.start})")


def ingest_corpus(root_dir, manifest_path, corpus_id: str | None = None, jobs: int = 1) -> CorpusManifest:
    """Read ``manifest_path`` and every source it references under ``root_dir``.

    Any unreadable, missing or non-UTF-8 file aborts ingestion.
    """
    root = Path(root_dir)
    entries = []
    for i, obj in enumerate(iter_jsonl(manifest_path), 1):
        entries.append(_parse_line(obj, f"{manifest_path}:{i}"))
        if corpus_id is None and obj.get("corpus_id"):
            corpus_id = str(obj["corpus_id"])
    if corpus_id is None:
        corpus_id = Path(manifest_path).stem

    seen: set[str] = set()
    for e in entries:
        if e["file_id"] in seen:
            raise DuplicateId(f"duplicate file_id {e['file_id']!r}")
        seen.add(e["file_id"])

    sources = parallel_map(_read_source, [(str(root / e["path"]), e["file_id"]) for e in entries], jobs)
    files = []
    for e, src in zip(entries, sources):
        if isinstance(src, CodeShiftError):
            raise src
        files.append(CodeFile(source=src, **e))

    langs = Counter(f.language for f in files)
    default = min(langs, key=lambda l: (-langs[l], l.value)) if langs else Language.PYTHON
    m = CorpusManifest(tuple(files), default, corpus_id)
    log.info("ingested %d files over %d tasks", len(m), len(m.task_ids))
    return m


@dataclass
class TaskFeasibility:
    task_id: str
    feasible: bool
    reasons: list[str] = field(default_factory=list)


@dataclass
class ValidationReport:
    shift: ShiftType
    tasks: list[TaskFeasibility]
    problems: list[str] = field(default_factory=list)  # corpus-wide issues

    @property
    def ok(self) -> bool:
        return not self.problems and all(t.feasible for t in self.tasks)

    @property
    def infeasible(self) -> list[str]:
        return [t.task_id for t in self.tasks if not t.feasible]

    def to_dict(self) -> dict:
        return {
            "shift": self.shift.value,
            "ok": self.ok,
            "problems": self.problems,
            "tasks": [{"task_id": t.task_id, "feasible": t.feasible, "reasons": t.reasons} for t in self.tasks],
        }


def validate_manifest(m: CorpusManifest, shift: ShiftType | str, cfg: SplitConfig) -> ValidationReport:
    """Check, task by task, whether ``cfg`` can be satisfied for ``shift``.

    Never raises; callers decide whether an infeasible task is fatal.
    """
    from . import splitgen  # the programmer check replays the splitter's walk

    shift = ShiftType(shift)
    groups = m.by_task()
    report = ValidationReport(shift, [])
    id_need = cfg.n_train_per_class + cfg.n_id_test_per_class

    if shift is ShiftType.TASK:
        need = cfg.n_id_classes + cfg.n_ood_classes
        if len(groups) < need:
            report.problems.append(f"{len(groups)} tasks available, {need} required")
        for task_id, files in groups.items():
            n = len(files)
            reasons = []
            if n < min(id_need, cfg.n_ood_test_per_class):
                reasons.append(f"{n} files; cannot fill an ID ({id_need}) or OOD ({cfg.n_ood_test_per_class}) quota")
            report.tasks.append(TaskFeasibility(task_id, not reasons, reasons))
        if not report.problems:
            id_ok = sum(len(f) >= id_need for f in groups.values())
            if id_ok < cfg.n_id_classes:
                report.problems.append(f"only {id_ok} tasks can serve as ID classes")
        return report

    if len(groups) < cfg.n_id_classes:
        report.problems.append(f"{len(groups)} tasks available, {cfg.n_id_classes} required")

    for task_id, files in groups.items():
        reasons = []
        if len(files) < cfg.quota:
            reasons.append(f"{len(files)} files, {cfg.quota} required")
        if shift is ShiftType.TIME:
            missing = sum(f.timestamp is None for f in files)
            if missing:
                reasons.append(f"{missing} files lack timestamps")
        elif shift is ShiftType.PROGRAMMER:
            progs = {f.programmer_id for f in files}
            if len(progs) < 2:
                reasons.append(f"{len(progs)} distinct programmer(s), at least 2 required")
            elif not reasons:
                try:
                    splitgen.programmer_partition(task_id, files, cfg)
                except CodeShiftError as exc:
                    reasons.append(str(exc))
        report.tasks.append(TaskFeasibility(task_id, not reasons, reasons))
    return report
