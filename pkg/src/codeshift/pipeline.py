"""End-to-end experiment: corpus -> tokens/trees -> split -> train -> score -> report.

Used by the ``pipeline`` subcommand and importable for programmatic runs.
"""

from __future__ import annotations

import logging
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .checks import check_split
from .config import ShiftType, SplitConfig, derive_seed, split_config_from_mapping
from .corpus import CodeFile, CorpusManifest, ingest_corpus
from .cst import CstTree, DistanceMatrix, distance_matrix, load_external_tree, parse_structural, to_sexpr
from .detect import DEFAULT_TEMPERATURE, Detector, ScoreRecord, score_split
from .errors import CodeShiftError, ConfigError, DataError, ValidationError
from .evaluate import EvalReport, degradation_report, to_csv, to_markdown
from .io import parallel_map, write_atomic, write_json, write_jsonl
from .lexer import TokenHistogram, TokenSeq, build_histogram, tokenize_file
from .refmodel import (
    DEFAULTS,
    SoftmaxModel,
    build_vocab,
    extract_features,
    features_rows,
    logits_rows,
    predict_logits,
    train_softmax,
    train_softmax_oe,
    vectorize_many,
)
from .splitgen import Partition, SplitManifest, make_split

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

log = logging.getLogger(__name__)

ALL_SHIFTS = [s.value for s in ShiftType]


@dataclass
class TrainParams:
    epochs: int = DEFAULTS["epochs"]
    lr: float = DEFAULTS["lr"]
    l2: float = DEFAULTS["l2"]
    lambda_oe: float = DEFAULTS["lambda_oe"]
    normalize: bool = True


@dataclass
class PipelineConfig:
    root: Path
    manifest: Path
    corpus_id: str | None = None
    shifts: list[str] = field(default_factory=lambda: list(ALL_SHIFTS))
    split: dict = field(default_factory=dict)
    train: TrainParams = field(default_factory=TrainParams)
    outlier_tasks: list[str] = field(default_factory=list)
    outlier_holdout: float = 0.5
    temperature: float = DEFAULT_TEMPERATURE
    epsilon: float | None = None
    seed: int = 0
    max_error_rate: float = 0.0
    external_trees: Path | None = None

    def split_config(self, shift: ShiftType | str, seed: int | None = None) -> SplitConfig:
        return split_config_from_mapping(self.split, shift, self.seed if seed is None else seed)


def load_pipeline_config(path) -> PipelineConfig:
    path = Path(path)
    try:
        data = tomllib.loads(path.read_text(encoding="utf-8"))
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    base = path.parent
    corpus = data.get("corpus", {})
    try:
        root = base / corpus["root"]
        manifest = base / corpus["manifest"]
    except KeyError as exc:
        raise ConfigError(f"[corpus] needs {exc.args[0]!r}") from None
    try:
        train = TrainParams(**data.get("train", {}))
    except TypeError as exc:
        raise ConfigError(f"[train]: {exc}") from None
    oe = data.get("oe", {})
    det = data.get("detect", {})
    shifts = data.get("shifts", ALL_SHIFTS)
    for s in shifts:
        try:
            ShiftType(s)
        except ValueError:
            raise ConfigError(f"unknown shift {s!r}") from None
    ext = corpus.get("external_trees")
    return PipelineConfig(
        root=root, manifest=manifest, corpus_id=corpus.get("id"), shifts=list(shifts),
        split=data.get("split", {}), train=train, outlier_tasks=list(oe.get("outlier_tasks", [])),
        outlier_holdout=float(oe.get("holdout", 0.5)), temperature=float(det.get("temperature", DEFAULT_TEMPERATURE)),
        epsilon=det.get("epsilon"), seed=int(data.get("seed", 0)),
        max_error_rate=float(data.get("max_error_rate", 0.0)),
        external_trees=base / ext if ext else None,
    )


# ----------------------------------------------------------------- stages

def _lex_one(f: CodeFile):
    try:
        return tokenize_file(f)
    except DataError as exc:
        return exc


def tokenize_corpus(m: CorpusManifest, jobs: int = 1, max_error_rate: float = 0.0) -> dict[str, TokenSeq]:
    """Token sequences keyed by file_id. Lex failures above ``max_error_rate``
    abort; below it the failing files are dropped with a warning."""
    results = parallel_map(_lex_one, list(m.files), jobs)
    return _collect(m, results, max_error_rate, "lex")


def _collect(m: CorpusManifest, results, max_error_rate: float, what: str) -> dict:
    failures = [(f.file_id, r) for f, r in zip(m.files, results) if isinstance(r, CodeShiftError)]
    if failures:
        rate = len(failures) / max(1, len(m.files))
        fid, err = failures[0]
        if rate > max_error_rate:
            raise type(err)(*err.args) if not hasattr(err, "line") else err.__class__(err.line, err.col,
                                                                                     f"{fid}: {err.reason}")
        for fid, err in failures:
            log.warning("%s failure in %s: %s (dropped)", what, fid, err)
    return {f.file_id: r for f, r in zip(m.files, results) if not isinstance(r, CodeShiftError)}


def task_histograms(m: CorpusManifest, seqs: Mapping[str, TokenSeq]) -> dict[str, TokenHistogram]:
    return {t: build_histogram([seqs[f.file_id] for f in files], t) for t, files in m.by_task().items()}


def _parse_one(args):
    seq, lang = args
    try:
        return parse_structural(seq, lang)
    except DataError as exc:
        return exc


def parse_corpus(m: CorpusManifest, seqs: Mapping[str, TokenSeq], jobs: int = 1,
                 max_error_rate: float = 0.0, external_dir: Path | None = None) -> dict[str, CstTree]:
    if external_dir is not None:
        return {f.file_id: load_external_tree(Path(external_dir) / f"{f.file_id}.sexp", f.file_id) for f in m.files}
    results = parallel_map(_parse_one, [(seqs[f.file_id], f.language) for f in m.files], jobs)
    return _collect(m, results, max_error_rate, "parse")


def task_matrices(m: CorpusManifest, trees: Mapping[str, CstTree], jobs: int = 1) -> dict[str, DistanceMatrix]:
    return {t: distance_matrix([trees[f.file_id] for f in files], t, jobs) for t, files in m.by_task().items()}


def outlier_partition(m: CorpusManifest, tasks: Sequence[str], seed: int, holdout: float = 0.5) -> tuple[list[str], list[str]]:
    """(OE training ids, held-out ids) drawn per outlier task."""
    train, held = [], []
    groups = m.by_task()
    for t in sorted(tasks):
        if t not in groups:
            raise ValidationError(f"outlier task {t!r} not in corpus")
        ids = [f.file_id for f in groups[t]]
        random.Random(derive_seed(seed, "outliers", t)).shuffle(ids)
        k = len(ids) - int(round(len(ids) * holdout))
        train += sorted(ids[:k])
        held += sorted(ids[k:])
    return train, held


@dataclass
class Prepared:
    corpus: CorpusManifest          # class tasks only
    full: CorpusManifest            # including outlier tasks
    seqs: dict[str, TokenSeq]
    histograms: dict[str, TokenHistogram]
    trees: dict[str, CstTree] | None = None
    matrices: dict[str, DistanceMatrix] | None = None


def prepare(cfg: PipelineConfig, jobs: int = 1, need_trees: bool | None = None) -> Prepared:
    full = ingest_corpus(cfg.root, cfg.manifest, cfg.corpus_id, jobs)
    seqs = tokenize_corpus(full, jobs, cfg.max_error_rate)
    full = full.subset(seqs)
    corpus = full.without_tasks(cfg.outlier_tasks)
    prep = Prepared(corpus, full, seqs, task_histograms(corpus, seqs))
    if need_trees if need_trees is not None else "cst" in cfg.shifts:
        trees = parse_corpus(corpus, seqs, jobs, cfg.max_error_rate, cfg.external_trees)
        corpus = corpus.subset(trees)
        prep.corpus = corpus
        prep.histograms = task_histograms(corpus, seqs)
        prep.trees = trees
        prep.matrices = task_matrices(corpus, trees, jobs)
    return prep


@dataclass
class ShiftResult:
    split: SplitManifest
    model: SoftmaxModel
    oe_model: SoftmaxModel | None
    logits: dict[str, tuple[str, np.ndarray]]
    features: dict[str, np.ndarray]
    oe_logits: dict[str, tuple[str, np.ndarray]] | None
    scores: dict[str, list[ScoreRecord] | None]
    report: EvalReport
    id_preds: dict[str, str]
    ood_preds: dict[str, str]


def predict_labels(model: SoftmaxModel, logits: Mapping[str, tuple[str, np.ndarray]], ids: Sequence[str]) -> dict[str, str]:
    return {f: model.classes[int(np.argmax(logits[f][1]))] for f in ids}


def fit_models(prep: Prepared, split: SplitManifest, params: TrainParams, seed: int,
               outlier_ids: Sequence[str] = ()) -> tuple[SoftmaxModel, SoftmaxModel | None, object]:
    files = prep.full.by_id()
    train_ids = split.files_in(Partition.TRAIN)
    vocab = build_vocab([prep.seqs[f] for f in train_ids])
    X = vectorize_many([prep.seqs[f] for f in train_ids], vocab, params.normalize)
    y = [files[f].task_id for f in train_ids]
    classes = sorted(split.label_space_id)
    hyper = dict(epochs=params.epochs, lr=params.lr, l2=params.l2, seed=seed)
    model = train_softmax(X, y, classes=classes, **hyper)
    oe_model = None
    if outlier_ids:
        U = vectorize_many([prep.seqs[f] for f in outlier_ids], vocab, params.normalize)
        oe_model = train_softmax_oe(X, y, U, classes=classes, lambda_oe=params.lambda_oe, **hyper)
    return model, oe_model, vocab


def infer(model: SoftmaxModel, vocab, prep: Prepared, ids: Sequence[str], normalize: bool):
    files = prep.full.by_id()
    X = vectorize_many([prep.seqs[f] for f in ids], vocab, normalize)
    L = predict_logits(model, X) if len(ids) else np.zeros((0, len(model.classes)))
    F = extract_features(model, X) if len(ids) else L
    logits = {f: (files[f].task_id, L[i]) for i, f in enumerate(ids)}
    feats = {f: F[i] for i, f in enumerate(ids)}
    return logits, feats


def run_shift(prep: Prepared, cfg: PipelineConfig, shift: ShiftType | str, seed: int) -> ShiftResult:
    shift = ShiftType(shift)
    split_cfg = cfg.split_config(shift, seed)
    split = make_split(shift, prep.corpus, split_cfg, histograms=prep.histograms, seqs=prep.seqs,
                       matrices=prep.matrices)
    problems = check_split(split, prep.corpus, prep.matrices if shift is ShiftType.CST else None)
    if problems:
        raise ValidationError(f"{shift.value} split failed validation: {problems[0]}")

    oe_train = outlier_partition(prep.full, cfg.outlier_tasks, seed, cfg.outlier_holdout)[0] if cfg.outlier_tasks else []
    model, oe_model, vocab = fit_models(prep, split, cfg.train, seed, oe_train)
    ids = sorted(split.assignments)
    logits, feats = infer(model, vocab, prep, ids, cfg.train.normalize)

    scores: dict[str, list[ScoreRecord] | None] = {}
    scores["msp"] = score_split(split, logits, None, Detector.MSP)
    scores["odin"] = score_split(split, logits, None, Detector.ODIN, temperature=cfg.temperature)
    try:
        scores["mahalanobis"] = score_split(split, logits, feats, Detector.MAHALANOBIS, epsilon=cfg.epsilon)
    except ValidationError as exc:
        log.warning("mahalanobis unavailable on %s split: %s", shift.value, exc)
        scores["mahalanobis"] = None
    oe_logits = None
    if oe_model is not None:
        oe_logits, _ = infer(oe_model, vocab, prep, ids, cfg.train.normalize)
        scores["oe"] = score_split(split, oe_logits, None, Detector.OE)
    else:
        scores["oe"] = None

    truth = {f: lab for f, (lab, _) in logits.items()}
    id_preds = predict_labels(model, logits, split.files_in(Partition.ID_TEST))
    ood_preds = predict_labels(model, logits, split.files_in(Partition.OOD_TEST))
    report = degradation_report(prep.corpus.corpus_id, shift, id_preds, ood_preds, truth, scores)
    return ShiftResult(split, model, oe_model, logits, feats, oe_logits, scores, report, id_preds, ood_preds)


def write_shift_artifacts(res: ShiftResult, out: Path) -> None:
    res.split.write(out / "split.json")
    write_json(out / "model.json", res.model.to_dict())
    ids = sorted(res.logits)
    write_jsonl(out / "logits.jsonl", logits_rows(ids, [res.logits[f][0] for f in ids],
                                                   np.array([res.logits[f][1] for f in ids])))
    write_jsonl(out / "features.jsonl", features_rows(ids, np.array([res.features[f] for f in ids])))
    if res.oe_model is not None:
        write_json(out / "model_oe.json", res.oe_model.to_dict())
        write_jsonl(out / "logits_oe.jsonl", logits_rows(ids, [res.oe_logits[f][0] for f in ids],
                                                          np.array([res.oe_logits[f][1] for f in ids])))
    for det, recs in res.scores.items():
        if recs is not None:
            write_jsonl(out / f"scores_{det}.jsonl", [r.to_dict() for r in recs])
    write_json(out / "report.json", res.report.to_dict())


def run_pipeline(cfg: PipelineConfig, out_dir, seed: int | None = None, jobs: int = 1) -> list[EvalReport]:
    seed = cfg.seed if seed is None else seed
    out = Path(out_dir)
    prep = prepare(cfg, jobs)
    prep.corpus.write(out / "corpus.jsonl")
    write_jsonl(out / "tokens.jsonl", [prep.seqs[f.file_id].to_dict() for f in prep.full.files])
    write_json(out / "histograms.json", [h.to_dict() for _, h in sorted(prep.histograms.items())])
    if prep.trees is not None:
        write_jsonl(out / "trees.jsonl", [{"file_id": f, "tree": to_sexpr(prep.trees[f])} for f in sorted(prep.trees)])
        write_json(out / "matrices.json", [m.to_dict() for _, m in sorted(prep.matrices.items())])
    reports = []
    for shift in cfg.shifts:
        log.info("running %s shift", shift)
        res = run_shift(prep, cfg, shift, seed)
        write_shift_artifacts(res, out / shift)
        reports.append(res.report)
    write_json(out / "report.json", [r.to_dict() for r in reports])
    write_atomic(out / "report.md", to_markdown(reports))
    write_atomic(out / "report.csv", to_csv(reports))
    return reports
