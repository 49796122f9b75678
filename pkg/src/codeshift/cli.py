"""Command-line front end. Stages talk to each other only through files."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .checks import check_split
from .config import U64_MAX, ShiftType, SplitConfig, load_split_config, profile_config, split_config_from_mapping
from .corpus import CorpusManifest, ingest_corpus, validate_manifest
from .cst import distance_matrix, parse_sexpr, to_sexpr
from .detect import DEFAULT_TEMPERATURE, Detector, score_split
from .errors import CodeShiftError, ConfigError, SchemaError, ValidationError
from .evaluate import EvalReport, degradation_report, to_csv, to_markdown
from .io import iter_jsonl, read_json, write_atomic, write_json, write_jsonl
from .lexer import TokenSeq
from .pipeline import (
    load_pipeline_config,
    outlier_partition,
    parse_corpus,
    predict_labels,
    run_pipeline,
    task_histograms,
    task_matrices,
    tokenize_corpus,
)
from .refmodel import (
    DEFAULTS,
    SoftmaxModel,
    build_vocab,
    extract_features,
    features_rows,
    load_features,
    load_logits,
    load_model,
    logits_rows,
    predict_logits,
    train_softmax,
    train_softmax_oe,
    vectorize_many,
)
from .splitgen import Partition, SplitManifest, make_split

log = logging.getLogger("codeshift")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v <= U64_MAX:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=_u64, default=d(None), help="random seed (unsigned 64-bit)")
    parser.add_argument("--jobs", type=_positive, default=d(1), help="worker processes")
    parser.add_argument("--log-level", default=d("WARNING"), help="overridden by $CODESHIFT_LOG")
    parser.add_argument("--max-error-rate", type=float, default=d(0.0),
                        help="fraction of files allowed to fail lexing/parsing before exit 4")


# ----------------------------------------------------------------- loaders

def _corpus(args) -> CorpusManifest:
    return ingest_corpus(args.root, args.corpus, jobs=args.jobs)


def _tokens(path) -> dict[str, TokenSeq]:
    seqs = {}
    for row in iter_jsonl(path):
        try:
            seq = TokenSeq.from_dict(row)
        except (KeyError, ValueError, TypeError) as exc:
            raise SchemaError(f"{path}: bad token record: {exc}") from exc
        seqs[seq.file_id] = seq
    return seqs


def _trees(path):
    return {row["file_id"]: parse_sexpr(row["tree"], row["file_id"]) for row in iter_jsonl(path)}


def _split(path) -> SplitManifest:
    return SplitManifest.from_dict(read_json(path))


def _split_config(args, shift: ShiftType) -> SplitConfig:
    seed = args.seed if args.seed is not None else 0
    if args.config:
        cfg = load_split_config(args.config, shift)
        return cfg.with_seed(seed) if args.seed is not None else cfg
    if args.profile:
        return profile_config(args.profile, shift, seed)
    fields = {k: getattr(args, k) for k in ("n_id_classes", "n_ood_classes", "n_train_per_class",
                                            "n_id_test_per_class", "n_ood_test_per_class")
              if getattr(args, k) is not None}
    fields["dedup_per_programmer"] = args.dedup_per_programmer
    return split_config_from_mapping(fields, shift, seed)


# ----------------------------------------------------------------- commands

def cmd_ingest(args) -> int:
    m = ingest_corpus(args.root, args.manifest, args.corpus_id, args.jobs)
    m.write(args.out)
    log.info("wrote %d files to %s", len(m), args.out)
    return 0


def cmd_tokenize(args) -> int:
    m = _corpus(args)
    seqs = tokenize_corpus(m, args.jobs, args.max_error_rate)
    write_jsonl(args.out, [seqs[f.file_id].to_dict() for f in m.files if f.file_id in seqs])
    if args.histograms:
        hist = task_histograms(m.subset(seqs), seqs)
        write_json(args.histograms, [h.to_dict() for _, h in sorted(hist.items())])
    return 0


def cmd_parse(args) -> int:
    m = _corpus(args)
    seqs = _tokens(args.tokens)
    m = m.subset(seqs)
    trees = parse_corpus(m, seqs, args.jobs, args.max_error_rate, args.external_dir)
    write_jsonl(args.out, [{"file_id": f, "tree": to_sexpr(trees[f])} for f in sorted(trees)])
    if args.matrices:
        mats = task_matrices(m.subset(trees), trees, args.jobs)
        write_json(args.matrices, [x.to_dict() for _, x in sorted(mats.items())])
    return 0


def cmd_split(args) -> int:
    shift = ShiftType(args.shift)
    m = _corpus(args)
    if args.exclude_tasks:
        m = m.without_tasks(args.exclude_tasks.split(","))
    cfg = _split_config(args, shift)
    report = validate_manifest(m, shift, cfg)
    if args.validation_report:
        write_json(args.validation_report, report.to_dict())
    if shift is ShiftType.TIME and any(f.timestamp is None for f in m.files):
        from .errors import MissingTimestamps
        raise MissingTimestamps(f"{sum(f.timestamp is None for f in m.files)} files have no timestamp")
    seqs = hist = matrices = None
    if args.tokens:
        seqs = _tokens(args.tokens)
        m = m.subset(seqs)
        hist = task_histograms(m, seqs)
    if shift is ShiftType.TOKEN and seqs is None:
        raise ConfigError("--shift token requires --tokens")
    if shift is ShiftType.CST:
        if not args.trees:
            raise ConfigError("--shift cst requires --trees")
        trees = _trees(args.trees)
        m = m.subset(trees)
        matrices = task_matrices(m, trees, args.jobs)
    split = make_split(shift, m, cfg, histograms=hist, seqs=seqs, matrices=matrices)
    problems = check_split(split, m, matrices)
    if problems:
        raise ValidationError(f"emitted split failed validation: {problems[0]}")
    split.write(args.out)
    return 0


def _training_data(args):
    m = _corpus(args)
    seqs = _tokens(args.tokens)
    split = _split(args.split)
    files = m.by_id()
    return m, seqs, split, files


def cmd_train(args) -> int:
    m, seqs, split, files = _training_data(args)
    train_ids = split.files_in(Partition.TRAIN)
    vocab = build_vocab([seqs[f] for f in train_ids])
    X = vectorize_many([seqs[f] for f in train_ids], vocab, not args.raw_counts)
    y = [files[f].task_id for f in train_ids]
    seed = args.seed if args.seed is not None else 0
    hyper = dict(classes=sorted(split.label_space_id), epochs=args.epochs, lr=args.lr, l2=args.l2, seed=seed)
    if args.oe:
        tasks = args.outlier_tasks.split(",") if args.outlier_tasks else []
        if not tasks:
            raise ConfigError("--oe requires --outlier-tasks")
        oe_ids, _ = outlier_partition(m, tasks, seed, args.outlier_holdout)
        U = vectorize_many([seqs[f] for f in oe_ids], vocab, not args.raw_counts)
        model = train_softmax_oe(X, y, U, lambda_oe=args.lambda_oe, **hyper)
    else:
        model = train_softmax(X, y, **hyper)
    model.meta["normalize"] = not args.raw_counts
    model.meta["vocab"] = [list(k) for k in vocab.tokens()]
    write_json(args.out, model.to_dict())
    return 0


def cmd_infer(args) -> int:
    from .refmodel import Vocabulary
    m, seqs, split, files = _training_data(args)
    model = load_model(args.model)
    vocab = Vocabulary({tuple(k): i for i, k in enumerate(model.meta.get("vocab", []))})
    if vocab.size + 1 != model.n_features:
        raise SchemaError("model file does not carry a vocabulary matching its weights")
    ids = sorted(split.assignments)
    X = vectorize_many([seqs[f] for f in ids], vocab, bool(model.meta.get("normalize", True)))
    L = predict_logits(model, X)
    write_jsonl(args.out, logits_rows(ids, [files[f].task_id for f in ids], L))
    if args.features:
        write_jsonl(args.features, features_rows(ids, extract_features(model, X)))
    return 0


def cmd_score(args) -> int:
    split = _split(args.split)
    det = Detector(args.detector)
    if det is Detector.MAHALANOBIS and not (args.features and args.logits):
        raise ConfigError("mahalanobis needs --features and --logits (the logits supply training labels)")
    if det is not Detector.MAHALANOBIS and not args.logits:
        raise ConfigError(f"{det.value} needs --logits")
    logits = load_logits(args.logits) if args.logits else None
    feats = load_features(args.features, args.feature_dim) if args.features else None
    recs = score_split(split, logits, feats, det, temperature=args.temperature, epsilon=args.epsilon)
    write_jsonl(args.out, [r.to_dict() for r in recs])
    return 0


def cmd_evaluate(args) -> int:
    from .detect import ScoreRecord
    split = _split(args.split)
    logits = load_logits(args.logits)
    classes = sorted(split.label_space_id)
    model = SoftmaxModel(classes, np.zeros((len(classes), 1)), np.zeros(len(classes)))
    truth = {f: lab for f, (lab, _) in logits.items()}
    id_preds = predict_labels(model, logits, split.files_in(Partition.ID_TEST))
    ood_preds = predict_labels(model, logits, split.files_in(Partition.OOD_TEST))
    score_sets = {d.value: None for d in Detector}
    for path in args.scores or []:
        recs = [ScoreRecord.from_dict(r) for r in iter_jsonl(path)]
        if recs:
            score_sets[recs[0].detector.value] = recs
    report = degradation_report(args.corpus_id, split.shift, id_preds, ood_preds, truth, score_sets)
    write_json(args.out, report.to_dict())
    return 0


def cmd_report(args) -> int:
    reports = []
    for path in args.reports:
        data = read_json(path)
        for d in data if isinstance(data, list) else [data]:
            reports.append(EvalReport.from_dict(d))
    if args.format == "md":
        text = to_markdown(reports)
    elif args.format == "csv":
        text = to_csv(reports)
    else:
        import json
        text = json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2) + "\n"
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_pipeline(args) -> int:
    cfg = load_pipeline_config(args.config)
    if args.max_error_rate:
        cfg.max_error_rate = args.max_error_rate
    reports = run_pipeline(cfg, args.out_dir, args.seed, args.jobs)
    sys.stdout.write(to_markdown(reports))
    return 0


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="codeshift", description="Distribution-shift splits and OOD evaluation for code corpora.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        _common(sp, suppress=True)
        sp.set_defaults(func=fn)
        return sp

    def corpus_args(sp):
        sp.add_argument("--corpus", required=True, help="corpus JSONL written by `ingest`")
        sp.add_argument("--root", required=True, help="directory the corpus paths are relative to")

    sp = add("ingest", cmd_ingest, "validate a metadata manifest and its files")
    sp.add_argument("--root", required=True)
    sp.add_argument("--manifest", required=True)
    sp.add_argument("--corpus-id")
    sp.add_argument("--out", required=True)

    sp = add("tokenize", cmd_tokenize, "lex every file; optionally dump per-task histograms")
    corpus_args(sp)
    sp.add_argument("--out", required=True)
    sp.add_argument("--histograms")

    sp = add("parse", cmd_parse, "build skeleton CSTs (or load external s-expressions)")
    corpus_args(sp)
    sp.add_argument("--tokens", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--external-dir", type=Path, help="load <dir>/<file_id>.sexp instead of parsing")
    sp.add_argument("--matrices", help="also dump per-task distance matrices")

    sp = add("split", cmd_split, "produce a split manifest for one shift type")
    corpus_args(sp)
    sp.add_argument("--shift", required=True, choices=[s.value for s in ShiftType])
    sp.add_argument("--out", required=True)
    sp.add_argument("--config", help="TOML/JSON SplitConfig")
    sp.add_argument("--profile", help="named sizing profile: python75, java250s, python800s")
    for name in ("n-id-classes", "n-ood-classes", "n-train-per-class", "n-id-test-per-class", "n-ood-test-per-class"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--dedup-per-programmer", action="store_true")
    sp.add_argument("--tokens")
    sp.add_argument("--trees")
    sp.add_argument("--exclude-tasks", help="comma-separated tasks to leave out (e.g. OE outlier tasks)")
    sp.add_argument("--validation-report")

    sp = add("train", cmd_train, "train the reference bag-of-tokens classifier")
    corpus_args(sp)
    sp.add_argument("--tokens", required=True)
    sp.add_argument("--split", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--epochs", type=int, default=DEFAULTS["epochs"])
    sp.add_argument("--lr", type=float, default=DEFAULTS["lr"])
    sp.add_argument("--l2", type=float, default=DEFAULTS["l2"])
    sp.add_argument("--raw-counts", action="store_true", help="skip L2 normalization of bag vectors")
    sp.add_argument("--oe", action="store_true", help="Outlier Exposure training")
    sp.add_argument("--outlier-tasks")
    sp.add_argument("--outlier-holdout", type=float, default=0.5)
    sp.add_argument("--lambda-oe", type=float, default=DEFAULTS["lambda_oe"])

    sp = add("infer", cmd_infer, "write logits (and features) for every file in a split")
    corpus_args(sp)
    sp.add_argument("--tokens", required=True)
    sp.add_argument("--split", required=True)
    sp.add_argument("--model", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--features")

    sp = add("score", cmd_score, "per-file OOD scores for one detector")
    sp.add_argument("--split", required=True)
    sp.add_argument("--detector", required=True, choices=[d.value for d in Detector])
    sp.add_argument("--logits")
    sp.add_argument("--features")
    sp.add_argument("--feature-dim", type=int)
    sp.add_argument("--temperature", type=float, default=DEFAULT_TEMPERATURE)
    sp.add_argument("--epsilon", type=float)
    sp.add_argument("--out", required=True)

    sp = add("evaluate", cmd_evaluate, "accuracy and AUC-ROC for one split")
    sp.add_argument("--split", required=True)
    sp.add_argument("--logits", required=True, help="logits of the plain model (for accuracy)")
    sp.add_argument("--scores", nargs="*", help="score files, one per detector")
    sp.add_argument("--corpus-id", default="corpus")
    sp.add_argument("--out", required=True)

    sp = add("report", cmd_report, "render evaluation reports as markdown, CSV or JSON")
    sp.add_argument("reports", nargs="+")
    sp.add_argument("--format", choices=["md", "csv", "json"], default="md")
    sp.add_argument("--out")

    sp = add("pipeline", cmd_pipeline, "run every stage from one TOML config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out-dir", required=True)
    return p


def _setup_logging(level: str) -> None:
    level = os.environ.get("CODESHIFT_LOG") or level
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.log_level)
    try:
        return args.func(args)
    except CodeShiftError as exc:
        import json
        sys.stderr.write(json.dumps(exc.to_dict(), sort_keys=True) + "\n")
        return exc.exit_code
    except FileNotFoundError as exc:
        import json
        sys.stderr.write(json.dumps({"error": "FileNotFound", "message": str(exc)}) + "\n")
        return 4


def main() -> None:
    sys.exit(run())
