"""Regenerate the frozen golden files. Review the diff before committing.

    python3 tests/golden/regen.py
"""

from pathlib import Path

import numpy as np

from codeshift.config import SplitConfig
from codeshift.corpus import ingest_corpus
from codeshift.detect import Detector, score_split
from codeshift.io import write_json, write_jsonl
from codeshift.lexer import tokenize_file
from codeshift.pipeline import load_pipeline_config, prepare
from codeshift.refmodel import build_vocab, predict_logits, train_softmax, vectorize_many
from codeshift.splitgen import Partition, split_random

HERE = Path(__file__).resolve().parent
SMALL = HERE.parent / "fixtures" / "small"


def small_run():
    """Random split of the small fixture, a 300-epoch model, and its logits."""
    m = ingest_corpus(SMALL, SMALL / "manifest.jsonl", corpus_id="small")
    seqs = {f.file_id: tokenize_file(f) for f in m.files}
    split = split_random(m, SplitConfig(3, 2, 1, 1, seed=0))
    train = split.files_in(Partition.TRAIN)
    vocab = build_vocab([seqs[f] for f in train])
    files = m.by_id()
    model = train_softmax(vectorize_many([seqs[f] for f in train], vocab, True),
                          [files[f].task_id for f in train], epochs=300)
    ids = sorted(split.assignments)
    L = predict_logits(model, vectorize_many([seqs[f] for f in ids], vocab, True))
    logits = {f: (files[f].task_id, L[i]) for i, f in enumerate(ids)}
    return split, logits


def main():
    split, logits = small_run()
    write_json(HERE / "small_logits.json", {f: [float(v) for v in vec] for f, (_, vec) in sorted(logits.items())})
    write_jsonl(HERE / "small_scores_msp.jsonl", [r.to_dict() for r in score_split(split, logits, None, Detector.MSP)])
    cfg = load_pipeline_config(HERE.parent.parent / "fixtures" / "demo.toml")
    prep = prepare(cfg, need_trees=False)
    (HERE / "demo_random_seed7.json").write_text(split_random(prep.corpus, cfg.split_config("random", 7)).to_json())


if __name__ == "__main__":
    main()
