from __future__ import annotations

from pathlib import Path

import pytest

from codeshift.corpus import CodeFile, CorpusManifest, ingest_corpus
from codeshift.pipeline import load_pipeline_config, prepare

ROOT = Path(__file__).resolve().parent.parent
SMALL = Path(__file__).resolve().parent / "fixtures" / "small"
DEMO_CONFIG = ROOT / "fixtures" / "demo.toml"
GOLDEN = Path(__file__).resolve().parent / "golden"


def make_file(file_id, task="t", programmer="p", timestamp=None, source="x = 1\n", language="python"):
    return CodeFile(file_id=file_id, path=f"{file_id}.py", language=language, task_id=task,
                    programmer_id=programmer, source=source, timestamp=timestamp)


def make_corpus(files, corpus_id="test") -> CorpusManifest:
    return CorpusManifest(tuple(files), files[0].language if files else "python", corpus_id)


@pytest.fixture(scope="session")
def small_corpus() -> CorpusManifest:
    return ingest_corpus(SMALL, SMALL / "manifest.jsonl", corpus_id="small")


@pytest.fixture(scope="session")
def demo_cfg():
    return load_pipeline_config(DEMO_CONFIG)


@pytest.fixture(scope="session")
def demo_prep(demo_cfg):
    return prepare(demo_cfg, jobs=1)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in range(1, 12):
        if n in RESULTS:
            terminalreporter.write_line(RESULTS[n])
    for n in range(1, 12):
        if n not in RESULTS:
            terminalreporter.write_line(f"criterion {n:2d}: not run in this session")
