import sys
from pathlib import Path

import numpy as np
import pytest

from codeshift.errors import DegenerateLabels, EmptyOutliers, EmptyTraining, SchemaError
from codeshift.io import read_json, write_jsonl
from codeshift.lexer.tokens import Category, Token, TokenSeq
from codeshift.refmodel import (
    SoftmaxModel,
    build_vocab,
    features_rows,
    load_features,
    objective,
    predict_logits,
    train_softmax,
    train_softmax_oe,
    vectorize,
)

from conftest import GOLDEN
from oracles import central_diff

sys.path.insert(0, str(GOLDEN))
import regen  # noqa: E402


def seq(fid, *names):
    return TokenSeq(fid, tuple(Token(Category.IDENTIFIER, n) for n in names))


def key(name):
    return ("identifier", name)


def test_vocab_sorted_and_deterministic():
    v = build_vocab([seq("f", "b", "a")])
    assert v.size == 2 and v.index == {key("a"): 0, key("b"): 1}
    assert build_vocab([seq("f", "b", "a")]) == v


def test_unseen_token_maps_to_oov():
    v = build_vocab([seq("f", "a")])
    assert v.lookup(key("zzz")) == v.oov == 1
    assert vectorize(seq("g", "zzz"), v).tolist() == [0.0, 1.0]


def test_vectorize_examples():
    v = build_vocab([seq("f", "a", "b")])
    assert vectorize(seq("g"), v).tolist() == [0, 0, 0]
    assert vectorize(seq("g", "a", "a", "b"), v).tolist() == [2, 1, 0]
    assert vectorize(seq("g", "a", "b", "c", "a", "d"), v).sum() == 5
    assert np.linalg.norm(vectorize(seq("g", "a", "b", "b"), v, normalize=True)) == pytest.approx(1.0)


def test_no_leakage_from_test_tokens():
    v = build_vocab([seq("f", "a", "b")])
    assert set(v.index) == {key("a"), key("b")}


def separable():
    rng = np.random.default_rng(0)
    X = np.vstack([rng.normal([3, 0], 0.3, (5, 2)), rng.normal([0, 3], 0.3, (5, 2))])
    return X, ["a"] * 5 + ["b"] * 5


def test_separable_reaches_full_accuracy():
    X, y = separable()
    m = train_softmax(X, y, epochs=500, lr=0.1)
    pred = [m.classes[i] for i in predict_logits(m, X).argmax(axis=1)]
    assert pred == y


def test_zero_epochs_uniform():
    X, y = separable()
    m = train_softmax(X, y, epochs=0)
    assert np.all(predict_logits(m, X) == 0)


def test_zero_model_and_zero_input():
    m = SoftmaxModel(["a", "b"], np.zeros((2, 3)), np.array([0.5, -1.0]))
    assert predict_logits(m, np.ones(3)).tolist() == [0.5, -1.0]
    m.W[:] = 1.0
    assert predict_logits(m, np.zeros(3)).tolist() == [0.5, -1.0]


def test_oe_lambda_zero_matches_plain():
    X, y = separable()
    U = np.array([[1.0, 1.0], [2.0, 2.0]])
    a = train_softmax(X, y, epochs=50)
    b = train_softmax_oe(X, y, U, lambda_oe=0.0, epochs=50)
    assert np.array_equal(a.W, b.W) and np.array_equal(a.b, b.b)


def test_training_errors():
    X, y = separable()
    with pytest.raises(EmptyTraining):
        train_softmax(np.zeros((0, 2)), [])
    with pytest.raises(DegenerateLabels):
        train_softmax(X, ["a"] * 10)
    with pytest.raises(EmptyOutliers):
        train_softmax_oe(X, y, np.zeros((0, 2)))


def test_loss_monotone_on_fixture(demo_prep, demo_cfg):
    from codeshift.splitgen import Partition, make_split
    split = make_split("random", demo_prep.corpus, demo_cfg.split_config("random", 7))
    train = split.files_in(Partition.TRAIN)
    vocab = build_vocab([demo_prep.seqs[f] for f in train])
    X = np.stack([vectorize(demo_prep.seqs[f], vocab, True) for f in train])
    files = demo_prep.corpus.by_id()
    # raises if any epoch increases the objective
    train_softmax(X, [files[f].task_id for f in train], epochs=200, check_monotone=True)


def test_softmax_of_logits_sums_to_one():
    X, y = separable()
    L = predict_logits(train_softmax(X, y, epochs=100), X)
    P = np.exp(L - L.max(axis=1, keepdims=True))
    P /= P.sum(axis=1, keepdims=True)
    assert np.allclose(P.sum(axis=1), 1.0, atol=1e-12)


def gradient_case(lambda_oe):
    rng = np.random.default_rng(42)
    C, D = 3, 4
    W, b = rng.normal(size=(C, D)), rng.normal(size=C)
    X, y = rng.normal(size=(7, D)), np.array([0, 1, 2, 0, 1, 2, 0])
    U = rng.normal(size=(5, D)) if lambda_oe else None
    _, dW, db = objective(W, b, X, y, 0.01, U, lambda_oe)
    nW = central_diff(lambda: objective(W, b, X, y, 0.01, U, lambda_oe)[0], W)
    nb = central_diff(lambda: objective(W, b, X, y, 0.01, U, lambda_oe)[0], b)
    return np.concatenate([dW.ravel(), db]), np.concatenate([nW.ravel(), nb])


def rel_err(a, n):
    return np.max(np.abs(a - n) / np.maximum(np.maximum(np.abs(a), np.abs(n)), 1e-8))


@pytest.mark.parametrize("lambda_oe", [0.0, 0.5])
def test_gradients_match_finite_differences(lambda_oe):
    a, n = gradient_case(lambda_oe)
    assert rel_err(a, n) < 1e-6


def test_model_round_trip():
    X, y = separable()
    m = train_softmax(X, y, epochs=20)
    again = SoftmaxModel.from_dict(m.to_dict())
    assert np.array_equal(again.W, m.W) and again.classes == m.classes


def test_features_dim_checked(tmp_path):
    p = tmp_path / "f.jsonl"
    write_jsonl(p, features_rows(["a", "b"], np.ones((2, 3))))
    assert load_features(p, 3)["a"].tolist() == [1, 1, 1]
    with pytest.raises(SchemaError):
        load_features(p, 4)


def test_golden_logits():
    _, logits = regen.small_run()
    golden = read_json(GOLDEN / "small_logits.json")
    assert sorted(golden) == sorted(logits)
    for f, vec in golden.items():
        np.testing.assert_allclose(logits[f][1], vec, rtol=1e-9, atol=1e-12)
