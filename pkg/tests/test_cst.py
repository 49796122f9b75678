import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from codeshift.cst import (
    CstNode,
    CstTree,
    DistanceMatrix,
    cluster_multisets,
    distance_matrix,
    load_external_tree,
    parse_sexpr,
    parse_structural,
    rf_distance,
    to_sexpr,
)
from codeshift.errors import EmptyTree, SExprSyntaxError, TooFewFiles
from codeshift.lexer import TokenSeq, tokenize_file, tokenize_source

from oracles import random_tree, rf_oracle


def N(label, *kids):
    return CstNode(label, tuple(kids))


def T(*kids, fid=""):
    return CstTree(N("root", *kids), fid)


def parse(src, lang):
    return parse_structural(TokenSeq("f", tuple(tokenize_source(src, lang))), lang)


def test_empty_seq_is_root_only():
    t = parse_structural(TokenSeq("f", ()), "python")
    assert t.root == N("root") and t.leaves() == []


def test_python_statement():
    assert parse("x = 1", "python").root == N("root", N("stmt", "x", "=", "1"))


def test_python_block_nesting():
    t = parse("if a:\n    b = 1\nc\n", "python")
    assert to_sexpr(t) == '(root (stmt "if" "a" ":" (block (stmt "b" "=" "1"))) (stmt "c"))'


def test_java_call_fragment():
    t = parse("f(a,b)", "java")
    assert t.root == N("root", N("stmt", "f", N("paren", "(", "a", ",", "b", ")")))


def test_java_braces():
    assert to_sexpr(parse("if(a){return;}", "java")) == \
        '(root (stmt "if" (paren "(" "a" ")") (brace "{" (stmt "return" ";") "}")))'


def test_leaves_are_code_tokens_in_order(small_corpus):
    for f in small_corpus.files:
        seq = tokenize_file(f)
        expected = [t.text for t in seq.tokens if t.category.value not in ("indent", "dedent", "newline", "comment")]
        assert parse_structural(seq, f.language).leaves() == expected


def test_sexpr_examples():
    assert parse_sexpr("(root)").root == N("root")
    assert parse_sexpr('(root (stmt "x" "=" "1"))').root == parse("x = 1", "python").root
    assert parse_sexpr('(root "a\\"b" "c\\\\d")').leaves() == ['a"b', "c\\d"]


@pytest.mark.parametrize("bad", ["", "(root", "(root))", "root", '(root "x)', "(root (a) junk"])
def test_sexpr_errors(bad):
    with pytest.raises((SExprSyntaxError, EmptyTree)):
        parse_sexpr(bad)


def test_external_tree(tmp_path):
    p = tmp_path / "f.sexp"
    p.write_text('(root (stmt "x" "=" "1"))\n')
    assert load_external_tree(p).root == parse("x = 1", "python").root


def test_round_trip_small_fixture(small_corpus):
    for f in small_corpus.files:
        t = parse_structural(tokenize_file(f), f.language)
        assert parse_sexpr(to_sexpr(t)).root == t.root


def test_deep_tree_serializes_without_recursion_limit():
    node = N("x", "leaf")
    for _ in range(5000):
        node = N("x", node)
    t = CstTree(N("root", node))
    assert parse_sexpr(to_sexpr(t)).leaves() == ["leaf"]
    assert sum(cluster_multisets(t).values()) == 5002


def test_cluster_examples():
    assert cluster_multisets(T()) == Counter()
    c1 = cluster_multisets(T(N("f", "a", "b"), "c"))
    assert c1 == Counter({("a", "b", "c"): 1, ("a", "b"): 1})
    c2 = cluster_multisets(T(N("f", "a", "c"), "b"))
    assert c2 == Counter({("a", "b", "c"): 1, ("a", "c"): 1})


def test_rf_examples():
    t1, t2 = T(N("f", "a", "b"), "c"), T(N("f", "a", "c"), "b")
    assert rf_distance(t1, t1) == (0, 0.0)
    assert rf_distance(t1, t2) == (2, 0.5)
    d1, d2 = T(N("s", "x", "y"), "z"), T(N("s", "p"), N("s", "q"))
    assert rf_distance(d1, d2) == (2 + 3, 1.0)
    assert rf_distance(T(), T()) == (0, 0.0)


def test_rf_ignores_internal_labels():
    assert rf_distance(T(N("f", "a", "b")), T(N("g", "a", "b"))) == (0, 0.0)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rf_matches_oracle(seed):
    rng = random.Random(seed)
    t1, t2 = random_tree(rng), random_tree(rng)
    assert rf_distance(t1, t2) == rf_oracle(t1, t2)
    assert rf_distance(t1, t2) == rf_distance(t2, t1)
    assert rf_distance(t1, t1) == (0, 0.0)
    assert 0.0 <= rf_distance(t1, t2)[1] <= 1.0


def test_distance_matrix_examples():
    same = [T(N("s", "a"), fid="x"), T(N("s", "a"), fid="y")]
    dm = distance_matrix(same, "t")
    assert dm.d == [[0, 0], [0, 0]] and dm.avg == [0, 0]
    t1, t2 = T(N("s", "a", "b"), fid="f1"), T(N("s", "a", "b"), fid="f2")
    t3 = T(N("s", "z"), fid="f3")
    dm = distance_matrix([t3, t1, t2], "t")
    assert dm.file_ids == ["f1", "f2", "f3"]
    assert dm.avg_by_file() == {"f1": 0.5, "f2": 0.5, "f3": 1.0}
    with pytest.raises(TooFewFiles):
        distance_matrix([t1], "t")


def test_distance_matrix_permutation_and_jobs():
    rng = random.Random(3)
    trees = [CstTree(random_tree(rng).root, f"f{i:02d}") for i in range(12)]
    base = distance_matrix(trees, "t")
    shuffled = list(trees)
    rng.shuffle(shuffled)
    other = distance_matrix(shuffled, "t", jobs=3)
    assert other.to_dict() == base.to_dict()
    assert DistanceMatrix.from_dict(base.to_dict()).to_dict() == base.to_dict()
    n = len(base.file_ids)
    assert all(base.d[i][j] == base.d[j][i] for i in range(n) for j in range(n))
    assert all(base.d[i][i] == 0 for i in range(n))
