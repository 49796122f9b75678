import math

import pytest
from hypothesis import given, settings, strategies as st

from codeshift.corpus import Language
from codeshift.errors import LexError, UnknownToken, UnsupportedLanguage
from codeshift.lexer import tokenize_file, tokenize_source
from codeshift.lexer.histogram import TokenHistogram, build_histogram, token_keys, token_rarity
from codeshift.lexer.tokens import Category as K, Token, TokenSeq

from conftest import make_file


def kinds(src, lang="python"):
    return [(t.category.value, t.text) for t in tokenize_source(src, lang)]


def seq(fid, *texts):
    return TokenSeq(fid, tuple(Token(K.IDENTIFIER, t) for t in texts))


def test_empty_source_gives_empty_seq():
    assert tokenize_source("", "python") == []
    assert tokenize_source("", "java") == []


def test_python_assignment():
    assert kinds("x = 1") == [("identifier", "x"), ("operator", "="), ("number", "1")]


def test_java_if_statement():
    assert kinds("if(a){return;}", "java") == [
        ("keyword", "if"), ("punctuation", "("), ("identifier", "a"), ("punctuation", ")"),
        ("punctuation", "{"), ("keyword", "return"), ("punctuation", ";"), ("punctuation", "}")]


def test_python_layout_tokens():
    src = "if x:\n    y = 2\nz = 3\n"
    cats = [t.category for t in tokenize_source(src, "python")]
    assert cats.count(K.INDENT) == 1 and cats.count(K.DEDENT) == 1
    assert cats.count(K.NEWLINE) == 3


def test_python_walrus_and_longest_match():
    assert kinds("(n := 10)")[2] == ("operator", ":=")
    assert ("operator", "**=") in kinds("a **= 2")
    assert ("punctuation", "...") in kinds("x = ...")


def test_python_strings_and_comments():
    toks = kinds("s = rb'a\\'b'  # hi\nt = '''x\ny'''\n")
    assert ("string_lit", "rb'a\\'b'") in toks
    assert ("comment", "# hi") in toks
    assert ("string_lit", "'''x\ny'''") in toks


def test_python_implicit_line_join():
    cats = [t.category for t in tokenize_source("f(1,\n  2)\n", "python")]
    assert K.INDENT not in cats and cats.count(K.NEWLINE) == 1


def test_java_literals_and_comments():
    toks = kinds("char c = '\\n'; long v = 0xFFL; /* block */ // line\nString s = \"q\\\"\";", "java")
    assert ("string_lit", "'\\n'") in toks
    assert ("number", "0xFFL") in toks
    assert ("comment", "/* block */") in toks
    assert ("comment", "// line") in toks
    assert ("string_lit", '"q\\""') in toks
    assert ("operator", ">>>=") in kinds("x >>>= 1;", "java")


def test_unterminated_string_position():
    with pytest.raises(LexError) as info:
        tokenize_source("x = 1\ny = 'abc\n", "python")
    assert (info.value.line, info.value.col) == (2, 5)


def test_unsupported_language():
    with pytest.raises(UnsupportedLanguage):
        tokenize_source("x", Language.OTHER)


def test_tokenize_file_carries_id():
    s = tokenize_file(make_file("f1", source="a = b\n"))
    assert s.file_id == "f1" and len(s.tokens) == 4  # a = b NEWLINE


def test_histogram_single_file():
    h = build_histogram([seq("f", "a", "b", "a")], "t")
    assert h.n_files == 1
    assert h.counts == {("identifier", "a"): 2, ("identifier", "b"): 1}
    assert h.doc_freq == {("identifier", "a"): 1, ("identifier", "b"): 1}


def test_histogram_two_files():
    h = build_histogram([seq("f", "a"), seq("g", "a", "b")], "t")
    assert h.counts == {("identifier", "a"): 2, ("identifier", "b"): 1}
    assert h.doc_freq == {("identifier", "a"): 2, ("identifier", "b"): 1}
    assert h.n_files == 2


def test_histogram_bins_match_set_union(small_corpus):
    seqs = [tokenize_file(f) for f in small_corpus.files]
    union = set()
    for s in seqs:
        union |= {(t.category.value, t.text) for t in s.tokens if t.category is not K.COMMENT}
    assert build_histogram(seqs, "all").n_bins == len(union)


def test_comments_flag():
    s = tokenize_file(make_file("f", source="# note\nx = 1\n"))
    assert ("comment", "# note") not in build_histogram([s], "t").counts
    assert ("comment", "# note") in build_histogram([s], "t", include_comments=True).counts


def test_rarity_examples():
    common = [seq(f"f{i}", "c") for i in range(10)]
    h = build_histogram(common[:9] + [seq("f9", "c", "r")], "t")
    assert token_rarity(h, seq("x", "c")) == 0.0
    assert token_rarity(h, seq("x", "r", "c")) == pytest.approx(math.log(10), abs=1e-12)
    assert token_rarity(h, seq("x")) == 0.0
    with pytest.raises(UnknownToken):
        token_rarity(h, seq("x", "zzz"))


def test_histogram_round_trip():
    h = build_histogram([seq("f", "a", "b"), seq("g", "b")], "t")
    assert TokenHistogram.from_dict(h.to_dict()) == h


names = st.lists(st.lists(st.sampled_from("abcdefg"), max_size=12), max_size=6)


@given(names, names)
def test_histogram_additivity(a, b):
    A = [seq(f"a{i}", *x) for i, x in enumerate(a)]
    B = [seq(f"b{i}", *x) for i, x in enumerate(b)]
    both = build_histogram(A + B, "t")
    added = build_histogram(A, "t") + build_histogram(B, "t")
    assert both.counts == added.counts and both.doc_freq == added.doc_freq and both.n_files == added.n_files
    assert sum(both.counts.values()) == sum(len(s.tokens) for s in A + B)


@given(names.filter(lambda x: len(x) >= 2), st.data())
def test_rarity_monotone(files, data):
    seqs = [seq(f"f{i}", *x) for i, x in enumerate(files)]
    h = build_histogram(seqs, "t")
    candidates = [k for k, df in h.doc_freq.items() if df < h.n_files]
    base = data.draw(st.sampled_from(seqs))
    present = set(token_keys(base))
    extra = [k for k in candidates if k not in present]
    if not extra:
        return
    k = data.draw(st.sampled_from(extra))
    grown = TokenSeq("g", base.tokens + (Token(K(k[0]), k[1]),))
    assert token_rarity(h, grown) > token_rarity(h, base)


ident = st.from_regex(r"[a-z_][a-z0-9_]{0,6}", fullmatch=True)


@settings(max_examples=60)
@given(st.lists(st.one_of(ident, st.integers(0, 999).map(str), st.sampled_from(["+", "==", "(", ")", ","])),
                max_size=20))
def test_python_tokens_reconstruct(parts):
    src = " ".join(parts)
    toks = tokenize_source(src, "python")
    assert "".join(t.text for t in toks) == src.replace(" ", "")
    assert tokenize_source(src, "python") == toks


def test_small_fixture_lexes_and_only_layout_is_empty(small_corpus):
    for f in small_corpus.files:
        toks = tokenize_file(f).tokens
        assert toks and all(t.text for t in toks if t.category not in (K.INDENT, K.DEDENT))
