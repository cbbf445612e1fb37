import itertools
import random
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patternal.avoidability import (
    AVOIDABLE,
    PATTERNS,
    UNAVOIDABLE,
    WORDS,
    ParseError,
    ProhibitionSet,
    decide,
    decide_patterns,
    decide_words,
    is_free,
    minimal_unavoidable_pattern_set,
    normalize_to_length,
    parse_prohibition_set,
)
from patternal.formulas import tp_count
from patternal.graphs import build_pattern_graph, is_acyclic
from patternal.limits import InstanceTooLarge
from patternal.words import enumerate_patterns, from_zero_based, is_n_pattern_word, pattern_conjugacy_classes

from oracles import brute_longest_free

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    return parse_prohibition_set((DATA / name).read_text())


def morphism_word(min_length):
    rules = {"0": "011", "1": "0111"}
    w = "0"
    while len(w) < min_length:
        w = "".join(rules[c] for c in w)
    return from_zero_based(w)


# -- the S1 / S2 pair ----------------------------------------------------------


def test_pair_s1_unavoidable():
    s1 = load("s1.txt")
    assert s1.n == 4 and s1.m == 2
    report = decide_words(s1)
    assert report.verdict == UNAVOIDABLE
    assert report.lw == 8
    assert is_free(report.longest_free_word, s1)


def test_pair_s1_lw_matches_enumeration():
    s1 = load("s1.txt")
    assert brute_longest_free(s1.members, 2, limit=40) == 8


def test_pair_s2_avoidable():
    s2 = load("s2.txt")
    report = decide_words(s2)
    assert report.verdict == AVOIDABLE
    assert report.period == from_zero_based("011")
    assert is_free(report.unroll(10), s2)


def test_pair_morphism_words_are_free():
    s2 = load("s2.txt")
    w = morphism_word(200)
    assert len(w) >= 200
    assert is_free(w, s2)
    assert is_free(from_zero_based("0110111"), s2)


def test_pair_normalized_keeps_verdict():
    s1 = load("s1.txt")
    norm = normalize_to_length(s1, 4)
    assert all(len(w) == 4 for w in norm.members)
    report = decide_words(norm)
    assert report.unavoidable and report.lw == 8


# -- is_free / normalize ---------------------------------------------------------


def test_is_free_trivial():
    s = ProhibitionSet.of(["121", "2222"], 2)
    assert not is_free((1, 1, 2, 1, 2), s)
    assert is_free((1, 2), s)
    assert is_free((), s)


def test_normalize_examples():
    s = ProhibitionSet.of(["111"], 2)
    assert normalize_to_length(s, 4).members == {(1, 1, 1, 1), (1, 1, 1, 2), (2, 1, 1, 1)}
    u = ProhibitionSet.of(["12", "21"], 2)
    assert normalize_to_length(u, 2) == u
    with pytest.raises(ValueError):
        normalize_to_length(ProhibitionSet.of(["1212"], 2), 3)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_normalization_equivalence(data):
    m = data.draw(st.integers(2, 3))
    n = data.draw(st.integers(2, 4))
    members = data.draw(
        st.sets(st.lists(st.integers(1, m), min_size=1, max_size=n).map(tuple), min_size=1, max_size=12)
    )
    s = ProhibitionSet(WORDS, m, frozenset(members), n)
    raw = decide_words(s)
    norm = decide_words(normalize_to_length(s, n))
    # only the verdict carries over: {1, 2} admits no letter, its normalization admits one
    assert raw.verdict == norm.verdict


# -- decide_words ---------------------------------------------------------------


@pytest.mark.parametrize("n, m", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_everything_prohibited(n, m):
    s = ProhibitionSet(WORDS, m, frozenset(itertools.product(range(1, m + 1), repeat=n)))
    report = decide_words(s)
    assert report.unavoidable and report.lw == n - 1


def test_short_members_only_residual_empty():
    # every length-3 word contains 11, 12 or 22 except 212 ... so check with all 2-letter words but 21
    s = ProhibitionSet.of(["11", "12", "22"], 2, n=3)
    report = decide_words(s)
    assert report.unavoidable
    assert report.lw == brute_longest_free(s.members, 2, limit=20) == 2


def random_word_set(rng, n, m):
    size = rng.randint(1, m**n)
    pool = list(itertools.product(range(1, m + 1), repeat=n))
    return ProhibitionSet(WORDS, m, frozenset(rng.sample(pool, size)), n)


@pytest.mark.parametrize("seed", range(40))
def test_words_certificate_soundness(seed):
    rng = random.Random(seed)
    n, m = rng.randint(2, 4), rng.randint(2, 3)
    s = random_word_set(rng, n, m)
    report = decide_words(s)
    limit = m**n + n + 1
    expected = brute_longest_free(s.members, m, limit)
    if report.unavoidable:
        w = report.longest_free_word
        assert is_free(w, s)
        assert report.lw == expected
        for x in range(1, m + 1):
            assert not is_free(w + (x,), s)
            assert not is_free((x,) + w, s)
    else:
        assert expected is None
        cycle = report.witness_cycle
        assert all(cycle[i][1:] == cycle[(i + 1) % len(cycle)][:-1] for i in range(len(cycle)))
        assert is_free(report.unroll(3), s)


def test_report_json():
    s1 = load("s1.txt")
    rec = decide(s1).to_json()
    assert rec["verdict"] == "unavoidable" and rec["lw"] == 8 and rec["exact"] is True
    assert rec["certificate"]["type"] == "longestFreeWord"
    rec = decide(load("s2.txt")).to_json()
    assert rec["certificate"]["type"] == "infiniteWitness" and rec["lw"] is None


def test_decide_mode_mismatch():
    with pytest.raises(ValueError):
        decide_words(ProhibitionSet.of(["11"], 2, mode=PATTERNS))
    with pytest.raises(ValueError):
        decide_patterns(ProhibitionSet.of(["11"], 2))


def test_cap_respected():
    s = ProhibitionSet.of(["1" * 12], 3)
    with pytest.raises(InstanceTooLarge):
        decide_words(s, max_vertices=1000)


# -- decide_patterns ------------------------------------------------------------


def test_patterns_loop_survives():
    report = decide_patterns(ProhibitionSet.of(["12"], 2, mode=PATTERNS))
    assert report.verdict == AVOIDABLE
    assert report.witness_cycle == ((1, 1),)
    assert report.period == (1,)


def test_patterns_missing_class_is_avoidable():
    classes = pattern_conjugacy_classes(3, 3)
    for skip in range(len(classes)):
        members = [c.representative for i, c in enumerate(classes) if i != skip]
        report = decide_patterns(ProhibitionSet.of(members, 3, mode=PATTERNS, n=3))
        assert report.verdict == AVOIDABLE
        # the skipped class's rotation circuit survives; the witness may be a shorter cycle
        assert not classes[skip].members & set(members)
        assert is_free(report.unroll(3), ProhibitionSet.of(members, 3, mode=PATTERNS, n=3))


def test_patterns_all_prohibited():
    s = ProhibitionSet.of(enumerate_patterns(3, 2), 2, mode=PATTERNS)
    report = decide_patterns(s)
    assert report.unavoidable and report.longest_free_word == (1, 1)


def test_pattern_member_validation():
    with pytest.raises(ValueError):
        ProhibitionSet.of(["13"], 3, mode=PATTERNS)
    with pytest.raises(ValueError):
        ProhibitionSet.of(["12", "1"], 2, mode=PATTERNS)
    with pytest.raises(ValueError):
        ProhibitionSet.of(["13"], 2)
    with pytest.raises(ValueError):
        ProhibitionSet.of([], 2)


def random_pattern_set(rng, n, m):
    pool = enumerate_patterns(n, m)
    return ProhibitionSet(PATTERNS, m, frozenset(rng.sample(pool, rng.randint(1, len(pool)))), n)


@pytest.mark.parametrize("seed", range(60))
def test_pattern_set_laws(seed):
    rng = random.Random(1000 + seed)
    n, m = rng.randint(2, 4), rng.randint(2, 3)
    s = random_pattern_set(rng, n, m)
    report = decide_patterns(s)
    classes = pattern_conjugacy_classes(n, m)
    if len(s.members) < tp_count(n, m).value:
        assert not report.unavoidable
    if report.unavoidable:
        assert all(c.members & s.members for c in classes)
        w = report.longest_free_word
        assert is_free(w, s) and is_n_pattern_word(w, n)
        for x in range(1, m + 1):
            for ext in (w + (x,), (x,) + w):
                assert not (is_n_pattern_word(ext, n) and is_free(ext, s))
    else:
        u = report.unroll(3)
        assert is_free(u, s) and is_n_pattern_word(u, n)


# -- minimal sets ---------------------------------------------------------------


def test_minimal_set_small_examples():
    assert minimal_unavoidable_pattern_set(2, 2).members == {(1, 1), (1, 2)}
    assert len(minimal_unavoidable_pattern_set(3, 3).members) == 5
    for n in range(1, 5):
        assert minimal_unavoidable_pattern_set(n, 1).members == {(1,) * n}


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 6) for m in range(1, 5)])
def test_minimal_set_is_minimal(n, m):
    s = minimal_unavoidable_pattern_set(n, m)
    assert len(s.members) == tp_count(n, m).value
    assert decide_patterns(s).unavoidable
    if len(s.members) == 1:
        return  # dropping the only member leaves nothing to decide
    for w in s.members:
        assert not decide_patterns(s.without(w)).unavoidable


def test_minimal_set_one_per_class():
    s = minimal_unavoidable_pattern_set(5, 3)
    for c in pattern_conjugacy_classes(5, 3):
        assert len(c.members & s.members) == 1


def test_minimal_set_deterministic():
    assert minimal_unavoidable_pattern_set(4, 3) == minimal_unavoidable_pattern_set(4, 3)


@pytest.mark.slow
@pytest.mark.parametrize("n, m", [(6, 3), (6, 4), (7, 3)])
def test_minimal_set_larger(n, m):
    s = minimal_unavoidable_pattern_set(n, m)
    assert len(s.members) == tp_count(n, m).value
    assert is_acyclic(build_pattern_graph(n, m), s.members)


# -- file format ----------------------------------------------------------------


def test_parse_roundtrip():
    s1 = load("s1.txt")
    assert parse_prohibition_set(s1.to_text()) == s1


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("words 4\n111\n", 1),
        ("words x 2\n111\n", 1),
        ("# hi\nwords 3 2\n11a\n", 3),
        ("words 3 2\n111\n\n1113\n", 4),
        ("patterns 3 3\n111\n131\n", 3),
        ("words 3 2\n", 1),
        ("words 2 2\n111\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_prohibition_set(text)
    assert info.value.line == line
