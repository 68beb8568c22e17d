import itertools
import random

import pytest
from hypothesis import given, strategies as st

from starfree import automata as fa
from starfree.oracle import random_dfa

from conftest import A1, AB, L, dfas, words


def test_empty_is_one_rejecting_state():
    d = fa.empty(AB)
    assert d.size == 1 and not d.accepting


def test_even_length_over_one_letter_has_two_states():
    d = L("(aa)*", A1)
    assert d.size == 2
    assert d.accepts("") and d.accepts("aa") and not d.accepts("a")


def test_universal_is_one_accepting_state():
    d = L("~(0)")
    assert d.size == 1 and d.accepting == {0}
    assert fa.equivalent(d, fa.universal(AB))


def test_complement_of_even_is_odd():
    assert fa.complement(L("(aa)*", A1)) == L("a(aa)*", A1)


def test_boolean_identities():
    lang = L("a*b+ba")
    assert fa.intersect(lang, fa.universal(AB)) == lang
    assert fa.union(lang, fa.empty(AB)) == lang


def test_left_and_right_quotients():
    assert fa.quotient("left", "a", L("(aa)*", A1)) == L("a(aa)*", A1)
    lang = L("(ab)*a+b")
    assert fa.quotient("left", "", lang) == lang
    assert fa.quotient("right", "b", L("(ab)*")) == L("(ab)*a")


def test_parity_classes_are_disjoint():
    assert fa.is_empty(fa.intersect(L("(aa)*", A1), L("a(aa)*", A1)))


def test_enumerate():
    assert fa.enumerate_words(L("(ab)*"), 4) == ["", "ab", "abab"]
    assert fa.enumerate_words(fa.empty(AB), 10) == []


def test_alphabet_mismatch_raises():
    with pytest.raises(fa.AlphabetMismatch):
        fa.union(L("a", A1), L("a"))


def test_dfa_text_round_trip():
    d = L("(ab)*a+b*")
    assert fa.parse_dfa(fa.format_dfa(d)) == d


def test_dfa_format_errors():
    with pytest.raises(fa.DfaFormatError):
        fa.parse_dfa("alphabet: ab\nstates: 1\ninitial: 0\naccepting:\ntrans 0 a 0\n")
    with pytest.raises(fa.DfaFormatError):
        fa.parse_dfa("alphabet: ab\nstates: 1\ninitial: 3\naccepting:\n")


def test_sync_words_and_power():
    assert fa.power(L("ab"), 3) == L("ababab")
    assert fa.power(L("ab"), 0) == fa.epsilon(AB)
    assert fa.plus(L("a")) == L("aa*")


def test_length_mod():
    d = fa.length_mod(AB, 3, [1, 2])
    assert all(d.accepts(w) == (len(w) % 3 != 0) for w in fa.all_words(AB, 6))


def test_shortest_word():
    assert fa.shortest_word(L("(ab)*aa")) == "aa"
    assert fa.shortest_word(fa.empty(AB)) is None


@given(dfas())
def test_minimize_is_idempotent(d):
    assert fa.minimize(d) == d


@given(dfas(), dfas())
def test_de_morgan(l, k):
    assert fa.complement(fa.union(l, k)) == fa.intersect(fa.complement(l), fa.complement(k))


@given(dfas(), words, words)
def test_left_quotients_compose(d, v, w):
    assert fa.quotient("left", w, fa.quotient("left", v, d)) == fa.quotient("left", v + w, d)


@given(dfas(), dfas())
def test_concat_matches_word_splits(l, k):
    c = fa.concat(l, k)
    for n in range(6):
        for w in map("".join, itertools.product("ab", repeat=n)):
            expect = any(l.accepts(w[:i]) and k.accepts(w[i:]) for i in range(n + 1))
            assert c.accepts(w) == expect


@given(st.integers(0, 10**6))
def test_isomorphic_dfas_minimize_equal(seed):
    rng = random.Random(seed)
    d = random_dfa(rng, AB, rng.randint(1, 5))
    perm = list(range(d.size))
    rng.shuffle(perm)
    inv = {perm[q]: q for q in range(d.size)}
    delta = tuple(tuple(perm[d.delta[inv[p]][i]] for i in range(2)) for p in range(d.size))
    other = fa.Dfa(AB, delta, perm[d.initial], frozenset(perm[q] for q in d.accepting))
    assert fa.minimize(d) == fa.minimize(other)
