import random

import pytest
from hypothesis import given, strategies as st

from starfree import automata as fa
from starfree.oracle import count_factorizations, random_regex
from starfree.regex import compile_regex
from starfree.sdlang.codes import (NotPrefixCode, ambiguity_witness, is_prefix_code, is_unambiguous,
                                   min_sync_delay, prefix_code_violation, sync_delay_holds, sync_delay_witness)

from conftest import A1, AB, L


def test_prefix_codes():
    assert is_prefix_code(L("ab"))
    assert not is_prefix_code(L("a+ab"))
    assert prefix_code_violation(L("a+ab")) == "ab"
    assert is_prefix_code(L("aa", A1))
    assert prefix_code_violation(L("1+a")) == ""


def test_delay_examples():
    assert sync_delay_holds(L("ab"), 1)
    k = L("(aab)*ab")
    assert not sync_delay_holds(k, 1) and sync_delay_holds(k, 2)
    for d in range(1, 11):
        assert not sync_delay_holds(L("aa", A1), d)


def test_min_delay_examples():
    assert min_sync_delay(L("ab")) == 1
    assert min_sync_delay(L("(aab)*ab")) == 2
    assert min_sync_delay(L("aa", A1), dmax=10) is None


def test_delay_witness_shape():
    k = L("aa", A1)
    kplus = fa.plus(k)
    for d in (1, 3, 10):
        u, v, w = sync_delay_witness(k, d)
        assert kplus.accepts(u + v + w)
        assert fa.power(k, d).accepts(v)
        assert not kplus.accepts(u + v)


def test_delay_needs_a_prefix_code():
    with pytest.raises(NotPrefixCode):
        sync_delay_holds(L("a+ab"), 1)
    with pytest.raises(ValueError):
        sync_delay_holds(L("ab"), 0)


def test_ambiguity_examples():
    assert is_unambiguous(L("a"), L("b"))
    w, i, j = ambiguity_witness(L("a*"), L("a*"))
    assert i < j and w == "a"
    # leftmost-b split: (P\H)* . H A* with P = {a, b}, H = {b}
    assert is_unambiguous(L("a*"), L("b(a+b)*"))
    assert not is_unambiguous(L("(a+b)*"), L("b(a+b)*"))


@given(st.integers(0, 10**6))
def test_ambiguity_witness_is_genuine(seed):
    rng = random.Random(seed)
    k = compile_regex(random_regex(rng, AB, 2), AB)
    h = compile_regex(random_regex(rng, AB, 2), AB)
    wit = ambiguity_witness(k, h)
    if wit is None:
        for w in fa.all_words(AB, 6):
            splits = [i for i in range(len(w) + 1) if k.accepts(w[:i]) and h.accepts(w[i:])]
            assert len(splits) <= 1
    else:
        w, i, j = wit
        assert i != j
        for x in (i, j):
            assert k.accepts(w[:x]) and h.accepts(w[x:])


@pytest.mark.parametrize("code", ["ab", "a+ba", "(aab)*ab", "b+ab+aab", "a(a+b)"])
def test_prefix_codes_factorize_uniquely(code):
    k = L(code)
    star = fa.star(k)
    for w in fa.enumerate_words(star, 9):
        assert count_factorizations(w, k) == 1
    for w in fa.all_words(AB, 7):
        assert (count_factorizations(w, k) > 0) == star.accepts(w)
