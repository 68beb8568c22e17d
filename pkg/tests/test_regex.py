import itertools
import random

import pytest
from hypothesis import given, strategies as st

from starfree import automata as fa
from starfree import regex as rx
from starfree.oracle import ast_accepts, random_regex

from conftest import AB


def test_parse_star_of_concat():
    assert rx.parse_regex("(ab)*") == rx.Star(rx.Concat(rx.Letter("a"), rx.Letter("b")))


def test_complement_of_empty_is_universal():
    assert rx.parse_regex("~(0)") == rx.Complement(rx.Empty())
    assert rx.regex("~(0)", AB) == fa.universal(AB)


def test_unbalanced_parenthesis_position():
    with pytest.raises(rx.RegexSyntaxError) as err:
        rx.parse_regex("(a(b")
    assert err.value.position == 3


@pytest.mark.parametrize("text", ["a+", "*a", "a)", "()", "a&", "~"])
def test_syntax_errors(text):
    with pytest.raises(rx.RegexSyntaxError):
        rx.parse_regex(text)


def test_letter_outside_alphabet():
    with pytest.raises(rx.RegexSyntaxError):
        rx.regex("abc", AB)


def test_letters_of_keeps_first_occurrence_order():
    assert rx.letters_of("(ba)*+c1") == ["b", "a", "c"]


def test_operators():
    d = rx.regex("(a+b)*&~(a*)", AB)
    assert d.accepts("b") and d.accepts("ab") and not d.accepts("aa") and not d.accepts("")
    assert rx.regex("1", AB) == fa.epsilon(AB)


@given(st.integers(0, 10**6))
def test_compiler_matches_ast_semantics(seed):
    ast = random_regex(random.Random(seed), AB, 3)
    d = rx.compile_regex(ast, AB)
    assert fa.minimize(d) == d
    for n in range(6):
        for w in map("".join, itertools.product("ab", repeat=n)):
            assert d.accepts(w) == ast_accepts(ast, w, AB), (rx.to_text(ast), w)


@given(st.integers(0, 10**6))
def test_to_text_round_trips(seed):
    ast = random_regex(random.Random(seed), AB, 3)
    assert rx.regex(rx.to_text(ast), AB) == rx.compile_regex(ast, AB)
