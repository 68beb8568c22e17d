import random

import pytest
from hypothesis import given, strategies as st

from starfree import automata as fa
from starfree.algebra import syntactic_morphism
from starfree.baseclass import (ClassFileError, finite_from_morphism, format_morphism, length_lasso,
                                length_mod_class, load_base, mod_class, mod_eps_separable, parse_morphism,
                                triv)
from starfree.oracle import brute_mod_eps_separable, random_lasso

from conftest import A1, AB, L, dfas, words


def test_triv_has_one_class():
    b = triv(AB)
    assert b.classes == [0]
    assert {b.class_of(w) for w in ["", "a", "abba"]} == {0}
    assert b.class_language([0]) == fa.universal(AB)
    assert b.class_language([]) == fa.empty(AB)


def test_length_mod_classes():
    assert len(length_mod_class(2, A1).classes) == 2
    assert len(length_mod_class(3, AB).classes) == 3
    assert length_mod_class(2, A1).name == "parity"


def test_trivial_morphism_gives_one_class():
    alpha, _ = syntactic_morphism(fa.universal(AB))
    assert finite_from_morphism(alpha).classes == triv(AB).classes


def test_parity_class_languages():
    b = length_mod_class(2, A1)
    assert b.class_language(b.class_of("")) == L("(aa)*", A1)
    assert b.class_language(b.class_of("a")) == L("a(aa)*", A1)


@pytest.mark.parametrize("text, expected", [("a(aa)*", True), ("(aa)*", False), ("aa(aaa)*", True),
                                            ("a*", False), ("0", True), ("a+aa", True), ("aaa*", False)])
def test_mod_eps_separable_examples(text, expected):
    assert mod_eps_separable(L(text, A1)) is expected


def test_group_oracle_rejects_languages_with_epsilon():
    for text in ["(aa)*", "1", "1+ab", "(ab)*b*"]:
        assert not mod_class().eps_separable(L(text))


def test_length_lasso_describes_lengths():
    t, c, fin, res = length_lasso(L("a+aaaa(aaa)*", A1))
    for n in range(30):
        member = n in fin if n < t else n % c in res
        assert member == (n == 1 or (n >= 4 and (n - 4) % 3 == 0))


@given(st.integers(0, 10**6))
def test_mod_oracle_matches_brute_force(seed):
    d, t, c = random_lasso(random.Random(seed))
    assert mod_eps_separable(d) == brute_mod_eps_separable(d, t + 2 * c)


@given(dfas())
def test_mod_oracle_matches_brute_force_on_binary_dfas(d):
    t, c, _, _ = length_lasso(d)
    assert mod_eps_separable(d) == brute_mod_eps_separable(d, t + 2 * c)


@given(dfas(), words, words)
def test_class_of_is_a_morphism(d, u, v):
    b = finite_from_morphism(syntactic_morphism(d)[0])
    assert b.class_of(u + v) == b.mul(b.class_of(u), b.class_of(v))


def test_class_file_round_trip(tmp_path):
    alpha, _ = syntactic_morphism(L("(ab)*"))
    text = format_morphism(alpha)
    back = parse_morphism(text)
    assert back.monoid.table == alpha.monoid.table and back.letter_image == alpha.letter_image
    path = tmp_path / "ab.cls"
    path.write_text(text)
    base = load_base(f"finite:{path}", AB)
    assert base.is_finite and len(base.classes) == 6


def test_class_file_with_implicit_identity_rows():
    text = "classes: 2\nidentity: 0\nletter a -> 1\nmult 1 1 -> 0\n"
    alpha = parse_morphism(text)
    assert alpha("aa") == 0 and alpha("aaa") == 1


@pytest.mark.parametrize("text", [
    "identity: 0\nletter a -> 0\n",
    "classes: 2\nletter a -> 1\n",
    "classes: 2\nidentity: 0\nletter a -> 1\nmult 1 1 -> 5\n",
    "classes: 3\nidentity: 0\nletter a -> 1\nmult 1 1 -> 2\nmult 1 2 -> 1\nmult 2 1 -> 2\nmult 2 2 -> 2\n",
    "classes: 1\nbogus\n",
])
def test_bad_class_files(text):
    with pytest.raises(ClassFileError):
        parse_morphism(text)


def test_load_base_names():
    assert load_base("triv", AB).name == "TRIV"
    assert load_base("mod", AB).name == "MOD"
    assert load_base("mod3", AB).name == "length-mod-3"
    with pytest.raises(ValueError):
        load_base("nonsense", AB)
