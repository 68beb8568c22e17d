import pytest
from hypothesis import given, strategies as st

from starfree import automata as fa
from starfree.algebra import syntactic_morphism
from starfree.baseclass import length_mod_class, triv
from starfree.sdlang.expr import Letter, Validator, disjoint_union_all, simplify, validate
from starfree.sdlang.synthesis import (NotAperiodic, Part, Synthesizer, synthesize_language,
                                       synthesize_partition)
from starfree.imprint import full_imprint, saturate_finite
from starfree.semiring import canonical_rating_map, imprint_of_cover
from starfree.stutter import is_c_aperiodic

from conftest import A1, AB, L, bases, dfas


def test_trivial_morphism_gives_one_part():
    alpha, _ = syntactic_morphism(fa.universal(AB))
    parts = [Part(Letter(a), fa.letter(AB, a), 0) for a in AB]
    cert = synthesize_partition(fa.letters(AB), parts, 0, alpha, triv(AB))
    cert.check(Validator(triv(AB)))
    assert len(cert.parts) == 1 and cert.parts[0].dfa == fa.universal(AB)


def test_parity_base_case():
    alpha, _ = syntactic_morphism(L("(aa)*", A1))
    base = length_mod_class(2, A1)
    syn = Synthesizer(alpha, base)
    cert = syn.full_partition()
    cert.check(Validator(base))
    assert {p.dfa for p in cert.parts} == {L("(aa)*", A1), L("a(aa)*", A1)}
    assert [st.case for st in syn.steps] == ["top"]
    assert validate(synthesize_language(alpha, alpha(""), base), base) == L("(aa)*", A1)


def test_parity_under_triv_is_refused():
    alpha, _ = syntactic_morphism(L("(aa)*", A1))
    with pytest.raises(NotAperiodic):
        Synthesizer(alpha, triv(A1))


def test_trivial_morphism_language():
    alpha, _ = syntactic_morphism(fa.universal(AB))
    assert validate(synthesize_language(alpha, 0, triv(AB)), triv(AB)) == fa.universal(AB)


def test_ab_star():
    alpha, acc = syntactic_morphism(L("(ab)*"))
    base = triv(AB)
    syn = Synthesizer(alpha, base)
    assert validate(syn.language(alpha("")), base) == fa.epsilon(AB)
    cert = syn.full_partition()
    cert.check(Validator(base))
    expr = disjoint_union_all(p.expr for p in cert.parts if p.value in acc)
    assert validate(expr, base) == L("(ab)*")
    assert syn.measures_decrease() and len(syn.steps) > 1
    assert not syn.delay_flags


@given(dfas(), st.sampled_from(["TRIV", "parity", "mod3"]))
def test_round_trip_on_random_languages(d, name):
    base = bases()[name]
    alpha, _ = syntactic_morphism(d)
    if alpha.monoid.size > 6 or not is_c_aperiodic(alpha, base):
        return
    syn = Synthesizer(alpha, base)
    cert = syn.full_partition()
    v = Validator(base)
    cert.check(v)
    for t in alpha.image:
        e = syn.language(t)
        assert v(e) == alpha.preimage(t)
        assert v(simplify(e, base)) == alpha.preimage(t)
    assert syn.measures_decrease()


@given(dfas(), st.sampled_from(["TRIV", "parity", "mod3"]))
def test_synthesized_partition_bounds_the_optimal_imprint(d, name):
    base = bases()[name]
    alpha, _ = syntactic_morphism(d)
    if alpha.monoid.size > 6 or not is_c_aperiodic(alpha, base):
        return
    cover = [p.dfa for p in Synthesizer(alpha, base).full_partition().parts]
    rho = canonical_rating_map([d]).rho
    assert full_imprint(saturate_finite(rho, base)) <= imprint_of_cover(cover, rho)
