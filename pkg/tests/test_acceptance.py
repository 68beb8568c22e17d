"""Acceptance criteria 1-8.

Each test records one PASS/FAIL line, printed in the pytest terminal summary
(and directly when this file is run as a script).  Time limits are pinned
below and measured with time.perf_counter around the checked work.
"""
import random
import time

import pytest

from starfree import automata as fa
from starfree.algebra import syntactic_morphism
from starfree.baseclass import length_lasso, length_mod_class, mod_class, mod_eps_separable, triv
from starfree.covering import decide_separation, membership_via_covering
from starfree.imprint import full_imprint, saturate, saturate_finite, saturate_group
from starfree.oracle import Corpus, brute_aperiodic, brute_mod_eps_separable, random_lasso, verify_separator
from starfree.sdlang.codes import min_sync_delay
from starfree.sdlang.expr import SfConcat, SfLetter, SfUnion, Validator, compile_sf, parse_sd
from starfree.sdlang.star_elim import star_eliminate, to_starfree
from starfree.sdlang.synthesis import Synthesizer
from starfree.semiring import canonical_rating_map, imprint_of_cover
from starfree.stutter import is_c_aperiodic

from conftest import A1, AB, ACCEPTANCE, L

LIMIT_SCHUTZENBERGER = 1.0   # seconds, criterion 1
LIMIT_MOD = 1.0              # criterion 2
LIMIT_SYNTHESIS = 10.0       # criterion 5
LIMIT_STAR_ELIMINATION = 1.0  # criterion 6
CORPUS = Corpus(seed=0, count=200, max_states=4, alphabet=AB)
COVERING_BUDGET = 256        # lets every corpus product monoid through (largest is 145)
SYNTHESIS_MAX_MONOID = 6
SCHEDULES = 5
LASSOS = 100


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def corpus_bases():
    return {"TRIV": triv(AB), "parity": length_mod_class(2, AB), "length-mod-3": length_mod_class(3, AB),
            "MOD": mod_class()}


# -- 1 ------------------------------------------------------------------------

SCHUTZENBERGER = [
    ("(ab)*", True),
    ("(a+b)*ab(a+b)*", True),
    ("~((a+b)*aa(a+b)*)", True),
    ("(aa)*", False),
    ("(ab+ba)*", False),
]


def test_criterion_1_schutzenberger_suite():
    start = time.perf_counter()
    rows = []
    for text, stated in SCHUTZENBERGER:
        d = L(text)
        alpha, _ = syntactic_morphism(d)
        verdict = is_c_aperiodic(alpha, triv(AB)).aperiodic
        rows.append((text, stated, verdict, brute_aperiodic(alpha.monoid.table)))
    elapsed = time.perf_counter() - start
    engine_matches_oracle = all(v == o for _, _, v, o in rows)
    mismatched = [t for t, s, v, _ in rows if s != v]
    ok = engine_matches_oracle and not mismatched and elapsed < LIMIT_SCHUTZENBERGER
    detail = f"{len(rows) - len(mismatched)}/{len(rows)} stated verdicts, engine == brute_aperiodic on all, {elapsed:.3f}s"
    if mismatched:
        detail += f"; stated verdict unattainable for {', '.join(mismatched)} (aperiodic per brute_aperiodic)"
    record(1, ok, detail)
    # the attainable part: every verdict agrees with the oracle, in time
    assert engine_matches_oracle
    assert elapsed < LIMIT_SCHUTZENBERGER
    for text, stated, verdict, _ in rows:
        if text != "(ab+ba)*":
            assert verdict == stated, text


@pytest.mark.xfail(strict=True, reason="(ab+ba)* has an aperiodic syntactic monoid; "
                                       "the stated 'not star-free' verdict contradicts the brute-force oracle")
def test_criterion_1_stated_verdict_for_ab_plus_ba_star():
    alpha, _ = syntactic_morphism(L("(ab+ba)*"))
    assert not is_c_aperiodic(alpha, triv(AB)).aperiodic


# -- 2 ------------------------------------------------------------------------

def test_criterion_2_mod_suite():
    start = time.perf_counter()
    even, odd = L("(aa)*", A1), L("a(aa)*", A1)
    members = [is_c_aperiodic(syntactic_morphism(x)[0], mod_class()).aperiodic for x in (even, odd)]
    under_triv = decide_separation(even, odd, triv(A1))
    under_mod = decide_separation(even, odd, mod_class())
    sep = under_mod.separator
    sep_ok = sep is not None and verify_separator(sep, even, odd) and sep == fa.length_mod(A1, 2, [0])
    elapsed = time.perf_counter() - start
    ok = all(members) and not under_triv and bool(under_mod) and sep_ok and elapsed < LIMIT_MOD
    record(2, ok, f"members {members}, separation TRIV={bool(under_triv)} MOD={bool(under_mod)}, "
                  f"even-length separator verified={sep_ok}, {elapsed:.3f}s")
    assert ok


# -- 3 ------------------------------------------------------------------------

def test_criterion_3_consistency_triangle():
    dfas = list(CORPUS.dfas())
    disagreements = []
    checked = 0
    for i, d in enumerate(dfas):
        alpha, _ = syntactic_morphism(d)
        for name, base in corpus_bases().items():
            member = is_c_aperiodic(alpha, base).aperiodic
            via_cover = membership_via_covering(d, base, COVERING_BUDGET)
            separate = decide_separation(d, fa.complement(d), base, COVERING_BUDGET, witness=False).coverable
            checked += 1
            if not member == via_cover == separate:
                disagreements.append((i, name))
    ok = len(dfas) >= 200 and not disagreements
    record(3, ok, f"{len(dfas)} DFAs x {len(corpus_bases())} bases = {checked} checks, "
                  f"{len(disagreements)} disagreements")
    assert ok, disagreements[:10]


# -- 4 ------------------------------------------------------------------------

def test_criterion_4_synchronization_delay():
    got = (min_sync_delay(L("ab")), min_sync_delay(L("(aab)*ab")), min_sync_delay(L("aa", A1), dmax=10))
    ok = got == (1, 2, None)
    record(4, ok, f"delays {{ab}}={got[0]}, (aab)*ab={got[1]}, {{aa}} up to 10={got[2]}")
    assert ok


# -- 5 ------------------------------------------------------------------------

def synthesis_instances():
    for d in CORPUS.dfas():
        alpha, _ = syntactic_morphism(d)
        if alpha.monoid.size > SYNTHESIS_MAX_MONOID:
            continue
        for name, base in corpus_bases().items():
            if base.is_finite and is_c_aperiodic(alpha, base):
                yield d, alpha, name, base


def test_criterion_5_synthesis_round_trip():
    start = time.perf_counter()
    total = passed = 0
    failures = []
    for d, alpha, name, base in synthesis_instances():
        total += 1
        try:
            syn = Synthesizer(alpha, base)
            validator = Validator(base)
            for t in sorted(alpha.image):
                assert validator(syn.language(t)) == alpha.preimage(t)
            assert syn.measures_decrease()
            passed += 1
        except Exception as exc:  # noqa: BLE001  (every failure is reported below)
            failures.append((name, repr(exc)))
    elapsed = time.perf_counter() - start
    ok = total > 0 and passed == total and elapsed < LIMIT_SYNTHESIS
    record(5, ok, f"{passed}/{total} instances validated and equal to every preimage, "
                  f"measure strictly decreasing, {elapsed:.2f}s")
    assert ok, failures[:5]


# -- 6 ------------------------------------------------------------------------

def test_criterion_6_star_elimination():
    start = time.perf_counter()
    cases = [
        (L("ab"), SfConcat(SfLetter("a"), SfLetter("b"))),
        (fa.letters(AB), SfUnion(SfLetter("a"), SfLetter("b"))),
        (L("(aab)*ab"), to_starfree(parse_sd("(a.a.b)*1 . a . b"), AB)),
    ]
    results = []
    for k, k_sf in cases:
        d = min_sync_delay(k)
        results.append((d, compile_sf(star_eliminate(k_sf, d, AB), AB) == fa.star(k)))
    elapsed = time.perf_counter() - start
    ok = all(eq for _, eq in results) and elapsed < LIMIT_STAR_ELIMINATION
    record(6, ok, f"delays {[d for d, _ in results]}, all equal to K*: {all(eq for _, eq in results)}, "
                  f"{elapsed:.3f}s")
    assert ok


# -- 7 ------------------------------------------------------------------------

def test_criterion_7_fixpoint_engine_properties():
    order_bad, idem_bad, runs = [], [], 0
    for i, d in enumerate(CORPUS.dfas()):
        rho = canonical_rating_map([d], COVERING_BUDGET).rho
        for name, base in corpus_bases().items():
            ref = saturate(rho, base)
            rng = random.Random(1000 * i + len(name))
            for _ in range(SCHEDULES):
                runs += 1
                if not saturate(rho, base, rng).same_as(ref):
                    order_bad.append((i, name))
            again = saturate_finite(rho, base, seed=ref) if base.is_finite else saturate_group(rho, base, seed=ref)
            if not again.same_as(ref):
                idem_bad.append((i, name))
    sound_bad, covers = [], 0
    for d, alpha, name, base in synthesis_instances():
        rho = canonical_rating_map([d]).rho
        cover = [p.dfa for p in Synthesizer(alpha, base).full_partition().parts]
        covers += 1
        if not full_imprint(saturate_finite(rho, base)) <= imprint_of_cover(cover, rho):
            sound_bad.append(name)
    ok = not order_bad and not idem_bad and not sound_bad
    record(7, ok, f"{runs} shuffled runs agree ({len(order_bad)} bad), re-saturation idempotent "
                  f"({len(idem_bad)} bad), optimal imprint below {covers} synthesized covers ({len(sound_bad)} bad)")
    assert ok


# -- 8 ------------------------------------------------------------------------

def test_criterion_8_mod_oracle():
    rng = random.Random(0)
    bad = []
    for i in range(LASSOS):
        d, t, c = random_lasso(rng)
        assert length_lasso(d)[:2] == (t, c)
        if mod_eps_separable(d) != brute_mod_eps_separable(d, t + 2 * c):
            bad.append(i)
    ok = not bad
    record(8, ok, f"{LASSOS} unary length structures, {len(bad)} disagreements")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
