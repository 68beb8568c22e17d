"""SF(C)-covering, separation and membership through optimal imprints.

For an instance (L1, {L2_1..L2_n}) the languages are recognized exactly by
a product morphism alpha, and rho*(w) = {alpha(w)} in R = 2^M.  Let F_0 and
F_i be the elements accepting for L1 and L2_i.  The instance is coverable
iff the optimal imprint I on A* has no element T meeting F_0 and every F_i.

If a good SF(C)-cover K of L1 exists, K plus the complement of its union is
a cover of A* each of whose members avoids some F_i or avoids F_0, so every
imprint element below one of their values misses F_0 or some F_i.
Conversely, restricting an optimal cover of A* to the members meeting L1
gives a cover of L1 whose members, having no bad value, each avoid some
L2_i.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import automata as fa
from .baseclass import BaseClass, length_lasso
from .imprint import CompleteSet, SaturatedSet, full_imprint_group, saturate_finite, saturate_group
from .semiring import DEFAULT_BUDGET, CanonicalRating, ImprintSet, bits, canonical_rating_map
from .stutter import membership


@dataclass(frozen=True)
class CoverInstance:
    l1: fa.Dfa
    l2s: tuple
    base: BaseClass

    def __post_init__(self):
        object.__setattr__(self, "l2s", tuple(self.l2s))
        if not self.l2s:
            raise ValueError("covering needs at least one language to avoid")
        fa._check_same(self.l1, *self.l2s)
        if self.base.is_finite:
            self.base.check_alphabet(self.l1.alphabet)


@dataclass(frozen=True, eq=False)
class Verdict:
    coverable: bool
    instance: CoverInstance
    rating: CanonicalRating = field(repr=False)
    imprint: ImprintSet = field(repr=False)
    engine: object = field(repr=False)
    bad_element: int | None = None
    trace: str | None = None
    separator: fa.Dfa | None = None
    separator_hint: str | None = None

    def __bool__(self) -> bool:
        return self.coverable

    def bad_names(self) -> list[str] | None:
        if self.bad_element is None:
            return None
        m = self.rating.morphism.monoid
        return [m.name(x) for x in bits(self.bad_element)]

    def to_json(self) -> dict:
        R = self.rating.semiring
        out = {
            "coverable": self.coverable,
            "base": self.instance.base.name,
            "monoid_size": self.rating.morphism.monoid.size,
            "imprint_maximal": sorted(R.fmt(m) for m in self.imprint.maximal),
            "accepting": [R.fmt(f) for f in self.rating.accepting],
        }
        if isinstance(self.engine, SaturatedSet):
            out["iterations"] = self.engine.iterations
        elif isinstance(self.engine, CompleteSet):
            out["iterations"] = self.engine.iterations
            out["rounds"] = self.engine.rounds
        if self.bad_element is not None:
            out["bad_element"] = self.bad_names()
            out["trace"] = self.trace
        if self.separator is not None:
            out["separator"] = {"description": self.separator_hint, "dfa": fa.format_dfa(self.separator)}
        return out


def find_bad(imprint: ImprintSet, accepting: Sequence[int]) -> tuple[int, int] | None:
    """A minimal bad element and the maximal imprint element above it."""
    f0, rest = accepting[0], accepting[1:]
    for m in sorted(imprint.maximal):
        hits = [m & f for f in (f0, *rest)]
        if all(hits):
            t = 0
            for h in hits:
                t |= h & -h
            return t, m
    return None


def decide_cover(inst: CoverInstance, budget: int = DEFAULT_BUDGET,
                 rng: random.Random | None = None) -> Verdict:
    rating = canonical_rating_map([inst.l1, *inst.l2s], budget)
    if inst.base.is_finite:
        engine = saturate_finite(rating.rho, inst.base, rng)
        imprint = engine.full_imprint()
    else:
        engine = saturate_group(rating.rho, inst.base, rng)
        full = full_imprint_group(engine)
        imprint = full.imprint
    bad = find_bad(imprint, rating.accepting)
    if bad is None:
        return Verdict(True, inst, rating, imprint, engine)
    t, m = bad
    if isinstance(engine, SaturatedSet):
        cls = next(c for c, rs in engine.maximal.items() if m in rs)
        trace = engine.derivation(cls, t)
    else:
        trace = full.derivation(t)
    return Verdict(False, inst, rating, imprint, engine, bad_element=t, trace=trace)


def _mod_candidates(l1: fa.Dfa, mmax: int = 8):
    t, c, fin, residues = length_lasso(l1)

    def is_length(n):
        return n in fin if n < t else n % c in residues

    for m in range(1, mmax + 1):
        # lengths are periodic with period c past t, so t + c*m covers every residue pattern
        hit = sorted({n % m for n in range(t + c * m) if is_length(n)})
        yield fa.length_mod(l1.alphabet, m, hit), f"lengths congruent to {hit} mod {m}"


def find_separator(l1: fa.Dfa, l2: fa.Dfa, base: BaseClass):
    """Best-effort concrete separator in SF(C); checked before it is returned."""
    candidates = []
    if base.is_finite:
        canon = base.canon
        classes = canon.image_of(l1)
        candidates.append((base.class_language(classes), "union of the base classes meeting L1"))
    elif base.name == "MOD":
        candidates.extend(_mod_candidates(l1))
    candidates.append((l1, "L1 itself"))
    candidates.append((fa.complement(l2), "complement of L2"))
    for k, why in candidates:
        if fa.is_subset(l1, k) and fa.is_empty(fa.intersect(k, l2)) and membership(k, base):
            return k, why
    return None, None


def decide_separation(l1: fa.Dfa, l2: fa.Dfa, base: BaseClass, budget: int = DEFAULT_BUDGET,
                      rng: random.Random | None = None, witness: bool = True) -> Verdict:
    verdict = decide_cover(CoverInstance(l1, (l2,), base), budget, rng)
    if verdict.coverable and witness:
        k, why = find_separator(l1, l2, base)
        if k is not None:
            verdict = Verdict(True, verdict.instance, verdict.rating, verdict.imprint, verdict.engine,
                              separator=k, separator_hint=why)
    return verdict


def membership_via_covering(lang: fa.Dfa, base: BaseClass, budget: int = DEFAULT_BUDGET) -> bool:
    return decide_separation(lang, fa.complement(lang), base, budget, witness=False).coverable
