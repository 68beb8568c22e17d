"""C-stutters, C-aperiodicity and membership in SF(C).

An element s is a C-stutter when every C-cover of alpha^{-1}(s) has a
member K with K meeting KK.  For a finite class every C-cover is coarser
than the partition into ~C-classes, and a class D meets DD exactly when it
is idempotent, so s is a stutter iff some idempotent class meets
alpha^{-1}(s).  For a class of group languages, s is a stutter iff {epsilon}
cannot be separated from alpha^{-1}(s).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import automata as fa
from .algebra import MonoidMorphism, omega, syntactic_morphism
from .baseclass import BaseClass


@dataclass(frozen=True)
class StutterWitness:
    element: int
    # finite kind: an idempotent class meeting the preimage and a word in both
    cls: int | None = None
    word: str | None = None
    # group kind: the oracle's answer on the preimage
    separable: bool | None = None


@dataclass(frozen=True, eq=False)
class StutterReport:
    morphism: MonoidMorphism
    base: BaseClass
    stutters: frozenset
    witnesses: dict = field(default_factory=dict)  # element -> StutterWitness

    def is_stutter(self, s: int) -> bool:
        return s in self.stutters

    def rows(self):
        """(element, name, stutter?, omega-identity holds?) for every image element."""
        m = self.morphism.monoid
        out = []
        for s in sorted(self.morphism.image):
            _, e, e1 = omega(m, s)
            out.append((s, m.name(s), s in self.stutters, e == e1))
        return out


def class_element_pairs(alpha: MonoidMorphism, base: BaseClass) -> dict:
    """Reachable pairs (class, element) of the product morphism, with a shortest witness word."""
    canon = base.canon
    cm, am = canon.monoid, alpha.monoid
    start = (cm.identity, am.identity)
    seen = {start: ""}
    queue = deque([start])
    while queue:
        c, x = queue.popleft()
        w = seen[(c, x)]
        for i, a in enumerate(alpha.alphabet):
            nxt = (cm.table[c][canon.letter_image[i]], am.table[x][alpha.letter_image[i]])
            if nxt not in seen:
                seen[nxt] = w + a
                queue.append(nxt)
    return seen


def stutters_finite(alpha: MonoidMorphism, base: BaseClass) -> StutterReport:
    if not base.is_finite:
        raise TypeError("stutters_finite needs a finite base class")
    base.check_alphabet(alpha.alphabet)
    witnesses = {}
    for (c, x), w in class_element_pairs(alpha, base).items():
        if base.is_idempotent(c) and x not in witnesses:
            witnesses[x] = StutterWitness(x, cls=c, word=w)
    return StutterReport(alpha, base, frozenset(witnesses), witnesses)


def stutters_group(alpha: MonoidMorphism, base: BaseClass) -> StutterReport:
    if base.is_finite:
        raise TypeError("stutters_group needs a group base class")
    witnesses = {}
    for s in sorted(alpha.image):
        sep = bool(base.eps_separable(alpha.preimage(s)))
        witnesses[s] = StutterWitness(s, separable=sep)
    stut = frozenset(s for s, w in witnesses.items() if not w.separable)
    return StutterReport(alpha, base, stut, witnesses)


def stutters(alpha: MonoidMorphism, base: BaseClass) -> StutterReport:
    return stutters_finite(alpha, base) if base.is_finite else stutters_group(alpha, base)


def check_witnesses(report: StutterReport) -> None:
    """Re-check a finite-kind report with automata operations.

    Stutters: the witness class is idempotent and meets the preimage.
    Non-stutters: every class meeting the preimage is a D with D and DD
    disjoint, so the class partition is a cover without stuttering member.
    """
    alpha, base = report.morphism, report.base
    if not base.is_finite:
        return
    for s in sorted(alpha.image):
        pre = alpha.preimage(s)
        if s in report.stutters:
            wit = report.witnesses[s]
            assert base.is_idempotent(wit.cls), f"witness class of {s} is not idempotent"
            assert not fa.is_empty(fa.intersect(pre, base.class_language(wit.cls)))
            assert alpha(wit.word) == s and base.class_of(wit.word) == wit.cls
            continue
        for c in base.classes:
            d = base.class_language(c)
            if fa.is_empty(fa.intersect(pre, d)):
                continue
            assert fa.is_empty(fa.intersect(d, fa.concat(d, d))), \
                f"class {c} meets alpha^-1({s}) and its own square"


@dataclass(frozen=True)
class AperiodicityVerdict:
    aperiodic: bool
    counterexample: int | None = None
    exponent: int | None = None
    s_omega: int | None = None
    s_omega_plus_1: int | None = None
    report: StutterReport | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.aperiodic


def is_c_aperiodic(alpha: MonoidMorphism, base: BaseClass) -> AperiodicityVerdict:
    report = stutters(alpha, base)
    m = alpha.monoid
    for s in sorted(report.stutters):
        k, e, e1 = omega(m, s)
        if e != e1:
            return AperiodicityVerdict(False, s, k, e, e1, report)
    return AperiodicityVerdict(True, report=report)


def membership(lang: fa.Dfa, base: BaseClass) -> bool:
    """Is the language of ``lang`` in SF(base)?"""
    alpha, _ = syntactic_morphism(lang)
    return is_c_aperiodic(alpha, base).aperiodic
