"""Building BSD(C) expressions from a C-aperiodic morphism.

``Synthesizer.partition(P, H, s)`` returns an s-safe partition of P* into
BSD(C) languages, given a prefix code P with bounded delay and a 1-safe
partition H of P.  Every recursive call strictly lowers the triple
(|alpha(P+)|, |H|, |s.alpha(P*)|) in lexicographic order; the synthesizer
records each step and asserts the decrease.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .. import automata as fa
from ..algebra import MonoidMorphism
from ..baseclass import BaseClass
from ..stutter import is_c_aperiodic
from .codes import min_sync_delay
from .expr import InterClass, Letter, Star, UnambProduct, Validator, disjoint_union_all, to_text

log = logging.getLogger(__name__)


class NotAperiodic(ValueError):
    pass


class SynthesisError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class Part:
    expr: object
    dfa: fa.Dfa
    value: int  # s.alpha(u) for every u in the part


def merge_by_value(parts: list) -> list:
    """Coarsen a partition by joining parts with equal value (a disjoint union stays safe)."""
    groups: dict = {}
    for p in parts:
        groups.setdefault(p.value, []).append(p)
    out = []
    for value, ps in groups.items():
        if len(ps) == 1:
            out.append(ps[0])
        else:
            out.append(Part(disjoint_union_all(p.expr for p in ps), fa.union(*(p.dfa for p in ps)), value))
    return out


@dataclass(frozen=True, eq=False)
class PartitionCertificate:
    parts: tuple
    P: fa.Dfa
    s: int
    alpha: MonoidMorphism
    base: BaseClass

    def check(self, validator: Validator | None = None) -> None:
        """Raise AssertionError unless this is an s-safe BSD(C)-partition of P*."""
        m = self.alpha.monoid
        parts = self.parts
        for i, a in enumerate(parts):
            for b in parts[i + 1:]:
                assert fa.is_empty(fa.intersect(a.dfa, b.dfa)), "parts overlap"
        union = fa.union(*(p.dfa for p in parts)) if parts else fa.empty(self.P.alphabet)
        assert fa.equivalent(union, fa.star(self.P)), "parts do not cover P*"
        for p in parts:
            vals = {m.mul(self.s, x) for x in self.alpha.image_of(p.dfa)}
            assert vals == {p.value}, f"part {to_text(p.expr)} is not {self.s}-safe: {vals}"
        if validator is not None:
            for p in parts:
                assert fa.equivalent(validator(p.expr), p.dfa), f"part {to_text(p.expr)} compiles differently"


@dataclass
class MeasureStep:
    parent: tuple | None
    child: tuple
    case: str


@dataclass
class Synthesizer:
    alpha: MonoidMorphism
    base: BaseClass
    dmax: int = 8
    check_aperiodic: bool = True
    steps: list = field(default_factory=list)
    delay_flags: list = field(default_factory=list)
    _memo: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.base.is_finite:
            raise TypeError("synthesis needs a finite base class")
        self.base.check_alphabet(self.alpha.alphabet)
        if self.check_aperiodic:
            verdict = is_c_aperiodic(self.alpha, self.base)
            if not verdict:
                raise NotAperiodic(
                    f"morphism is not {self.base.name}-aperiodic: stutter "
                    f"{self.alpha.monoid.name(verdict.counterexample)} has s^w != s^(w+1)")
        self.m = self.alpha.monoid

    # -- helpers

    def image(self, d: fa.Dfa) -> frozenset:
        return self.alpha.image_of(d)

    def left(self, s: int, xs) -> frozenset:
        return frozenset(self.m.mul(s, x) for x in xs)

    def measure(self, P: fa.Dfa, H, s: int) -> tuple:
        return (len(self.image(fa.plus(P))), len(H), len(self.left(s, self.image(fa.star(P)))))

    def star_of(self, P: fa.Dfa, p_expr, bound: int):
        d = min_sync_delay(P, self.dmax)
        if d is None:
            raise SynthesisError(f"no synchronization delay up to {self.dmax} for a code in the recursion")
        if d > bound:
            self.delay_flags.append((to_text(p_expr), d, bound))
            log.warning("measured delay %d exceeds the expected bound %d", d, bound)
        return Star(p_expr, d)

    # -- the recursion

    def partition(self, P: fa.Dfa, H: list, s: int, bound: int = 1, parent: tuple | None = None,
                  case: str = "top") -> list:
        mu = self.measure(P, H, s)
        self.steps.append(MeasureStep(parent, mu, case))
        if parent is not None and not mu < parent:
            raise SynthesisError(f"measure did not decrease: {parent} -> {mu} ({case})")
        key = (P, tuple(h.dfa for h in H), s)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = merge_by_value(self._partition(P, H, s, bound, mu))
        self._memo[key] = out
        return out

    def _partition(self, P, H, s, bound, mu):
        m = self.m
        pstar = fa.star(P)
        target = self.left(s, self.image(pstar))
        p_expr = disjoint_union_all(h.expr for h in H)
        unstable = None
        for h in H:
            if self.left(s, self.image(fa.concat(pstar, h.dfa))) != target:
                unstable = h
                break
        if unstable is None:
            star = self.star_of(P, p_expr, bound)
            parts = []
            for c in self.base.classes:
                d = fa.intersect(pstar, self.base.class_language(c))
                w = fa.shortest_word(d)
                if w is not None:
                    parts.append(Part(InterClass(star, frozenset({c})), d, m.mul(s, self.alpha(w))))
            return parts

        h = unstable
        rest = [g for g in H if g is not h]
        p_minus = fa.difference(P, h.dfa)
        U = self.partition(p_minus, rest, m.identity, bound, mu, "minus H")
        if self.image(fa.concat(pstar, h.dfa)) == self.image(fa.plus(P)):
            t = h.value
            parts = [Part(u.expr, u.dfa, m.mul(s, u.value)) for u in U]
            for u in U:
                W = self.partition(P, H, m.mul(m.mul(s, u.value), t), bound, mu, "sub-case 1")
                uh = UnambProduct(u.expr, h.expr)
                uh_dfa = fa.concat(u.dfa, h.dfa)
                for w in W:
                    parts.append(Part(UnambProduct(uh, w.expr), fa.concat(uh_dfa, w.dfa), w.value))
            return parts
        Q = fa.concat(fa.star(p_minus), h.dfa)
        F = [Part(UnambProduct(u.expr, h.expr), fa.concat(u.dfa, h.dfa), m.mul(u.value, h.value)) for u in U]
        V = self.partition(Q, F, m.identity, bound + 1, mu, "sub-case 2")
        return [Part(UnambProduct(v.expr, u.expr), fa.concat(v.dfa, u.dfa), m.mul(s, m.mul(v.value, u.value)))
                for v in V for u in U]

    # -- entry points

    def letter_partition(self) -> list:
        A = self.alpha.alphabet
        return [Part(Letter(a), fa.letter(A, a), self.alpha(a)) for a in A]

    def full_partition(self) -> PartitionCertificate:
        """1-safe BSD(C)-partition of A*."""
        letters = fa.letters(self.alpha.alphabet)
        parts = self.partition(letters, self.letter_partition(), self.m.identity)
        return PartitionCertificate(tuple(parts), letters, self.m.identity, self.alpha, self.base)

    def language(self, t: int):
        """BSD(C) expression for alpha^{-1}(t)."""
        cert = self.full_partition()
        return disjoint_union_all(p.expr for p in cert.parts if p.value == t)

    def measures_decrease(self) -> bool:
        return all(st.parent is None or st.child < st.parent for st in self.steps)


def synthesize_partition(P: fa.Dfa, Hparts: list, s: int, alpha: MonoidMorphism, base: BaseClass,
                         dmax: int = 8, bound: int | None = None) -> PartitionCertificate:
    """s-safe BSD(C)-partition of P* from a 1-safe partition of P (a list of Part)."""
    syn = Synthesizer(alpha, base, dmax)
    if bound is None:
        bound = min_sync_delay(P, dmax) or dmax
    parts = syn.partition(P, list(Hparts), s, bound)
    return PartitionCertificate(tuple(parts), P, s, alpha, base)


def synthesize_language(alpha: MonoidMorphism, t: int, base: BaseClass, dmax: int = 8):
    return Synthesizer(alpha, base, dmax).language(t)
