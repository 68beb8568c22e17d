"""Fixpoint engines computing optimal SF(C)-imprints.

Both engines keep down-closed sets as antichains of maximal elements.  This
is exact because every rule is monotone: products are monotone in both
arguments, and r -> r^omega + r^(omega+1) is monotone since r^omega is the
unique idempotent power of r (take a common exponent for q <= r).

* ``saturate_finite``: least SF(C)-saturated set of pairs (class, r) for a
  finite base class.
* ``saturate_group``: least SF(C)-complete subset of R for a class of group
  languages, using the epsilon-separation oracle of the base.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from . import automata as fa
from .baseclass import BaseClass
from .semiring import DownsetSemiring, IdemSemiring, ImprintSet, RatingMap, downclose


class _Antichains:
    """Antichains of R indexed by a key, with a derivation tag per inserted element."""

    def __init__(self, semiring: IdemSemiring, rng: random.Random | None):
        self.R = semiring
        self.sets: dict = {}
        self.provenance: dict = {}
        self.queue: deque = deque()
        self.rng = rng
        self.inserted = 0

    def covers(self, key, r) -> bool:
        return any(self.R.leq(r, m) for m in self.sets.get(key, ()))

    def add(self, key, r, why) -> bool:
        if self.covers(key, r):
            return False
        cur = self.sets.setdefault(key, set())
        for m in [m for m in cur if self.R.leq(m, r)]:
            cur.discard(m)
        cur.add(r)
        self.provenance.setdefault((key, r), why)
        self.queue.append((key, r))
        self.inserted += 1
        return True

    def alive(self, key, r) -> bool:
        return r in self.sets.get(key, ())

    def pop(self):
        if self.rng is not None:
            self.queue.rotate(-self.rng.randrange(len(self.queue)))
        return self.queue.popleft()

    def snapshot(self):
        return [(k, r) for k, rs in self.sets.items() for r in list(rs)]

    def frozen(self) -> dict:
        return {k: frozenset(v) for k, v in self.sets.items() if v}


def _derivation(provenance: dict, key, fmt, indent: int = 0, seen=None) -> list[str]:
    seen = set() if seen is None else seen
    pad = "  " * indent
    why = provenance.get(key)
    label = fmt(key)
    if key in seen:
        return [f"{pad}{label}  (see above)"]
    seen.add(key)
    if why is None:
        return [f"{pad}{label}  [given]"]
    kind = why[0]
    if kind == "trivial":
        return [f"{pad}{label}  [trivial: word {why[1] or 'epsilon'}]"]
    if kind == "letter":
        return [f"{pad}{label}  [letter {why[1]}]"]
    if kind == "C-op":
        return [f"{pad}{label}  [C-operation: epsilon not separable from eta-preimage of {why[2]}, witness {why[1] or 'epsilon'}]"]
    if kind == "mult":
        lines = [f"{pad}{label}  [multiplication]"]
        lines += _derivation(provenance, why[1], fmt, indent + 1, seen)
        lines += _derivation(provenance, why[2], fmt, indent + 1, seen)
        return lines
    if kind == "closure":
        lines = [f"{pad}{label}  [SF-closure r^w + r^(w+1)]"]
        return lines + _derivation(provenance, why[1], fmt, indent + 1, seen)
    raise ValueError(f"unknown provenance {why!r}")


# -- finite base classes ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class SaturatedSet:
    rho: RatingMap
    base: BaseClass
    maximal: dict  # class -> frozenset of maximal r
    provenance: dict = field(repr=False)
    iterations: int = 0

    def contains(self, cls: int, r) -> bool:
        return any(self.rho.semiring.leq(r, m) for m in self.maximal.get(cls, ()))

    def pairs(self) -> list:
        return sorted((c, r) for c, rs in self.maximal.items() for r in rs)

    def full_imprint(self) -> ImprintSet:
        return downclose(self.rho.semiring, (r for rs in self.maximal.values() for r in rs))

    def same_as(self, other: "SaturatedSet") -> bool:
        return self.maximal == other.maximal

    def fmt_pair(self, key) -> str:
        c, r = key
        return f"({self.base.class_name(c)}, {self.rho.semiring.fmt(r)})"

    def derivation(self, cls: int, r) -> str:
        for m in self.maximal.get(cls, ()):
            if self.rho.semiring.leq(r, m):
                lines = _derivation(self.provenance, (cls, m), self.fmt_pair, int(m != r))
                if m != r:
                    head = self.fmt_pair((cls, r))
                    lines.insert(0, f"{head}  [downset of {self.fmt_pair((cls, m))}]")
                return "\n".join(lines)
        raise KeyError((cls, r))


def saturate_finite(rho: RatingMap, base: BaseClass, rng: random.Random | None = None,
                    seed: SaturatedSet | None = None) -> SaturatedSet:
    """Least SF(C)-saturated subset of (A*/~C) x R."""
    if not base.is_finite:
        raise TypeError("saturate_finite needs a finite base class")
    base.check_alphabet(rho.alphabet)
    R, canon = rho.semiring, base.canon
    store = _Antichains(R, rng)
    if seed is not None:
        for (c, r) in seed.pairs():
            store.add(c, r, seed.provenance.get((c, r)))
    store.add(canon.monoid.identity, R.one, ("trivial", ""))
    for i, a in enumerate(rho.alphabet):
        store.add(canon.letter_image[i], rho.letter_value[i], ("trivial", a))
    iterations = 0
    while store.queue:
        c, r = store.pop()
        if not store.alive(c, r):
            continue
        iterations += 1
        for d, q in store.snapshot():
            store.add(base.mul(c, d), R.mul(r, q), ("mult", (c, r), (d, q)))
            store.add(base.mul(d, c), R.mul(q, r), ("mult", (d, q), (c, r)))
        if base.is_idempotent(c):
            store.add(c, R.closure(r), ("closure", (c, r)))
    return SaturatedSet(rho, base, store.frozen(), store.provenance, iterations)


# -- group base classes -----------------------------------------------------

def iota_eps(tau: RatingMap, base: BaseClass):
    """Sum of the values q whose preimage under tau* cannot be separated from {epsilon}.

    Returns ``(value, hits)`` where hits lists ``(q, witness word)`` per such q.
    """
    if base.is_finite:
        raise TypeError("iota_eps needs a group base class")
    values, delta, words = tau.cayley()
    R = tau.semiring
    total = R.zero
    hits = []
    for i, q in enumerate(values):
        pre = fa.Dfa(tau.alphabet, delta, 0, frozenset({i}))
        if not base.eps_separable(pre):
            total = R.add(total, q)
            hits.append((q, words[i]))
    return total, hits


def eta_map(rho: RatingMap, S) -> RatingMap:
    """eta_S: letters a -> S.{rho(a)}.S, valued in antichains of R."""
    R = rho.semiring
    D = DownsetSemiring(R)
    S = list(S)
    vals = tuple(
        R.maxima(R.mul(R.mul(x, v), y) for x in S for y in S)
        for v in rho.letter_value
    )
    return RatingMap(D, rho.alphabet, vals)


@dataclass(frozen=True, eq=False)
class CompleteSet:
    rho: RatingMap
    base: BaseClass
    maximal: frozenset
    provenance: dict = field(repr=False)
    rounds: int = 0
    iterations: int = 0

    def __contains__(self, r) -> bool:
        return any(self.rho.semiring.leq(r, m) for m in self.maximal)

    def imprint(self) -> ImprintSet:
        return ImprintSet(self.rho.semiring, self.maximal)

    def same_as(self, other: "CompleteSet") -> bool:
        return self.maximal == other.maximal

    def fmt_key(self, key) -> str:
        return self.rho.semiring.fmt(key[1])

    def derivation(self, r) -> str:
        return _downset_derivation(self.rho.semiring, self.maximal, self.provenance, r, self.fmt_key)

    def full_imprint(self) -> "FullImprint":
        return full_imprint_group(self)


def _downset_derivation(R, maximal, provenance, r, fmt) -> str:
    for m in maximal:
        if R.leq(r, m):
            lines = _derivation(provenance, (None, m), fmt, int(m != r))
            if m != r:
                lines.insert(0, f"{R.fmt(r)}  [downset of {R.fmt(m)}]")
            return "\n".join(lines)
    raise KeyError(r)


def saturate_group(rho: RatingMap, base: BaseClass, rng: random.Random | None = None,
                   seed: CompleteSet | None = None) -> CompleteSet:
    """Least SF(C)-complete subset of R."""
    if base.is_finite:
        raise TypeError("saturate_group needs a group base class")
    R = rho.semiring
    store = _Antichains(R, rng)
    if seed is not None:
        for r in seed.maximal:
            store.add(None, r, seed.provenance.get((None, r)))
    rounds = iterations = 0
    while True:
        rounds += 1
        while store.queue:
            _, r = store.pop()
            if not store.alive(None, r):
                continue
            iterations += 1
            for _, q in store.snapshot():
                store.add(None, R.mul(r, q), ("mult", (None, r), (None, q)))
                store.add(None, R.mul(q, r), ("mult", (None, q), (None, r)))
            store.add(None, R.closure(r), ("closure", (None, r)))
        eta = eta_map(rho, store.sets.get(None, ()))
        _, hits = iota_eps(eta, base)
        if rng is not None:
            rng.shuffle(hits)
        grew = False
        for q, word in hits:
            for r in q:
                grew |= store.add(None, r, ("C-op", word, eta.semiring.fmt(q)))
        if not grew:
            break
    maximal = frozenset(store.sets.get(None, ()))
    return CompleteSet(rho, base, maximal, store.provenance, rounds, iterations)


@dataclass(frozen=True, eq=False)
class FullImprint:
    """Optimal imprint on A* reconstructed from a complete set."""

    complete: CompleteSet
    imprint: ImprintSet
    provenance: dict = field(repr=False)

    def derivation(self, r) -> str:
        R = self.complete.rho.semiring
        merged = dict(self.complete.provenance)
        merged.update(self.provenance)
        return _downset_derivation(R, self.imprint.maximal, merged, r, self.complete.fmt_key)


def full_imprint_group(complete: CompleteSet) -> FullImprint:
    """Close the complete set and the letter values under multiplication and downset."""
    rho = complete.rho
    R = rho.semiring
    store = _Antichains(R, None)
    for r in complete.maximal:
        store.add(None, r, complete.provenance.get((None, r)))
    for i, a in enumerate(rho.alphabet):
        store.add(None, rho.letter_value[i], ("letter", a))
    while store.queue:
        _, r = store.pop()
        if not store.alive(None, r):
            continue
        for _, q in store.snapshot():
            store.add(None, R.mul(r, q), ("mult", (None, r), (None, q)))
            store.add(None, R.mul(q, r), ("mult", (None, q), (None, r)))
    maximal = frozenset(store.sets.get(None, ()))
    return FullImprint(complete, ImprintSet(R, maximal), store.provenance)


def full_imprint(result) -> ImprintSet:
    """Optimal imprint on A* from either engine's output."""
    if isinstance(result, SaturatedSet):
        return result.full_imprint()
    if isinstance(result, CompleteSet):
        return full_imprint_group(result).imprint
    raise TypeError(f"not an engine result: {result!r}")


def saturate(rho: RatingMap, base: BaseClass, rng: random.Random | None = None):
    return saturate_finite(rho, base, rng) if base.is_finite else saturate_group(rho, base, rng)
