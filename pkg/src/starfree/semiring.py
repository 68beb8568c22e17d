"""Finite idempotent semirings and nice multiplicative rating maps.

The working instance is the powerset semiring 2^M of a finite monoid with
elements encoded as integer bit sets.  ``DownsetSemiring`` lifts any such
semiring to finite antichains, which is how sets of rating-set elements are
handled when only their down-closures matter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import automata as fa
from .algebra import FiniteMonoid, MonoidMorphism, RecognizedLanguage, product_morphism

DEFAULT_BUDGET = 24


class BudgetExceeded(RuntimeError):
    pass


class IdemSemiring:
    """Interface: ``zero``, ``one``, ``add``, ``mul``, ``leq`` over hashable elements."""

    zero = None
    one = None

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        return self.add(x, y) == y

    def sum(self, xs):
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out

    def power_pair(self, r):
        """``(r^omega, r^(omega+1))`` by iterating powers until they cycle."""
        powers = [r]
        index = {r: 0}
        while True:
            nxt = self.mul(powers[-1], r)
            if nxt in index:
                break
            index[nxt] = len(powers)
            powers.append(nxt)
        # the cycle is powers[index[nxt]:]; exactly one member is idempotent
        for p in powers[index[nxt]:]:
            if self.mul(p, p) == p:
                return p, self.mul(p, r)
        raise AssertionError("cyclic subsemigroup without idempotent")

    def closure(self, r):
        """The SF-closure value r^omega + r^(omega+1)."""
        e, e1 = self.power_pair(r)
        return self.add(e, e1)

    def maxima(self, xs: Iterable) -> frozenset:
        xs = set(xs)
        return frozenset(x for x in xs if not any(y != x and self.leq(x, y) for y in xs))

    def fmt(self, x) -> str:
        return str(x)

    def check_axioms(self, sample: Sequence) -> None:
        """Spot-check the semiring laws on the given elements."""
        z, o = self.zero, self.one
        for x in sample:
            assert self.add(x, x) == x, "addition not idempotent"
            assert self.mul(z, x) == z == self.mul(x, z), "zero does not annihilate"
            assert self.mul(o, x) == x == self.mul(x, o), "one is not a unit"
            assert self.add(z, x) == x
            for y in sample:
                assert self.add(x, y) == self.add(y, x)
                for w in sample:
                    assert self.mul(self.mul(x, y), w) == self.mul(x, self.mul(y, w))
                    assert self.mul(x, self.add(y, w)) == self.add(self.mul(x, y), self.mul(x, w))
                    assert self.mul(self.add(y, w), x) == self.add(self.mul(y, x), self.mul(w, x))


def bits(x: int) -> list[int]:
    out = []
    i = 0
    while x:
        if x & 1:
            out.append(i)
        x >>= 1
        i += 1
    return out


def submasks(x: int):
    """All subsets of the bit set ``x``, including 0 and x."""
    sub = x
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & x


class PowersetSemiring(IdemSemiring):
    """2^M: union as addition, the lifted monoid product as multiplication."""

    def __init__(self, monoid: FiniteMonoid, budget: int = DEFAULT_BUDGET):
        if monoid.size > budget:
            raise BudgetExceeded(f"monoid of size {monoid.size} exceeds the budget of {budget} elements")
        self.monoid = monoid
        self.n = monoid.size
        self.zero = 0
        self.one = 1 << monoid.identity
        self.full = (1 << self.n) - 1
        # chunk[i][k][byte] = image of the byte's elements (at offset 8k) under left mult by i
        t = monoid.table
        self._chunks = []
        for i in range(self.n):
            per = []
            for k in range(0, self.n, 8):
                tbl = [0] * 256
                for byte in range(1, 256):
                    low = byte & -byte
                    j = k + low.bit_length() - 1
                    tbl[byte] = tbl[byte ^ low] | (1 << t[i][j] if j < self.n else 0)
                per.append(tbl)
            self._chunks.append(per)
        self._cache: dict = {}

    def add(self, x: int, y: int) -> int:
        return x | y

    def leq(self, x: int, y: int) -> bool:
        return x & ~y == 0

    def mul(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        key = (x, y)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        out = 0
        ys = [(y >> (8 * k)) & 255 for k in range(len(self._chunks[0]))]
        for i in bits(x):
            per = self._chunks[i]
            for k, byte in enumerate(ys):
                if byte:
                    out |= per[k][byte]
        if len(self._cache) < 1 << 20:
            self._cache[key] = out
        return out

    def elements(self):
        return range(1 << self.n)

    def singleton(self, x: int) -> int:
        return 1 << x

    def maxima(self, xs: Iterable[int]) -> frozenset:
        out: list[int] = []
        for x in sorted(set(xs), key=lambda v: -bin(v).count("1")):
            if not any(x & ~y == 0 for y in out):
                out.append(x)
        return frozenset(out)

    def fmt(self, x: int) -> str:
        return "{" + ",".join(self.monoid.name(i) for i in bits(x)) + "}"

    def __repr__(self) -> str:
        return f"PowersetSemiring(|M|={self.n})"


class DownsetSemiring(IdemSemiring):
    """Antichains of a base semiring, standing for their down-closures.

    Addition is the maxima of the union, multiplication the maxima of all
    pairwise products.  Since multiplication of the base is monotone, this
    is the semiring of finitely generated down-sets.
    """

    def __init__(self, base: IdemSemiring):
        self.base = base
        self.zero = frozenset()
        self.one = frozenset({base.one})
        self._cache: dict = {}

    def add(self, x: frozenset, y: frozenset) -> frozenset:
        return self.base.maxima(x | y)

    def leq(self, x: frozenset, y: frozenset) -> bool:
        return all(any(self.base.leq(a, b) for b in y) for a in x)

    def mul(self, x: frozenset, y: frozenset) -> frozenset:
        key = (x, y)
        hit = self._cache.get(key)
        if hit is None:
            hit = self.base.maxima(self.base.mul(a, b) for a in x for b in y)
            self._cache[key] = hit
        return hit

    def fmt(self, x: frozenset) -> str:
        return "<" + ", ".join(sorted(self.base.fmt(a) for a in x)) + ">"


@dataclass(frozen=True, eq=False)
class RatingMap:
    """A nice multiplicative rating map fixed by the values of the letters."""

    semiring: IdemSemiring
    alphabet: tuple
    letter_value: tuple

    def value_of_letter(self, a: str):
        return self.letter_value[self.alphabet.index(a)]

    def __call__(self, word: str):
        r = self.semiring.one
        for a in word:
            r = self.semiring.mul(r, self.value_of_letter(a))
        return r

    def evaluate(self, lang: fa.Dfa):
        """rho(K): the sum of rho*(w) over w in K, from the reachable part of K x rho*."""
        if lang.alphabet != self.alphabet:
            raise fa.AlphabetMismatch("rating map and language use different alphabets")
        R = self.semiring
        start = (lang.initial, R.one)
        seen = {start}
        stack = [start]
        while stack:
            q, r = stack.pop()
            for i, p in enumerate(lang.delta[q]):
                nxt = (p, R.mul(r, self.letter_value[i]))
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return R.sum(r for q, r in seen if q in lang.accepting)

    def cayley(self):
        """Values reachable as rho*(w) and the letter transitions between them.

        Returns ``(values, delta, words)``; ``values[0]`` is rho*(epsilon) and
        ``words[i]`` a shortest word with value ``values[i]``.
        """
        R = self.semiring
        index = {R.one: 0}
        values = [R.one]
        words = [""]
        delta = []
        for r in values:
            row = []
            w = words[index[r]]
            for i, a in enumerate(self.alphabet):
                nxt = R.mul(r, self.letter_value[i])
                if nxt not in index:
                    index[nxt] = len(values)
                    values.append(nxt)
                    words.append(w + a)
                row.append(index[nxt])
            delta.append(tuple(row))
        return values, tuple(delta), words

    def preimage(self, value) -> fa.Dfa:
        values, delta, _ = self.cayley()
        acc = frozenset(i for i, v in enumerate(values) if v == value)
        return fa.minimize(fa.Dfa(self.alphabet, delta, 0, acc))


@dataclass(frozen=True, eq=False)
class CanonicalRating:
    """Canonical rating map of a tuple of languages and their accepting sets."""

    rho: RatingMap
    morphism: MonoidMorphism
    accepting: tuple  # accepting[i] = bit set of elements whose component i accepts
    components: list = field(repr=False)

    @property
    def semiring(self) -> PowersetSemiring:
        return self.rho.semiring


def canonical_rating_map(parts: Sequence, budget: int = DEFAULT_BUDGET) -> CanonicalRating:
    """Rating map into 2^M for the product M of the parts' syntactic monoids.

    ``parts`` may hold Dfa or RecognizedLanguage values.
    """
    recs = [p if isinstance(p, RecognizedLanguage) else RecognizedLanguage.of(p) for p in parts]
    if not recs:
        raise ValueError("no languages given")
    morph, components = product_morphism([r.morphism for r in recs])
    R = PowersetSemiring(morph.monoid, budget)
    rho = RatingMap(R, morph.alphabet, tuple(1 << x for x in morph.letter_image))
    accepting = tuple(
        sum(1 << x for x, comp in enumerate(components) if comp[i] in rec.accepting)
        for i, rec in enumerate(recs)
    )
    return CanonicalRating(rho, morph, accepting, components)


@dataclass(frozen=True, eq=False)
class ImprintSet:
    """A down-closed subset of R, stored as its maximal elements."""

    semiring: IdemSemiring
    maximal: frozenset

    def __contains__(self, r) -> bool:
        return any(self.semiring.leq(r, m) for m in self.maximal)

    def __le__(self, other: "ImprintSet") -> bool:
        return all(m in other for m in self.maximal)

    def __eq__(self, other) -> bool:
        return isinstance(other, ImprintSet) and self <= other and other <= self

    def __hash__(self) -> int:
        return hash(self.maximal)

    def __or__(self, other: "ImprintSet") -> "ImprintSet":
        return downclose(self.semiring, self.maximal | other.maximal)

    def elements(self) -> frozenset:
        """Every member; only available for powerset semirings."""
        out = set()
        for m in self.maximal:
            out.update(submasks(m))
        return frozenset(out)

    def fmt(self) -> str:
        return "down{" + ", ".join(sorted(self.semiring.fmt(m) for m in self.maximal)) + "}"

    def __repr__(self) -> str:
        return f"ImprintSet({self.fmt()})"


def downclose(semiring: IdemSemiring, xs: Iterable) -> ImprintSet:
    return ImprintSet(semiring, semiring.maxima(xs))


def imprint_of_cover(cover: Sequence[fa.Dfa], rho: RatingMap) -> ImprintSet:
    return downclose(rho.semiring, (rho.evaluate(k) for k in cover))
