"""Finite monoids and morphisms from the free monoid A*.

Elements are the integers ``0..size-1``.  Monoids built here from a
generating set number their elements in BFS order from the identity, so
``names[i]`` is the length-lexicographically least word reaching ``i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import automata as fa


class MonoidError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    table: tuple  # table[x][y] = x*y
    identity: int
    names: tuple = ()

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise MonoidError("multiplication table must be square and non-empty")
        if not 0 <= self.identity < n:
            raise MonoidError("identity out of range")

    @property
    def size(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(self.size)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def prod(self, xs) -> int:
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def name(self, x: int) -> str:
        if self.names:
            w = self.names[x]
            return w if w else "1"
        return str(x)

    def is_idempotent(self, x: int) -> bool:
        return self.table[x][x] == x

    def idempotents(self) -> list[int]:
        return [x for x in self.elements if self.table[x][x] == x]

    def check(self) -> None:
        """Raise MonoidError unless the table is associative with a two-sided identity."""
        t = np.asarray(self.table, dtype=np.int64)
        if t.min() < 0 or t.max() >= self.size:
            raise MonoidError("table entries out of range")
        e = self.identity
        if not (np.array_equal(t[e], np.arange(self.size)) and np.array_equal(t[:, e], np.arange(self.size))):
            raise MonoidError(f"element {e} is not a two-sided identity")
        # (xy)z vs x(yz) for all triples
        left = t[t]          # left[x, y, z] = t[t[x, y], z]
        right = t[:, t]      # right[x, y, z] = t[x, t[y, z]]
        bad = np.argwhere(left != right)
        if len(bad):
            x, y, z = bad[0]
            raise MonoidError(f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})")

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size})"


def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid(((0,),), 0, ("",))


def cyclic_group(m: int) -> FiniteMonoid:
    return FiniteMonoid(tuple(tuple((x + y) % m for y in range(m)) for x in range(m)), 0,
                        tuple("g" * x for x in range(m)))


def omega(m: FiniteMonoid, s: int) -> tuple[int, int, int]:
    """Return ``(k, s^k, s^(k+1))`` for the least k >= 1 with s^k idempotent."""
    k, p = 1, s
    while m.table[p][p] != p:
        k += 1
        p = m.table[p][s]
        if k > m.size + 1:
            raise MonoidError("no idempotent power found; table is not a monoid")
    return k, p, m.table[p][s]


def is_aperiodic(m: FiniteMonoid) -> bool:
    return all(e == e1 for _, e, e1 in (omega(m, s) for s in m.elements))


@dataclass(frozen=True, eq=False)
class MonoidMorphism:
    """A morphism A* -> M fixed by the images of the letters."""

    monoid: FiniteMonoid
    alphabet: tuple
    letter_image: tuple  # letter_image[i] is the image of alphabet[i]
    _image: frozenset = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.letter_image) != len(self.alphabet):
            raise MonoidError("one image per letter required")
        for x in self.letter_image:
            if not 0 <= x < self.monoid.size:
                raise MonoidError(f"letter image {x} outside the monoid")
        m = self.monoid
        seen = {m.identity}
        stack = [m.identity]
        while stack:
            x = stack.pop()
            for g in self.letter_image:
                y = m.table[x][g]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        object.__setattr__(self, "_image", frozenset(seen))

    @property
    def image(self) -> frozenset:
        return self._image

    def image_of_letter(self, a: str) -> int:
        return self.letter_image[self.alphabet.index(a)]

    def __call__(self, word: str) -> int:
        m = self.monoid
        x = m.identity
        for a in word:
            x = m.table[x][self.letter_image[self.alphabet.index(a)]]
        return x

    def cayley(self, accepting) -> fa.Dfa:
        """DFA on the monoid elements recognizing the preimage of ``accepting``."""
        m = self.monoid
        acc = frozenset(accepting)
        return fa.build(self.alphabet, m.identity,
                        lambda x, a: m.table[x][self.letter_image[self.alphabet.index(a)]],
                        lambda x: x in acc)

    def preimage(self, elements) -> fa.Dfa:
        if isinstance(elements, int):
            elements = {elements}
        return self.cayley(elements)

    def image_of(self, d: fa.Dfa) -> frozenset:
        """alpha(L) for the language L of ``d`` (reachable pairs of the product)."""
        if d.alphabet != self.alphabet:
            raise fa.AlphabetMismatch("morphism and DFA use different alphabets")
        m = self.monoid
        start = (d.initial, m.identity)
        seen = {start}
        stack = [start]
        while stack:
            q, x = stack.pop()
            for i, r in enumerate(d.delta[q]):
                nxt = (r, m.table[x][self.letter_image[i]])
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return frozenset(x for q, x in seen if q in d.accepting)

    def restrict(self) -> "MonoidMorphism":
        """Same morphism onto its image, renumbered by shortest witness words."""
        return generated_morphism(
            self.alphabet, self.monoid.identity,
            lambda x, i: self.monoid.table[x][self.letter_image[i]],
        )


def generated_morphism(alphabet, identity, act) -> MonoidMorphism:
    """Build the morphism onto the monoid generated by letters.

    Elements are explored from ``identity`` with ``act(x, letter_index)``
    (right multiplication by a letter).  Objects must be hashable, and
    ``act`` must come from an associative right action for which distinct
    objects are distinct monoid elements (e.g. state transformations).
    Products x*y are then computed by replaying y's witness word on x.
    """
    alphabet = tuple(alphabet)
    index = {identity: 0}
    objs = [identity]
    words = [""]
    parent = [None]  # (element, letter index) that first reached each element
    right = []
    for x in objs:
        row = []
        for i, a in enumerate(alphabet):
            y = act(x, i)
            if y not in index:
                index[y] = len(objs)
                objs.append(y)
                words.append(words[index[x]] + a)
                parent.append((index[x], i))
            row.append(index[y])
        right.append(row)
    n = len(objs)
    # x * y = (x * parent(y)) * letter, filled in BFS order of y
    table = []
    for x in range(n):
        row = [x] + [0] * (n - 1)
        for y in range(1, n):
            p, i = parent[y]
            row[y] = right[row[p]][i]
        table.append(tuple(row))
    monoid = FiniteMonoid(tuple(table), 0, tuple(words))
    images = tuple(right[0][i] for i in range(len(alphabet)))
    return MonoidMorphism(monoid, alphabet, images)


def transition_monoid(d: fa.Dfa) -> tuple[MonoidMorphism, frozenset]:
    """Transition morphism of a complete DFA and the accepting element set.

    For a minimal DFA this is the syntactic morphism of its language.
    """
    ident = tuple(range(d.size))
    morph = generated_morphism(d.alphabet, ident,
                               lambda f, i: tuple(d.delta[q][i] for q in f))
    # recover the transformation of each element from its witness word
    accepting = frozenset(
        x for x, w in enumerate(morph.monoid.names) if d.run(w) in d.accepting
    )
    return morph, accepting


def syntactic_morphism(d: fa.Dfa) -> tuple[MonoidMorphism, frozenset]:
    return transition_monoid(fa.minimize(d))


def product_morphism(parts: Sequence[MonoidMorphism]) -> tuple[MonoidMorphism, list]:
    """Product of morphisms restricted to its reachable part.

    Returns the morphism and, for each element, the tuple of component
    elements (the projections).
    """
    if not parts:
        raise MonoidError("product of an empty list of morphisms")
    alphabet = parts[0].alphabet
    for p in parts[1:]:
        if p.alphabet != alphabet:
            raise fa.AlphabetMismatch("morphisms over different alphabets")
    ident = tuple(p.monoid.identity for p in parts)
    morph = generated_morphism(
        alphabet, ident,
        lambda xs, i: tuple(p.monoid.table[x][p.letter_image[i]] for p, x in zip(parts, xs)),
    )
    components = [tuple(p(w) for p in parts) for w in morph.monoid.names]
    return morph, components


def monoid_from_table(table, identity: int, names=()) -> FiniteMonoid:
    m = FiniteMonoid(tuple(tuple(int(v) for v in row) for row in table), identity, tuple(names))
    m.check()
    return m


def dump_monoid(m: FiniteMonoid) -> str:
    """Multiplication table as an integer grid, preceded by element names."""
    width = len(str(m.size - 1))
    lines = [f"# {x}: {m.name(x)}" for x in m.elements]
    lines.append(" " * (width + 2) + " ".join(f"{y:>{width}}" for y in m.elements))
    for x in m.elements:
        lines.append(f"{x:>{width}} |" + " ".join(f"{v:>{width}}" for v in m.table[x]))
    return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class RecognizedLanguage:
    morphism: MonoidMorphism
    accepting: frozenset

    @classmethod
    def of(cls, d: fa.Dfa) -> "RecognizedLanguage":
        return cls(*syntactic_morphism(d))

    def accepts(self, word: str) -> bool:
        return self.morphism(word) in self.accepting

    def dfa(self) -> fa.Dfa:
        return self.morphism.cayley(self.accepting)
