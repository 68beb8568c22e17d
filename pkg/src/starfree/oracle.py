"""Naive ground-truth checks and seeded corpora.

Nothing here calls the engines: monoid powers are iterated directly, MOD
separability is searched modulus by modulus, and regex semantics are
evaluated by splitting words.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import automata as fa
from . import regex as rx


def verify_separator(k: fa.Dfa, l1: fa.Dfa, l2: fa.Dfa) -> bool:
    """L1 included in K and K disjoint from L2."""
    return fa.is_subset(l1, k) and fa.is_empty(fa.intersect(k, l2))


def brute_aperiodic(table, identity: int | None = None) -> bool:
    """Every s satisfies s^n = s^(n+1) for n = |M|, by explicit powers."""
    table = getattr(table, "table", table)
    n = len(table)
    for s in range(n):
        p = s
        for _ in range(n - 1):
            p = table[p][s]
        if table[p][s] != p:
            return False
    return True


def brute_mod_eps_separable(lang: fa.Dfa, mmax: int) -> bool:
    """Some m <= mmax has no word of L whose length is divisible by m."""
    for m in range(1, mmax + 1):
        start = (lang.initial, 0)
        seen = {start}
        stack = [start]
        hit = False
        while stack:
            q, k = stack.pop()
            if k == 0 and q in lang.accepting:
                hit = True
                break
            for r in lang.delta[q]:
                nxt = (r, (k + 1) % m)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if not hit:
            return True
    return False


def ast_accepts(ast, word: str, alphabet) -> bool:
    """Membership by the recursive definition of the operators."""

    @lru_cache(maxsize=None)
    def acc(node, w):
        if isinstance(node, rx.Empty):
            return False
        if isinstance(node, rx.Epsilon):
            return w == ""
        if isinstance(node, rx.Letter):
            return w == node.a
        if isinstance(node, rx.Union):
            return acc(node.l, w) or acc(node.r, w)
        if isinstance(node, rx.Intersect):
            return acc(node.l, w) and acc(node.r, w)
        if isinstance(node, rx.Complement):
            return not acc(node.e, w)
        if isinstance(node, rx.Concat):
            return any(acc(node.l, w[:i]) and acc(node.r, w[i:]) for i in range(len(w) + 1))
        if isinstance(node, rx.Star):
            if w == "":
                return True
            return any(acc(node.e, w[:i]) and acc(node, w[i:]) for i in range(1, len(w) + 1))
        raise TypeError(node)

    return acc(ast, word)


def count_factorizations(word: str, code: fa.Dfa) -> int:
    """Number of ways to cut ``word`` into members of ``code`` (dynamic programming)."""
    ways = [0] * (len(word) + 1)
    ways[0] = 1
    for i in range(len(word)):
        if ways[i]:
            for j in range(i + 1, len(word) + 1):
                if code.accepts(word[i:j]):
                    ways[j] += ways[i]
    return ways[len(word)]


# -- corpora ----------------------------------------------------------------

@dataclass(frozen=True)
class Corpus:
    seed: int = 0
    count: int = 200
    max_states: int = 4
    alphabet: tuple = ("a", "b")

    def dfas(self):
        rng = random.Random(self.seed)
        for _ in range(self.count):
            yield random_dfa(rng, self.alphabet, rng.randint(1, self.max_states))


def random_dfa(rng: random.Random, alphabet, n: int) -> fa.Dfa:
    alphabet = tuple(alphabet)
    delta = tuple(tuple(rng.randrange(n) for _ in alphabet) for _ in range(n))
    accepting = frozenset(q for q in range(n) if rng.random() < 0.5)
    return fa.Dfa(alphabet, delta, 0, accepting)


def random_lasso(rng: random.Random, max_tail: int = 6, max_cycle: int = 12, alphabet=("a",)):
    """A DFA whose language depends only on word length: a tail of t states then a cycle of c."""
    t = rng.randint(0, max_tail)
    c = rng.randint(1, max_cycle)
    n = t + c
    delta = tuple(tuple(q + 1 if q + 1 < n else t for _ in alphabet) for q in range(n))
    density = rng.choice([0.1, 0.25, 0.5])
    accepting = frozenset(q for q in range(n) if rng.random() < density)
    return fa.Dfa(tuple(alphabet), delta, 0, accepting), t, c


def random_regex(rng: random.Random, alphabet, depth: int = 3):
    """A small random AST over all regex operators."""
    if depth == 0 or rng.random() < 0.25:
        k = rng.randrange(len(alphabet) + 2)
        if k == 0:
            return rx.Empty()
        if k == 1:
            return rx.Epsilon()
        return rx.Letter(alphabet[k - 2])
    op = rng.choice(["union", "concat", "concat", "star", "inter", "compl"])
    sub = lambda: random_regex(rng, alphabet, depth - 1)  # noqa: E731
    if op == "union":
        return rx.Union(sub(), sub())
    if op == "concat":
        return rx.Concat(sub(), sub())
    if op == "inter":
        return rx.Intersect(sub(), sub())
    if op == "star":
        return rx.Star(sub())
    return rx.Complement(sub())
