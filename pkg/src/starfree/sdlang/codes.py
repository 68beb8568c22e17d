"""Prefix codes, synchronization delay and unambiguous products."""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .. import automata as fa


class NotPrefixCode(ValueError):
    pass


@lru_cache(maxsize=4096)
def prefix_code_violation(k: fa.Dfa) -> str | None:
    """A word showing K is not a prefix code (epsilon, or a word with a strict prefix in K)."""
    if k.accepts(""):
        return ""
    bad = fa.intersect(k, fa.concat(k, fa.plus(fa.letters(k.alphabet))))
    return fa.shortest_word(bad)


def is_prefix_code(k: fa.Dfa) -> bool:
    return prefix_code_violation(k) is None


@lru_cache(maxsize=4096)
def sync_delay_witness(k: fa.Dfa, d: int) -> tuple[str, str, str] | None:
    """``(u, v, w)`` with uvw in K+, v in K^d and uv not in K+, or None.

    Such a triple exists iff some word of A*K^d is a prefix of K+ without
    being in K+; the witness is cut from the shortest such word.
    """
    if d < 1:
        raise ValueError("synchronization delay is at least 1")
    if not is_prefix_code(k):
        raise NotPrefixCode(f"not a prefix code (witness {prefix_code_violation(k)!r})")
    kplus = fa.plus(k)
    kd = fa.power(k, d)
    bad = fa.intersect(fa.concat(fa.universal(k.alphabet), kd), fa.prefixes(kplus), fa.complement(kplus))
    x = fa.shortest_word(bad)
    if x is None:
        return None
    i = next(i for i in range(len(x) + 1) if kd.accepts(x[i:]))
    w = fa.shortest_word(kplus, kplus.run(x))
    return x[:i], x[i:], w


def sync_delay_holds(k: fa.Dfa, d: int) -> bool:
    return sync_delay_witness(k, d) is None


def min_sync_delay(k: fa.Dfa, dmax: int = 8) -> int | None:
    """Least d <= dmax for which K has synchronization delay d."""
    for d in range(1, dmax + 1):
        if sync_delay_holds(k, d):
            return d
    return None


@lru_cache(maxsize=4096)
def ambiguity_witness(k: fa.Dfa, l: fa.Dfa) -> tuple[str, int, int] | None:
    """``(word, i, j)`` with i < j and both word[:i].word[i:] and word[:j].word[j:] in K.L.

    Two splits x.yz = xy.z exist iff some x in K, non-empty y with xy in K,
    and z in L have yz in L.  The search runs x on K, then y on K and L
    together, then z on two copies of L.
    """
    fa._check_same(k, l)
    start = ("x", k.initial)
    parent = {start: None}
    queue = deque([start])

    def push(node, prev, letter):
        if node not in parent:
            parent[node] = (prev, letter)
            queue.append(node)

    while queue:
        node = queue.popleft()
        phase = node[0]
        if phase == "x":
            q = node[1]
            if q in k.accepting:
                push(("y", q, l.initial, False), node, None)
            for i, a in enumerate(k.alphabet):
                push(("x", k.delta[q][i]), node, a)
        elif phase == "y":
            _, q, p, moved = node
            if moved and q in k.accepting:
                push(("z", p, l.initial), node, None)
            for i, a in enumerate(k.alphabet):
                push(("y", k.delta[q][i], l.delta[p][i], True), node, a)
        else:
            _, p1, p2 = node
            if p1 in l.accepting and p2 in l.accepting:
                return _unwind(parent, node)
            for i, a in enumerate(k.alphabet):
                push(("z", l.delta[p1][i], l.delta[p2][i]), node, a)
    return None


def _unwind(parent, node):
    letters = []
    marks = []
    while parent[node] is not None:
        prev, a = parent[node]
        if a is None:
            marks.append(len(letters))
        else:
            letters.append(a)
        node = prev
    word = "".join(reversed(letters))
    # marks count letters read after each phase change, from the end
    j, i = (len(word) - m for m in marks)
    return word, i, j


def is_unambiguous(k: fa.Dfa, l: fa.Dfa) -> bool:
    return ambiguity_witness(k, l) is None
