"""Regular languages as complete, minimal DFAs.

Every operation returns a minimized DFA whose states are numbered in BFS
order from the initial state (letters visited in alphabet order).  Two
DFAs over the same alphabet therefore denote the same language iff they
compare equal, which the rest of the package relies on.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

Alphabet = tuple  # tuple[str, ...]

RESERVED = frozenset("01")


def make_alphabet(letters: Iterable[str]) -> Alphabet:
    letters = tuple(letters)
    if not letters:
        raise ValueError("alphabet must be non-empty")
    if len(set(letters)) != len(letters):
        raise ValueError(f"duplicate letters in alphabet {letters!r}")
    for a in letters:
        if len(a) != 1 or not (a.isascii() and (a.islower() or a.isdigit())) or a in RESERVED:
            raise ValueError(f"invalid letter {a!r}: letters are a-z and 2-9")
    return letters


class AlphabetMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    delta: tuple  # delta[q][i] = target of q on alphabet[i]
    initial: int
    accepting: frozenset

    @property
    def size(self) -> int:
        return len(self.delta)

    def index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} not in alphabet {''.join(self.alphabet)}") from None

    def run(self, word: str, state: int | None = None) -> int:
        q = self.initial if state is None else state
        for a in word:
            q = self.delta[q][self.index(a)]
        return q

    def accepts(self, word: str) -> bool:
        return self.run(word) in self.accepting

    def __contains__(self, word: str) -> bool:
        return self.accepts(word)

    def __repr__(self) -> str:
        return f"Dfa(|A|={len(self.alphabet)}, states={self.size}, accepting={sorted(self.accepting)})"


def _check_same(*dfas: Dfa) -> Alphabet:
    alpha = dfas[0].alphabet
    for d in dfas[1:]:
        if d.alphabet != alpha:
            raise AlphabetMismatch(f"alphabets differ: {''.join(alpha)} vs {''.join(d.alphabet)}")
    return alpha


def _reachable(d: Dfa) -> list[int]:
    seen = {d.initial}
    order = [d.initial]
    for q in order:
        for r in d.delta[q]:
            if r not in seen:
                seen.add(r)
                order.append(r)
    return order


def minimize(d: Dfa) -> Dfa:
    """Moore partition refinement on the reachable part, then canonical renumbering."""
    states = _reachable(d)
    block = {q: int(q in d.accepting) for q in states}
    nblocks = len(set(block.values()))
    while True:
        sigs: dict = {}
        new = {}
        for q in states:
            sig = (block[q], tuple(block[r] for r in d.delta[q]))
            new[q] = sigs.setdefault(sig, len(sigs))
        block = new
        if len(sigs) == nblocks:
            break
        nblocks = len(sigs)
    # canonical BFS numbering of the quotient
    rep = {}
    for q in states:
        rep.setdefault(block[q], q)
    number = {block[d.initial]: 0}
    order = [block[d.initial]]
    for b in order:
        for r in d.delta[rep[b]]:
            if block[r] not in number:
                number[block[r]] = len(order)
                order.append(block[r])
    delta = tuple(tuple(number[block[r]] for r in d.delta[rep[b]]) for b in order)
    accepting = frozenset(number[block[q]] for q in states if q in d.accepting)
    return Dfa(d.alphabet, delta, 0, accepting)


def build(alphabet: Alphabet, initial, step: Callable, is_accepting: Callable) -> Dfa:
    """Explore an implicitly given deterministic automaton and return its minimal DFA.

    ``step(state, letter)`` must return a hashable successor state.
    """
    index = {initial: 0}
    order = [initial]
    rows = []
    for st in order:
        row = []
        for a in alphabet:
            nxt = step(st, a)
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(tuple(row))
    accepting = frozenset(i for i, st in enumerate(order) if is_accepting(st))
    return minimize(Dfa(tuple(alphabet), tuple(rows), 0, accepting))


# -- basic languages ------------------------------------------------------

def empty(alphabet: Alphabet) -> Dfa:
    return Dfa(tuple(alphabet), (tuple(0 for _ in alphabet),), 0, frozenset())


def universal(alphabet: Alphabet) -> Dfa:
    return Dfa(tuple(alphabet), (tuple(0 for _ in alphabet),), 0, frozenset({0}))


def words(alphabet: Alphabet, ws: Iterable[str]) -> Dfa:
    """Finite language given by its words."""
    ws = set(ws)
    prefixes = {w[:i] for w in ws for i in range(len(w) + 1)}
    for w in ws:
        for a in w:
            if a not in alphabet:
                raise ValueError(f"letter {a!r} not in alphabet")
    def step(p, a):
        if p is None or p + a not in prefixes:
            return None
        return p + a

    return build(alphabet, "", step, lambda p: p in ws)


def epsilon(alphabet: Alphabet) -> Dfa:
    return words(alphabet, [""])


def letter(alphabet: Alphabet, a: str) -> Dfa:
    return words(alphabet, [a])


def letters(alphabet: Alphabet) -> Dfa:
    return words(alphabet, list(alphabet))


def length_mod(alphabet: Alphabet, m: int, residues: Iterable[int]) -> Dfa:
    res = {r % m for r in residues}
    return build(alphabet, 0, lambda q, a: (q + 1) % m, lambda q: q in res)


# -- Boolean operations and quotients -------------------------------------

def product(dfas: Sequence[Dfa], combine: Callable[[tuple], bool]) -> Dfa:
    alpha = _check_same(*dfas)
    idx = {a: i for i, a in enumerate(alpha)}
    return build(
        alpha,
        tuple(d.initial for d in dfas),
        lambda qs, a: tuple(d.delta[q][idx[a]] for d, q in zip(dfas, qs)),
        lambda qs: combine(tuple(q in d.accepting for d, q in zip(dfas, qs))),
    )


def complement(d: Dfa) -> Dfa:
    return minimize(Dfa(d.alphabet, d.delta, d.initial, frozenset(range(d.size)) - d.accepting))


def union(*ds: Dfa) -> Dfa:
    return product(ds, any)


def intersect(*ds: Dfa) -> Dfa:
    return product(ds, all)


def difference(l: Dfa, r: Dfa) -> Dfa:
    return product((l, r), lambda bs: bs[0] and not bs[1])


def symmetric_difference(l: Dfa, r: Dfa) -> Dfa:
    return product((l, r), lambda bs: bs[0] != bs[1])


def bool_op(op: str, l: Dfa, r: Dfa | None = None) -> Dfa:
    if op == "complement":
        if r is not None:
            raise ValueError("complement takes a single operand")
        return complement(l)
    if r is None:
        raise ValueError(f"{op} needs two operands")
    ops = {"union": union, "intersect": intersect, "difference": difference}
    if op not in ops:
        raise ValueError(f"unknown boolean operation {op!r}")
    return ops[op](l, r)


def quotient(side: str, w: str, d: Dfa) -> Dfa:
    """Left quotient w^-1 L or right quotient L w^-1."""
    if side == "left":
        return minimize(Dfa(d.alphabet, d.delta, d.run(w), d.accepting))
    if side == "right":
        acc = frozenset(q for q in range(d.size) if d.run(w, q) in d.accepting)
        return minimize(Dfa(d.alphabet, d.delta, d.initial, acc))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def prefixes(d: Dfa) -> Dfa:
    """All prefixes of words of L."""
    live = _coaccessible(d)
    return minimize(Dfa(d.alphabet, d.delta, d.initial, frozenset(live)))


def _coaccessible(d: Dfa) -> set[int]:
    back: dict[int, set[int]] = {q: set() for q in range(d.size)}
    for q, row in enumerate(d.delta):
        for r in row:
            back[r].add(q)
    live = set(d.accepting)
    stack = list(live)
    while stack:
        q = stack.pop()
        for p in back[q]:
            if p not in live:
                live.add(p)
                stack.append(p)
    return live


# -- rational operations (subset construction) ----------------------------

def concat(*ds: Dfa) -> Dfa:
    if not ds:
        raise ValueError("concat needs at least one operand")
    out = ds[0]
    for d in ds[1:]:
        out = _concat2(out, d)
    return out


def _concat2(l: Dfa, r: Dfa) -> Dfa:
    alpha = _check_same(l, r)

    def close(p: int, qs: frozenset) -> tuple:
        if p in l.accepting:
            qs = qs | {r.initial}
        return (p, qs)

    def step(st, a):
        p, qs = st
        i = l.alphabet.index(a)
        return close(l.delta[p][i], frozenset(r.delta[q][i] for q in qs))

    return build(alpha, close(l.initial, frozenset()), step,
                 lambda st: bool(st[1] & r.accepting))


def star(d: Dfa) -> Dfa:
    def close(qs: frozenset) -> frozenset:
        if qs & d.accepting:
            qs = qs | {d.initial}
        return qs

    def step(st, a):
        _, qs = st
        i = d.alphabet.index(a)
        return (False, close(frozenset(d.delta[q][i] for q in qs)))

    # the flag marks the fresh initial state, which accepts epsilon
    return build(d.alphabet, (True, frozenset({d.initial})), step,
                 lambda st: st[0] or bool(st[1] & d.accepting))


def plus(d: Dfa) -> Dfa:
    return concat(d, star(d))


def power(d: Dfa, n: int) -> Dfa:
    out = epsilon(d.alphabet)
    for _ in range(n):
        out = concat(out, d)
    return out


# -- queries --------------------------------------------------------------

def is_empty(d: Dfa) -> bool:
    return not (set(_reachable(d)) & d.accepting)


def equivalent(l: Dfa, r: Dfa) -> bool:
    _check_same(l, r)
    return minimize(l) == minimize(r)


def is_subset(l: Dfa, r: Dfa) -> bool:
    return is_empty(difference(l, r))


def shortest_word(d: Dfa, state: int | None = None) -> str | None:
    """Length-lexicographically least accepted word, or None."""
    start = d.initial if state is None else state
    parent = {start: None}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        if q in d.accepting:
            out = []
            while parent[q] is not None:
                q, a = parent[q]
                out.append(a)
            return "".join(reversed(out))
        for i, r in enumerate(d.delta[q]):
            if r not in parent:
                parent[r] = (q, d.alphabet[i])
                queue.append(r)
    return None


def enumerate_words(d: Dfa, maxlen: int) -> list[str]:
    """All accepted words of length <= maxlen in length-lexicographic order."""
    live = _coaccessible(d)
    out = []
    level = [("", d.initial)] if d.initial in live else []
    for n in range(maxlen + 1):
        out.extend(w for w, q in level if q in d.accepting)
        if n == maxlen:
            break
        level = [(w + a, r) for w, q in level for a, r in zip(d.alphabet, d.delta[q]) if r in live]
    return out


def all_words(alphabet: Alphabet, maxlen: int) -> list[str]:
    out = [""]
    level = [""]
    for _ in range(maxlen):
        level = [w + a for w in level for a in alphabet]
        out.extend(level)
    return out


# -- file format ----------------------------------------------------------

class DfaFormatError(ValueError):
    pass


def parse_dfa(text: str) -> Dfa:
    """Read the line-oriented DFA format (alphabet/states/initial/accepting/trans lines)."""
    alphabet = None
    n = None
    initial = 0
    accepting: set[int] = set()
    trans: dict[tuple[int, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("alphabet:"):
                alphabet = make_alphabet(line.split(":", 1)[1].strip())
            elif line.startswith("states:"):
                n = int(line.split(":", 1)[1])
            elif line.startswith("initial:"):
                initial = int(line.split(":", 1)[1])
            elif line.startswith("accepting:"):
                accepting = {int(x) for x in line.split(":", 1)[1].split()}
            elif line.startswith("trans"):
                _, q, a, r = line.split()
                trans[int(q), a] = int(r)
            else:
                raise DfaFormatError(f"unrecognized line")
        except (ValueError, IndexError) as exc:
            raise DfaFormatError(f"line {lineno}: {exc}: {raw!r}") from None
    if alphabet is None or n is None:
        raise DfaFormatError("missing 'alphabet:' or 'states:' line")
    rows = []
    for q in range(n):
        row = []
        for a in alphabet:
            if (q, a) not in trans:
                raise DfaFormatError(f"missing transition from {q} on {a!r} (DFA must be complete)")
            r = trans[q, a]
            if not 0 <= r < n:
                raise DfaFormatError(f"transition target {r} out of range")
            row.append(r)
        rows.append(tuple(row))
    if not 0 <= initial < n or any(not 0 <= q < n for q in accepting):
        raise DfaFormatError("state index out of range")
    return Dfa(alphabet, tuple(rows), initial, frozenset(accepting))


def format_dfa(d: Dfa) -> str:
    lines = [
        f"alphabet: {''.join(d.alphabet)}",
        f"states: {d.size}",
        f"initial: {d.initial}",
        "accepting: " + " ".join(str(q) for q in sorted(d.accepting)),
    ]
    for q, row in enumerate(d.delta):
        for a, r in zip(d.alphabet, row):
            lines.append(f"trans {q} {a} {r}")
    return "\n".join(lines) + "\n"
