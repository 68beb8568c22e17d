"""Base classes C for the star-free closure.

Two kinds are supported.  A *finite* quotient-closed Boolean algebra is
given by a surjective morphism onto A*/~C; its languages are the unions of
classes.  A class of *group* languages is given by an oracle telling
whether {epsilon} can be separated from a regular language by a member of
the class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import automata as fa
from .algebra import FiniteMonoid, MonoidError, MonoidMorphism, generated_morphism


@dataclass(frozen=True, eq=False)
class BaseClass:
    name: str
    canon: MonoidMorphism | None = None
    eps_separable: Callable[[fa.Dfa], bool] | None = None

    def __post_init__(self):
        if (self.canon is None) == (self.eps_separable is None):
            raise ValueError("a base class is either finite (canon) or group (eps_separable)")

    @property
    def kind(self) -> str:
        return "finite" if self.canon is not None else "group"

    @property
    def is_finite(self) -> bool:
        return self.canon is not None

    def _need_finite(self):
        if self.canon is None:
            raise TypeError(f"base class {self.name} is not finite")

    def class_of(self, word: str) -> int:
        self._need_finite()
        return self.canon(word)

    @property
    def classes(self) -> list[int]:
        self._need_finite()
        return sorted(self.canon.image)

    def mul(self, c: int, d: int) -> int:
        self._need_finite()
        return self.canon.monoid.table[c][d]

    def is_idempotent(self, c: int) -> bool:
        return self.mul(c, c) == c

    def idempotent_classes(self) -> list[int]:
        return [c for c in self.classes if self.is_idempotent(c)]

    def class_language(self, classes) -> fa.Dfa:
        self._need_finite()
        return self.canon.preimage(set(classes) if not isinstance(classes, int) else {classes})

    def class_name(self, c: int) -> str:
        self._need_finite()
        return self.canon.monoid.name(c)

    def check_alphabet(self, alphabet) -> None:
        if self.canon is not None and tuple(alphabet) != self.canon.alphabet:
            raise fa.AlphabetMismatch(
                f"base class {self.name} is over {''.join(self.canon.alphabet)}, input over {''.join(alphabet)}")

    def __repr__(self) -> str:
        return f"BaseClass({self.name}, {self.kind})"


def finite_from_morphism(canon: MonoidMorphism, name: str = "finite") -> BaseClass:
    """Finite class whose ~C-classes are the elements of ``canon``'s image."""
    if len(canon.image) < canon.monoid.size:
        # drop unreachable elements so that every class is non-empty
        canon = canon.restrict()
    return BaseClass(name, canon=canon)


def triv(alphabet) -> BaseClass:
    """{emptyset, A*}: a single class."""
    alphabet = tuple(alphabet)
    canon = generated_morphism(alphabet, 0, lambda x, i: 0)
    return BaseClass("TRIV", canon=canon)


def length_mod_class(m: int, alphabet) -> BaseClass:
    """Finite class of the languages 'length = k mod m' and their unions."""
    if m < 1:
        raise ValueError("modulus must be positive")
    canon = generated_morphism(tuple(alphabet), 0, lambda x, i: (x + 1) % m)
    return BaseClass("parity" if m == 2 else f"length-mod-{m}", canon=canon)


# -- MOD ------------------------------------------------------------------

def length_lasso(d: fa.Dfa) -> tuple[int, int, frozenset, frozenset]:
    """Length set of L as a lasso ``(t, c, fin, residues)``.

    A length n < t belongs to L iff n in ``fin``; a length n >= t belongs
    to L iff ``n % c`` in ``residues``.
    """
    seen: dict[frozenset, int] = {}
    seq: list[frozenset] = []
    cur = frozenset({d.initial})
    while cur not in seen:
        seen[cur] = len(seq)
        seq.append(cur)
        cur = frozenset(r for q in cur for r in d.delta[q])
    t = seen[cur]
    c = len(seq) - t
    hit = [bool(s & d.accepting) for s in seq]
    fin = frozenset(n for n in range(t) if hit[n])
    residues = frozenset(n % c for n in range(t, t + c) if hit[n])
    return t, c, fin, residues


def mod_eps_separable(d: fa.Dfa) -> bool:
    """Is there K in MOD with epsilon in K and K disjoint from L?

    A MOD language containing epsilon contains every length divisible by its
    modulus m, so this asks for an m dividing no length of L.  For lengths
    beyond the lasso threshold, m works iff gcd(m, c) divides no residue,
    and m can be taken larger than every sporadic length.
    """
    t, c, fin, residues = length_lasso(d)
    if 0 in fin or (t == 0 and 0 in residues):
        return False
    if not residues:
        return True
    return any(c % g == 0 and all(r % g for r in residues) for g in range(1, c + 1))


def mod_class() -> BaseClass:
    return BaseClass("MOD", eps_separable=mod_eps_separable)


def group_class(name: str, eps_separable: Callable[[fa.Dfa], bool]) -> BaseClass:
    """Plug in any other class of group languages through its separation oracle."""
    return BaseClass(name, eps_separable=eps_separable)


# -- finite class files ---------------------------------------------------

class ClassFileError(ValueError):
    pass


def parse_morphism(text: str) -> MonoidMorphism:
    """Read ``classes: n``, ``identity: i``, ``letter a -> i``, ``mult i j -> k`` lines."""
    n = None
    identity = 0
    letters: dict[str, int] = {}
    mult: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("classes:"):
                n = int(line.split(":", 1)[1])
            elif line.startswith("identity:"):
                identity = int(line.split(":", 1)[1])
            elif line.startswith("letter"):
                lhs, rhs = line[len("letter"):].split("->")
                letters[lhs.strip()] = int(rhs)
            elif line.startswith("mult"):
                lhs, rhs = line[len("mult"):].split("->")
                i, j = lhs.split()
                mult[int(i), int(j)] = int(rhs)
            else:
                raise ClassFileError("unrecognized line")
        except (ValueError, IndexError) as exc:
            raise ClassFileError(f"line {lineno}: {exc}: {raw!r}") from None
    if n is None:
        raise ClassFileError("missing 'classes:' line")
    if not letters:
        raise ClassFileError("no 'letter' lines")
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            if (i, j) in mult:
                row.append(mult[i, j])
            elif i == identity:
                row.append(j)
            elif j == identity:
                row.append(i)
            else:
                raise ClassFileError(f"missing 'mult {i} {j} -> k'")
        table.append(tuple(row))
    monoid = FiniteMonoid(tuple(table), identity)
    try:
        monoid.check()
    except MonoidError as exc:
        raise ClassFileError(str(exc)) from None
    alphabet = fa.make_alphabet(letters)
    return MonoidMorphism(monoid, alphabet, tuple(letters[a] for a in alphabet))


def format_morphism(morph: MonoidMorphism) -> str:
    m = morph.monoid
    lines = [f"classes: {m.size}", f"identity: {m.identity}"]
    lines += [f"letter {a} -> {x}" for a, x in zip(morph.alphabet, morph.letter_image)]
    lines += [f"mult {i} {j} -> {m.table[i][j]}" for i in m.elements for j in m.elements]
    return "\n".join(lines) + "\n"


def load_base(name: str, alphabet) -> BaseClass:
    """Resolve a ``triv | mod | parity | mod<m> | finite:<path>`` base name."""
    if name == "triv":
        return triv(alphabet)
    if name == "mod":
        return mod_class()
    if name == "parity":
        return length_mod_class(2, alphabet)
    if name.startswith("mod") and name[3:].isdigit():
        return length_mod_class(int(name[3:]), alphabet)
    if name.startswith("finite:"):
        path = name.split(":", 1)[1]
        with open(path) as fh:
            base = finite_from_morphism(parse_morphism(fh.read()), name=f"finite:{path}")
        base.check_alphabet(alphabet)
        return base
    raise ValueError(f"unknown base class {name!r} (expected triv, mod, parity, mod<m> or finite:<path>)")
