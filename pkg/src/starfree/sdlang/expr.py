"""Expressions for BSD(C) and SF(C), with a checking compiler for BSD(C).

BSD(C) surface syntax, loosest first::

    union   := product ('|' product)*          disjoint union
    product := post ('.' post)*                unambiguous product
    post    := atom ('^' '{' ids '}' | '*' n)*  class intersection, star with delay n
    atom    := '0' | letter | '{' words '}' | '(' union ')'

``ids`` are comma-separated class numbers of the base class.  ``{aa,b}`` is
shorthand for the disjoint union of the products of its words' letters, and
``{}`` stands for the empty word.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .. import automata as fa
from ..baseclass import BaseClass
from .codes import ambiguity_witness, prefix_code_violation, sync_delay_witness


# -- BSD(C) expressions -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class Empty:
    pass


@dataclass(frozen=True, eq=False)
class Letter:
    a: str


@dataclass(frozen=True, eq=False)
class InterClass:
    e: object
    classes: frozenset


@dataclass(frozen=True, eq=False)
class DisjUnion:
    l: object
    r: object


@dataclass(frozen=True, eq=False)
class UnambProduct:
    l: object
    r: object


@dataclass(frozen=True, eq=False)
class Star:
    e: object
    delay: int


SdExpr = (Empty, Letter, InterClass, DisjUnion, UnambProduct, Star)


def epsilon_expr() -> Star:
    """{epsilon} as the star of the empty prefix code."""
    return Star(Empty(), 1)


def disjoint_union_all(exprs) -> object:
    exprs = list(exprs)
    return reduce(DisjUnion, exprs) if exprs else Empty()


def to_text(e, prec: int = 0) -> str:
    if isinstance(e, Empty):
        return "0"
    if is_epsilon(e):
        return "{}"
    if isinstance(e, Letter):
        return e.a
    if isinstance(e, InterClass):
        ids = ",".join(str(c) for c in sorted(e.classes))
        out = f"{to_text(e.e, 2)} ^ {{{ids}}}"
        return out if prec <= 2 else f"({out})"
    if isinstance(e, Star):
        out = f"{to_text(e.e, 3)}*{e.delay}"
        return out if prec <= 2 else f"({out})"
    if isinstance(e, UnambProduct):
        out = f"{to_text(e.l, 1)} . {to_text(e.r, 2)}"
        return out if prec <= 1 else f"({out})"
    if isinstance(e, DisjUnion):
        out = f"{to_text(e.l, 0)} | {to_text(e.r, 1)}"
        return out if prec == 0 else f"({out})"
    raise TypeError(f"not a BSD expression: {e!r}")


def is_epsilon(e) -> bool:
    return isinstance(e, Star) and isinstance(e.e, Empty)


def simplify(e, base: BaseClass | None = None):
    """Drop neutral epsilons, empty operands and trivial class intersections.

    Each rewrite keeps the language and every side condition, so a valid
    expression stays valid.
    """
    memo: dict = {}

    def go(x):
        hit = memo.get(id(x))
        if hit is not None:
            return hit[1]
        out = x
        if isinstance(x, InterClass):
            inner = go(x.e)
            if isinstance(inner, Empty):
                out = inner
            elif base is not None and base.is_finite and is_epsilon(inner):
                out = inner if base.class_of("") in x.classes else Empty()
            elif base is not None and base.is_finite and set(base.classes) <= set(x.classes):
                out = inner
            elif inner is not x.e:
                out = InterClass(inner, x.classes)
        elif isinstance(x, UnambProduct):
            l, r = go(x.l), go(x.r)
            if isinstance(l, Empty) or isinstance(r, Empty):
                out = Empty()
            elif is_epsilon(l):
                out = r
            elif is_epsilon(r):
                out = l
            elif l is not x.l or r is not x.r:
                out = UnambProduct(l, r)
        elif isinstance(x, DisjUnion):
            l, r = go(x.l), go(x.r)
            if isinstance(l, Empty):
                out = r
            elif isinstance(r, Empty):
                out = l
            elif l is not x.l or r is not x.r:
                out = DisjUnion(l, r)
        elif isinstance(x, Star) and not is_epsilon(x):
            inner = go(x.e)
            out = epsilon_expr() if isinstance(inner, Empty) else Star(inner, x.delay) if inner is not x.e else x
        memo[id(x)] = (x, out)
        return out

    return go(e)


def size(e) -> int:
    """Number of nodes, counting shared subterms once."""
    seen = set()
    stack = [e]
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen.add(id(x))
        if isinstance(x, (InterClass, Star)):
            stack.append(x.e)
        elif isinstance(x, (DisjUnion, UnambProduct)):
            stack += [x.l, x.r]
    return len(seen)


class SdSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else None

    def error(self, msg, at=None):
        raise SdSyntaxError(msg, (self.i if at is None else at) + 1)

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def number(self) -> int:
        self.skip()
        j = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.error("expected a number")
        return int(self.text[j:self.i])

    def parse(self):
        e = self.union()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return e

    def union(self):
        e = self.product()
        while self.peek() == "|":
            self.i += 1
            e = DisjUnion(e, self.product())
        return e

    def product(self):
        e = self.post()
        while self.peek() == ".":
            self.i += 1
            e = UnambProduct(e, self.post())
        return e

    def post(self):
        e = self.atom()
        while True:
            ch = self.peek()
            if ch == "^":
                self.i += 1
                self.expect("{")
                ids = []
                if self.peek() != "}":
                    ids.append(self.number())
                    while self.peek() == ",":
                        self.i += 1
                        ids.append(self.number())
                self.expect("}")
                e = InterClass(e, frozenset(ids))
            elif ch == "*":
                self.i += 1
                e = Star(e, self.number())
            else:
                return e

    def atom(self):
        ch = self.peek()
        at = self.i
        if ch is None:
            self.error("expected an expression")
        self.i += 1
        if ch == "(":
            e = self.union()
            if self.peek() != ")":
                self.error("unbalanced parenthesis: '(' never closed", at)
            self.i += 1
            return e
        if ch == "0":
            return Empty()
        if ch == "{":
            return self.word_set()
        if ch.isascii() and (ch.islower() or ch.isdigit()) and ch not in fa.RESERVED:
            return Letter(ch)
        self.error(f"unexpected {ch!r}", at)


    def word(self):
        self.skip()
        j = self.i
        while self.i < len(self.text) and self.text[self.i] not in ",} \t\n":
            ch = self.text[self.i]
            if not (ch.isascii() and (ch.islower() or ch.isdigit())) or ch in fa.RESERVED:
                self.error(f"unexpected {ch!r} in a word")
            self.i += 1
        w = self.text[j:self.i]
        return reduce(UnambProduct, map(Letter, w)) if w else epsilon_expr()

    def word_set(self):
        words = [self.word()]
        while self.peek() == ",":
            self.i += 1
            words.append(self.word())
        self.expect("}")
        return disjoint_union_all(words)


def parse_sd(text: str):
    return _Parser(text).parse()


# -- validation -------------------------------------------------------------

class SdValidationError(ValueError):
    """A BSD(C) side condition fails at some node."""

    def __init__(self, rule: str, node, message: str, witness=None):
        super().__init__(f"{rule}: {message} in {to_text(node)}")
        self.rule = rule
        self.node = node
        self.witness = witness


class Validator:
    """Compiles BSD(C) expressions bottom-up, checking every side condition.

    Results are memoized per node object, so shared subterms are checked once.
    """

    def __init__(self, base: BaseClass | None = None, dmax: int | None = None, alphabet=None):
        if alphabet is None:
            if base is None or not base.is_finite:
                raise ValueError("need an alphabet or a finite base class")
            alphabet = base.canon.alphabet
        self.alphabet = tuple(alphabet)
        if base is not None and base.is_finite:
            base.check_alphabet(self.alphabet)
        self.base = base
        self.dmax = dmax
        self.memo: dict = {}
        self.keep: list = []  # keeps memoized nodes alive so ids stay unique
        self.delays: list = []  # (star node, declared delay)

    def __call__(self, e) -> fa.Dfa:
        hit = self.memo.get(id(e))
        if hit is not None:
            return hit
        out = self._compile(e)
        self.memo[id(e)] = out
        self.keep.append(e)
        return out

    def _compile(self, e) -> fa.Dfa:
        A = self.alphabet
        if isinstance(e, Empty):
            return fa.empty(A)
        if isinstance(e, Letter):
            if e.a not in A:
                raise SdValidationError("letter", e, f"letter {e.a!r} not in alphabet {''.join(A)}")
            return fa.letter(A, e.a)
        if isinstance(e, InterClass):
            if self.base is None or not self.base.is_finite:
                raise SdValidationError("intersection with C", e, "needs a finite base class")
            unknown = set(e.classes) - set(self.base.classes)
            if unknown:
                raise SdValidationError("intersection with C", e, f"unknown classes {sorted(unknown)}")
            return fa.intersect(self(e.e), self.base.class_language(e.classes))
        if isinstance(e, DisjUnion):
            l, r = self(e.l), self(e.r)
            both = fa.shortest_word(fa.intersect(l, r))
            if both is not None:
                raise SdValidationError("disjoint union", e, f"operands intersect, witness {both!r}", both)
            return fa.union(l, r)
        if isinstance(e, UnambProduct):
            l, r = self(e.l), self(e.r)
            amb = ambiguity_witness(l, r)
            if amb is not None:
                w, i, j = amb
                raise SdValidationError("unambiguous product", e,
                                        f"{w!r} splits as {w[:i]!r}.{w[i:]!r} and {w[:j]!r}.{w[j:]!r}", amb)
            return fa.concat(l, r)
        if isinstance(e, Star):
            k = self(e.e)
            bad = prefix_code_violation(k)
            if bad is not None:
                raise SdValidationError("star of a prefix code", e, f"not a prefix code, witness {bad!r}", bad)
            if e.delay < 1:
                raise SdValidationError("star of a prefix code", e, "declared delay must be at least 1")
            wit = sync_delay_witness(k, e.delay)
            if wit is not None:
                u, v, w = wit
                raise SdValidationError(
                    "star of a prefix code", e,
                    f"synchronization delay {e.delay} fails: u={u!r}, v={v!r}, w={w!r}", wit)
            if self.dmax is not None and e.delay > self.dmax:
                raise SdValidationError("star of a prefix code", e, f"declared delay {e.delay} exceeds {self.dmax}")
            self.delays.append((e, e.delay))
            return fa.star(k)
        raise TypeError(f"not a BSD expression: {e!r}")


def validate(e, base: BaseClass | None = None, dmax: int | None = None, alphabet=None) -> fa.Dfa:
    """Minimal DFA of ``e`` after checking all BSD(C) side conditions."""
    return Validator(base, dmax, alphabet)(e)


# -- SF(C) expressions ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SfEmpty:
    pass


@dataclass(frozen=True, eq=False)
class SfLetter:
    a: str


@dataclass(frozen=True, eq=False)
class ClassLang:
    classes: frozenset


@dataclass(frozen=True, eq=False)
class SfUnion:
    l: object
    r: object


@dataclass(frozen=True, eq=False)
class SfComplement:
    e: object


@dataclass(frozen=True, eq=False)
class SfConcat:
    l: object
    r: object


SfExpr = (SfEmpty, SfLetter, ClassLang, SfUnion, SfComplement, SfConcat)


def sf_universal():
    return SfComplement(SfEmpty())


def sf_inter(x, y):
    return SfComplement(SfUnion(SfComplement(x), SfComplement(y)))


def sf_diff(x, y):
    return sf_inter(x, SfComplement(y))


def sf_union_all(xs):
    xs = list(xs)
    return reduce(SfUnion, xs) if xs else SfEmpty()


def sf_concat_all(xs):
    return reduce(SfConcat, xs)


def sf_epsilon(alphabet):
    """Complement of A.A*."""
    return SfComplement(SfConcat(sf_union_all(SfLetter(a) for a in alphabet), sf_universal()))


def sf_power(k, n: int, alphabet):
    return sf_concat_all([k] * n) if n else sf_epsilon(alphabet)


def sf_text(e) -> str:
    if isinstance(e, SfEmpty):
        return "0"
    if isinstance(e, SfLetter):
        return e.a
    if isinstance(e, ClassLang):
        return "[" + ",".join(str(c) for c in sorted(e.classes)) + "]"
    if isinstance(e, SfUnion):
        return f"({sf_text(e.l)}+{sf_text(e.r)})"
    if isinstance(e, SfConcat):
        return f"{sf_text(e.l)}{sf_text(e.r)}"
    if isinstance(e, SfComplement):
        return f"~({sf_text(e.e)})"
    raise TypeError(f"not a star-free expression: {e!r}")


def compile_sf(e, alphabet, base: BaseClass | None = None, memo: dict | None = None) -> fa.Dfa:
    alphabet = tuple(alphabet)
    memo = {} if memo is None else memo

    def go(x):
        hit = memo.get(id(x))
        if hit is not None:
            return hit[0]
        if isinstance(x, SfEmpty):
            out = fa.empty(alphabet)
        elif isinstance(x, SfLetter):
            out = fa.letter(alphabet, x.a)
        elif isinstance(x, ClassLang):
            if base is None or not base.is_finite:
                raise ValueError("class languages need a finite base class")
            out = base.class_language(x.classes)
        elif isinstance(x, SfUnion):
            out = fa.union(go(x.l), go(x.r))
        elif isinstance(x, SfConcat):
            out = fa.concat(go(x.l), go(x.r))
        elif isinstance(x, SfComplement):
            out = fa.complement(go(x.e))
        else:
            raise TypeError(f"not a star-free expression: {x!r}")
        memo[id(x)] = (out, x)  # holding x keeps its id from being reused
        return out

    return go(e)
