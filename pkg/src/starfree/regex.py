"""ASCII regular expressions with complement and intersection.

Grammar, loosest binding first::

    union   := inter ('+' inter)*
    inter   := concat ('&' concat)*
    concat  := unary+
    unary   := '~' unary | atom '*'*
    atom    := letter | '0' | '1' | '(' union ')'

``0`` is the empty language, ``1`` the empty word, letters are ``a-z`` and
``2-9``.  Whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import automata as fa


class RegexSyntaxError(ValueError):
    """Parse failure.  ``position`` is a 1-based column in the input text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    a: str


@dataclass(frozen=True)
class Union:
    l: object
    r: object


@dataclass(frozen=True)
class Concat:
    l: object
    r: object


@dataclass(frozen=True)
class Intersect:
    l: object
    r: object


@dataclass(frozen=True)
class Star:
    e: object


@dataclass(frozen=True)
class Complement:
    e: object


RegexAst = (Empty, Epsilon, Letter, Union, Concat, Intersect, Star, Complement)


def letters_of(text: str) -> list[str]:
    """Letters occurring in a regex, in order of first occurrence."""
    seen = []
    for ch in text:
        if (ch.islower() or ch.isdigit()) and ch.isascii() and ch not in fa.RESERVED and ch not in seen:
            seen.append(ch)
    return seen


class _Parser:
    def __init__(self, text: str, alphabet):
        # keep original offsets so error positions point into the raw text
        self.toks = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
        self.end = len(text)
        self.pos = 0
        self.alphabet = alphabet

    def peek(self):
        return self.toks[self.pos][1] if self.pos < len(self.toks) else None

    def offset(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else self.end

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def error(self, msg, offset=None):
        raise RegexSyntaxError(msg, (self.offset() if offset is None else offset) + 1)

    def parse(self):
        if not self.toks:
            self.error("empty expression")
        node = self.union()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return node

    def union(self):
        node = self.inter()
        while self.peek() == "+":
            self.take()
            node = Union(node, self.inter())
        return node

    def inter(self):
        node = self.concat()
        while self.peek() == "&":
            self.take()
            node = Intersect(node, self.concat())
        return node

    def starts_unary(self):
        ch = self.peek()
        return ch is not None and (ch in "~(01" or ch.isalnum())

    def concat(self):
        if not self.starts_unary():
            self.error("expected an expression" if self.peek() is None else f"unexpected {self.peek()!r}")
        node = self.unary()
        while self.starts_unary():
            node = Concat(node, self.unary())
        return node

    def unary(self):
        if self.peek() == "~":
            self.take()
            return Complement(self.unary())
        node = self.atom()
        while self.peek() == "*":
            self.take()
            node = Star(node)
        return node

    def atom(self):
        if self.peek() is None:
            self.error("expected an expression")
        off, ch = self.take()
        if ch == "(":
            node = self.union()
            if self.peek() != ")":
                self.error("unbalanced parenthesis: '(' never closed", off)
            self.take()
            return node
        if ch == "0":
            return Empty()
        if ch == "1":
            return Epsilon()
        if ch.isascii() and (ch.islower() or ch.isdigit()):
            if self.alphabet is not None and ch not in self.alphabet:
                self.error(f"letter {ch!r} not in alphabet {''.join(self.alphabet)}", off)
            return Letter(ch)
        self.error(f"unexpected {ch!r}", off)


def parse_regex(text: str, alphabet=None):
    return _Parser(text, alphabet).parse()


def compile_regex(ast, alphabet) -> fa.Dfa:
    """Minimal complete DFA of a regex AST over ``alphabet``."""
    alphabet = tuple(alphabet)
    if isinstance(ast, Empty):
        return fa.empty(alphabet)
    if isinstance(ast, Epsilon):
        return fa.epsilon(alphabet)
    if isinstance(ast, Letter):
        return fa.letter(alphabet, ast.a)
    if isinstance(ast, Union):
        return fa.union(compile_regex(ast.l, alphabet), compile_regex(ast.r, alphabet))
    if isinstance(ast, Intersect):
        return fa.intersect(compile_regex(ast.l, alphabet), compile_regex(ast.r, alphabet))
    if isinstance(ast, Concat):
        return fa.concat(compile_regex(ast.l, alphabet), compile_regex(ast.r, alphabet))
    if isinstance(ast, Star):
        return fa.star(compile_regex(ast.e, alphabet))
    if isinstance(ast, Complement):
        return fa.complement(compile_regex(ast.e, alphabet))
    raise TypeError(f"not a regex node: {ast!r}")


def regex(text: str, alphabet) -> fa.Dfa:
    alphabet = fa.make_alphabet(alphabet)
    return compile_regex(parse_regex(text, alphabet), alphabet)


def to_text(ast) -> str:
    """Render an AST back into the surface syntax (fully parenthesized where needed)."""
    if isinstance(ast, Empty):
        return "0"
    if isinstance(ast, Epsilon):
        return "1"
    if isinstance(ast, Letter):
        return ast.a
    if isinstance(ast, Union):
        return f"({to_text(ast.l)}+{to_text(ast.r)})"
    if isinstance(ast, Intersect):
        return f"({to_text(ast.l)}&{to_text(ast.r)})"
    if isinstance(ast, Concat):
        return f"{to_text(ast.l)}{to_text(ast.r)}"
    if isinstance(ast, Star):
        inner = to_text(ast.e)
        if isinstance(ast.e, (Empty, Epsilon, Letter, Union, Intersect, Star)):
            return f"{inner}*"
        return f"({inner})*"
    if isinstance(ast, Complement):
        return f"~({to_text(ast.e)})"
    raise TypeError(f"not a regex node: {ast!r}")
