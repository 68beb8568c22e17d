"""Removing the star of a prefix code with bounded synchronization delay.

For such a code K with delay d, K* equals

    G = K^0 + ... + K^(d-1)  +  (A*K^d minus H)
    H = (A*K^d minus (A*K^(d+1) + K^0 + ... + K^d)) A*

so K* is star-free relative to any star-free form of K.
"""
from __future__ import annotations

from .. import automata as fa
from ..baseclass import BaseClass
from .codes import NotPrefixCode, is_prefix_code, sync_delay_witness
from .expr import (DisjUnion, Empty, InterClass, Letter, SfConcat, ClassLang, SfEmpty, SfLetter, SfUnion,
                   Star, UnambProduct, compile_sf, sf_diff, sf_inter, sf_power, sf_union_all, sf_universal)


def star_eliminate(k, d: int, alphabet, base: BaseClass | None = None, check: bool = True):
    """Star-free expression for K* given a star-free expression ``k`` for K."""
    alphabet = tuple(alphabet)
    if check:
        kd = compile_sf(k, alphabet, base)
        if not is_prefix_code(kd):
            raise NotPrefixCode("star elimination needs a prefix code")
        wit = sync_delay_witness(kd, d)
        if wit is not None:
            raise ValueError(f"synchronization delay {d} fails, witness {wit}")
    top = sf_universal()
    powers = [sf_power(k, h, alphabet) for h in range(d + 2)]
    ends_kd = SfConcat(top, powers[d])
    ends_kd1 = SfConcat(top, powers[d + 1])
    h = SfConcat(sf_diff(ends_kd, SfUnion(ends_kd1, sf_union_all(powers[:d + 1]))), top)
    return SfUnion(sf_union_all(powers[:d]), sf_diff(ends_kd, h))


def to_starfree(e, alphabet, base: BaseClass | None = None):
    """Translate a BSD(C) expression into SF(C), eliminating every star."""
    alphabet = tuple(alphabet)
    memo: dict = {}

    def go(x):
        hit = memo.get(id(x))
        if hit is not None:
            return hit[0]
        if isinstance(x, Empty):
            out = SfEmpty()
        elif isinstance(x, Letter):
            out = SfLetter(x.a)
        elif isinstance(x, InterClass):
            out = sf_inter(go(x.e), ClassLang(x.classes))
        elif isinstance(x, DisjUnion):
            out = SfUnion(go(x.l), go(x.r))
        elif isinstance(x, UnambProduct):
            out = SfConcat(go(x.l), go(x.r))
        elif isinstance(x, Star):
            out = star_eliminate(go(x.e), x.delay, alphabet, base, check=False)
        else:
            raise TypeError(f"not a BSD expression: {x!r}")
        memo[id(x)] = (out, x)
        return out

    return go(e)


def check_star_elimination(kdfa: fa.Dfa, k_sf, d: int, base: BaseClass | None = None) -> bool:
    """Does the eliminated form of K* compile to the star of ``kdfa``?"""
    g = star_eliminate(k_sf, d, kdfa.alphabet, base)
    return fa.equivalent(compile_sf(g, kdfa.alphabet, base), fa.star(kdfa))
