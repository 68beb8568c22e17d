"""Synthesize BSD(C) expressions for a few languages and show the recursion.

    python3 scripts/synthesis_demo.py "(ab)*" "a*b(a+b)*" --base triv
"""
import argparse
import logging
from collections import Counter

from starfree.algebra import syntactic_morphism
from starfree.baseclass import load_base
from starfree.regex import letters_of, regex
from starfree.sdlang.expr import Validator, disjoint_union_all, simplify, size, to_text
from starfree.sdlang.synthesis import NotAperiodic, Synthesizer


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("languages", nargs="*", default=["(ab)*", "(a+b)*ab(a+b)*", "a*b(a+b)*", "(ab+ba)*"])
    ap.add_argument("--base", default="triv")
    ap.add_argument("--alphabet", default="ab")
    ap.add_argument("--verbose", action="store_true")
    ap.add_argument("--width", type=int, default=400, help="truncate printed expressions (0 keeps all)")
    args = ap.parse_args()
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)

    alphabet = tuple(sorted(set(args.alphabet) | {a for t in args.languages for a in letters_of(t)}))
    base = load_base(args.base, alphabet)
    for text in args.languages:
        lang = regex(text, alphabet)
        alpha, accepting = syntactic_morphism(lang)
        print(f"== {text}  (|M| = {alpha.monoid.size})")
        try:
            syn = Synthesizer(alpha, base)
        except NotAperiodic as exc:
            print(f"   {exc}")
            continue
        cert = syn.full_partition()
        raw = disjoint_union_all(p.expr for p in cert.parts if p.value in accepting)
        expr = simplify(raw, base)
        ok = Validator(base)(expr) == lang
        cases = Counter(step.case for step in syn.steps)
        text_out = to_text(expr)
        if args.width and len(text_out) > args.width:
            text_out = text_out[:args.width] + f" ... ({len(text_out)} chars)"
        print(f"   {text_out}")
        print(f"   verified: {ok}; {size(raw)} -> {size(expr)} nodes; calls by case: {dict(cases)}")


if __name__ == "__main__":
    main()
