"""Stutter path vs covering path on a seeded corpus of random DFAs.

    python3 scripts/consistency_triangle.py --count 200 --seed 0
"""
import argparse
import time
from collections import Counter

from starfree import automata as fa
from starfree.algebra import syntactic_morphism
from starfree.baseclass import length_mod_class, mod_class, triv
from starfree.covering import decide_separation
from starfree.oracle import Corpus, brute_aperiodic
from starfree.stutter import is_c_aperiodic


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--states", type=int, default=4)
    ap.add_argument("--budget", type=int, default=256)
    args = ap.parse_args()

    alphabet = ("a", "b")
    bases = {"TRIV": triv(alphabet), "parity": length_mod_class(2, alphabet),
             "length-mod-3": length_mod_class(3, alphabet), "MOD": mod_class()}
    members = Counter()
    disagreements = []
    start = time.perf_counter()
    corpus = Corpus(seed=args.seed, count=args.count, max_states=args.states, alphabet=alphabet)
    for i, d in enumerate(corpus.dfas()):
        alpha, _ = syntactic_morphism(d)
        if is_c_aperiodic(alpha, bases["TRIV"]).aperiodic != brute_aperiodic(alpha.monoid.table):
            disagreements.append((i, "TRIV vs brute force"))
        for name, base in bases.items():
            stutter = is_c_aperiodic(alpha, base).aperiodic
            cover = decide_separation(d, fa.complement(d), base, args.budget, witness=False).coverable
            members[name] += stutter
            if stutter != cover:
                disagreements.append((i, name))
    elapsed = time.perf_counter() - start

    print(f"{args.count} DFAs, seed {args.seed}, {elapsed:.1f}s")
    for name in bases:
        print(f"  in SF({name}): {members[name]}")
    print(f"disagreements: {len(disagreements)}")
    for i, name in disagreements:
        print(f"  DFA #{i} under {name}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
