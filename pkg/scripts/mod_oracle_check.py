"""Divisor test for MOD epsilon-separability against exhaustive moduli."""
import argparse
import random

from starfree.baseclass import mod_eps_separable
from starfree.oracle import brute_mod_eps_separable, random_lasso


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-tail", type=int, default=6)
    ap.add_argument("--max-cycle", type=int, default=12)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    separable = 0
    for i in range(args.count):
        d, t, c = random_lasso(rng, args.max_tail, args.max_cycle)
        fast = mod_eps_separable(d)
        slow = brute_mod_eps_separable(d, t + 2 * c)
        separable += fast
        if fast != slow:
            bad += 1
            print(f"#{i}: t={t} c={c} accepting={sorted(d.accepting)} divisor={fast} brute={slow}")
    print(f"{args.count} lassos, {separable} separable, {bad} disagreements")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
