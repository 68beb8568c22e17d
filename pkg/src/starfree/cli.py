"""Command-line entry point: ``starfree <command> ...``.

Exit status is 0 for a positive verdict, 1 for a negative one and 2 for
usage or engine errors.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import automata as fa
from . import regex as rx
from .algebra import MonoidMorphism, syntactic_morphism
from .baseclass import ClassFileError, load_base, mod_eps_separable, length_lasso, parse_morphism
from .covering import CoverInstance, decide_cover, decide_separation, membership_via_covering
from .oracle import Corpus, brute_aperiodic, brute_mod_eps_separable, random_lasso
from .semiring import DEFAULT_BUDGET, BudgetExceeded
from .stutter import is_c_aperiodic, stutters
from .sdlang.expr import SdSyntaxError, SdValidationError, Validator, parse_sd, simplify, to_text
from .sdlang.synthesis import NotAperiodic, Synthesizer, disjoint_union_all

YES, NO, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# -- inputs -----------------------------------------------------------------

def _read(arg: str) -> tuple[str, str]:
    """(kind, text) for an argument: a .dfa file, a morphism file, a regex file, or inline regex."""
    if os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
        if arg.endswith(".dfa"):
            return "dfa", text
        if any(line.strip().startswith("classes:") for line in text.splitlines()):
            return "morphism", text
        return "regex", text.strip()
    return "regex", arg


def _letters(kind: str, text: str) -> list[str]:
    if kind == "dfa":
        return list(fa.parse_dfa(text).alphabet)
    if kind == "morphism":
        return list(parse_morphism(text).alphabet)
    return rx.letters_of(text)


def resolve_alphabet(args, raw: list) -> tuple:
    if args.alphabet:
        return fa.make_alphabet(args.alphabet)
    if args.base.startswith("finite:"):
        with open(args.base.split(":", 1)[1]) as fh:
            return parse_morphism(fh.read()).alphabet
    letters = _letters(*raw[0]) if raw else []
    if not letters:
        letters = sorted({a for item in raw for a in _letters(*item)}) or ["a"]
    return fa.make_alphabet(sorted(letters))


def load_language(item: tuple, alphabet: tuple) -> fa.Dfa:
    kind, text = item
    if kind == "dfa":
        d = fa.parse_dfa(text)
        if d.alphabet != alphabet:
            raise UsageError(f"DFA alphabet {''.join(d.alphabet)} differs from {''.join(alphabet)}")
        return fa.minimize(d)
    if kind == "morphism":
        raise UsageError("expected a language, got a morphism file")
    return rx.regex(text, alphabet)


def _setup(args, inputs: list):
    raw = [_read(x) for x in inputs]
    alphabet = resolve_alphabet(args, raw)
    base = load_base(args.base, alphabet)
    return raw, alphabet, base


def _emit(args, report: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# -- commands ---------------------------------------------------------------

def cmd_member(args) -> int:
    raw, alphabet, base = _setup(args, [args.lang])
    lang = load_language(raw[0], alphabet)
    alpha, _ = syntactic_morphism(lang)
    verdict = is_c_aperiodic(alpha, base)
    report = {"command": "member", "base": base.name, "alphabet": "".join(alphabet),
              "member": verdict.aperiodic, "monoid_size": alpha.monoid.size}
    lines = [f"{'yes' if verdict else 'no'}: {'in' if verdict else 'not in'} SF({base.name})"]
    if not verdict:
        name = alpha.monoid.name(verdict.counterexample)
        report["counterexample"] = {"element": name, "exponent": verdict.exponent,
                                    "s_omega": alpha.monoid.name(verdict.s_omega),
                                    "s_omega_plus_1": alpha.monoid.name(verdict.s_omega_plus_1)}
        lines.append(f"stutter {name}: s^w = {alpha.monoid.name(verdict.s_omega)} "
                     f"!= s^(w+1) = {alpha.monoid.name(verdict.s_omega_plus_1)}")
    if args.cross_check:
        other = membership_via_covering(lang, base, args.budget)
        report["via_covering"] = other
        lines.append(f"covering pipeline: {'yes' if other else 'no'}")
        if other != verdict.aperiodic:
            _emit(args, report, lines + ["error: the two pipelines disagree"])
            return ERROR
    _emit(args, report, lines)
    return YES if verdict else NO


def _cover_report(args, verdict, name: str) -> int:
    report = {"command": name, **verdict.to_json()}
    lines = [f"{'yes' if verdict else 'no'}: {'coverable' if verdict else 'not coverable'} in SF({verdict.instance.base.name})"]
    if verdict.separator_hint:
        lines.append(f"separator: {verdict.separator_hint}")
    if not verdict:
        lines.append("bad element: {" + ", ".join(verdict.bad_names()) + "}")
        if args.trace:
            lines.append("derivation:")
            lines += ["  " + ln for ln in verdict.trace.splitlines()]
    if args.trace:
        engine = verdict.engine
        R = verdict.rating.semiring
        lines.append("fixpoint (maximal elements):")
        if hasattr(engine, "pairs"):
            for c, r in engine.pairs():
                lines.append(f"  {engine.fmt_pair((c, r))}")
                report.setdefault("derivations", {})[engine.fmt_pair((c, r))] = engine.derivation(c, r)
        else:
            for r in sorted(engine.maximal):
                lines.append(f"  {R.fmt(r)}")
                report.setdefault("derivations", {})[R.fmt(r)] = engine.derivation(r)
    _emit(args, report, lines)
    return YES if verdict else NO


def cmd_separate(args) -> int:
    raw, alphabet, base = _setup(args, [args.l1, args.l2])
    l1, l2 = (load_language(x, alphabet) for x in raw)
    rng = random.Random(args.seed) if args.seed is not None else None
    return _cover_report(args, decide_separation(l1, l2, base, args.budget, rng), "separate")


def cmd_cover(args) -> int:
    raw, alphabet, base = _setup(args, [args.l1, *args.l2s])
    langs = [load_language(x, alphabet) for x in raw]
    rng = random.Random(args.seed) if args.seed is not None else None
    verdict = decide_cover(CoverInstance(langs[0], tuple(langs[1:]), base), args.budget, rng)
    return _cover_report(args, verdict, "cover")


def cmd_stutters(args) -> int:
    raw, alphabet, base = _setup(args, [args.lang])
    alpha, _ = syntactic_morphism(load_language(raw[0], alphabet))
    report = stutters(alpha, base)
    rows = report.rows()
    aperiodic = all(ok for _, _, stut, ok in rows if stut)
    lines = [f"{'element':<12} {'stutter':<8} s^w = s^(w+1)"]
    lines += [f"{name:<12} {'yes' if stut else 'no':<8} {'yes' if ok else 'no'}" for _, name, stut, ok in rows]
    lines.append(f"{base.name}-aperiodic: {'yes' if aperiodic else 'no'}")
    out = {"command": "stutters", "base": base.name, "aperiodic": aperiodic,
           "elements": [{"element": name, "stutter": stut, "omega_identity": ok} for _, name, stut, ok in rows]}
    _emit(args, out, lines)
    return YES if aperiodic else NO


def _element(alpha: MonoidMorphism, arg: str) -> int:
    if arg.isdigit():
        x = int(arg)
        if x not in alpha.image:
            raise UsageError(f"element {x} is not in the image of the morphism")
        return x
    word = "" if arg in ("1", "eps") else arg
    for a in word:
        if a not in alpha.alphabet:
            raise UsageError(f"letter {a!r} of {arg!r} not in the alphabet")
    return alpha(word)


def cmd_synthesize(args) -> int:
    raw, alphabet, base = _setup(args, [args.source])
    kind, text = raw[0]
    if kind == "morphism":
        alpha = parse_morphism(text)
        if alpha.alphabet != alphabet:
            raise UsageError(f"morphism alphabet {''.join(alpha.alphabet)} differs from {''.join(alphabet)}")
        targets = None
    else:
        alpha, accepting = syntactic_morphism(load_language(raw[0], alphabet))
        targets = sorted(accepting)
    if args.element is not None:
        targets = [_element(alpha, args.element)]
    elif targets is None:
        raise UsageError("synthesize from a morphism file needs an element")
    try:
        syn = Synthesizer(alpha, base, args.dmax)
    except NotAperiodic as exc:
        _emit(args, {"command": "synthesize", "aperiodic": False, "error": str(exc)}, [f"no: {exc}"])
        return NO
    cert = syn.full_partition()
    expr = simplify(disjoint_union_all(p.expr for p in cert.parts if p.value in targets), base)
    validator = Validator(base, None, alphabet)
    compiled = validator(expr)
    expected = alpha.preimage(set(targets))
    ok = fa.equivalent(compiled, expected)
    report = {"command": "synthesize", "aperiodic": True, "expression": to_text(expr), "verified": ok,
              "recursive_calls": len(syn.steps), "measure_decreasing": syn.measures_decrease(),
              "delay_flags": [list(f) for f in syn.delay_flags]}
    lines = [to_text(expr), f"# verified against the preimage: {'yes' if ok else 'no'}; "
             f"{len(syn.steps)} recursive calls"]
    _emit(args, report, lines)
    return YES if ok else ERROR


def cmd_check_sd(args) -> int:
    _, text = _read(args.expr)
    try:
        expr = parse_sd(text)
    except SdSyntaxError as exc:
        raise UsageError(str(exc)) from None
    if args.alphabet:
        alphabet = fa.make_alphabet(args.alphabet)
    elif args.base.startswith("finite:"):
        alphabet = resolve_alphabet(args, [])
    else:
        alphabet = fa.make_alphabet(sorted(rx.letters_of(text)) or ["a"])
    base = load_base(args.base, alphabet)
    try:
        d = Validator(base if base.is_finite else None, args.dmax_check, alphabet)(expr)
    except SdValidationError as exc:
        report = {"command": "check-sd", "valid": False, "rule": exc.rule, "node": to_text(exc.node),
                  "witness": exc.witness, "message": str(exc)}
        _emit(args, report, [f"no: {exc}"])
        return NO
    sample = fa.enumerate_words(d, 6)[:8]
    report = {"command": "check-sd", "valid": True, "states": d.size, "sample": sample}
    _emit(args, report, [f"yes: valid BSD({base.name}) expression, minimal DFA with {d.size} states",
                         "sample: " + ", ".join(w or "eps" for w in sample)])
    return YES


def cmd_oracle(args) -> int:
    if args.check == "aperiodic":
        raw, alphabet, base = _setup(args, [args.lang])
        alpha, _ = syntactic_morphism(load_language(raw[0], alphabet))
        ans = brute_aperiodic(alpha.monoid.table)
        _emit(args, {"command": "oracle", "check": "aperiodic", "answer": ans}, [f"{'yes' if ans else 'no'}"])
        return YES if ans else NO
    if args.check == "mod-eps":
        raw, alphabet, base = _setup(args, [args.lang])
        lang = load_language(raw[0], alphabet)
        t, c, _, _ = length_lasso(lang)
        mmax = args.mmax or t + 2 * c
        brute, fast = brute_mod_eps_separable(lang, mmax), mod_eps_separable(lang)
        report = {"command": "oracle", "check": "mod-eps", "brute": brute, "divisor_test": fast, "mmax": mmax}
        _emit(args, report, [f"brute force (m <= {mmax}): {brute}", f"divisor test: {fast}"])
        return YES if brute == fast else ERROR
    if args.check == "lassos":
        rng = random.Random(args.seed or 0)
        bad = 0
        for _ in range(args.count):
            d, t, c = random_lasso(rng)
            bad += brute_mod_eps_separable(d, t + 2 * c) != mod_eps_separable(d)
        _emit(args, {"command": "oracle", "check": "lassos", "count": args.count, "disagreements": bad},
              [f"{args.count} lassos, {bad} disagreements"])
        return YES if bad == 0 else NO
    # corpus: stutter path against covering path
    alphabet = fa.make_alphabet(args.alphabet or "ab")
    base = load_base(args.base, alphabet)
    bad = []
    corpus = Corpus(seed=args.seed or 0, count=args.count, alphabet=alphabet)
    for i, d in enumerate(corpus.dfas()):
        x = is_c_aperiodic(syntactic_morphism(d)[0], base).aperiodic
        y = membership_via_covering(d, base, args.budget)
        if x != y:
            bad.append(i)
    _emit(args, {"command": "oracle", "check": "corpus", "count": args.count, "disagreements": bad},
          [f"{args.count} DFAs, {len(bad)} disagreements" + (f": {bad}" if bad else "")])
    return YES if not bad else NO


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--base", default="triv",
                        help="triv, mod, parity, mod<m> or finite:<path> (default triv)")
    common.add_argument("--alphabet", help="letters of the alphabet (default: inferred from the first input)")
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--trace", action="store_true", help="print fixpoint derivations")
    common.add_argument("--seed", type=int, help="seed for randomized schedules and corpora")
    common.add_argument("--dmax", type=int, default=8, help="largest synchronization delay searched")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest product monoid allowed")

    p = argparse.ArgumentParser(prog="starfree", description="Decision procedures for star-free closures SF(C).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("member", parents=[common], help="is L in SF(C)?")
    s.add_argument("lang")
    s.add_argument("--cross-check", action="store_true", help="also decide through covering")
    s.set_defaults(func=cmd_member)

    s = sub.add_parser("separate", parents=[common], help="is L1 SF(C)-separable from L2?")
    s.add_argument("l1")
    s.add_argument("l2")
    s.set_defaults(func=cmd_separate)

    s = sub.add_parser("cover", parents=[common], help="is (L1, {L2...}) SF(C)-coverable?")
    s.add_argument("l1")
    s.add_argument("l2s", nargs="+")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("stutters", parents=[common], help="list C-stutters of the syntactic morphism")
    s.add_argument("lang")
    s.set_defaults(func=cmd_stutters)

    s = sub.add_parser("synthesize", parents=[common], help="BSD(C) expression for a preimage")
    s.add_argument("source", help="morphism file, .dfa file or regex")
    s.add_argument("element", nargs="?", help="element id or a word mapping to it")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("check-sd", parents=[common], help="validate a BSD(C) expression")
    s.add_argument("expr", help="expression file or inline expression")
    s.add_argument("--dmax-check", type=int, default=None, help="reject declared delays above this")
    s.set_defaults(func=cmd_check_sd)

    s = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    s.add_argument("check", choices=["aperiodic", "mod-eps", "lassos", "corpus"])
    s.add_argument("lang", nargs="?")
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--mmax", type=int)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "oracle" and args.check in ("aperiodic", "mod-eps") and not args.lang:
        print(f"error: oracle {args.check} needs a language", file=sys.stderr)
        return ERROR
    try:
        return args.func(args)
    except (UsageError, rx.RegexSyntaxError, fa.DfaFormatError, fa.AlphabetMismatch, ClassFileError,
            BudgetExceeded, OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
