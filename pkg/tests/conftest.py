import os

from hypothesis import HealthCheck, settings, strategies as st

from starfree import automata as fa
from starfree.baseclass import length_mod_class, mod_class, triv
from starfree.regex import regex

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

AB = ("a", "b")
A1 = ("a",)


def L(text, alphabet=AB):
    return regex(text, alphabet)


def bases(alphabet=AB):
    return {"TRIV": triv(alphabet), "parity": length_mod_class(2, alphabet),
            "mod3": length_mod_class(3, alphabet), "MOD": mod_class()}


@st.composite
def dfas(draw, alphabet=AB, max_states=4):
    n = draw(st.integers(1, max_states))
    delta = tuple(tuple(draw(st.integers(0, n - 1)) for _ in alphabet) for _ in range(n))
    accepting = frozenset(q for q in range(n) if draw(st.booleans()))
    return fa.minimize(fa.Dfa(tuple(alphabet), delta, 0, accepting))


words = st.text(alphabet="ab", max_size=8)


# acceptance criterion number -> (passed, detail), filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
