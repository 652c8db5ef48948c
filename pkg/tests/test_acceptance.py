"""Acceptance criteria, one test (and one printed pass/fail line) per criterion.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines appear at
the end of the session. ``python tests/test_acceptance.py`` prints them
directly.
"""

import random
import time

from conftest import ACCEPTANCE

from tatoms import verify
from tatoms.detection import contains_atom, parameter_via_atoms
from tatoms.enumerate import random_graph
from tatoms.feasibility import b_chromatic_via_atoms
from tatoms.graph import complete_bipartite, k_minus
from tatoms.oracles import b_chromatic_number, b_relaxed_number_bruteforce


def record(key: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[key] = (ok, detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def _summary(*reports) -> tuple[bool, str]:
    ok = all(r.passed for r in reports)
    parts = []
    for r in reports:
        s = f"{r.theorem}: {r.checked} checked, {len(r.counterexamples)} counterexamples"
        if r.notes:
            s += f" ({'; '.join(r.notes)})"
        parts.append(s)
    return ok, " | ".join(parts)


def test_1_catalog_exactness():
    record("1", *_summary(verify.catalogs()))


def test_2_k_minus_separation():
    bad = []
    for n in (3, 4, 5):
        g = k_minus(n)
        if b_chromatic_number(g)[0] != 2:
            bad.append(f"oracle phi(K-{n},{n})")
        if n <= 4:
            if b_chromatic_via_atoms(g)[0] != 2:
                bad.append(f"atoms phi(K-{n},{n})")
            if parameter_via_atoms(g, "b") != n:
                bad.append(f"atoms phi_r(K-{n},{n})")
        if n == 3 and b_relaxed_number_bruteforce(g) != 3:
            bad.append("brute-force phi_r(K-3,3)")
    record("2", not bad, "phi = 2, phi_r = n for n = 3,4,5" if not bad else f"wrong: {bad}")


def test_3_oracle_atom_equivalence():
    record("3", *_summary(verify.pg_iff(7), verify.b_iff(7), verify.grundy_iff(7)))


def test_4_phi_via_feasibility():
    record("4", *_summary(verify.phi_feasibility(n_max=7, samples=200, seed=0, sample_n_max=9)))


def test_5_two_characterizations():
    record("5", *_summary(verify.pg2_char(7), verify.grundy2_char(7)))


def test_6a_deletion_bounds():
    record("6a", *_summary(verify.deletion_bounds(7)))


def test_6b_critical_relaxed():
    record("6b", *_summary(verify.critical_relaxed(7)))


def test_6c_small_order_lemma():
    record("6c", *_summary(verify.deletion_lemma(5), verify.deletion_characterization(5)))


def test_6d_critical_characterization():
    record("6d", *_summary(verify.critical_agreement(7)))


def test_7_b_perfect():
    record("7", *_summary(verify.bperfect_def(7), verify.family_bipartite()))


def test_8_girth_and_components():
    record("8", *_summary(verify.tree_phi_eq(samples=200, n_max=12, seed=0),
                          verify.girth7_phi_eq(samples=50, n_max=14, seed=0),
                          verify.component_bound(4)))


def test_9_size_bounds():
    record("9", *_summary(verify.size_bounds(4)))


def test_smoke_n200_t3():
    rng = random.Random(0)
    hosts = {"G(200, 0.02)": random_graph(200, 0.02, rng), "K100,100": complete_bipartite(100, 100)}
    times = {}
    answers = {}
    for name, g in hosts.items():
        for kind in ("pgrundy", "b", "grundy"):
            start = time.perf_counter()
            answers[name, kind] = contains_atom(g, kind, 3)[0]
            times[name, kind] = time.perf_counter() - start
    # K_{n,n} has Gamma = partial Grundy = 2 and no induced P5, C5, C3, P3+P4, 3P3
    expected_negative = {("K100,100", k) for k in ("pgrundy", "b", "grundy")}
    wrong = [k for k, v in answers.items() if v == (k in expected_negative)]
    slowest = max(times.values())
    ok = slowest < 60 and not wrong
    record("smoke", ok, f"slowest t=3 detection on n=200: {slowest:.2f}s; wrong answers: {wrong}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
