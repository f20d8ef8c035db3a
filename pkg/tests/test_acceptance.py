"""Acceptance criteria 1-8, exact equality throughout.

Each test prints one ``PASS``/``FAIL`` line; the lines are repeated in the
pytest terminal summary.
"""
import random
import time

import pytest

from cmlab.cartan import cartan_companion, check_lattice_identities, coxeter_word
from cmlab.finite import (check_finite_belt, check_fundid, check_iota, check_minor_lemmas, check_v_recurrence,
                          coxeter_prefix_pairs, sl_coxeter_words)
from cmlab.mutation import (check_belt_closed_forms, check_belt_relations, check_engine_invariants, random_path,
                            random_tame_matrix)
from cmlab.quiver import CycleQuiver
from cmlab.suites import (belt_mode, default_matrices, run_bijection, run_c2_affine, run_example,
                          run_homogeneous_cycle, run_kronecker, run_regular)

RESULTS = []


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else "")
    RESULTS.append(line)
    print(line)
    return ok


def cycles(lo, hi):
    return [Q.render() for n in range(lo, hi + 1) for Q in CycleQuiver.all_acyclic(n)]


def test_criterion_1_a2_affine_variable():
    t = time.perf_counter()
    ok, info = run_example()
    elapsed = time.perf_counter() - t
    assert report(1, "A2 affine regular variable", ok and elapsed < 1.0, f"{elapsed:.3f}s"), info
    assert elapsed < 1.0


def test_criterion_2_regular_minors():
    failures = []
    for cyc in cycles(3, 6):
        ok, info = run_regular(cyc, search_depth=12 if len(cyc) <= 5 else 0, bijection=False)
        if not ok:
            failures.append((cyc, info))
    report(2, "regular characters = path minors = determinant oracle, mutation search n<=5", not failures,
           f"{len(cycles(3, 6))} orientations")
    assert not failures, failures[:3]


def test_criterion_3_bijection():
    failures = [(cyc, info) for cyc in cycles(3, 6) for ok, info in [run_bijection(cyc)] if not ok]
    report(3, "bridge sets and target-closed subsets are in weight-preserving bijection", not failures)
    assert not failures, failures[:3]


def test_criterion_4_homogeneous():
    failures = [(cyc, info) for cyc in cycles(3, 6) for ok, info in [run_homogeneous_cycle(cyc)] if not ok]
    failures += [(f"kronecker{r}", info) for r in (2, 3, 4) for ok, info in [run_kronecker(r)] if not ok]
    report(4, "homogeneous elements and Kronecker r=2,3,4", not failures)
    assert not failures, failures[:3]


def test_criterion_5_c2_affine():
    t = time.perf_counter()
    ok, info = run_c2_affine()
    elapsed = time.perf_counter() - t
    assert report(5, "C2 affine regular variable and chain minor", ok and elapsed < 1.0, f"{elapsed:.3f}s"), info


def test_criterion_6_finite_type():
    failures = []
    counts = {"fundid": 0, "minors": 0, "iota": 0, "belt": 0}
    for n in (3, 4, 5):
        for c in sl_coxeter_words(n):
            reps = {
                "fundid": check_fundid(n, coxeter_prefix_pairs(n, c)),
                "minors": check_minor_lemmas(n, c, 3),
                "iota": check_iota(n, c),
                "v": check_v_recurrence(n, c),
                "belt": check_finite_belt(n, c),
            }
            for name, rep in reps.items():
                counts[name] = counts.get(name, 0) + rep.get("checked", 0)
                if not rep["ok"]:
                    failures.append((n, c, name, rep["counterexample"]))
    report(6, "SL_n n=3..5 determinantal identity, minor values, involution, belt minors", not failures,
           ", ".join(f"{k}={v}" for k, v in counts.items()))
    assert not failures, failures[:3]
    assert all(counts[k] > 0 for k in ("fundid", "minors", "iota", "belt"))


def test_criterion_7_general_type():
    failures = []
    modes = {"symbolic": 0, "modular": 0}
    checked = 0
    for name, B in default_matrices(seed=0, count=20):
        n = len(B)
        lat = check_lattice_identities(cartan_companion(B), coxeter_word(B), 10)
        closed = check_belt_closed_forms(B, span=3 * n)
        mode = belt_mode(B)
        modes[mode] += 1
        rel = check_belt_relations(B, kmax=3 * n, span=3 * n, mode=mode)
        checked += rel["preprojective"] + rel["postinjective"] + rel["plusminus"]
        for what, rep in (("lattice", lat), ("closed forms", closed), ("belt relations", rel)):
            if not rep["ok"]:
                failures.append((name, B, what, rep["counterexample"]))
    report(7, "belt relations |l|<=3n and lattice identities kmax=10 on 25 matrices", not failures,
           f"{checked} relation instances, {modes['symbolic']} symbolic, {modes['modular']} modular")
    assert not failures, failures[:3]


def test_criterion_8_engine_invariants():
    rng = random.Random(2024)
    failures = []
    for trial in range(1000):
        B = random_tame_matrix(rng, rng.randint(2, 4))
        path = random_path(rng, len(B), 12)
        rep = check_engine_invariants(B, path)
        if not rep["ok"]:
            failures.append((B, path, rep["failure"]))
    report(8, "involution, Laurent integrality, sign-coherence, g/c duality on 1000 paths", not failures)
    assert not failures, failures[:3]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
