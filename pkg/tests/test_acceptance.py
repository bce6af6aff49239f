"""Acceptance suite: one printed PASS/FAIL line per criterion (1-10).

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed
even when output capture is on.
"""

import itertools
import math
import random
import time

import pytest

from signstab import (Cone, MutationLoop, TWO_SIDED, SIGN_STABLE, check, degree_bounds,
                      degree_growth_slope, entropy_bounds, fm_build, fm_stability,
                      heuristic_check, inductive_check, lyapunov_max_over_basis,
                      path_presentation_matrix, perron_check, separation_check,
                      sign_cone_decomposition, sign_cone_normals, spectral_radius,
                      traverse, two_sided_check, verify_cgf_identities, verify_e_identities)
from signstab._linalg import det, matvec
from signstab.fm import closed_form_poly, fm_matrix
from signstab.polyhedra import interior_point
from signstab.symbolic import loop_a_degrees
from signstab.tropical import sign_string

from conftest import (MARKOV_B, a2_loop, feasible_instances, kronecker_loop, markov_loop,
                      random_skew, random_word)
from test_entropy import random_unimodular
from test_fm import EX57_B

LAMBDA_MARKOV = 9 + 4 * math.sqrt(5)
REFERENCE_E_PHI = ((9, 6, 4), (-12, -7, -4), (4, 2, 1))
RESULTS = {}


def report(capsys, n, ok, detail, seconds):
    line = f"ACCEPTANCE {n:>2}: {'PASS' if ok else 'FAIL'}  ({seconds:.2f}s)  {detail}"
    RESULTS[n] = line
    with capsys.disabled():
        print("\n" + line)


# ---------------------------------------------------------------- 1

def test_criterion_1_markov(capsys):
    t = time.perf_counter()
    r = inductive_check(markov_loop(), n_max=1)
    est = entropy_bounds(r)
    decomp = sign_cone_decomposition(markov_loop())
    dt = time.perf_counter() - t
    checks = {
        "verdict": r.verdict == SIGN_STABLE,
        "sign": r.stable_sign == (1, -1, 1, -1, 1, -1),
        "E_check": r.e_check_stable == ((-7, -4, 12), (-12, -7, 20), (-20, -12, 33)),
        "char_polys": r.char_e == r.char_e_check == [1, -19, 19, -1],
        "lambda": abs(r.stretch_factor - LAMBDA_MARKOV) < 1e-12,
        "entropy": abs(est.point_estimate - 2.88727095035762) < 1e-11,
        "17_cones": len(decomp) == 17,
        "runtime": dt < 2,
    }
    literal = r.e_stable == REFERENCE_E_PHI
    ok = all(checks.values()) and literal
    detail = ", ".join(k for k, v in checks.items() if not v) or "all computed items match"
    if not literal:
        detail += (f"; E_phi = {[list(x) for x in r.e_stable]} differs from the reference "
                   f"{[list(x) for x in REFERENCE_E_PHI]} (recorded deviation; the reference "
                   "matrix is C^(1), and check-E_phi above is the inverse transpose of ours)")
    report(capsys, 1, ok, detail, dt)
    assert all(checks.values()), checks


@pytest.mark.xfail(strict=True, reason="reference E_phi is inconsistent with its own char poly "
                   "and check-E_phi; recorded deviation")
def test_criterion_1_reference_e_phi_literal():
    assert inductive_check(markov_loop(), n_max=1).e_stable == REFERENCE_E_PHI


def test_criterion_1_reference_matrix_is_inconsistent():
    # trace 3 cannot have char poly nu^3 - 19 nu^2 + ...
    assert sum(REFERENCE_E_PHI[i][i] for i in range(3)) == 3
    from signstab.cgf import cgf_along_loop
    assert cgf_along_loop(markov_loop(), 1)[1].c == REFERENCE_E_PHI


# ---------------------------------------------------------------- 2

def table_one(l):
    return {(1, 1): ([(1, 0), (l, 1)], ((l * l - 1, l), (-l, -1))),
            (1, -1): ([(1, 0), (-l, -1)], ((-1, 0), (-l, -1))),
            (-1, 1): ([(-1, 0), (0, 1)], ((-1, l), (0, -1))),
            (-1, -1): ([(-1, 0), (0, -1)], ((-1, 0), (0, -1)))}


def test_criterion_2_kronecker(capsys):
    t = time.perf_counter()
    bad = []
    for l in (2, 3, 4, 5):
        loop = kronecker_loop(l)
        decomp = dict(sign_cone_decomposition(loop))
        for eps, (normals, e) in table_one(l).items():
            if sorted(Cone(normals).normals) != sorted(decomp[eps].normals):
                bad.append(f"cone {sign_string(eps)} l={l}")
            if path_presentation_matrix(loop, eps) != e:
                bad.append(f"matrix {sign_string(eps)} l={l}")
        r = heuristic_check(loop, Cone([(1, 0), (1, 1)]))
        if r.verdict != SIGN_STABLE or r.stable_sign != (1, 1):
            bad.append(f"heuristic l={l}")
        if r.char_e != [1, 2 - l * l, 1]:
            bad.append(f"char poly l={l}")
        lam = ((l * l - 2) + l * math.sqrt(l * l - 4)) / 2
        if abs(r.stretch_factor - lam) > 1e-12 * max(1, lam):
            bad.append(f"lambda l={l}")
        if l == 2 and abs(entropy_bounds(r).point_estimate) > 1e-12:
            bad.append("entropy l=2")
        if l == 3 and abs(r.stretch_factor - (7 + 3 * math.sqrt(5)) / 2) > 1e-12:
            bad.append("lambda l=3 closed form")
    dt = time.perf_counter() - t
    ok = not bad and dt < 1
    report(capsys, 2, ok, "; ".join(bad) or "cones and matrices of the four linear pieces, heuristic verdict, "
           "char polys and sqrt(l^2-4) stretch factors for l=2..5", dt)
    assert ok, bad


# ---------------------------------------------------------------- 3

def test_criterion_3_two_sided(capsys):
    t = time.perf_counter()
    loop = fm_build((-2, 2, 4, 2, -2))
    r = two_sided_check(loop)
    dt = time.perf_counter() - t
    q = [1, -1, -2, -1, 1]

    def times(p, s):
        out = [0] * (len(p) + len(s) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(s):
                out[i + j] += a * b
        return out

    expected = {tuple(times([1, 1, 1], q)), tuple(times([1, -1, 1], q))}
    checks = {
        "B": fm_matrix((-2, 2, 4, 2, -2)) == EX57_B,
        "verdict": r.verdict == TWO_SIDED,
        "opposite": r.stable_sign == tuple(-x for x in r.stable_sign_minus),
        "char_polys": {tuple(r.char_e), tuple(r.char_e_minus)} == expected,
        "lambda": abs(r.stretch_factor - 2.0810189966245) < 1e-10,
        "entropy": abs(entropy_bounds(r).point_estimate - 0.73285767597364) < 1e-10,
        "runtime": dt < 2,
    }
    ok = all(checks.values())
    report(capsys, 3, ok, ", ".join(k for k, v in checks.items() if not v) or
           f"signs {sign_string(r.stable_sign)}/{sign_string(r.stable_sign_minus)}", dt)
    assert ok, checks


# ---------------------------------------------------------------- 4

def fm_vectors():
    for length in range(1, 5):
        for half in itertools.product(range(0, 5), repeat=(length + 1) // 2):
            a = tuple(half) + tuple(half[:length // 2][::-1])
            if a[0] >= 2:
                yield a


@pytest.fixture(scope="module")
def fm_reports():
    t = time.perf_counter()
    out = {a: fm_stability(a, cross_validate=len(a) + 1 <= 4) for a in fm_vectors()}
    return out, time.perf_counter() - t


def test_criterion_4_fordy_marsh(capsys, fm_reports):
    reports, dt = fm_reports
    bad = []
    for a, r in reports.items():
        lam = spectral_radius(closed_form_poly(a, 1)).value
        if r.verdict != SIGN_STABLE or abs(r.stretch_factor - lam) > 1e-12 * lam:
            bad.append(f"{a}: verdict/lambda")
        if not r.diagnostics["char_poly_matches"]:
            bad.append(f"{a}: char poly")
        if len(a) + 1 <= 4 and not r.diagnostics.get("generic_agrees"):
            bad.append(f"{a}: generic cross-check")
    ok = not bad and dt < 30
    n_cross = sum(1 for a in reports if len(a) + 1 <= 4)
    report(capsys, 4, ok, "; ".join(bad) or
           f"{len(reports)} vectors, {n_cross} cross-validated on phi^N", dt)
    assert ok, bad


# ---------------------------------------------------------------- 5

def test_criterion_5_identities(capsys):
    rng = random.Random(5)
    t = time.perf_counter()
    instances = feasible_instances(rng, 1000, 5, 10, term_cap=20000)
    bad = []
    for b, word in instances:
        from signstab import mutate_exchange_matrix
        m = b
        for k in word:
            for eps in (1, -1):
                if not all(verify_e_identities(m, k, eps).values()):
                    bad.append((b, word, "E identities"))
            m = mutate_exchange_matrix(m, k)
        r = verify_cgf_identities(b, word)
        if not all(r.values()):
            bad.append((b, word, [k for k, v in r.items() if not v]))
    dt = time.perf_counter() - t
    ok = not bad and dt < 60
    report(capsys, 5, ok, f"{len(bad)} failures" if bad else
           "1000 instances (N<=5, length<=10; F-polynomials capped at 20000 predicted terms)",
           dt)
    assert ok, bad[:3]


# ---------------------------------------------------------------- 6

def random_loop(rng):
    kind = rng.randrange(4)
    if kind == 0:
        n = rng.randint(2, 5)
        w = random_word(rng, n, rng.randint(1, 5))
        return MutationLoop(random_skew(rng, n), w + w[::-1])
    if kind == 1:
        half = [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))]
        return fm_build(tuple(half + half[::-1][rng.randrange(2):]))
    if kind == 2:
        return MutationLoop(MARKOV_B, (0, 1), (1, 2, 0))
    return kronecker_loop(rng.randint(1, 5))


def test_criterion_6_tropical_linear(capsys):
    rng = random.Random(6)
    t = time.perf_counter()
    done = bad = 0
    while done < 500:
        loop = random_loop(rng)
        w = [rng.randint(-30, 30) for _ in range(loop.n)]
        p, eps = traverse(loop, w)
        if not all(eps):
            continue
        done += 1
        if p != tuple(matvec(path_presentation_matrix(loop, eps), w)):
            bad += 1
    dt = time.perf_counter() - t
    report(capsys, 6, bad == 0, f"{done} strict points, {bad} mismatches", dt)
    assert bad == 0


# ---------------------------------------------------------------- 7

def test_criterion_7_separation(capsys):
    rng = random.Random(7)
    t = time.perf_counter()
    bad = []
    for b, word in feasible_instances(rng, 200, 4, 6, term_cap=20000):
        r = separation_check(b, word)
        if not r["match"]:
            bad.append((b, word))
    dt = time.perf_counter() - t
    ok = not bad and dt < 120
    report(capsys, 7, ok, f"200 instances, {len(bad)} mismatches, no Laurent failures", dt)
    assert ok, bad[:3]


# ---------------------------------------------------------------- 8

def test_criterion_8_degree_sandwich(capsys):
    t = time.perf_counter()
    bad = []
    cases = {"kronecker2": kronecker_loop(2), "A2 pentagon": a2_loop(),
             "A2 length one": fm_build((1,))}
    for name, loop in cases.items():
        degs = loop_a_degrees(loop, 8)
        for n, d in enumerate(degs):
            lo, hi = degree_bounds(loop, n)
            if not lo <= d <= hi:
                bad.append(f"{name} n={n}: {lo} <= {d} <= {hi} fails")
    dt = time.perf_counter() - t
    report(capsys, 8, not bad, "; ".join(bad) or "n = 0..8 for " + ", ".join(cases), dt)
    assert not bad


# ---------------------------------------------------------------- 9

def test_criterion_9_slopes(capsys):
    t = time.perf_counter()
    _, slope = degree_growth_slope(markov_loop(), (20, 30), "C")
    slope_ok = abs(slope - math.log(LAMBDA_MARKOV)) < 1e-6
    rng = random.Random(9)
    tested = worst = 0
    while tested < 40:
        n = rng.randint(2, 5)
        m = random_unimodular(rng, n)
        rho = spectral_radius(m)
        roots = sorted(rho.roots, key=abs, reverse=True)
        # real simple top root with modulus gap; see the note in test_entropy
        if len(roots) < n or abs(roots[0].imag) > 1e-9 or \
                (len(roots) > 1 and abs(roots[1]) / abs(roots[0]) > 0.6):
            continue
        tested += 1
        worst = max(worst, abs(lyapunov_max_over_basis(m, 60) - math.log(rho.value)))
    dt = time.perf_counter() - t
    ok = slope_ok and worst < 1e-6 and dt < 10
    report(capsys, 9, ok, f"Markov C-slope error {abs(slope - math.log(LAMBDA_MARKOV)):.1e}; "
           f"Lyapunov worst error {worst:.1e} over {tested} matrices", dt)
    assert ok


# ---------------------------------------------------------------- 10

def test_criterion_10_perron(capsys, fm_reports):
    t = time.perf_counter()
    reports, _ = fm_reports
    bad = []
    r = inductive_check(markov_loop(), n_max=1)
    if not perron_check(markov_loop(), r)[2]:
        bad.append("markov")
    for a, rep in reports.items():
        if not perron_check(fm_build(a), rep)[2]:
            bad.append(str(a))
    dt = time.perf_counter() - t
    report(capsys, 10, not bad, "; ".join(bad) or
           f"Markov and {len(reports)} FM cases inside the depth-8 stable cone", dt)
    assert not bad


def test_zz_summary(capsys):
    with capsys.disabled():
        print("\n" + "\n".join(RESULTS[k] for k in sorted(RESULTS)))


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
