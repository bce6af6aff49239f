import math
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from signstab import (INCONCLUSIVE, NOT_STABLE, SIGN_STABLE, TWO_SIDED, Cone,
                      MutationLoop, check, fm_build, heuristic_check, inductive_check,
                      orbit_sign_stabilization, path_presentation_matrix, perron_check,
                      stable_data, two_sided_check)
from signstab.polyhedra import positive_cone
from signstab.spectral import char_poly_exact
from signstab.stability import stable_recursion_holds
from signstab._linalg import det, inverse, transpose
from signstab.tropical import apply_loop_trop, sign_string

from conftest import MARKOV_B, a2_loop, kronecker_loop, markov_loop, random_skew

LAMBDA_MARKOV = 9 + 4 * math.sqrt(5)


@pytest.fixture(scope="module")
def markov_report():
    return inductive_check(markov_loop(), n_max=1)


def test_markov_inductive(markov_report):
    r = markov_report
    assert r.verdict == SIGN_STABLE
    assert sign_string(r.stable_sign) == "+-+-+-"
    assert r.char_e == r.char_e_check == [1, -19, 19, -1]
    assert r.e_check_stable == ((-7, -4, 12), (-12, -7, 20), (-20, -12, 33))
    assert abs(r.stretch_factor - LAMBDA_MARKOV) < 1e-12
    assert r.diagnostics["cones_n1"] == 17
    assert r.palindromic


def test_markov_perron_vector(markov_report):
    lam, v, ok = perron_check(markov_loop(), markov_report)
    assert ok and abs(lam - LAMBDA_MARKOV) < 1e-9
    phi = (1 + math.sqrt(5)) / 2
    w = np.array([1, -phi, 1 / phi])
    assert np.allclose(v / v[0], w, atol=1e-9)


def test_markov_stable_recursion(markov_report):
    assert stable_recursion_holds(markov_loop(), markov_report, 1, 6)


def test_markov_orbit():
    r = orbit_sign_stabilization(markov_loop(), (1, 1, 1))
    assert r.stabilized and r.certified
    assert sign_string(r.sign) == "+-+-+-"
    assert r.n0 <= 2


def test_markov_orbit_steps_use_stable_matrix(markov_report):
    # after n0 each traversal is multiplication by E_phi
    from signstab._linalg import matvec
    loop = markov_loop()
    pts, signs = apply_loop_trop(loop, (1, 1, 1), 8)
    for p, q, s in zip(pts[2:], pts[3:], signs[2:]):
        assert s == markov_report.stable_sign
        assert q == tuple(matvec(markov_report.e_stable, p))


def test_kronecker_l_minus_orbit():
    r = orbit_sign_stabilization(kronecker_loop(2), (-1, -1))
    assert r.stabilized and r.sign == (1, 1)
    assert r.points[1] == (1, 1)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_kronecker_inductive_inconclusive(l):
    assert inductive_check(kronecker_loop(l), n_max=3).verdict == INCONCLUSIVE


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_kronecker_heuristic(l):
    r = heuristic_check(kronecker_loop(l), Cone([(1, 0), (1, 1)]))
    assert r.verdict == SIGN_STABLE and r.stable_sign == (1, 1)
    assert r.char_e == [1, 2 - l * l, 1]
    lam = ((l * l - 2) + l * math.sqrt(l * l - 4)) / 2
    assert abs(r.stretch_factor - lam) < 1e-9 * lam
    # the strict-interior condition is a diagnostic only; it fails for l = 2
    assert r.diagnostics["strict_interior"] is (l > 2)


def test_heuristic_rejects_positive_cone_for_markov():
    r = heuristic_check(markov_loop(), positive_cone(3))
    assert r.verdict == INCONCLUSIVE
    assert "failed" in r.diagnostics


def test_two_sided_example():
    loop = fm_build((-2, 2, 4, 2, -2))
    r = two_sided_check(loop)
    assert r.verdict == TWO_SIDED
    assert r.stable_sign == tuple(-x for x in r.stable_sign_minus)
    assert abs(r.stretch_factor - 2.0810189966245) < 1e-10
    assert abs(r.entropy_lower_x - 0.73285767597364) < 1e-10


def test_auto_routes_to_two_sided():
    loop = fm_build((-2, 2, 4, 2, -2))
    r = check(loop, "auto", n_max=1)
    assert r.verdict == TWO_SIDED


@pytest.mark.parametrize("a", [(1,), (0,), (-1,)])
def test_finite_type_is_not_stable(a):
    # periodic loops have periodic tropical orbits with varying sign
    r = check(fm_build(a))
    assert r.verdict == NOT_STABLE
    assert "periodic" in r.diagnostics["obstruction"]


def test_pentagon_is_not_claimed():
    assert check(a2_loop()).verdict == INCONCLUSIVE


def test_cross_method_consistency(markov_report):
    # the accepting cone of the inductive check is a valid heuristic candidate
    cone = Cone.from_json(markov_report.diagnostics["cone"])
    h = heuristic_check(markov_loop(), cone)
    assert h.verdict == SIGN_STABLE
    assert h.stable_sign == markov_report.stable_sign
    assert h.e_stable == markov_report.e_stable


def test_parallel_workers_match_serial(monkeypatch):
    serial = inductive_check(markov_loop(), n_max=1, workers=1)
    monkeypatch.setenv("SIGNSTAB_THREADS", "2")
    par = inductive_check(markov_loop(), n_max=1)
    assert par.stable_sign == serial.stable_sign
    assert par.diagnostics == serial.diagnostics


def test_sigma_loop_power_is_markov():
    loop = MutationLoop(MARKOV_B, (0, 1), (1, 2, 0))
    r = check(loop, "auto", n_max=3)
    assert r.verdict == SIGN_STABLE
    assert abs(r.stretch_factor ** 3 - LAMBDA_MARKOV) < 1e-9


def test_stable_data_rejects_bad_sign():
    with pytest.raises(ValueError):
        stable_data(markov_loop(), (1, 0, 1, -1, 1, -1))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_regular_b_char_polys_agree(seed, data):
    # w followed by its reverse is a loop; FM loops carry a permutation
    rng = random.Random(seed)
    if rng.random() < 0.5:
        n = rng.randint(2, 4)
        b = random_skew(rng, n)
        w = tuple(rng.randrange(n) for _ in range(rng.randint(1, 4)))
        loop = MutationLoop(b, w + w[::-1])
    else:
        half = [rng.randint(-3, 3) for _ in range(rng.randint(1, 2))]
        a = tuple(half + half[::-1][1:]) if rng.random() < 0.5 else tuple(half + half[::-1])
        loop = fm_build(a)
    if det(loop.b0.b) == 0:
        return
    eps = tuple(data.draw(st.sampled_from([1, -1])) for _ in loop.word)
    e = path_presentation_matrix(loop, eps)
    pe = char_poly_exact(e)
    pc = char_poly_exact(inverse(transpose(e)))
    assert pe == pc or pe == [-x for x in pc]


def test_stretch_factor_at_least_one():
    for loop, cand in ((markov_loop(), None), (kronecker_loop(2), Cone([(1, 0), (1, 1)])),
                       (kronecker_loop(3), Cone([(1, 0), (1, 1)]))):
        r = check(loop, "auto", cand=cand, n_max=1)
        assert r.stable and r.stretch_factor >= 1 - 1e-12
