import random

import pytest
import sympy
from hypothesis import given, settings

from signstab import (cgf_along_loop, cgf_along_word, f_polynomials_along_word,
                      verify_cgf_identities)
from signstab.cgf import cgf_step, initial_state, max_degree_matrix

from conftest import (feasible_instances, kronecker_loop, markov_loop,
                      seeds_and_words)


def mutate_extended(m, k):
    out = [row[:] for row in m]
    for i in range(len(m)):
        for j in range(len(m[0])):
            if i == k or j == k:
                out[i][j] = -m[i][j]
            else:
                a, b = m[i][k], m[k][j]
                out[i][j] = m[i][j] + (1 if a > 0 else -1 if a < 0 else 0) * max(a * b, 0)
    return out


def principal_oracle(b, word):
    """C-matrix (rows = c-vectors) and F-polynomials from principal coefficients.

    The extended matrix is [-B; I] in column convention; cluster variables
    are computed with sympy and specialised at x = 1.
    """
    n = len(b)
    m = [[-b[i][j] for j in range(n)] for i in range(n)] + \
        [[int(i == j) for j in range(n)] for i in range(n)]
    xs = list(sympy.symbols(f"x0:{n}"))
    ys = sympy.symbols(f"y0:{n}")
    cur = list(xs)
    for k in word:
        plus, minus = 1, 1
        for i in range(n):
            plus *= cur[i] ** max(m[i][k], 0)
            minus *= cur[i] ** max(-m[i][k], 0)
            plus *= ys[i] ** max(m[n + i][k], 0)
            minus *= ys[i] ** max(-m[n + i][k], 0)
        cur[k] = sympy.cancel((plus + minus) / cur[k])
        m = mutate_extended(m, k)
    fs = [sympy.expand(sympy.cancel(v.subs({x: 1 for x in xs}))) for v in cur]
    c = [[m[n + j][i] for j in range(n)] for i in range(n)]
    return c, fs, ys


def lpoly_to_sympy(p, ys):
    return sympy.expand(sum(c * sympy.Mul(*[y ** e for y, e in zip(ys, ex)])
                            for ex, c in p.to_dict().items()))


def test_c_and_f_against_principal_coefficients():
    rng = random.Random(7)
    for b, word in feasible_instances(rng, 25, 4, 6, term_cap=200):
        c_oracle, f_oracle, ys = principal_oracle(b, word)
        assert [list(r) for r in cgf_along_word(b, word)[-1].c] == c_oracle
        polys = f_polynomials_along_word(b, word)
        assert [lpoly_to_sympy(p, ys) for p in polys] == f_oracle


def test_first_step_markov():
    s = cgf_step(initial_state([[0, 2, -2], [-2, 0, 2], [2, -2, 0]]), 0)
    assert s.c == ((-1, 0, 0), (0, 1, 0), (2, 0, 1))
    assert s.f == ((1, 0, 0), (0, 0, 0), (0, 0, 0))
    assert s.trop_signs == (1,)


def test_markov_snapshot_is_presentation_matrix():
    from signstab import path_presentation_matrix
    loop = markov_loop()
    snap = cgf_along_loop(loop, 1)[1]
    assert snap.c == path_presentation_matrix(loop, snap.trop_signs)


def test_kronecker_snapshots_follow_stable_matrix():
    from signstab._linalg import matmul
    snaps = cgf_along_loop(kronecker_loop(2), 5)
    e = ((3, 2), (-2, -1))
    for s, t in zip(snaps[1:], snaps[2:]):
        assert t.c == matmul(e, s.c)


def test_sigma_loop_snapshots_agree_with_expanded_loop():
    from signstab import MutationLoop
    from conftest import MARKOV_B
    small = MutationLoop(MARKOV_B, (0, 1), (1, 2, 0))
    a = cgf_along_loop(small, 3)[3]
    b = cgf_along_loop(markov_loop(), 1)[1]
    assert a.c == b.c and a.g == b.g and a.f == b.f


def test_f_degrees_for_markov_word():
    b = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    word = (0, 1, 2, 0)
    polys = f_polynomials_along_word(b, word)
    assert max_degree_matrix(polys) == cgf_along_word(b, word)[-1].f


@settings(max_examples=150, deadline=None)
@given(seeds_and_words(max_n=5, max_len=10, max_entry=2))
def test_identities_without_polynomials(bw):
    b, word = bw
    assert all(verify_cgf_identities(b, word, with_fpolys=False).values())


@settings(max_examples=60, deadline=None)
@given(seeds_and_words(max_n=4, max_len=5, max_entry=1))
def test_identities_with_polynomials(bw):
    b, word = bw
    assert all(verify_cgf_identities(b, word, budget=50000).values())
