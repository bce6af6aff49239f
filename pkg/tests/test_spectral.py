import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from signstab import char_poly_exact, palindromic_sign, spectral_radius, squarefree_part
from signstab.spectral import aberth_roots, min_modulus

MARKOV_E = [[9, -4, 4], [-12, 9, -4], [4, -4, 1]]
square = st.integers(1, 6).flatmap(lambda n: st.lists(
    st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=150, deadline=None)
@given(square)
def test_char_poly_matches_sympy(m):
    nu = sympy.Symbol("nu")
    expected = sympy.Poly(sympy.Matrix(m).charpoly(nu).as_expr(), nu).all_coeffs()
    assert char_poly_exact(m) == [int(c) for c in expected]


def test_char_poly_examples():
    assert char_poly_exact(MARKOV_E) == [1, -19, 19, -1]
    assert char_poly_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, -3, 3, -1]


def test_big_entries_stay_exact():
    big = 10 ** 40
    m = [[big, 1], [1, 0]]
    assert char_poly_exact(m) == [1, -big, -1]


def test_spectral_radius_examples():
    r = spectral_radius([1, -18, 1])
    assert abs(r.value - (9 + 4 * math.sqrt(5))) < 1e-12
    assert r.error < 1e-12
    assert abs(spectral_radius([1, -1, -2, -1, 1]).value - 2.0810189966245) < 1e-12
    assert spectral_radius([[1, 0], [0, 1]]).value == pytest.approx(1.0, abs=1e-15)


def test_repeated_roots_are_certified():
    # (nu - 1)^2 has a double root; the squarefree part keeps the bound tight
    r = spectral_radius([1, -2, 1])
    assert abs(r.value - 1) < 1e-12
    assert squarefree_part([1, -2, 1]) == [1, -1]


def test_palindromic_sign():
    assert palindromic_sign([1, -19, 19, -1]) == -1
    assert palindromic_sign([1, -7, 1]) == 1
    assert palindromic_sign([1, 2, 3]) == 0


def test_min_modulus():
    assert min_modulus([1, -18, 1]) == pytest.approx(9 - 4 * math.sqrt(5), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=8).filter(lambda p: p[0] != 0))
def test_aberth_matches_numpy(p):
    zs, radii = aberth_roots(p)
    ours = [complex(z) for z in zs]
    ref = np.roots(p)
    # each numpy root is close to one of ours (numpy is the loose side)
    for z in ref:
        assert min(abs(z - w) for w in ours) < 1e-4 * max(1, abs(z))


@settings(max_examples=100, deadline=None)
@given(square)
def test_spectral_radius_matches_numpy(m):
    ref = max(abs(np.linalg.eigvals(np.array(m, dtype=float))))
    assert spectral_radius(m).value == pytest.approx(ref, rel=1e-6, abs=1e-6)
