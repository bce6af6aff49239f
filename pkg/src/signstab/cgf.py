"""C-, G- and F-matrices, F-polynomials and their identities along words."""

from __future__ import annotations

from dataclasses import dataclass

from ._linalg import (identity, inverse, matadd, matmul, permutation_rows,
                      pos, sgn, transpose, zeros)
from ._poly import LPoly
from .seed import (_as_exchange, e_check_matrix, e_matrix, expand_loop_power,
                   mutate_exchange_matrix)


class CGFInvariantError(RuntimeError):
    """An identity that must hold exactly was violated (an internal bug)."""


@dataclass(frozen=True)
class CGFState:
    """C/G/F data at one vertex, relative to the base vertex.

    Attributes
    ----------
    c, g, f : tuple of tuples
        C-, G- and F-matrices; row i is the i-th c-, g- or f-vector.
    c_neg : tuple of tuples
        C-matrix for the opposite exchange matrix, kept as c + b f.
    b : ExchangeMatrix
        Exchange matrix at this vertex.
    trop_signs : tuple
        Tropical signs recorded so far.
    """

    c: tuple
    g: tuple
    f: tuple
    c_neg: tuple
    b: object
    trop_signs: tuple = ()


def initial_state(b):
    b = _as_exchange(b)
    one = identity(b.n)
    return CGFState(one, one, zeros(b.n), one, b, ())


def row_sign(row):
    """Common sign of a sign-coherent row; raises if incoherent or zero."""
    signs = {sgn(x) for x in row} - {0}
    if len(signs) != 1:
        raise CGFInvariantError(f"row {row} is not sign-coherent or is zero")
    return signs.pop()


def cgf_step(state, k, debug=False):
    """Mutate the C/G/F data at index k.

    The tropical sign is read from row k of C. The F-matrix update adds
    row k of the positive part of eps * C^{-s} to check-E * F.
    """
    b = state.b
    eps = row_sign(state.c[k])
    e = e_matrix(b, k, eps)
    ec = e_check_matrix(b, k, eps)
    c = matmul(e, state.c)
    g = matmul(ec, state.g)
    f = [list(r) for r in matmul(ec, state.f)]
    f[k] = [x + pos(eps * y) for x, y in zip(f[k], state.c_neg[k])]
    f = tuple(map(tuple, f))
    bp = mutate_exchange_matrix(b, k)
    c_neg = matadd(c, matmul(bp.b, f))
    if debug:
        # parallel recursion for -B as an independent check
        eps_n = row_sign(state.c_neg[k])
        alt = matmul(e_matrix(-b, k, eps_n), state.c_neg)
        if alt != c_neg:
            raise CGFInvariantError("C^{-s} recursion disagrees with c + b f")
    return CGFState(c, g, f, c_neg, bp, state.trop_signs + (eps,))


def cgf_along_word(b0, word, debug=False):
    """All states along a word, starting with the base state."""
    states = [initial_state(b0)]
    for k in word:
        states.append(cgf_step(states[-1], k, debug))
    return states


@dataclass(frozen=True)
class Snapshot:
    """Loop data after m traversals, rows relabelled by sigma^m.

    ``c_bar`` and ``g_bar`` are the matrices for the opposite exchange
    matrix, ``c + b f`` and ``g + f B0``.
    """

    m: int
    c: tuple
    g: tuple
    f: tuple
    c_bar: tuple
    g_bar: tuple
    trop_signs: tuple


def cgf_along_loop(loop, n, debug=False):
    """Snapshots C^(m), G^(m), F^(m) and their barred versions, m = 0..n."""
    loop.require_valid()
    b0 = loop.b0
    one = identity(loop.n)
    snaps = [Snapshot(0, one, one, zeros(loop.n), one, one, ())]
    if n == 0:
        return snaps
    big = expand_loop_power(loop, n)
    state = initial_state(b0)
    sigma_m = tuple(range(loop.n))
    for m in range(1, n + 1):
        signs = []
        for k in big.word[(m - 1) * loop.h: m * loop.h]:
            state = cgf_step(state, k, debug)
            signs.append(state.trop_signs[-1])
        sigma_m = tuple(loop.sigma[s] for s in sigma_m)
        g_bar = matadd(state.g, matmul(state.f, b0.b))
        snaps.append(Snapshot(
            m,
            permutation_rows(sigma_m, state.c),
            permutation_rows(sigma_m, state.g),
            permutation_rows(sigma_m, state.f),
            permutation_rows(sigma_m, state.c_neg),
            permutation_rows(sigma_m, g_bar),
            tuple(signs)))
    return snaps


def f_polynomials_along_word(b0, word, budget=None):
    """F-polynomials in y_1..y_N from the exchange recursion.

    Every division is exact; a remainder raises
    :class:`signstab._poly.NonExactDivision`.
    """
    b = _as_exchange(b0)
    n = b.n
    polys = [LPoly.const(n, 1, budget) for _ in range(n)]
    state = initial_state(b)
    for k in word:
        ck = state.c[k]
        bk = state.b.b[k]
        plus = LPoly.monomial(n, [pos(x) for x in ck], 1, budget)
        minus = LPoly.monomial(n, [pos(-x) for x in ck], 1, budget)
        for l in range(n):
            if bk[l] > 0:
                plus = plus * polys[l] ** bk[l]
            elif bk[l] < 0:
                minus = minus * polys[l] ** (-bk[l])
        polys[k] = (plus + minus).divexact(polys[k])
        if not polys[k].is_polynomial():
            raise CGFInvariantError("F-polynomial acquired a denominator")
        state = cgf_step(state, k)
    return polys


def max_degree_matrix(polys):
    return tuple(p.max_exponents() for p in polys)


def verify_cgf_identities(b0, word, fpolys=None, with_fpolys=True, budget=None):
    """Check the C/G/F identities at every vertex along a word.

    Returns
    -------
    dict
        Maps identity name to bool.
    """
    b0 = _as_exchange(b0)
    report = {"sign_coherence": True, "duality": True, "c_neg": True,
              "g_neg": True, "f_neg": True, "f_nonneg": True,
              "det_unimodular": True}
    try:
        states = cgf_along_word(b0, word)
        neg = cgf_along_word(-b0, word)
    except CGFInvariantError:
        report["sign_coherence"] = False
        return report
    for s, t in zip(states, neg):
        for row in s.c:
            if len({sgn(x) for x in row} - {0}) != 1:
                report["sign_coherence"] = False
        if inverse(transpose(s.c)) != s.g:
            report["duality"] = False
        if t.c != s.c_neg or t.c != matadd(s.c, matmul(s.b.b, s.f)):
            report["c_neg"] = False
        if t.g != matadd(s.g, matmul(s.f, b0.b)):
            report["g_neg"] = False
        if t.f != s.f:
            report["f_neg"] = False
        if any(x < 0 for r in s.f for x in r):
            report["f_nonneg"] = False
    last = states[-1]
    from ._linalg import det
    if abs(det(last.c)) != 1 or abs(det(last.g)) != 1:
        report["det_unimodular"] = False
    if with_fpolys:
        if fpolys is None:
            fpolys = f_polynomials_along_word(b0, word, budget)
        report["f_matrix_degrees"] = max_degree_matrix(fpolys) == last.f
        report["f_not_divisible"] = not any(
            p.divisible_by_var(j) for p in fpolys for j in range(b0.n))
    return report
