"""Piecewise-linear tropical dynamics on the X- and A-sides.

Points are tuples of :class:`fractions.Fraction`. Signs are ints in
{-1, 0, 1}; a sign vector is a tuple of them.
"""

from __future__ import annotations

from fractions import Fraction

from ._linalg import identity, matmul, matvec, pos, sgn
from .seed import (_as_exchange, _check_index, e_factors, permutation_matrix)


def trop_point(w):
    return tuple(Fraction(x) for x in w)


def sign_string(eps):
    return "".join({1: "+", -1: "-", 0: "0"}[e] for e in eps)


def parse_sign(s):
    table = {"+": 1, "-": -1, "0": 0, "−": -1}
    try:
        return tuple(table[c] for c in s.strip())
    except KeyError:
        raise ValueError(f"bad sign string {s!r}") from None


def is_strict(eps):
    return all(e != 0 for e in eps)


def trop_x_mutate(b, k, w):
    """Signed tropical X-mutation.

    Returns
    -------
    (tuple, int)
        The mutated point and eps = sgn(x_k).
    """
    b = _as_exchange(b)
    _check_index(k, b.n)
    w = trop_point(w)
    eps = sgn(w[k])
    xk = w[k]
    out = [w[i] + pos(eps * b.b[i][k]) * xk for i in range(b.n)]
    out[k] = -xk
    return tuple(out), eps


def trop_x_mutate_minplus(b, k, w):
    """Unsigned (min-plus) form of the tropical X-mutation, for cross-checks."""
    b = _as_exchange(b)
    w = trop_point(w)
    xk = w[k]
    out = []
    for i in range(b.n):
        if i == k:
            out.append(-xk)
        else:
            bik = b.b[i][k]
            out.append(w[i] - bik * min(0, -sgn(bik) * xk))
    return tuple(out)


def trop_ensemble_map(b, v):
    """Tropical ensemble map v -> B v."""
    b = _as_exchange(b)
    return tuple(matvec(b.b, trop_point(v)))


def trop_a_mutate(b, k, v):
    """Signed tropical A-mutation.

    The sign is that of ``sum_j b_kj a_j``. When this vanishes both signed
    branches coincide and the + branch is used, which is what the
    min form gives.
    """
    b = _as_exchange(b)
    _check_index(k, b.n)
    v = trop_point(v)
    eps = sgn(sum(b.b[k][j] * v[j] for j in range(b.n)))
    branch = eps if eps else 1
    out = list(v)
    out[k] = -v[k] + sum(pos(-branch * b.b[k][j]) * v[j] for j in range(b.n))
    return tuple(out), eps


def trop_a_mutate_min(b, k, v):
    b = _as_exchange(b)
    v = trop_point(v)
    out = list(v)
    out[k] = -v[k] + min(sum(pos(b.b[k][j]) * v[j] for j in range(b.n)),
                         sum(pos(-b.b[k][j]) * v[j] for j in range(b.n)))
    return tuple(out)


def apply_permutation(sigma, w):
    """Coordinates of P_sigma w: the new sigma(i)-th coordinate is w_i."""
    out = [None] * len(w)
    for i, s in enumerate(sigma):
        out[s] = w[i]
    return tuple(out)


def traverse(loop, w):
    """One traversal: mutate along the word, then permute.

    Returns
    -------
    (tuple, tuple)
        Image point and the path sign.
    """
    w = trop_point(w)
    signs = []
    for b, k in zip(loop.vertex_matrices, loop.word):
        w, e = trop_x_mutate(b, k, w)
        signs.append(e)
    return apply_permutation(loop.sigma, w), tuple(signs)


def path_sign(loop, w):
    """Sign of the loop's path at w (the permutation contributes nothing)."""
    return traverse(loop, w)[1]


def path_presentation_matrix(loop, eps):
    """Presentation matrix P_sigma E_{k_{h-1}, eps_{h-1}} ... E_{k_0, eps_0}.

    Each factor is built from the exchange matrix at its own vertex.
    """
    eps = tuple(eps)
    if len(eps) != loop.h:
        raise ValueError(f"sign length {len(eps)} != word length {loop.h}")
    if not is_strict(eps):
        raise ValueError(f"sign vector {sign_string(eps)} is not strict")
    m = identity(loop.n)
    for e in e_factors(loop, eps):
        m = matmul(e, m)
    return matmul(permutation_matrix(loop.sigma), m)


def partial_products(loop, eps):
    """E_{gamma<i}: the products of the first i factors, i = 0..h."""
    m = identity(loop.n)
    out = [m]
    for e in e_factors(loop, eps):
        m = matmul(e, m)
        out.append(m)
    return out


def apply_loop_trop(loop, w, n):
    """Orbit of w under n traversals.

    Returns
    -------
    (list, list)
        The n + 1 points and the n per-traversal sign vectors.
    """
    pts = [trop_point(w)]
    signs = []
    for _ in range(n):
        p, s = traverse(loop, pts[-1])
        pts.append(p)
        signs.append(s)
    return pts, signs


def basepoints(n):
    """The points l+ = (1,...,1) and l- = (-1,...,-1)."""
    if n < 1:
        raise ValueError("rank must be positive")
    return (Fraction(1),) * n, (Fraction(-1),) * n
