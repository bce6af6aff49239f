"""Small exact linear algebra over Python ints and Fractions.

Matrices are tuples of row tuples. Nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def as_matrix(m):
    """Return `m` as a tuple of row tuples (entries kept as given)."""
    rows = tuple(tuple(r) for r in m)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def as_int_matrix(m):
    rows = as_matrix(m)
    out = []
    for r in rows:
        row = []
        for x in r:
            if isinstance(x, bool) or int(x) != x:
                raise ValueError(f"non-integer entry {x!r}")
            row.append(int(x))
        out.append(tuple(row))
    return tuple(out)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n, m=None):
    m = n if m is None else m
    return tuple((0,) * m for _ in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def matadd(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matneg(a):
    return tuple(tuple(-x for x in r) for r in a)


def matscale(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def matpow(a, n):
    """Integer power by repeated squaring, n >= 0."""
    result = identity(len(a))
    base = a
    while n:
        if n & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        n >>= 1
    return result


def pos(x):
    """Positive part [x]_+."""
    return x if x > 0 else 0


def sgn(x):
    return (x > 0) - (x < 0)


def max_abs(a):
    return max((abs(x) for r in a for x in r), default=0)


def _row_reduce(rows):
    """Return (echelon rows as Fractions, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    rows = [r for r in rows]
    if not rows:
        return 0
    return len(_row_reduce(rows)[1])


def det(a):
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a):
    """Exact inverse. Returns integer entries when the inverse is integral."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = tuple(tuple(r[n:]) for r in aug)
    if all(x.denominator == 1 for r in out for x in r):
        return tuple(tuple(int(x) for x in r) for r in out)
    return out


def nullspace(rows, ncols):
    """Rational basis of {x : rows @ x = 0}, scaled to primitive integer vectors."""
    if not rows:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    ech, pivots = _row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(ech, pivots):
            v[p] = -r[f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def permutation_rows(sigma, a):
    """Rows of P_sigma a: row sigma(i) of the result is row i of a."""
    out = [None] * len(a)
    for i, s in enumerate(sigma):
        out[s] = a[i]
    return tuple(out)
