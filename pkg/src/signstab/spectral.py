"""Exact characteristic polynomials and certified spectral radii."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from ._linalg import as_int_matrix, identity, matadd, matmul, matscale


class RootFindingError(RuntimeError):
    pass


def char_poly_exact(m):
    """Characteristic polynomial det(nu I - m), leading coefficient first.

    Faddeev-LeVerrier in integer arithmetic: every division by k is exact
    for an integer matrix.
    """
    a = as_int_matrix(m)
    n = len(a)
    coeffs = [1]
    mk = None
    one = identity(n)
    for k in range(1, n + 1):
        mk = one if mk is None else matadd(matmul(a, mk), matscale(coeffs[-1], one))
        am = matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        coeffs.append(q)
    return coeffs


def palindromic_sign(p):
    """+1 if p is palindromic, -1 if anti-palindromic, 0 otherwise."""
    r = list(reversed(p))
    if r == list(p):
        return 1
    if r == [-x for x in p]:
        return -1
    return 0


def _trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return p[i:]


def _divmod_poly(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in _trim(list(b))]
    if len(a) < len(b):
        return [Fraction(0)], a
    q = []
    a = list(a)
    while len(a) >= len(b):
        c = a[0] / b[0]
        q.append(c)
        a = [x - c * y for x, y in zip(a, b + [0] * (len(a) - len(b)))][1:]
    return q, _trim(a) if a else [Fraction(0)]


def _gcd_poly(a, b):
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    while any(b):
        _, r = _divmod_poly(a, b)
        a, b = b, r
    return [x / a[0] for x in a]


def squarefree_part(p):
    """p / gcd(p, p'), monic, rational coefficients."""
    p = _trim(list(p))
    if len(p) <= 2:
        return [Fraction(x) / p[0] for x in p]
    d = len(p) - 1
    dp = [c * (d - i) for i, c in enumerate(p[:-1])]
    g = _gcd_poly(p, dp)
    q, _ = _divmod_poly(p, g)
    return [x / q[0] for x in q]


def _horner(p, z):
    v = mpmath.mpc(0)
    dv = mpmath.mpc(0)
    for c in p:
        dv = dv * z + v
        v = v * z + c
    return v, dv


def aberth_roots(p, dps=60, maxiter=2000):
    """All complex roots of p by Aberth-Ehrlich iteration.

    Returns
    -------
    (list of mpc, list of mpf)
        Roots and inclusion radii d*|p(z)/p'(z)|.
    """
    p = _trim(list(p))
    d = len(p) - 1
    if d < 1:
        return [], []
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in p]
        lead = coeffs[0]
        coeffs = [c / lead for c in coeffs]
        radius = 1 + max(abs(c) for c in coeffs[1:])
        zs = [radius * mpmath.exp(mpmath.mpc(0, 2 * mpmath.pi * k / d + 0.4)) for k in range(d)]
        tol = mpmath.mpf(10) ** (-(dps - 15))
        for _ in range(maxiter):
            biggest = mpmath.mpf(0)
            new = list(zs)
            for k in range(d):
                v, dv = _horner(coeffs, zs[k])
                if v == 0:
                    continue
                ratio = v / dv if dv != 0 else mpmath.mpc(1e-3)
                s = sum(1 / (zs[k] - zs[j]) for j in range(d) if j != k)
                step = ratio / (1 - ratio * s)
                new[k] = zs[k] - step
                biggest = max(biggest, abs(step))
            zs = new
            if biggest < tol * max(1, max(abs(z) for z in zs)):
                break
        else:
            raise RootFindingError(f"Aberth iteration did not converge for {p}")
        radii = []
        for z in zs:
            v, dv = _horner(coeffs, z)
            radii.append(d * abs(v / dv) if dv != 0 else mpmath.inf)
        return zs, radii


@dataclass(frozen=True)
class SpectralRadius:
    """Max modulus of the roots, with a certified error bound."""

    value: float
    error: float
    roots: tuple

    def __float__(self):
        return self.value


def spectral_radius(x, tol=1e-12):
    """Spectral radius of a square integer matrix or of a coefficient list.

    Roots of the squarefree part are found by Aberth iteration in 60-digit
    arithmetic; the error bound is the largest inclusion radius.
    """
    if x and isinstance(x[0], (list, tuple)):
        coeffs = char_poly_exact(x)
    else:
        coeffs = list(x)
    if not any(coeffs):
        raise ValueError("zero polynomial")
    sf = squarefree_part(coeffs)
    zs, radii = aberth_roots(sf)
    if not zs:
        return SpectralRadius(0.0, 0.0, ())
    err = max(radii)
    if err > tol:
        raise RootFindingError(f"root error bound {float(err)} exceeds {tol}")
    mods = [abs(z) for z in zs]
    rho = max(mods)
    return SpectralRadius(float(rho), float(err), tuple(complex(z) for z in zs))


def min_modulus(x):
    """Smallest root modulus (so that 1/min is the radius of the inverse)."""
    r = spectral_radius(x)
    return min(abs(z) for z in r.roots)
