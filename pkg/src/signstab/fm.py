"""Fordy-Marsh period-one quivers built from a palindromic vector.

The vector a = (a_1, ..., a_{N-1}) is placed in the first row of B. With
this orientation the loop (word (1), sigma: i -> i-1) stabilizes with
sign -eps when eps a_1 >= 2 and eps a_i >= 0, and the stable
characteristic polynomial is nu^N - sum eps a_i nu^{N-i} + 1.
"""

from __future__ import annotations

import math

from ._linalg import matpow, pos
from .polyhedra import Cone, maps_into, point_in
from .seed import MutationLoop, SeedError, expand_loop_power
from .spectral import char_poly_exact, spectral_radius
from .stability import (SIGN_STABLE, StabilityReport, _attach_perron,
                        _fill_stable, check)
from .tropical import path_presentation_matrix


def _check_palindromic(a):
    a = tuple(int(x) for x in a)
    if not a:
        raise SeedError("vector a must be nonempty")
    if a != a[::-1]:
        raise SeedError(f"vector {a} is not palindromic")
    return a


def fm_matrix(a):
    """Exchange matrix with first row (0, a_1, ..., a_{N-1})."""
    a = _check_palindromic(a)
    n = len(a) + 1
    b = [[0] * n for _ in range(n)]
    for j in range(n - 1):
        b[0][j + 1] = a[j]
        b[j + 1][0] = -a[j]
    for i in range(n - 1):
        for j in range(n - 1):
            b[i + 1][j + 1] = b[i][j] + a[i] * pos(-a[j]) - a[j] * pos(-a[i])
    return b


def fm_build(a):
    """Length-one loop (word (1), sigma: i -> i-1 mod N) for the vector a."""
    b = fm_matrix(a)
    n = len(b)
    loop = MutationLoop(b, (0,), tuple((i - 1) % n for i in range(n)))
    loop.require_valid()
    return loop


def fm_cone(a, sign):
    """The cone {s x_1 >= 0, s (x_1 + x_i) >= 0, i = 2..N} for sign s."""
    a = _check_palindromic(a)
    n = len(a) + 1
    normals = [tuple(sign * int(j == 0) for j in range(n))]
    for i in range(1, n):
        v = [0] * n
        v[0] = sign
        v[i] = sign
        normals.append(tuple(v))
    return Cone(normals, n)


def fm_invariant_cone(a, sign):
    """Candidate invariant cone for the loop on the half-space s x_1 >= 0.

    Parameters
    ----------
    a : sequence of int
        Palindromic vector.
    sign : {+1, -1}
        The loop's sign s on the cone. The cone is invariant when
        -s a_1 >= 2 and -s a_i >= 0 for i >= 2.

    Returns
    -------
    (Cone, dict)
        The cone, and flags ``invariant`` (the loop maps it into itself)
        and ``power_strict`` (the N-th power maps it into its interior),
        both decided on extreme rays. An escaping ray is reported when
        invariance fails.
    """
    loop = fm_build(a)
    cone = fm_cone(a, sign)
    e = path_presentation_matrix(loop, (sign,))
    inv = maps_into(e, cone, cone, strict=False)
    info = {"invariant": inv,
            "power_strict": inv and maps_into(matpow(e, loop.n), cone, cone, strict=True)}
    if not inv:
        from ._linalg import matvec
        info["escaping_ray"] = next(r for r in cone.rays
                                    if not point_in(cone, matvec(e, r)))
    return cone, info


def closed_form_sign(a):
    """eps in {+1, -1} with eps a_1 >= 2 and eps a_i >= 0, or None."""
    a = _check_palindromic(a)
    for eps in (1, -1):
        if eps * a[0] >= 2 and all(eps * x >= 0 for x in a[1:]):
            return eps
    return None


def closed_form_poly(a, eps):
    a = _check_palindromic(a)
    return [1] + [-eps * x for x in a] + [1]


def fm_stability(a, cross_validate=None, n_max=2, orbit_cap=64):
    """Stability of the Fordy-Marsh loop for a.

    Under the closed-form hypothesis the verdict is sign-stable with
    stable sign -eps and stretch factor the largest root of the closed-form
    polynomial, which must equal the exact char poly of the stable matrix.
    The generic machinery on the N-th power cross-validates when N <= 6
    (default). Outside the hypothesis the generic result is returned.
    """
    loop = fm_build(a)
    n = loop.n
    eps = closed_form_sign(a)
    if cross_validate is None:
        cross_validate = n <= 6
    if eps is None:
        r = check(loop, "auto", n_max=n_max, orbit_cap=orbit_cap)
        r.diagnostics["closed_form"] = False
        return r
    sign = (-eps,)
    poly = closed_form_poly(a, eps)
    report = StabilityReport(SIGN_STABLE, "fordy-marsh")
    _fill_stable(report, loop, sign)
    lam = spectral_radius(poly)
    d = report.diagnostics
    d["closed_form"] = True
    d["closed_form_poly"] = poly
    d["closed_form_lambda"] = lam.value
    d["char_poly_matches"] = report.char_e == poly
    d["lambda_difference"] = abs(lam.value - report.stretch_factor)
    report.stretch_factor = lam.value
    report.entropy_lower_x = math.log(lam.value)
    _attach_perron(report, loop)
    if cross_validate:
        d.update(_cross_validate(a, loop, sign, report.stretch_factor, n_max, orbit_cap))
    return report


def _cross_validate(a, loop, sign, lam, n_max, orbit_cap):
    """Generic checks on the N-th power: auto first, then the heuristic."""
    n = loop.n
    power = expand_loop_power(loop, n)
    g = check(power, "auto", n_max=n_max, orbit_cap=orbit_cap)
    if g.verdict != SIGN_STABLE:
        cone, info = fm_invariant_cone(a, sign[0])
        g = check(power, "heuristic", cand=cone, orbit_cap=orbit_cap)
    out = {"generic_method": g.method, "generic_verdict": g.verdict}
    out["generic_agrees"] = (g.verdict == SIGN_STABLE and g.stable_sign == sign * n
                             and abs(g.stretch_factor - lam ** n) <= 1e-9 * lam ** n)
    return out
