"""Entropy bounds, degree-growth slopes and Lyapunov exponents."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._linalg import as_int_matrix, matvec, max_abs
from .stability import StabilityReport


@dataclass
class EntropyEstimate:
    lower_a: float
    lower_x: float
    upper: float
    point_estimate: float = None
    empirical_slopes: dict = field(default_factory=dict)
    sources: list = field(default_factory=list)


def entropy_bounds(report):
    """Entropy interval from the stable data of a sign-stable report.

    The point estimate log(lambda) is set only when the characteristic
    polynomials of E and check-E agree up to sign.
    """
    if not isinstance(report, StabilityReport) or not report.stable:
        raise ValueError("entropy bounds need a sign-stable or two-sided report")
    est = EntropyEstimate(report.entropy_lower_a, report.entropy_lower_x,
                          report.entropy_upper)
    est.sources.append(f"stable data from the {report.method} check")
    same = report.char_e == report.char_e_check or \
        report.char_e == [-x for x in report.char_e_check]
    if report.char_e_minus is not None:
        from .spectral import char_poly_exact
        from ._linalg import inverse, transpose
        cm = char_poly_exact(inverse(transpose(report.e_stable_minus)))
        same = same and (report.char_e_minus == cm or report.char_e_minus == [-x for x in cm])
    if same:
        est.point_estimate = math.log(report.stretch_factor)
        est.sources.append("char polys of E and check-E agree: entropy = log(lambda)")
    return est


def _tail_mean(ratios):
    vals = [r for r in ratios if r is not None]
    if not vals:
        return None
    tail = vals[len(vals) // 2:] if len(vals) > 1 else vals
    return sum(tail) / len(tail)


def degree_growth_slope(loop, n_range, source="C", term_budget=None):
    """One-step log growth of a norm along the loop and its tail mean.

    Parameters
    ----------
    n_range : (int, int)
        Inclusive range (start, stop); ratios are taken for
        n = start..stop-1, or the single ratio at start if start == stop.
    source : {"C", "G", "F", "A"}
        Matrix max-norm of C^(n), G^(n), F^(n), or the max reduced degree
        of the symbolic A-variables.

    Returns
    -------
    (list, float)
        Per-step log ratios (None where the norm vanishes) and the mean
        over the last half.
    """
    start, stop = n_range
    stop = max(stop, start + 1)
    if source == "A":
        from .symbolic import loop_a_degrees
        sizes = loop_a_degrees(loop, stop, term_budget)
    elif source in ("C", "G", "F"):
        from .cgf import cgf_along_loop
        snaps = cgf_along_loop(loop, stop)
        attr = {"C": "c", "G": "g", "F": "f"}[source]
        sizes = [max_abs(getattr(s, attr)) for s in snaps]
    else:
        raise ValueError(f"unknown source {source!r}")
    ratios = []
    for n in range(start, stop):
        a, b = sizes[n], sizes[n + 1]
        ratios.append(math.log(b) - math.log(a) if a and b else None)
    return ratios, _tail_mean(ratios)


def lyapunov_exponent(m, v, n):
    """(1/n) log |m^n v|_inf and the tail-averaged one-step slope.

    Iterates are exact integers (or rationals); only logs are floats.
    """
    m = as_int_matrix(m)
    if not any(v):
        raise ValueError("zero vector")
    logs = [math.log(max(abs(x) for x in v))]
    w = tuple(v)
    for _ in range(n):
        w = matvec(m, w)
        a = max(abs(x) for x in w)
        if a == 0:
            raise ValueError("orbit reached zero; matrix is singular")
        logs.append(math.log(a))
    estimate = logs[-1] / n
    half = n // 2
    slope = (logs[n] - logs[half]) / (n - half) if n > half else estimate
    return estimate, slope


def lyapunov_max_over_basis(m, n):
    """Largest tail slope over the standard basis vectors."""
    size = len(m)
    return max(lyapunov_exponent(m, tuple(int(i == j) for j in range(size)), n)[1]
               for i in range(size))
