"""Sign-stability decision procedures, stable matrices and Perron data."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, asdict
from fractions import Fraction

import mpmath
import numpy as np

from ._linalg import identity, inverse, matmul, matpow, transpose
from .polyhedra import (Cone, contains, interior_point, is_full_dimensional,
                        maps_into, point_in, sign_cone, sign_cone_decomposition,
                        sign_cone_normals)
from .seed import expand_loop_power
from .spectral import (char_poly_exact, palindromic_sign, spectral_radius)
from .tropical import (basepoints, is_strict, path_presentation_matrix,
                       path_sign, sign_string, traverse, trop_point)

SIGN_STABLE = "sign_stable_on_Omega_can"
TWO_SIDED = "two_sided_sign_stable"
INCONCLUSIVE = "inconclusive"
NOT_STABLE = "not_sign_stable"


@dataclass
class StabilityReport:
    """Outcome of a stability check together with the stable data.

    For two-sided verdicts the ``*_minus`` fields hold the data of the
    negative side; otherwise they are None.
    """

    verdict: str
    method: str
    stable_sign: tuple = None
    n0: object = None
    e_stable: tuple = None
    e_check_stable: tuple = None
    char_e: list = None
    char_e_check: list = None
    palindromic: bool = None
    stretch_factor: float = None
    stretch_error: float = None
    R_phi: float = None
    entropy_lower_a: float = None
    entropy_lower_x: float = None
    entropy_upper: float = None
    perron_vector: list = None
    perron_in_stable_cone: bool = None
    stable_sign_minus: tuple = None
    e_stable_minus: tuple = None
    e_check_stable_minus: tuple = None
    char_e_minus: list = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def stable(self):
        return self.verdict in (SIGN_STABLE, TWO_SIDED)


# ---------------------------------------------------------------- orbits

@dataclass
class OrbitResult:
    """Sign behaviour of one tropical orbit.

    ``certified`` means the conclusion holds for all future traversals:
    either the projective orbit is periodic, or the point entered an
    invariant cone inside the sign cone of the stable sign.
    """

    stabilized: bool
    sign: tuple
    n0: int
    certified: bool = False
    obstruction: str = None
    period: int = None
    signs: list = field(default_factory=list)
    points: list = field(default_factory=list)


def _projective_key(w):
    s = sum(abs(x) for x in w)
    return tuple(x / s for x in w)


def _certify_tail(loop, sign, point, depth=4):
    """Look for an invariant cone K inside the sign cone containing point.

    K is the sign cone of the d-th power for the repeated sign. If the
    stable matrix maps K into itself and the point is in its interior, the
    sign is constant along the rest of the orbit.
    """
    e = path_presentation_matrix(loop, sign)
    for d in range(1, depth + 1):
        cone = Cone(sign_cone_normals(loop, tuple(sign) * d), loop.n)
        if not point_in(cone, point, strict=True):
            return None
        if maps_into(e, cone, cone, strict=False):
            return d
    return None


def orbit_sign_stabilization(loop, w, cap=64, certify=True):
    """Iterate the loop on w and report eventual sign stabilization.

    The stabilization index n0 is the first traversal from which the sign
    is constant and strict up to the cap; a run counts as stabilized when
    that tail covers at least half the traversals. Exact projective
    periodicity decides the question outright.
    """
    w = trop_point(w)
    if not any(w):
        raise ValueError("orbit of the zero point")
    points = [w]
    signs = []
    seen = {_projective_key(w): 0}
    for i in range(cap):
        p, s = traverse(loop, points[-1])
        points.append(p)
        signs.append(s)
        key = _projective_key(p)
        if key in seen:
            start = seen[key]
            cyc = signs[start:]
            period = len(cyc)
            if len(set(cyc)) == 1 and is_strict(cyc[0]):
                n0 = start
                while n0 > 0 and signs[n0 - 1] == cyc[0]:
                    n0 -= 1
                return OrbitResult(True, cyc[0], n0, True, None, period, signs, points)
            reason = ("periodic orbit with non-strict sign" if len(set(cyc)) == 1
                      else "periodic orbit with non-constant sign")
            return OrbitResult(False, cyc[-1], None, True, reason, period, signs, points)
        seen[key] = i + 1
    last = signs[-1]
    n0 = len(signs) - 1
    while n0 > 0 and signs[n0 - 1] == last:
        n0 -= 1
    stabilized = is_strict(last) and n0 <= cap // 2
    certified = False
    if stabilized and certify:
        certified = _certify_tail(loop, last, points[n0]) is not None
    return OrbitResult(stabilized, last, n0 if stabilized else None, certified,
                       None, None, signs, points)


# ---------------------------------------------------------- stable data

@dataclass
class StableData:
    e: tuple
    e_check: tuple
    char_e: list
    char_e_check: list
    palindromic: bool
    palindromic_sign: int
    stretch_factor: float
    stretch_error: float
    rho_check: float
    R_phi: float


def stable_data(loop, sign):
    """Stable presentation matrices, exact char polys and spectral data."""
    e = path_presentation_matrix(loop, sign)
    ec = inverse(transpose(e))
    pe = char_poly_exact(e)
    pc = char_poly_exact(ec)
    r = spectral_radius(pe)
    rc = spectral_radius(pc)
    same = pe == pc or pe == [-x for x in pc]
    ps = palindromic_sign(pe)
    return StableData(e, ec, pe, pc, same and ps != 0, ps, r.value, r.error,
                      rc.value, max(r.value, rc.value))


def _fill_stable(report, loop, sign):
    sd = stable_data(loop, sign)
    report.stable_sign = tuple(sign)
    report.e_stable = sd.e
    report.e_check_stable = sd.e_check
    report.char_e = sd.char_e
    report.char_e_check = sd.char_e_check
    report.palindromic = sd.palindromic
    report.stretch_factor = sd.stretch_factor
    report.stretch_error = sd.stretch_error
    report.R_phi = sd.R_phi
    report.entropy_lower_x = math.log(sd.stretch_factor)
    report.entropy_lower_a = math.log(sd.rho_check)
    report.entropy_upper = math.log(sd.R_phi)
    report.diagnostics["palindromic_sign"] = sd.palindromic_sign
    return sd


def _attach_perron(report, loop):
    try:
        lam, vec, ok = perron_check(loop, report)
        report.perron_vector = [float(x) for x in vec]
        report.perron_in_stable_cone = ok
    except PerronError as exc:
        report.diagnostics["perron"] = str(exc)


# ------------------------------------------------------------- workers

def _workers(workers=None):
    if workers is not None:
        return max(1, int(workers))
    try:
        return max(1, int(os.environ.get("SIGNSTAB_THREADS", "1")))
    except ValueError:
        return 1


def _strict_self_map(args):
    loop, eps, normals = args
    cone = Cone(normals, loop.n)
    e = path_presentation_matrix(loop, eps)
    return maps_into(e, cone, cone, strict=True)


def _basepoint_obstruction(loop, orbit_cap):
    lp, lm = basepoints(loop.n)
    for name, w in (("l+", lp), ("l-", lm)):
        r = orbit_sign_stabilization(loop, w, orbit_cap, certify=False)
        if r.certified and r.obstruction:
            return f"{name}: {r.obstruction} (period {r.period})"
    return None


# ------------------------------------------------------------- methods

def inductive_check(loop, n_max=3, orbit_cap=64, workers=None):
    """Cone decomposition test on powers of the loop.

    For n = 1..n_max the full-dimensional sign cones of the n-th power are
    enumerated; a cone mapped into its own interior, and entered by both
    basepoint orbits, certifies sign stability on Omega^can.
    """
    loop.require_valid()
    report = StabilityReport(INCONCLUSIVE, "inductive")
    lp_, lm_ = basepoints(loop.n)
    nworkers = _workers(workers)
    for n in range(1, n_max + 1):
        big = expand_loop_power(loop, n)
        decomp = sign_cone_decomposition(loop, n)
        args = [(big, eps, cone.normals) for eps, cone in decomp]
        if nworkers > 1 and len(args) > 1:
            from concurrent.futures import ProcessPoolExecutor
            with ProcessPoolExecutor(nworkers) as ex:
                flags = list(ex.map(_strict_self_map, args, chunksize=8))
        else:
            flags = [_strict_self_map(a) for a in args]
        found = [(eps, cone) for (eps, cone), ok in zip(decomp, flags) if ok]
        report.diagnostics[f"cones_n{n}"] = len(decomp)
        if not found:
            continue
        periodic = all(eps == eps[:loop.h] * n for eps, _ in found)
        report.diagnostics["found_signs"] = [sign_string(e) for e, _ in found]
        report.diagnostics["found_signs_periodic"] = periodic
        report.diagnostics["n"] = n
        entries = {}
        for name, w in (("l+", lp_), ("l-", lm_)):
            entries[name] = {}
            p = w
            for step in range(orbit_cap + 1):
                for idx, (eps, cone) in enumerate(found):
                    if idx not in entries[name] and point_in(cone, p, strict=True):
                        entries[name][idx] = step
                p, _ = traverse(loop, p)
        common = sorted(set(entries["l+"]) & set(entries["l-"]))
        if common:
            idx = common[0]
            eps, cone = found[idx]
            report.verdict = SIGN_STABLE
            report.n0 = (entries["l+"][idx], entries["l-"][idx])
            report.diagnostics["cone"] = cone.to_json()
            _fill_stable(report, loop, eps[:loop.h])
            _attach_perron(report, loop)
            return report
        if entries["l+"] and entries["l-"]:
            report.diagnostics["route"] = "two_sided"
        report.diagnostics["orbit_entries"] = {
            k: {sign_string(found[i][0]): s for i, s in v.items()} for k, v in entries.items()}
        break
    obstruction = _basepoint_obstruction(loop, orbit_cap)
    if obstruction:
        report.verdict = NOT_STABLE
        report.diagnostics["obstruction"] = obstruction
    return report


def heuristic_check(loop, cand, orbit_cap=64):
    """Stability from a user-supplied invariant cone.

    Verifies that cand lies in one sign cone, is mapped into itself by the
    corresponding presentation matrix and is entered by both basepoint
    orbits. Whether some power maps cand into its interior is reported as
    a diagnostic.
    """
    loop.require_valid()
    if cand.n != loop.n or not is_full_dimensional(cand):
        raise ValueError("candidate cone must be full-dimensional in the loop's rank")
    report = StabilityReport(INCONCLUSIVE, "heuristic")
    q = interior_point(cand)
    eps = path_sign(loop, q)
    d = report.diagnostics
    d["candidate_sign"] = sign_string(eps)
    if not is_strict(eps) or not contains(sign_cone(loop, eps), cand):
        d["failed"] = "candidate is not inside a single sign cone"
        return report
    e = path_presentation_matrix(loop, eps)
    if not maps_into(e, cand, cand, strict=False):
        d["failed"] = "candidate is not invariant"
        return report
    lp_, lm_ = basepoints(loop.n)
    n0 = []
    for w in (lp_, lm_):
        p = w
        hit = None
        for step in range(orbit_cap + 1):
            if point_in(cand, p, strict=True):
                hit = step
                break
            p, _ = traverse(loop, p)
        if hit is None:
            d["failed"] = "basepoint orbit does not enter the candidate"
            return report
        n0.append(hit)
    strict_at = None
    m = identity(loop.n)
    for k in range(1, orbit_cap + 1):
        m = matmul(e, m)
        if maps_into(m, cand, cand, strict=True):
            strict_at = k
            break
    d["strict_interior"] = strict_at is not None
    d["strict_interior_power"] = strict_at
    report.verdict = SIGN_STABLE
    report.n0 = tuple(n0)
    _fill_stable(report, loop, eps)
    _attach_perron(report, loop)
    return report


def two_sided_check(loop, orbit_cap=64):
    """Opposite stable signs on the positive and negative cones."""
    loop.require_valid()
    report = StabilityReport(INCONCLUSIVE, "two-sided")
    lp_, lm_ = basepoints(loop.n)
    rp = orbit_sign_stabilization(loop, lp_, orbit_cap)
    rm = orbit_sign_stabilization(loop, lm_, orbit_cap)
    d = report.diagnostics
    d["l+"] = {"stabilized": rp.stabilized, "sign": sign_string(rp.sign),
               "n0": rp.n0, "certified": rp.certified}
    d["l-"] = {"stabilized": rm.stabilized, "sign": sign_string(rm.sign),
               "n0": rm.n0, "certified": rm.certified}
    for r in (rp, rm):
        if r.certified and r.obstruction:
            report.verdict = NOT_STABLE
            d["obstruction"] = r.obstruction
            return report
    if not (rp.stabilized and rm.stabilized):
        d["failed"] = "a basepoint orbit did not stabilize"
        return report
    if rp.sign != tuple(-x for x in rm.sign):
        d["failed"] = "stable signs are not opposite"
        if rp.sign == rm.sign:
            d["route"] = "one_sided"
        return report
    sp = stable_data(loop, rp.sign)
    sm = stable_data(loop, rm.sign)
    d["rho_difference"] = abs(sp.stretch_factor - sm.stretch_factor)
    if d["rho_difference"] > 1e-12:
        d["failed"] = "spectral radii differ"
        return report
    report.verdict = TWO_SIDED
    report.n0 = (rp.n0, rm.n0)
    _fill_stable(report, loop, rp.sign)
    report.stable_sign_minus = rm.sign
    report.e_stable_minus = sm.e
    report.e_check_stable_minus = sm.e_check
    report.char_e_minus = sm.char_e
    report.R_phi = max(sp.R_phi, sm.R_phi)
    report.entropy_lower_x = math.log(max(sp.stretch_factor, sm.stretch_factor))
    report.entropy_lower_a = math.log(max(sp.rho_check, sm.rho_check))
    report.entropy_upper = math.log(report.R_phi)
    report.palindromic = sp.palindromic and sm.palindromic
    return report


def check(loop, method="auto", cand=None, n_max=3, orbit_cap=64, workers=None):
    """Run a stability method; 'auto' tries inductive, two-sided, heuristic."""
    if method == "inductive":
        return inductive_check(loop, n_max, orbit_cap, workers)
    if method == "heuristic":
        if cand is None:
            raise ValueError("heuristic method needs a candidate cone")
        return heuristic_check(loop, cand, orbit_cap)
    if method == "two-sided":
        return two_sided_check(loop, orbit_cap)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    tried = {}
    r = inductive_check(loop, n_max, orbit_cap, workers)
    if r.verdict != INCONCLUSIVE:
        return r
    tried["inductive"] = r.diagnostics
    r = two_sided_check(loop, orbit_cap)
    if r.verdict != INCONCLUSIVE:
        r.diagnostics["tried"] = tried
        return r
    tried["two-sided"] = r.diagnostics
    if cand is not None:
        r = heuristic_check(loop, cand, orbit_cap)
        if r.verdict != INCONCLUSIVE:
            r.diagnostics["tried"] = tried
            return r
        tried["heuristic"] = r.diagnostics
    out = StabilityReport(INCONCLUSIVE, "auto")
    out.diagnostics["tried"] = tried
    return out


# -------------------------------------------------------------- Perron

class PerronError(RuntimeError):
    pass


def _dominant_eigenpair(e, lam_hint, iters=2000):
    a = np.array(e, dtype=float)
    n = len(e)
    v = np.ones(n)
    lam = None
    for _ in range(iters):
        w = a @ v
        nw = np.max(np.abs(w))
        if nw == 0 or not np.isfinite(nw):
            break
        w = w / nw
        lam_new = float(w @ (a @ w) / (w @ w))
        if lam is not None and np.max(np.abs(a @ w - lam_new * w)) < 1e-13 * max(1.0, abs(lam_new)):
            return lam_new, w, "power"
        lam, v = lam_new, w
    # shifted inverse iteration in high precision
    with mpmath.workdps(50):
        m = mpmath.matrix(e)
        mu = mpmath.mpf(lam_hint) * (1 + mpmath.mpf(10) ** -20)
        shifted = m - mu * mpmath.eye(n)
        x = mpmath.matrix([1] * n)
        for _ in range(50):
            x = mpmath.lu_solve(shifted, x)
            x = x / mpmath.norm(x, mpmath.inf)
        return float(lam_hint), np.array([float(t) for t in x]), "inverse"


def perron_check(loop, report, depth=8, tol=1e-9, minus=False):
    """Dominant eigenpair of the stable matrix and membership in the stable cone.

    Returns
    -------
    (float, ndarray, bool)
        lambda, the sign-normalised eigenvector (unit max-norm), and whether
        it satisfies the inequalities of the stable sign cone and of the
        depth-`depth` approximation to the stable cone, within `tol`.
    """
    if not report.stable:
        raise PerronError("Perron data requires a sign-stable verdict")
    e = report.e_stable_minus if minus else report.e_stable
    sign = report.stable_sign_minus if minus else report.stable_sign
    lam = spectral_radius(e).value
    lam_num, v, how = _dominant_eigenpair(e, lam)
    if abs(lam_num - lam) > 1e-8 * max(1.0, lam):
        lam_num, v, how = _dominant_eigenpair(e, lam, iters=0)
    # Newton polish on (E - lam) v = 0 with normalisation v_j = 1
    a = np.array(e, dtype=float)
    n = len(e)
    j = int(np.argmax(np.abs(v)))
    v = v / v[j]
    for _ in range(3):
        jac = np.zeros((n + 1, n + 1))
        jac[:n, :n] = a - lam_num * np.eye(n)
        jac[:n, n] = -v
        jac[n, j] = 1.0
        rhs = np.concatenate([-(a @ v - lam_num * v), [0.0]])
        try:
            delta = np.linalg.lstsq(jac, rhs, rcond=None)[0]
        except np.linalg.LinAlgError:
            break
        v = v + delta[:n]
        lam_num = lam_num + delta[n]
    v = v / np.max(np.abs(v))
    resid = float(np.max(np.abs(a @ v - lam_num * v)))
    if resid > 1e-9:
        raise PerronError(f"eigenpair residual {resid:.3e} too large")
    normals = list(sign_cone_normals(loop, sign))
    normals += list(sign_cone_normals(loop, tuple(sign) * depth))

    def worst(vec):
        out = math.inf
        for nv in normals:
            scale = max(abs(x) for x in nv)
            val = sum(mpmath.mpf(x) / scale * float(y) for x, y in zip(nv, vec))
            out = min(out, float(val))
        return out

    wp, wm = worst(v), worst(-v)
    if wm > wp:
        v, wp = -v, wm
    return lam_num, v, wp >= -tol


def stable_recursion_holds(loop, report, n_start, n_stop):
    """Check C^(n+1) = E_phi C^(n) and G-bar^(n+1) = check-E_phi G-bar^(n)."""
    from .cgf import cgf_along_loop
    snaps = cgf_along_loop(loop, n_stop)
    e, ec = report.e_stable, report.e_check_stable
    for n in range(n_start, n_stop):
        if matmul(e, snaps[n].c) != snaps[n + 1].c:
            return False
        if matmul(ec, snaps[n].g_bar) != snaps[n + 1].g_bar:
            return False
    return True
