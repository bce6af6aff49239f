"""Exact polyhedral cones at the origin and the double description method."""

from __future__ import annotations

import math
from fractions import Fraction

from ._linalg import dot, matvec, nullspace, primitive, rank


def _dd(normals, n):
    """Motzkin double description: return (rays, lineality) of {A x >= 0}.

    Starts from the whole space (lineality = standard basis) and inserts
    one half-space at a time. Adjacency of a (+, -) ray pair is decided by
    the combinatorial test on tight-constraint sets.
    """
    lin = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays = []          # list of (vector, tight_mask)
    for idx, a in enumerate(normals):
        bit = 1 << idx
        li = next((l for l in lin if dot(a, l) != 0), None)
        if li is not None:
            s = dot(a, li)
            if s < 0:
                li, s = tuple(-x for x in li), -s
            new_lin = []
            for l in lin:
                if l is li or l == tuple(-x for x in li):
                    continue
                t = dot(a, l)
                new_lin.append(primitive([s * x - t * y for x, y in zip(l, li)]) if t else l)
            new_rays = []
            for r, mask in rays:
                t = dot(a, r)
                nr = primitive([s * x - t * y for x, y in zip(r, li)]) if t else r
                new_rays.append((nr, mask | bit))
            # li is tight on all previous constraints, strictly positive on a
            new_rays.append((li, bit - 1))
            lin = new_lin
            rays = new_rays
            continue
        plus, zero, minus = [], [], []
        for pos_, (r, mask) in enumerate(rays):
            t = dot(a, r)
            if t > 0:
                plus.append((pos_, r, mask, t))
            elif t < 0:
                minus.append((pos_, r, mask, t))
            else:
                zero.append((r, mask | bit))
        new = [(r, m) for _, r, m, _ in plus] + zero
        masks = [m for _, m in rays]
        for ip, rp, mp, tp in plus:
            for iq, rn, mn, tn in minus:
                common = mp & mn
                if any((common & m) == common for j, m in enumerate(masks)
                       if j != ip and j != iq):
                    continue
                v = primitive([tp * x - tn * y for x, y in zip(rn, rp)])
                new.append((v, common | bit))
        rays = new
    return [r for r, _ in rays], lin


def _canonical_lineality(lin, n):
    if not lin:
        return ()
    # integer row-echelon basis of the span, deterministic
    from ._linalg import _row_reduce
    ech, _ = _row_reduce(lin)
    return tuple(sorted(primitive(r) for r in ech))


class Cone:
    """Polyhedral cone {x : <n_r, x> >= 0 for all r}.

    The V-representation (extreme rays and a lineality basis) is computed
    exactly on construction. Rays are primitive integer vectors, sorted.
    """

    def __init__(self, normals, n=None):
        normals = tuple(primitive(v) if any(v) else tuple(int(x) for x in v)
                        for v in normals)
        if n is None:
            if not normals:
                raise ValueError("ambient dimension needed for an empty H-representation")
            n = len(normals[0])
        if any(len(v) != n for v in normals):
            raise ValueError("normals of mixed dimension")
        self.n = n
        self.normals = normals
        rays, lin = _dd([v for v in normals if any(v)], n)
        self.lineality = _canonical_lineality(lin, n)
        uniq = sorted(set(tuple(r) for r in rays if any(r)))
        self.rays = tuple(uniq)

    @classmethod
    def from_json(cls, d):
        return cls([tuple(int(x) for x in v) for v in d["normals"]], d.get("n"))

    def to_json(self):
        return {"normals": [list(v) for v in self.normals],
                "rays": [list(r) for r in self.rays],
                "lineality": [list(l) for l in self.lineality]}

    def __repr__(self):
        return f"Cone(n={self.n}, normals={len(self.normals)}, rays={len(self.rays)}, lineality={len(self.lineality)})"

    def values(self, w):
        return [dot(v, w) for v in self.normals]


def extreme_rays(cone):
    return cone.rays, cone.lineality


def cone_dim(cone):
    return rank(list(cone.rays) + list(cone.lineality))


def is_full_dimensional(cone):
    return cone_dim(cone) == cone.n


def is_strictly_convex(cone):
    return not cone.lineality


def positive_cone(n):
    return Cone([tuple(int(i == j) for j in range(n)) for i in range(n)])


def negative_cone(n):
    return Cone([tuple(-int(i == j) for j in range(n)) for i in range(n)])


def point_in(cone, w, strict=False):
    if len(w) != cone.n:
        raise ValueError("dimension mismatch")
    vals = cone.values([Fraction(x) for x in w])
    return all(v > 0 for v in vals) if strict else all(v >= 0 for v in vals)


def contains(outer, inner):
    """True iff inner is a subset of outer."""
    if outer.n != inner.n:
        raise ValueError("dimension mismatch")
    gens = list(inner.rays) + list(inner.lineality) + [tuple(-x for x in l) for l in inner.lineality]
    return all(point_in(outer, g) for g in gens)


def _in_lineality(cone, v):
    return all(dot(a, v) == 0 for a in cone.normals)


def maps_into(m, src, dst, strict=False):
    """True iff m(src) is contained in dst (in its interior when strict).

    With ``strict`` every extreme ray must land strictly inside and the
    lineality generators must land in the lineality space of dst.
    """
    if len(m) != src.n or src.n != dst.n:
        raise ValueError("dimension mismatch")
    for r in src.rays:
        if not point_in(dst, matvec(m, r), strict):
            return False
    for l in src.lineality:
        img = matvec(m, l)
        if strict:
            if not _in_lineality(dst, img):
                return False
        elif not (point_in(dst, img) and point_in(dst, [-x for x in img])):
            return False
    return True


def interior_point(cone):
    """A rational point in the relative interior: sum of rays."""
    if not cone.rays:
        return (Fraction(0),) * cone.n
    return tuple(Fraction(sum(r[j] for r in cone.rays)) for j in range(cone.n))


def sign_cone_normals(loop, eps):
    """Normals eps_i c_i of the sign cone, c_i = row k_i of E_{gamma<i}."""
    from .seed import expand_loop_power
    from .tropical import is_strict, partial_products
    eps = tuple(eps)
    if not is_strict(eps):
        raise ValueError("sign vector must be strict")
    if len(eps) % loop.h:
        raise ValueError("sign length must be a multiple of the word length")
    lp = expand_loop_power(loop, len(eps) // loop.h) if len(eps) != loop.h else loop
    prods = partial_products(lp, eps)
    return [tuple(e * x for x in prods[i][k])
            for i, (k, e) in enumerate(zip(lp.word, eps))]


def sign_cone(loop, eps):
    """Closure of the set of points whose path sign is eps."""
    return Cone(sign_cone_normals(loop, eps), loop.n)


def sign_cone_decomposition(loop, n=1, full_only=True):
    """Sign cones of the n-th power, enumerated through a prefix tree.

    Prefixes whose cone has empty interior are pruned. Returns a list of
    (sign, Cone) in lexicographic sign order ('+' before '-').
    """
    from .seed import e_matrix, expand_loop_power
    from ._linalg import identity, matmul
    lp = expand_loop_power(loop, n)
    mats = lp.vertex_matrices
    out = []

    def rec(i, prefix, normals, prod):
        if i == lp.h:
            out.append((tuple(prefix), Cone(normals, lp.n)))
            return
        k = lp.word[i]
        for e in (1, -1):
            nv = tuple(e * x for x in prod[k])
            cone = Cone(normals + [nv], lp.n)
            if full_only and not is_full_dimensional(cone):
                continue
            rec(i + 1, prefix + [e], normals + [nv], matmul(e_matrix(mats[i], k, e), prod))

    rec(0, [], [], identity(lp.n))
    return out


def stereographic_arcs(cone, samples=16):
    """Boundary arcs of a 3-dimensional cone on the unit sphere, projected.

    Projection is from the pole (1,1,1)/sqrt(3) onto the plane through the
    origin orthogonal to it, in the orthonormal basis
    u = (1,-1,0)/sqrt(2), v = (1,1,-2)/sqrt(6).

    Returns
    -------
    list of (arc_index, t, u, v)
    """
    if cone.n != 3:
        raise ValueError("stereographic export is only defined for N = 3")
    rays = list(cone.rays)
    pole = [1 / math.sqrt(3)] * 3
    bu = [1 / math.sqrt(2), -1 / math.sqrt(2), 0.0]
    bv = [1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6)]
    edges = []
    for i in range(len(rays)):
        for j in range(i + 1, len(rays)):
            common = [a for a in cone.normals if dot(a, rays[i]) == 0 and dot(a, rays[j]) == 0]
            if common and rank(common) == 1:
                edges.append((rays[i], rays[j]))
    rows = []
    for idx, (p, q) in enumerate(edges):
        pn = [x / math.sqrt(sum(y * y for y in p)) for x in p]
        qn = [x / math.sqrt(sum(y * y for y in q)) for x in q]
        for s in range(samples + 1):
            t = s / samples
            x = [(1 - t) * a + t * b for a, b in zip(pn, qn)]
            norm = math.sqrt(sum(y * y for y in x))
            x = [y / norm for y in x]
            c = sum(a * b for a, b in zip(x, pole))
            if c > 1 - 1e-12:
                continue
            y = [(a - c * b) / (1 - c) for a, b in zip(x, pole)]
            rows.append((idx, t, sum(a * b for a, b in zip(y, bu)),
                         sum(a * b for a, b in zip(y, bv))))
    return rows
