"""Exact cluster A-variables as Laurent polynomials, and degree bounds."""

from __future__ import annotations

from dataclasses import dataclass

from ._linalg import max_abs, pos
from ._poly import LPoly, NonExactDivision, TermBudgetExceeded
from .seed import _as_exchange, expand_loop_power, mutate_exchange_matrix


class LaurentFailure(ArithmeticError):
    """A cluster variable failed to be a Laurent polynomial."""


@dataclass(frozen=True)
class LaurentExpr:
    """Reduced fraction numerator / monomial.

    The numerator is a polynomial not divisible by any variable occurring
    in the denominator; denominator exponents are nonnegative.
    """

    numerator: LPoly
    denominator: tuple

    @classmethod
    def from_lpoly(cls, p):
        mins = p.min_exponents()
        den = tuple(max(0, -m) for m in mins)
        return cls(p.shift(den), den)

    def to_lpoly(self):
        return self.numerator.shift([-d for d in self.denominator])

    def __eq__(self, other):
        return (isinstance(other, LaurentExpr) and self.denominator == other.denominator
                and self.numerator == other.numerator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def format(self, names=None):
        n = self.numerator.n
        names = names or [f"A_{j + 1}" for j in range(n)]
        num = self.numerator.format(names)
        den = "*".join(names[j] if d == 1 else f"{names[j]}^{d}"
                       for j, d in enumerate(self.denominator) if d)
        if not den:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def __repr__(self):
        return self.format()


def initial_variables(n, budget=None):
    return [LaurentExpr.from_lpoly(LPoly.var(n, j, budget)) for j in range(n)]


def cluster_a_mutate(b, k, variables):
    """A'_k = A_k^{-1} (prod A_j^{[b_kj]_+} + prod A_j^{[-b_kj]_+}).

    The division is an exact Laurent-polynomial division; a remainder
    raises :class:`LaurentFailure`.
    """
    b = _as_exchange(b)
    ps = [v.to_lpoly() for v in variables]
    n = b.n
    budget = ps[0].budget
    plus = LPoly.const(ps[0].n, 1, budget)
    minus = LPoly.const(ps[0].n, 1, budget)
    for j in range(n):
        if b.b[k][j] > 0:
            plus = plus * ps[j] ** b.b[k][j]
        elif b.b[k][j] < 0:
            minus = minus * ps[j] ** (-b.b[k][j])
    try:
        new = (plus + minus).divexact(ps[k])
    except NonExactDivision as exc:
        raise LaurentFailure(f"mutation at {k + 1} is not Laurent: {exc}") from None
    out = list(variables)
    out[k] = LaurentExpr.from_lpoly(new)
    return out


def degree_reduced(e):
    """max(total degree of the numerator, degree of the denominator)."""
    return max(e.numerator.total_degree(), sum(e.denominator))


def a_variables_along_word(b0, word, budget=None):
    """Cluster variables after each prefix of the word.

    Returns
    -------
    (list, list)
        Final variables, and max reduced degree after each step
        (starting with the initial seed).
    """
    b = _as_exchange(b0)
    variables = initial_variables(b.n, budget)
    degrees = [max(degree_reduced(v) for v in variables)]
    for k in word:
        variables = cluster_a_mutate(b, k, variables)
        b = mutate_exchange_matrix(b, k)
        degrees.append(max(degree_reduced(v) for v in variables))
    return variables, degrees


def separation_check(b0, word, budget=None):
    """Compare cluster variables with the g-vector / F-polynomial formula.

    Each A_i equals prod_j A_j^{g_ij} F_i(p*X) with p*X_k = prod_j A_j^{b_kj}
    (initial exchange matrix).
    """
    from .cgf import cgf_along_word, f_polynomials_along_word
    b = _as_exchange(b0)
    variables, _ = a_variables_along_word(b, word, budget)
    fpolys = f_polynomials_along_word(b, word, budget)
    g = cgf_along_word(b, word)[-1].g
    images = [b.b[k] for k in range(b.n)]
    for i in range(b.n):
        rhs = fpolys[i].substitute_monomials(images, b.n).shift(g[i])
        if LaurentExpr.from_lpoly(rhs) != variables[i]:
            return {"match": False, "index": i,
                    "direct": variables[i].format(),
                    "separation": LaurentExpr.from_lpoly(rhs).format()}
    return {"match": True}


def x_degree_lower_bound(loop, n):
    """Largest row 1-norm of C^(n): a lower-bound proxy for X-side degrees."""
    from .cgf import cgf_along_loop
    c = cgf_along_loop(loop, n)[-1].c
    return max(sum(abs(x) for x in row) for row in c)


def loop_a_degrees(loop, n, budget=None):
    """max_i deg A_i^(m) at traversal boundaries m = 0..n."""
    loop.require_valid()
    big = expand_loop_power(loop, n) if n else None
    b = loop.b0
    variables = initial_variables(loop.n, budget)
    degs = [max(degree_reduced(v) for v in variables)]
    if not n:
        return degs
    for step, k in enumerate(big.word, 1):
        variables = cluster_a_mutate(b, k, variables)
        b = mutate_exchange_matrix(b, k)
        if step % loop.h == 0:
            degs.append(max(degree_reduced(v) for v in variables))
    return degs


def degree_bounds(loop, n):
    """Lower and upper degree bounds from G-bar, G and F at traversal n.

    The lower bound is half the max-norm of G-bar^(n); the upper bound is
    K'(|G^(n)|_max + |F^(n)|_max) with K' = K N max|b_ij| and K = N.
    """
    from .cgf import cgf_along_loop
    s = cgf_along_loop(loop, n)[-1]
    nn = loop.n
    k_prime = nn * nn * max_abs(loop.b0.b)
    return max_abs(s.g_bar) / 2, k_prime * (max_abs(s.g) + max_abs(s.f))


__all__ = ["LaurentExpr", "LaurentFailure", "TermBudgetExceeded", "a_variables_along_word",
           "cluster_a_mutate", "degree_bounds", "degree_reduced", "initial_variables",
           "loop_a_degrees", "separation_check", "x_degree_lower_bound"]
