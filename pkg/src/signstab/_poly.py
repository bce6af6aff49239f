"""Sparse multivariate Laurent polynomials with big-integer coefficients.

Exponent vectors are packed into a single Python int (fixed-width biased
fields, first variable most significant), so monomial multiplication is
integer addition and lex order is integer order.
"""

from __future__ import annotations

import heapq

_W = 24
_BIAS = 1 << (_W - 1)
_MASK = (1 << _W) - 1


class TermBudgetExceeded(RuntimeError):
    """Raised when a polynomial grows beyond the configured term budget."""


class NonExactDivision(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


def _zero_key(n):
    k = 0
    for _ in range(n):
        k = (k << _W) | _BIAS
    return k


def pack(exps):
    k = 0
    for e in exps:
        if not -_BIAS < e < _BIAS:
            raise OverflowError("exponent out of packing range")
        k = (k << _W) | (e + _BIAS)
    return k


def unpack(key, n):
    out = [0] * n
    for j in range(n - 1, -1, -1):
        out[j] = (key & _MASK) - _BIAS
        key >>= _W
    return tuple(out)


class LPoly:
    """Laurent polynomial in `n` variables.

    Parameters
    ----------
    n : int
        Number of variables.
    terms : dict, optional
        Mapping packed exponent key -> nonzero int coefficient.
    budget : int, optional
        Maximum number of terms any product may produce.
    """

    __slots__ = ("n", "terms", "budget")

    def __init__(self, n, terms=None, budget=None):
        self.n = n
        self.terms = {} if terms is None else terms
        self.budget = budget

    # construction
    @classmethod
    def const(cls, n, c=1, budget=None):
        return cls(n, {_zero_key(n): c} if c else {}, budget)

    @classmethod
    def monomial(cls, n, exps, c=1, budget=None):
        return cls(n, {pack(exps): c} if c else {}, budget)

    @classmethod
    def var(cls, n, i, budget=None):
        e = [0] * n
        e[i] = 1
        return cls.monomial(n, e, 1, budget)

    @classmethod
    def from_dict(cls, n, d, budget=None):
        return cls(n, {pack(e): c for e, c in d.items() if c}, budget)

    def to_dict(self):
        return {unpack(k, self.n): c for k, c in self.terms.items()}

    def _new(self, terms, other=None):
        b = self.budget
        if other is not None and other.budget is not None:
            b = other.budget if b is None else min(b, other.budget)
        if b is not None and len(terms) > b:
            raise TermBudgetExceeded(f"{len(terms)} terms exceed budget {b}")
        return LPoly(self.n, terms, b)

    # queries
    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LPoly.const(self.n, other)
        return isinstance(other, LPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def exponents(self):
        return [unpack(k, self.n) for k in self.terms]

    def min_exponents(self):
        ex = self.exponents()
        return tuple(min(e[j] for e in ex) for j in range(self.n)) if ex else (0,) * self.n

    def max_exponents(self):
        ex = self.exponents()
        return tuple(max(e[j] for e in ex) for j in range(self.n)) if ex else (0,) * self.n

    def total_degree(self):
        return max((sum(e) for e in self.exponents()), default=0)

    def is_polynomial(self):
        return all(x >= 0 for x in self.min_exponents())

    def divisible_by_var(self, j):
        return bool(self.terms) and all(e[j] >= 1 for e in self.exponents())

    def is_monomial(self):
        return len(self.terms) == 1

    # arithmetic
    def __add__(self, other):
        if isinstance(other, int):
            other = LPoly.const(self.n, other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return self._new(t, other)

    __radd__ = __add__

    def __neg__(self):
        return LPoly(self.n, {k: -c for k, c in self.terms.items()}, self.budget)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LPoly.const(self.n, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LPoly(self.n, {k: c * other for k, c in self.terms.items()} if other else {},
                         self.budget)
        z = _zero_key(self.n)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        t = {}
        get = t.get
        for kb, cb in b.items():
            off = kb - z
            for ka, ca in a.items():
                k = ka + off
                t[k] = get(k, 0) + ca * cb
        t = {k: c for k, c in t.items() if c}
        return self._new(t, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            if self.is_monomial():
                (k, c), = self.terms.items()
                if c not in (1, -1):
                    raise NonExactDivision("inverse of non-unit monomial")
                ex = unpack(k, self.n)
                return LPoly.monomial(self.n, [x * e for x in ex], c ** (-e), self.budget)
            raise ValueError("negative power of a non-monomial")
        result = LPoly.const(self.n, 1, self.budget)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, exps):
        """Multiply by the monomial with exponent vector `exps`."""
        off = pack(exps) - _zero_key(self.n)
        return LPoly(self.n, {k + off: c for k, c in self.terms.items()}, self.budget)

    def divexact(self, other):
        """Exact quotient self / other; raises NonExactDivision otherwise."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_monomial():
            (k, c), = other.terms.items()
            off = k - _zero_key(self.n)
            t = {}
            for ka, ca in self.terms.items():
                q, r = divmod(ca, c)
                if r:
                    raise NonExactDivision("coefficient not divisible")
                t[ka - off] = q
            return self._new(t, other)
        # normalise both to polynomials; the quotient is then a polynomial
        mo = other.min_exponents()
        ms = self.min_exponents()
        num = self.shift([-x for x in ms])
        den = other.shift([-x for x in mo])
        q = _poly_divexact(num, den)
        return q.shift([a - b for a, b in zip(ms, mo)])

    # substitution
    def substitute_monomials(self, images, m):
        """Replace variable j by the Laurent monomial with exponents images[j].

        Returns a Laurent polynomial in `m` variables.
        """
        z_new = _zero_key(m)
        keys = [pack(im) - z_new for im in images]
        t = {}
        for k, c in self.terms.items():
            e = unpack(k, self.n)
            nk = z_new + sum(ej * kj for ej, kj in zip(e, keys))
            t[nk] = t.get(nk, 0) + c
        return LPoly(m, {k: c for k, c in t.items() if c}, self.budget)

    def evaluate(self, point):
        from fractions import Fraction
        total = Fraction(0)
        for e, c in self.to_dict().items():
            term = Fraction(c)
            for x, k in zip(point, e):
                term *= Fraction(x) ** k
            total += term
        return total

    def format(self, names=None):
        names = names or [f"x_{j + 1}" for j in range(self.n)]
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            e = unpack(k, self.n)
            mon = "*".join(
                names[j] if x == 1 else f"{names[j]}^{x}"
                for j, x in enumerate(e) if x)
            if not mon:
                s = str(abs(c))
            elif abs(c) == 1:
                s = mon
            else:
                s = f"{abs(c)}*{mon}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sg, s in parts[1:]:
            out += sg + s
        return out

    def __repr__(self):
        return f"LPoly({self.format()})"


def _poly_divexact(num, den):
    """Exact division of polynomials (nonnegative exponents) in lex order."""
    n = num.n
    z = _zero_key(n)
    lead_k = max(den.terms)
    lead_c = den.terms[lead_k]
    lead_e = unpack(lead_k, n)
    rest = [(k - z, c) for k, c in den.terms.items() if k != lead_k]
    rem = dict(num.terms)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q = {}
    budget = num.budget if num.budget is not None else den.budget
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        e = unpack(k, n)
        if any(a < b for a, b in zip(e, lead_e)):
            raise NonExactDivision("leading term not divisible")
        qc, r = divmod(c, lead_c)
        if r:
            raise NonExactDivision("coefficient not divisible")
        qk = k - lead_k + z
        q[qk] = qc
        if budget is not None and len(q) > budget:
            raise TermBudgetExceeded(f"quotient exceeds budget {budget}")
        off = qk - z
        for dk, dc in rest:
            nk = dk + off + z
            v = rem.get(nk)
            if v is None:
                rem[nk] = -qc * dc
                heapq.heappush(heap, -nk)
            else:
                v -= qc * dc
                if v:
                    rem[nk] = v
                else:
                    del rem[nk]
    return LPoly(n, q, budget)
