"""Exchange matrices, matrix mutation, signed mutation matrices and loops.

Indices are 0-based throughout the Python API. File formats and the
command line use 1-based indices (see :mod:`signstab.io`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ._linalg import (as_int_matrix, identity, inverse, matmul, pos,
                      transpose)


class SeedError(ValueError):
    """Malformed seed or loop data."""


@dataclass(frozen=True)
class ExchangeMatrix:
    """Skew-symmetric integer matrix B with arbitrary-precision entries.

    Parameters
    ----------
    b : sequence of sequences of int
        Square matrix. Skew-symmetrizable data is rejected.
    """

    b: tuple

    def __post_init__(self):
        try:
            b = as_int_matrix(self.b)
        except ValueError as exc:
            raise SeedError(str(exc)) from None
        n = len(b)
        if n == 0:
            raise SeedError("exchange matrix must have rank >= 1")
        if any(len(r) != n for r in b):
            raise SeedError("exchange matrix must be square")
        for i in range(n):
            for j in range(i, n):
                if b[i][j] != -b[j][i]:
                    raise SeedError(
                        f"not skew-symmetric at ({i + 1},{j + 1}): "
                        f"{b[i][j]} vs {b[j][i]}")
        object.__setattr__(self, "b", b)

    @property
    def n(self):
        return len(self.b)

    def __getitem__(self, ij):
        i, j = ij
        return self.b[i][j]

    def __neg__(self):
        return ExchangeMatrix(tuple(tuple(-x for x in r) for r in self.b))

    def tolist(self):
        return [list(r) for r in self.b]


def _as_exchange(b):
    return b if isinstance(b, ExchangeMatrix) else ExchangeMatrix(b)


def _check_index(k, n):
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < n:
        raise IndexError(f"mutation index {k!r} out of range for rank {n}")


def _check_sign(eps):
    if eps not in (1, -1):
        raise SeedError(f"sign must be +1 or -1, got {eps!r}")


def mutate_exchange_matrix(b, k):
    """Matrix mutation of B at index k.

    Returns
    -------
    ExchangeMatrix
        B' with ``b'_ij = -b_ij`` if k in {i, j}, otherwise
        ``b_ij + [b_ik]_+ [b_kj]_+ - [-b_ik]_+ [-b_kj]_+``.
    """
    b = _as_exchange(b)
    n = b.n
    _check_index(k, n)
    m = b.b
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-m[i][j])
            else:
                row.append(m[i][j] + pos(m[i][k]) * pos(m[k][j])
                           - pos(-m[i][k]) * pos(-m[k][j]))
        out.append(tuple(row))
    return ExchangeMatrix(tuple(out))


@dataclass(frozen=True)
class SignedEMatrices:
    """The pair E_{k,eps}, check-E_{k,eps} attached to a seed."""

    e: tuple
    e_check: tuple
    k: int
    eps: int


def signed_mutation_matrices(b, k, eps):
    """Signed mutation matrices E_{k,eps} and check-E_{k,eps}.

    E is the identity with (k,k) = -1 and column k equal to
    ``[eps b_ik]_+`` off the diagonal. check-E is the identity with
    (k,k) = -1 and row k equal to ``[-eps b_kj]_+`` off the diagonal.
    """
    b = _as_exchange(b)
    n = b.n
    _check_index(k, n)
    _check_sign(eps)
    e = [list(r) for r in identity(n)]
    ec = [list(r) for r in identity(n)]
    e[k][k] = ec[k][k] = -1
    for i in range(n):
        if i != k:
            e[i][k] = pos(eps * b.b[i][k])
            ec[k][i] = pos(-eps * b.b[k][i])
    return SignedEMatrices(tuple(map(tuple, e)), tuple(map(tuple, ec)), k, eps)


def e_matrix(b, k, eps):
    return signed_mutation_matrices(b, k, eps).e


def e_check_matrix(b, k, eps):
    return signed_mutation_matrices(b, k, eps).e_check


def verify_e_identities(b, k, eps):
    """Check the algebraic identities satisfied by E and check-E exactly.

    Returns
    -------
    dict
        Maps identity name to bool.
    """
    b = _as_exchange(b)
    n = b.n
    s = signed_mutation_matrices(b, k, eps)
    bp = mutate_exchange_matrix(b, k)
    sp = signed_mutation_matrices(bp, k, -eps)
    one = identity(n)
    return {
        "e_squared": matmul(s.e, s.e) == one,
        "e_check_squared": matmul(s.e_check, s.e_check) == one,
        "e_inverse_is_mutated_opposite": matmul(s.e, sp.e) == one,
        "e_check_transpose_inverse": matmul(transpose(s.e_check), s.e) == one,
        "b_intertwining": matmul(b.b, s.e_check) == matmul(s.e, bp.b),
    }


def _check_permutation(sigma, n):
    sigma = tuple(sigma)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise SeedError(f"not a permutation of {{0..{n - 1}}}: {sigma!r}")
    return sigma


def permutation_inverse(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s] = i
    return tuple(inv)


def permutation_compose(s, t):
    """Return s o t (apply t first)."""
    return tuple(s[t[i]] for i in range(len(t)))


def permutation_power(sigma, m):
    n = len(sigma)
    if m < 0:
        sigma, m = permutation_inverse(sigma), -m
    out = tuple(range(n))
    for _ in range(m):
        out = permutation_compose(sigma, out)
    return out


def permutation_matrix(sigma):
    """P_sigma with entries delta_{i, sigma(j)}, so P e_j = e_{sigma(j)}."""
    n = len(sigma)
    return tuple(tuple(int(i == sigma[j]) for j in range(n)) for i in range(n))


def permute_matrix(b, sigma):
    """Relabel B by sigma: (sigma.B)_{sigma(i) sigma(j)} = B_ij."""
    b = _as_exchange(b)
    sigma = _check_permutation(sigma, b.n)
    out = [[0] * b.n for _ in range(b.n)]
    for i in range(b.n):
        for j in range(b.n):
            out[sigma[i]][sigma[j]] = b.b[i][j]
    return ExchangeMatrix(tuple(map(tuple, out)))


@dataclass(frozen=True)
class MutationLoop:
    """Mutation word plus permutation based at an exchange matrix.

    Parameters
    ----------
    b0 : ExchangeMatrix or matrix
        Exchange matrix at the base vertex.
    word : sequence of int
        Mutation indices (0-based), length at least one.
    sigma : sequence of int, optional
        Image list of the permutation (0-based). Identity by default.
    """

    b0: ExchangeMatrix
    word: tuple
    sigma: tuple = field(default=None)

    def __post_init__(self):
        b0 = _as_exchange(self.b0)
        word = tuple(self.word)
        if not word:
            raise SeedError("mutation word must be nonempty")
        for k in word:
            try:
                _check_index(k, b0.n)
            except IndexError as exc:
                raise SeedError(str(exc)) from None
        sigma = tuple(range(b0.n)) if self.sigma is None else self.sigma
        sigma = _check_permutation(sigma, b0.n)
        object.__setattr__(self, "b0", b0)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "sigma", sigma)

    @property
    def n(self):
        return self.b0.n

    @property
    def h(self):
        return len(self.word)

    @property
    def fully_mutating(self):
        return set(self.word) == set(range(self.n))

    @property
    def horizontal(self):
        return self.sigma == tuple(range(self.n))

    @cached_property
    def vertex_matrices(self):
        """Exchange matrices B^(t_0), ..., B^(t_h) along the word."""
        mats = [self.b0]
        for k in self.word:
            mats.append(mutate_exchange_matrix(mats[-1], k))
        return tuple(mats)

    @cached_property
    def closure(self):
        return validate_loop(self)

    @property
    def is_valid(self):
        return self.closure["valid"]

    def require_valid(self):
        if not self.is_valid:
            r = self.closure
            raise SeedError(
                "loop does not close: entry ({},{}) is {} but B0 has {}".format(
                    r["entry"][0] + 1, r["entry"][1] + 1, r["got"], r["expected"]))
        return self


def validate_loop(loop):
    """Mutate along the word, apply sigma and compare with the base matrix.

    Returns
    -------
    dict
        ``{"valid": True}`` or a mismatch report with the first differing
        entry (0-based), the value found and the value expected.
    """
    end = permute_matrix(loop.vertex_matrices[-1], loop.sigma)
    for i in range(loop.n):
        for j in range(loop.n):
            if end.b[i][j] != loop.b0.b[i][j]:
                return {"valid": False, "entry": (i, j),
                        "got": end.b[i][j], "expected": loop.b0.b[i][j]}
    return {"valid": True}


def expand_loop_power(loop, n):
    """Loop representing the n-th power.

    The word is the concatenation of sigma^{-(m-1)}(word) for m = 1..n and
    the permutation is sigma^n.
    """
    if n < 1:
        raise ValueError("power must be positive")
    inv = permutation_inverse(loop.sigma)
    word = []
    shift = tuple(range(loop.n))
    for _ in range(n):
        word.extend(shift[k] for k in loop.word)
        shift = permutation_compose(inv, shift)
    return MutationLoop(loop.b0, tuple(word), permutation_power(loop.sigma, n))


def e_factors(loop, eps):
    """E_{k_i, eps_i} built at each vertex of the loop's word."""
    return [e_matrix(b, k, e)
            for b, k, e in zip(loop.vertex_matrices, loop.word, eps)]


def e_check_factors(loop, eps):
    return [e_check_matrix(b, k, e)
            for b, k, e in zip(loop.vertex_matrices, loop.word, eps)]


def e_check_of(e):
    """check-E = (E^T)^{-1} for a unimodular integer matrix."""
    return inverse(transpose(e))
