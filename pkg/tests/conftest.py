import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from signstab import MutationLoop

DATA = Path(__file__).parent / "data"

MARKOV_B = [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]


def kronecker_b(l):
    return [[0, -l], [l, 0]]


def markov_loop():
    return MutationLoop(MARKOV_B, (0, 1, 2, 0, 1, 2))


def kronecker_loop(l):
    return MutationLoop(kronecker_b(l), (0, 1))


def a2_loop():
    # pentagon: five mutations return the A2 seed up to the swap
    return MutationLoop([[0, 1], [-1, 0]], (0, 1, 0, 1, 0), (1, 0))


def random_skew(rng, n, weights=((0, 4), (1, 3), (-1, 3), (2, 1), (-2, 1))):
    vals, w = zip(*weights)
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.choices(vals, w)[0]
            b[i][j], b[j][i] = x, -x
    return b


def random_word(rng, n, length):
    # avoid immediate repeats, which just undo a mutation
    word = []
    while len(word) < length:
        k = rng.randrange(n)
        if not word or word[-1] != k:
            word.append(k)
    return tuple(word)


@st.composite
def skew_matrices(draw, max_n=5, max_entry=2, min_n=2):
    n = draw(st.integers(min_n, max_n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = draw(st.integers(-max_entry, max_entry))
            b[i][j], b[j][i] = x, -x
    return b


@st.composite
def seeds_and_words(draw, max_n=5, max_len=10, max_entry=2):
    b = draw(skew_matrices(max_n, max_entry))
    n = len(b)
    word = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=max_len))
    return b, tuple(word)


@pytest.fixture
def rng():
    return random.Random(20261014)


def predicted_terms(b, word):
    """Upper bound on F-polynomial sizes from the F-matrix degrees."""
    from signstab import cgf_along_word
    worst = 1
    for s in cgf_along_word(b, word):
        for row in s.f:
            t = 1
            for d in row:
                t *= d + 1
            worst = max(worst, t)
    return worst


def feasible_instances(rng, count, max_n, max_len, term_cap=2000):
    """Random (B, word) pairs whose F-polynomials stay below term_cap terms."""
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        b = random_skew(rng, n)
        word = random_word(rng, n, rng.randint(1, max_len))
        if predicted_terms(b, word) <= term_cap:
            out.append((b, word))
    return out
