"""Shared generators and brute-force oracles for the property suites.

Everything here is deliberately naive: box searches, elementary-operation
products, exhaustive loops.  The point is independence from the library's own
algorithms, so agreement actually means something.
"""

from __future__ import annotations

import itertools
import os
import random

from cuspcheck.intlinalg import det_int, matmul, solve_int, transpose

DEFAULT_SEED = 20260815


def make_rng() -> random.Random:
    return random.Random(int(os.environ.get("CUSPCHECK_SEED", DEFAULT_SEED)))


def random_symmetric(rng: random.Random, n: int, lo: int = -4, hi: int = 4):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return a


def random_unimodular(rng: random.Random, n: int, steps: int = 12):
    """Product of elementary row operations; determinant is +/-1 by construction."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            k = rng.randint(-2, 2)
            for c in range(n):
                u[i][c] += k * u[j][c]
        elif op == 1 and i != j:
            u[i], u[j] = u[j], u[i]
        elif op == 2:
            u[i] = [-x for x in u[i]]
    assert det_int(u) in (1, -1)
    return u


def random_nonsingular(rng: random.Random, n: int, lo: int = -3, hi: int = 3):
    while True:
        b = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if det_int(b) != 0:
            return b


def negative_definite_from_factor(b):
    """-B^T B: negative definite whenever B is nonsingular."""
    bt = transpose(b)
    prod = matmul(bt, b)
    return [[-x for x in row] for row in prod]


def factored_square_vectors(b, s: int):
    """All integer v with v^T (-B^T B) v = s, via the substitution w = B v.

    |w|^2 must equal -s, which confines w to an explicit box; v is recovered
    by exact linear solving.  Independent of any lattice-reduction machinery.
    """
    n = len(b)
    target = -s
    bound = int(target**0.5) + 1
    out = []
    for w in itertools.product(range(-bound, bound + 1), repeat=n):
        if sum(x * x for x in w) != target:
            continue
        v = solve_int(b, list(w))
        if v is not None:
            out.append(tuple(v))
    return sorted(out)


def box_square_vectors(gram, s: int, box: int):
    """Every v in the box with v^T gram v = s.  Only valid if the box is

    large enough to contain all solutions, which the caller must argue."""
    n = len(gram)
    out = []
    for v in itertools.product(range(-box, box + 1), repeat=n):
        q = sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))
        if q == s:
            out.append(tuple(v))
    return sorted(out)


def congruence_transform(gram, u):
    """U^T G U as plain lists."""
    return matmul(transpose(u), matmul(gram, u))
