"""Seeded generators of random test objects.

Every generator takes a :class:`random.Random` so runs are reproducible
from a single seed.
"""

from __future__ import annotations

import random

from .blanchfield import BlanchfieldMorphism, BlanchfieldPresentation
from .forms import BlanchfieldForm, SeifertForm, lambda_of, make_seifert_form
from .laurent import LaurentMatrix
from .linalg import Matrix, block_diag, determinant, inverse
from .seifert import SeifertModule, direct_sum
from .rings import ZZ


def make_rng(seed) -> random.Random:
    return random.Random(seed)


def random_matrix(rng, rows, cols, lo=-2, hi=2) -> Matrix:
    return Matrix(ZZ, rows, cols, [rng.randint(lo, hi) for _ in range(rows * cols)])


def random_module(rng, max_rank=4, lo=-2, hi=2) -> SeifertModule:
    n = rng.randint(0, max_rank)
    return SeifertModule(random_matrix(rng, n, n, lo, hi))


def random_unimodular(rng, n, steps=None) -> Matrix:
    """A product of elementary matrices and sign changes."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return Matrix.zeros(0, 0, ZZ)
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            if rng.random() < 0.3:
                m[i] = [-x for x in m[i]]
            continue
        c = rng.choice((-2, -1, 1, 2))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return Matrix.from_rows(m, ZZ)


def random_presentation(rng, max_rank=3, max_degree=2, lo=-2, hi=2) -> BlanchfieldPresentation:
    """``d = sum_j d_j z^j`` whose coefficients sum to a unimodular matrix."""
    n = rng.randint(1, max_rank)
    deg = rng.randint(0, max_degree)
    coeffs = {j: random_matrix(rng, n, n, lo, hi) for j in range(1, deg + 1)}
    target = random_unimodular(rng, n)
    d0 = target
    for m in coeffs.values():
        d0 = d0 - m
    coeffs[0] = d0
    return BlanchfieldPresentation(LaurentMatrix.from_coefficients(coeffs))


def random_invertible_morphism(rng, max_rank=4, max_power=2):
    """``(u T^a, k)`` from a random module to its conjugate by ``u``.

    Returns the morphism together with the expected certificate exponent
    ``a``.
    """
    src = random_module(rng, max_rank)
    n = src.rank
    u = random_unimodular(rng, n)
    tgt = SeifertModule(u @ src.e @ inverse(u))
    a = rng.randint(0, max_power)
    g = u @ src.t_matrix() ** a
    k = rng.randint(0, max_power)
    return BlanchfieldMorphism(src, tgt, g, k), a


def random_nonsingular_form(rng, eta=1, max_rank=4, lo=-2, hi=2, max_tries=10000) -> SeifertForm:
    """Draw ``theta`` until ``det(theta - eta theta*) = +-1``.

    ``theta - eta theta*`` has even diagonal (zero for ``eta = +1``), so its
    determinant is even in odd rank; only even ranks are drawn.
    """
    ranks = [r for r in range(0, max_rank + 1) if r % 2 == 0]
    n = rng.choice(ranks)
    for _ in range(max_tries):
        theta = random_matrix(rng, n, n, lo, hi)
        if determinant(lambda_of(theta, eta)) in (1, -1):
            return make_seifert_form(theta, eta)
    raise RuntimeError("no nonsingular form found")


def random_pad(rng, max_rank=2) -> SeifertModule:
    """A near-projection: strictly upper triangular ``N`` or ``1 + N``."""
    n = rng.randint(1, max_rank)
    rows = [[rng.randint(-2, 2) if j > i else 0 for j in range(n)] for i in range(n)]
    if n >= 2 and all(rows[i][i + 1] == 0 for i in range(n - 1)):
        rows[0][1] = 1
    nil = Matrix.from_rows(rows, ZZ)
    if rng.random() < 0.5:
        return SeifertModule(nil)
    return SeifertModule(Matrix.identity(n, ZZ) + nil)


def pad_form(f: SeifertForm, pad: SeifertModule) -> BlanchfieldForm:
    """The covering form of ``f`` carried on ``(P, e) + pad`` with zero pairing
    on the pad.  Its ``theta - eta theta*`` is singular."""
    module = direct_sum(f.module, pad)
    g = block_diag(f.theta, Matrix.zeros(pad.rank, pad.rank, ZZ), ring=f.ring)
    return BlanchfieldForm(module, g, 1, f.eta)
