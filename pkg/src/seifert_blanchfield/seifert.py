"""Seifert modules ``(P, e)``: a free module with an endomorphism.

Also holds morphisms between them, duality ``(P, e)* = (P*, 1 - e*)``,
detection of near-projections (``e(1-e)`` nilpotent) and the splitting of a
near-projection into a unipotent and a nilpotent summand.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (NotIntertwining, NotNearProjection, NotSquare, RingMismatch,
                     ShapeMismatch, SourceTargetMismatch, require)
from .linalg import IdempotentSplit, Matrix, block_diag, split_idempotent
from .rings import ZZ, BaseRing


@dataclass(frozen=True)
class SeifertModule:
    e: Matrix

    def __post_init__(self):
        if not self.e.is_square:
            raise NotSquare(f"endomorphism must be square, got {self.e.shape}")

    @classmethod
    def from_rows(cls, rows, ring: BaseRing = ZZ, rank=None):
        if rank is not None and not rows:
            return cls(Matrix.zeros(rank, rank, ring))
        return cls(Matrix.from_rows(rows, ring, cols=None if rows else 0))

    @classmethod
    def zero(cls, ring: BaseRing = ZZ):
        return cls(Matrix.zeros(0, 0, ring))

    @property
    def ring(self):
        return self.e.ring

    @property
    def rank(self):
        return self.e.rows

    def one(self):
        return Matrix.identity(self.rank, self.ring)

    def t_matrix(self):
        """``e(1-e)``, the endomorphism inducing ``t`` on the covering."""
        return self.e @ (self.one() - self.e)

    def __repr__(self):
        return f"SeifertModule(rank={self.rank}, e={self.e.tolist()})"


@dataclass(frozen=True)
class SeifertMorphism:
    source: SeifertModule
    target: SeifertModule
    g: Matrix

    def __repr__(self):
        return f"SeifertMorphism(g={self.g.tolist()})"


def intertwines(src: SeifertModule, tgt: SeifertModule, g: Matrix) -> bool:
    return tgt.e @ g == g @ src.e


def make_morphism(src: SeifertModule, tgt: SeifertModule, g: Matrix) -> SeifertMorphism:
    if src.ring != tgt.ring or g.ring != src.ring:
        raise RingMismatch("morphism data over different rings")
    if g.shape != (tgt.rank, src.rank):
        raise ShapeMismatch(f"g has shape {g.shape}, expected {(tgt.rank, src.rank)}")
    if not intertwines(src, tgt, g):
        raise NotIntertwining("e' g != g e")
    return SeifertMorphism(src, tgt, g)


def identity_morphism(m: SeifertModule) -> SeifertMorphism:
    return SeifertMorphism(m, m, m.one())


def compose_seifert(f2: SeifertMorphism, f1: SeifertMorphism) -> SeifertMorphism:
    if f1.target != f2.source:
        raise SourceTargetMismatch("target of the first map is not the source of the second")
    return SeifertMorphism(f1.source, f2.target, f2.g @ f1.g)


def dual_module(m: SeifertModule) -> SeifertModule:
    return SeifertModule(m.one() - m.e.dual())


def dual_morphism(f: SeifertMorphism) -> SeifertMorphism:
    """``g* : (P'*, 1-e'*) -> (P*, 1-e*)``."""
    return SeifertMorphism(dual_module(f.target), dual_module(f.source), f.g.dual())


def direct_sum(a: SeifertModule, b: SeifertModule) -> SeifertModule:
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    return SeifertModule(block_diag(a.e, b.e, ring=a.ring))


def is_near_projection(m: SeifertModule):
    """Least ``k >= 1`` with ``(e(1-e))^k = 0``, or ``None``.

    Nilpotency of an ``n x n`` matrix shows up by the ``n``-th power, so the
    search stops at ``max(rank, 1)``.
    """
    t = m.t_matrix()
    power = t
    for k in range(1, max(m.rank, 1) + 1):
        if power.is_zero():
            return k
        power = power @ t
    return None


def pi_poly(k):
    """Coefficients of ``pi_k`` with ``x^k + (1-x)^k = 1 + x(1-x) pi_k(x)``."""
    return [(-1) ** j * comb(k - 1, j) - 1 for j in range(1, k)]


def eval_poly(coeffs, m: Matrix) -> Matrix:
    """``sum_i coeffs[i] m^i`` by Horner's rule."""
    acc = Matrix.zeros(m.rows, m.rows, m.ring)
    one = Matrix.identity(m.rows, m.ring)
    for c in reversed(coeffs):
        acc = acc @ m + one.scale(c)
    return acc


@dataclass(frozen=True)
class NearProjectionSplit:
    k: int
    pi_k: Matrix
    projector: Matrix
    plus: SeifertModule
    minus: SeifertModule
    plus_split: IdempotentSplit
    minus_split: IdempotentSplit


def near_projection_projector(m: SeifertModule, k: int):
    """``p = (e^k + (1-e)^k)^-1 e^k`` together with ``pi_k(e)``."""
    e = m.e
    one = m.one()
    pik = eval_poly(pi_poly(k), e)
    lhs = e ** k + (one - e) ** k
    require(lhs == one + m.t_matrix() @ pik, "x^k + (1-x)^k identity failed")
    nil = m.t_matrix() @ pik
    # (1 + N)^-1 = sum_{j<k} (-N)^j because N^k = 0
    inv = Matrix.zeros(m.rank, m.rank, m.ring)
    term = one
    for _ in range(k):
        inv = inv + term
        term = term @ (-nil)
    require(term.is_zero(), "the correction term is not nilpotent")
    require(inv @ lhs == one, "series inverse failed")
    return inv @ e ** k, pik


def split_near_projection(m: SeifertModule) -> NearProjectionSplit:
    """``(P, e) = (P+, e+) + (P-, e-)`` with ``1 - e+`` and ``e-`` nilpotent."""
    k = is_near_projection(m)
    if k is None:
        raise NotNearProjection("e(1-e) is not nilpotent")
    p, pik = near_projection_projector(m, k)
    one = m.one()
    require(p @ p == p, "p is not idempotent")
    require(p @ m.e == m.e @ p, "p does not commute with e")
    sp = split_idempotent(p)
    sm = split_idempotent(one - p)
    plus = SeifertModule(sp.restrict(m.e))
    minus = SeifertModule(sm.restrict(m.e))
    require(plus.rank + minus.rank == m.rank, "ranks do not add up")
    require(((plus.one() - plus.e) ** k).is_zero(), "1 - e+ is not nilpotent of order k")
    require((minus.e ** k).is_zero(), "e- is not nilpotent of order k")
    return NearProjectionSplit(k, pik, p, plus, minus, sp, sm)
