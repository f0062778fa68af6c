"""Blanchfield modules, carried as coverings ``coker(1 - e + z e)``.

A morphism between coverings ``B(P, e) -> B(P', e')`` is written ``(g, k)``
and stands for ``B(g) t^-k`` where ``g`` intertwines ``e`` and ``e'`` and
``t = B(e(1-e))``.  Equality of such pairs is decidable by finite linear
algebra, which is what :func:`morphism_equal` does.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (InvalidPresentation, NotInvertible, NotIntertwining, RingMismatch,
                     ShapeMismatch, SourceTargetMismatch, require)
from .laurent import LaurentMatrix
from .linalg import ColumnEchelon, Matrix, inverse, solve_linear
from .seifert import SeifertModule, SeifertMorphism, dual_module, intertwines


class BlanchfieldPresentation:
    """A square Laurent matrix ``d`` whose augmentation is invertible."""

    def __init__(self, d: LaurentMatrix):
        if not d.is_square:
            raise ShapeMismatch(f"presentation must be square, got {d.shape}")
        self.d = d
        try:
            self.h = inverse(d.augment())
        except NotInvertible:
            raise InvalidPresentation("the augmentation d(1) is not invertible") from None

    @property
    def ring(self):
        return self.d.ring

    @property
    def rank(self):
        return self.d.rows

    def __eq__(self, other):
        return isinstance(other, BlanchfieldPresentation) and self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __repr__(self):
        return f"BlanchfieldPresentation({self.d!r})"


def covering(m: SeifertModule) -> BlanchfieldPresentation:
    """The presentation ``1 - e + z e`` of ``B(P, e)``."""
    one = LaurentMatrix.from_matrix(m.one() - m.e)
    ze = LaurentMatrix.from_matrix(m.e).shift(1)
    return BlanchfieldPresentation(one + ze)


def _clear_negative_powers(d: LaurentMatrix, minimal=False):
    low = d.low_degree()
    if low < 0 or (minimal and low > 0):
        return d.shift(-low)
    return d


def seifertize(b: BlanchfieldPresentation, *, minimal=False) -> SeifertModule:
    """A Seifert module whose covering is isomorphic to ``coker(d)``.

    With ``d = sum_{j<=k} d_j z^j`` and ``h = d(1)^-1`` the polynomial
    ``Delta(s) = sum_j d_j h s^(k-j) (s-1)^j`` is monic of degree ``k`` in
    ``s``; the answer is its block companion matrix.

    Only negative powers of ``z`` are cleared by default, so ``[z]`` gives
    ``(Z, e = 1)``.  ``minimal=True`` also strips a common factor ``z^m``
    with ``m > 0``, which can lower the rank of the result.
    """
    if not isinstance(b, BlanchfieldPresentation):
        b = BlanchfieldPresentation(b)
    ring = b.ring
    n = b.rank
    d = _clear_negative_powers(b.d, minimal)
    k = d.high_degree() if any(not x.is_zero() for x in d.entries()) else 0
    h = inverse(d.augment())
    if k == 0 or n == 0:
        return SeifertModule.zero(ring)
    dh = [d.coefficient(j) @ h for j in range(k + 1)]
    delta = []
    for i in range(k + 1):
        acc = Matrix.zeros(n, n, ring)
        for j in range(k + 1):
            # coefficient of s^i in s^(k-j) (s-1)^j
            r = i - (k - j)
            if 0 <= r <= j:
                acc = acc + dh[j].scale(comb(j, r) * (-1) ** (j - r))
        delta.append(acc)
    require(delta[k] == Matrix.identity(n, ring), "Delta is not monic")
    size = n * k
    rows = [[ring.zero()] * size for _ in range(size)]
    for blk in range(1, k):
        for i in range(n):
            rows[blk * n + i][(blk - 1) * n + i] = ring.one()
    for blk in range(k):
        neg = -delta[blk]
        for i in range(n):
            for j in range(n):
                rows[blk * n + i][(k - 1) * n + j] = neg[i, j]
    return SeifertModule(Matrix.from_rows(rows, ring, cols=size))


# ---------------------------------------------------------------------------
# morphisms B(g) t^-k
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlanchfieldMorphism:
    source: SeifertModule
    target: SeifertModule
    g: Matrix
    k: int = 0

    @property
    def seifert(self) -> SeifertMorphism:
        return SeifertMorphism(self.source, self.target, self.g)

    def __repr__(self):
        return f"BlanchfieldMorphism(g={self.g.tolist()}, k={self.k})"


def make_blanchfield_morphism(src: SeifertModule, tgt: SeifertModule, g: Matrix,
                              k: int = 0) -> BlanchfieldMorphism:
    if src.ring != tgt.ring or g.ring != src.ring:
        raise RingMismatch("morphism data over different rings")
    if g.shape != (tgt.rank, src.rank):
        raise ShapeMismatch(f"g has shape {g.shape}, expected {(tgt.rank, src.rank)}")
    if k < 0:
        raise ValueError("the t-exponent must be non-negative")
    if not intertwines(src, tgt, g):
        raise NotIntertwining("e' g != g e")
    return BlanchfieldMorphism(src, tgt, g, k)


def identity(m: SeifertModule) -> BlanchfieldMorphism:
    return BlanchfieldMorphism(m, m, m.one(), 0)


def morphism_equal(f1: BlanchfieldMorphism, f2: BlanchfieldMorphism) -> bool:
    """Decide ``B(g1) t^-k1 == B(g2) t^-k2``.

    The two agree iff ``(g1 T^k2 - g2 T^k1) T^l = 0`` for some ``l``, with
    ``T = e(1-e)`` on the source.  The kernels of ``T^l`` stop growing by
    ``l = rank``, so checking that single power decides the question.
    """
    if f1.source != f2.source or f1.target != f2.target:
        raise SourceTargetMismatch("morphisms have different sources or targets")
    t = f1.source.t_matrix()
    diff = f1.g @ t ** f2.k - f2.g @ t ** f1.k
    return (diff @ t ** f1.source.rank).is_zero()


def compose(f2: BlanchfieldMorphism, f1: BlanchfieldMorphism) -> BlanchfieldMorphism:
    """``f2 o f1``; ``t`` commutes with every morphism, so exponents add."""
    if f1.target != f2.source:
        raise SourceTargetMismatch("target of f1 is not the source of f2")
    return BlanchfieldMorphism(f1.source, f2.target, f2.g @ f1.g, f1.k + f2.k)


def reduce_morphism(f: BlanchfieldMorphism) -> BlanchfieldMorphism:
    """Lower ``k`` while ``g = g' e(1-e)`` for an intertwining ``g'``."""
    t = f.source.t_matrix()
    while f.k > 0:
        g2 = solve_linear(t, f.g, side="right")
        if g2 is None or not intertwines(f.source, f.target, g2):
            break
        f = BlanchfieldMorphism(f.source, f.target, g2, f.k - 1)
    return f


def _vec_operator(a: Matrix, b: Matrix, h_shape):
    """Rows of the matrix of ``h -> a h b`` on row-major ``vec(h)``."""
    n0, n1 = h_shape
    rows = []
    for i in range(a.rows):
        for j in range(b.cols):
            row = [0] * (n0 * n1)
            for x in range(n0):
                aix = a[i, x]
                if aix == 0:
                    continue
                for y in range(n1):
                    byj = b[y, j]
                    if byj:
                        row[x * n1 + y] += aix * byj
            rows.append(row)
    return rows


@dataclass(frozen=True)
class InverseCertificate:
    """``g h = T'^j`` and ``h g = T^j``; the inverse of ``(g, k)`` is
    ``(h T'^k, j)`` with ``T'`` taken on the target of ``(g, k)``."""
    inverse: BlanchfieldMorphism
    h: Matrix
    j: int


def default_power_bound(f: BlanchfieldMorphism) -> int:
    """How far :func:`invert` looks for the exponent ``j``.

    Over a field the rank suffices.  Over Z the exponent can also grow with
    the size of ``g`` (``g = 4`` on ``(Z, e = -1)`` needs ``j = 2``), so the
    bound adds a term for the bit length of the entries.
    """
    n = max(f.source.rank, f.target.rank)
    if f.source.ring.is_field:
        return n
    bits = max((abs(x).bit_length() for x in f.g.entries()), default=0)
    return n + max(n, 1) * max(bits, 1)


def invert_with_certificate(f: BlanchfieldMorphism, max_power=None):
    """Search ``j = 0, 1, ...`` for ``h`` with ``g h = T'^j`` and ``h g = T^j``.

    Returns an :class:`InverseCertificate` or ``None`` if nothing is found
    up to ``max_power``.
    """
    src, tgt, g = f.source, f.target, f.g
    ring = src.ring
    n0, n1 = src.rank, tgt.rank
    if max_power is None:
        max_power = default_power_bound(f)
    t_src, t_tgt = src.t_matrix(), tgt.t_matrix()
    i0, i1 = src.one(), tgt.one()
    # h : target -> source, shape (n0, n1)
    shape = (n0, n1)
    inter = [[x - y for x, y in zip(r1, r2)] for r1, r2 in
             zip(_vec_operator(src.e, i1, shape), _vec_operator(i0, tgt.e, shape))]
    rows = inter + _vec_operator(g, i1, shape) + _vec_operator(i0, g, shape)
    ncols = n0 * n1
    if not rows:
        rows = [[0] * ncols]
    coeffs = Matrix.from_rows([[ring.normalize(x) for x in r] for r in rows], ring, cols=ncols)
    echelon = ColumnEchelon(coeffs)
    p_tgt, p_src = i1, i0
    for j in range(max_power + 1):
        rhs = [ring.zero()] * (n0 * n1) + list(p_tgt.entries()) + list(p_src.entries())
        if len(rhs) < coeffs.rows:
            rhs += [ring.zero()] * (coeffs.rows - len(rhs))
        x = echelon.solve_vector(rhs)
        if x is not None:
            h = Matrix(ring, n0, n1, x)
            require(g @ h == p_tgt and h @ g == p_src and intertwines(tgt, src, h),
                    "inverse certificate failed")
            inv = BlanchfieldMorphism(tgt, src, h @ t_tgt ** f.k, j)
            return InverseCertificate(inv, h, j)
        p_tgt = p_tgt @ t_tgt
        p_src = p_src @ t_src
    return None


def invert(f: BlanchfieldMorphism, max_power=None):
    """The inverse morphism, or ``None`` if ``f`` is not invertible (as far
    as the power search can tell)."""
    cert = invert_with_certificate(f, max_power)
    return None if cert is None else cert.inverse


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zeta:
    """Marks the identification of ``B(P, e)^`` with ``B(P*, 1 - e*)``.

    Nothing is computed through it: dual Blanchfield modules are always
    represented by the covering of the dual Seifert module.
    """
    module: SeifertModule

    @property
    def dual_covering(self) -> SeifertModule:
        return dual_module(self.module)


def zeta(m: SeifertModule) -> Zeta:
    return Zeta(m)


def dual_of_morphism(f: BlanchfieldMorphism) -> BlanchfieldMorphism:
    """``(g, k) -> (g*, k)`` between the dual coverings."""
    return BlanchfieldMorphism(dual_module(f.target), dual_module(f.source), f.g.dual(), f.k)

