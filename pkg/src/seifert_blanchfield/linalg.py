"""Exact dense linear algebra over Z, Q and Z/p.

Matrices are immutable and hold canonical ring elements in row-major
tuples.  Over Z the workhorse is a column Hermite-style echelon form with a
tracked unimodular transform; it gives integer system solving and bases of
direct summands.  Determinants use Bareiss fraction-free elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .errors import (
    InternalAssertion,
    NotIdempotent,
    NotInvertible,
    NotSquare,
    RingMismatch,
    ShapeMismatch,
)
from .rings import INTEGERS, QQ, RATIONALS, ZZ, BaseRing


class Matrix:
    """An immutable ``rows x cols`` matrix over a :class:`BaseRing`."""

    __slots__ = ("ring", "rows", "cols", "_data", "_hash")

    def __init__(self, ring: BaseRing, rows: int, cols: int, entries, *, _trusted=False):
        if rows < 0 or cols < 0:
            raise ShapeMismatch("negative matrix dimension")
        data = tuple(entries) if _trusted else tuple(ring.normalize(x) for x in entries)
        if len(data) != rows * cols:
            raise ShapeMismatch(f"{len(data)} entries for a {rows}x{cols} matrix")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, ring: BaseRing = ZZ, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        return cls(ring, len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n, ring: BaseRing = ZZ):
        one, zero = ring.one(), ring.zero()
        return cls(ring, n, n, [one if i == j else zero for i in range(n) for j in range(n)],
                   _trusted=True)

    @classmethod
    def zeros(cls, rows, cols=None, ring: BaseRing = ZZ):
        cols = rows if cols is None else cols
        return cls(ring, rows, cols, [ring.zero()] * (rows * cols), _trusted=True)

    @classmethod
    def scalar(cls, n, c, ring: BaseRing = ZZ):
        c = ring.normalize(c)
        zero = ring.zero()
        return cls(ring, n, n, [c if i == j else zero for i in range(n) for j in range(n)],
                   _trusted=True)

    @classmethod
    def from_columns(cls, columns, nrows, ring: BaseRing = ZZ):
        columns = [list(c) for c in columns]
        return cls(ring, nrows, len(columns),
                   [columns[j][i] for i in range(nrows) for j in range(len(columns))])

    # -- access -------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i):
        return list(self._data[i * self.cols:(i + 1) * self.cols])

    def column(self, j):
        return [self._data[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def entries(self):
        return self._data

    def submatrix(self, rows, cols):
        rows, cols = list(rows), list(cols)
        return Matrix(self.ring, len(rows), len(cols),
                      [self[i, j] for i in rows for j in cols], _trusted=True)

    def block(self, r0, r1, c0, c1):
        return self.submatrix(range(r0, r1), range(c0, c1))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self):
        return f"Matrix({self.tolist()}, ring={self.ring})"

    def is_zero(self):
        return all(x == 0 for x in self._data)

    def is_identity(self):
        return self.is_square and self == Matrix.identity(self.rows, self.ring)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other, same_shape=True):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if same_shape and self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check(other)
        add = self.ring.add
        return Matrix(self.ring, self.rows, self.cols,
                      [add(a, b) for a, b in zip(self._data, other._data)], _trusted=True)

    def __sub__(self, other):
        self._check(other)
        sub = self.ring.sub
        return Matrix(self.ring, self.rows, self.cols,
                      [sub(a, b) for a, b in zip(self._data, other._data)], _trusted=True)

    def __neg__(self):
        neg = self.ring.neg
        return Matrix(self.ring, self.rows, self.cols, [neg(a) for a in self._data],
                      _trusted=True)

    def scale(self, c):
        c = self.ring.normalize(c)
        mul = self.ring.mul
        return Matrix(self.ring, self.rows, self.cols, [mul(c, a) for a in self._data],
                      _trusted=True)

    def __matmul__(self, other):
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self._data, other._data
        bcols = [b[j::m] for j in range(m)] if m else []
        out = []
        p = self.ring.p
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for col in bcols:
                s = sum(x * y for x, y in zip(arow, col))
                out.append(s % p if p else s)
        if self.ring.tag == RATIONALS:
            out = [Fraction(x) for x in out]
        return Matrix(self.ring, n, m, out, _trusted=True)

    def __pow__(self, k):
        if not self.is_square:
            raise NotSquare("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = Matrix.identity(self.rows, self.ring)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    @property
    def T(self):
        return Matrix(self.ring, self.cols, self.rows,
                      [self[i, j] for j in range(self.cols) for i in range(self.rows)],
                      _trusted=True)

    def conj_transpose(self):
        """The dual morphism: entrywise involution followed by transpose."""
        inv = self.ring.involute
        return Matrix(self.ring, self.cols, self.rows,
                      [inv(self[i, j]) for j in range(self.cols) for i in range(self.rows)],
                      _trusted=True)

    dual = conj_transpose

    def trace(self):
        if not self.is_square:
            raise NotSquare("trace of a non-square matrix")
        t = self.ring.zero()
        for i in range(self.rows):
            t = self.ring.add(t, self[i, i])
        return t

    def change_ring(self, ring: BaseRing):
        return Matrix(ring, self.rows, self.cols, self._data)

    def hstack(self, other):
        self._check(other, same_shape=False)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack needs equal row counts")
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                                self.ring, cols=self.cols + other.cols)

    def vstack(self, other):
        self._check(other, same_shape=False)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack needs equal column counts")
        return Matrix(self.ring, self.rows + other.rows, self.cols,
                      self._data + other._data, _trusted=True)


def arithmetic(a: Matrix, b: Matrix | None, op: str) -> Matrix:
    """Dispatch ``add``/``sub``/``mul``/``neg``/``transpose_conjugate``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a @ b
    if op == "neg":
        return -a
    if op == "transpose_conjugate":
        return a.conj_transpose()
    raise ValueError(f"unknown op {op!r}")


def block_matrix(blocks, ring: BaseRing = ZZ):
    """Assemble a matrix from a 2-D list of blocks (all rings equal)."""
    rows = []
    for brow in blocks:
        height = brow[0].rows
        for b in brow:
            if b.rows != height:
                raise ShapeMismatch("blocks in a row must share a height")
        for i in range(height):
            rows.append([x for b in brow for x in b.row(i)])
    ncols = sum(b.cols for b in blocks[0]) if blocks else 0
    return Matrix.from_rows(rows, ring, cols=ncols)


def block_diag(*mats, ring: BaseRing | None = None):
    if ring is None:
        ring = mats[0].ring if mats else ZZ
    n = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    rows = [[ring.zero()] * c for _ in range(n)]
    r0 = c0 = 0
    for m in mats:
        if m.ring != ring:
            raise RingMismatch("block_diag over mixed rings")
        for i in range(m.rows):
            for j in range(m.cols):
                rows[r0 + i][c0 + j] = m[i, j]
        r0 += m.rows
        c0 += m.cols
    return Matrix.from_rows(rows, ring, cols=c)


# ---------------------------------------------------------------------------
# determinants and inverses
# ---------------------------------------------------------------------------

def determinant(m: Matrix):
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    ring = m.ring
    if n == 0:
        return ring.one()
    a = m.tolist()
    if ring.tag == INTEGERS:
        return _bareiss(a)
    det = ring.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return ring.zero()
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = ring.neg(det)
        pc = a[c][c]
        det = ring.mul(det, pc)
        inv = ring.inv(pc)
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = ring.mul(a[r][c], inv)
                a[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[r], a[c])]
    return det


def _bareiss(a):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi, rowk = a[i], a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def cofactor_determinant(m: Matrix):
    """Leibniz-formula determinant.  Exponential; used only as a test oracle."""
    if not m.is_square:
        raise NotSquare("determinant of a non-square matrix")
    n = m.rows
    ring = m.ring
    total = ring.zero()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = ring.one()
        for i in range(n):
            term = ring.mul(term, m[i, perm[i]])
        total = ring.sub(total, term) if inversions % 2 else ring.add(total, term)
    return total


def _gauss_jordan_inverse(a, ring):
    n = len(a)
    aug = [row + [ring.one() if i == j else ring.zero() for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = ring.inv(aug[c][c])
        aug[c] = [ring.mul(inv, x) for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; over Z this exists iff the determinant is a unit."""
    if not m.is_square:
        raise NotSquare(f"inverse of a {m.rows}x{m.cols} matrix")
    n = m.rows
    ring = m.ring
    if ring.tag == INTEGERS:
        rows = _gauss_jordan_inverse([[Fraction(x) for x in r] for r in m.tolist()], QQ)
        if rows is None or any(x.denominator != 1 for r in rows for x in r):
            raise NotInvertible("matrix is not invertible over Z")
        out = Matrix.from_rows([[x.numerator for x in r] for r in rows], ZZ, cols=n)
    else:
        rows = _gauss_jordan_inverse(m.tolist(), ring)
        if rows is None:
            raise NotInvertible(f"matrix is singular over {ring}")
        out = Matrix.from_rows(rows, ring, cols=n)
    return out


def is_invertible(m: Matrix) -> bool:
    return m.is_square and m.ring.is_unit(determinant(m))


def rank(m: Matrix) -> int:
    """Rank over the fraction field (Z is treated rationally)."""
    ring = QQ if m.ring.tag == INTEGERS else m.ring
    a = [[ring.normalize(x) for x in r] for r in m.tolist()]
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = ring.inv(a[r][c])
        for i in range(r + 1, m.rows):
            if a[i][c] != 0:
                f = ring.mul(a[i][c], inv)
                a[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# column echelon form and system solving
# ---------------------------------------------------------------------------

def _xgcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class ColumnEchelon:
    """Column echelon form ``A U = H`` with ``U`` invertible over the ring.

    Over Z the pivots are positive and the entries left of each pivot are
    reduced modulo it (a column Hermite normal form).  The first ``rank``
    columns of ``H`` are nonzero with strictly increasing pivot rows; the
    remaining columns vanish, so the corresponding columns of ``U`` span the
    kernel.
    """

    def __init__(self, a: Matrix):
        self.ring = ring = a.ring
        self.nrows, self.ncols = a.rows, a.cols
        cols = [a.column(j) for j in range(a.cols)]
        ucols = [[ring.one() if i == j else ring.zero() for i in range(a.cols)]
                 for j in range(a.cols)]
        pivots = []
        r = 0
        integral = ring.tag == INTEGERS
        for i in range(a.rows):
            if r == a.cols:
                break
            if integral:
                for j in range(r + 1, a.cols):
                    b = cols[j][i]
                    if b == 0:
                        continue
                    p = cols[r][i]
                    if p == 0:
                        cols[r], cols[j] = cols[j], cols[r]
                        ucols[r], ucols[j] = ucols[j], ucols[r]
                        continue
                    if b % p == 0:
                        q = b // p
                        cols[j] = [y - q * x for x, y in zip(cols[r], cols[j])]
                        ucols[j] = [y - q * x for x, y in zip(ucols[r], ucols[j])]
                        continue
                    g, x, y = _xgcd(p, b)
                    pa, pb = p // g, b // g
                    cr, cj = cols[r], cols[j]
                    cols[r] = [x * s + y * t for s, t in zip(cr, cj)]
                    cols[j] = [pa * t - pb * s for s, t in zip(cr, cj)]
                    ur, uj = ucols[r], ucols[j]
                    ucols[r] = [x * s + y * t for s, t in zip(ur, uj)]
                    ucols[j] = [pa * t - pb * s for s, t in zip(ur, uj)]
                p = cols[r][i]
                if p == 0:
                    continue
                if p < 0:
                    cols[r] = [-x for x in cols[r]]
                    ucols[r] = [-x for x in ucols[r]]
                    p = -p
                for j in range(r):
                    q = cols[j][i] // p
                    if q:
                        cols[j] = [y - q * x for x, y in zip(cols[r], cols[j])]
                        ucols[j] = [y - q * x for x, y in zip(ucols[r], ucols[j])]
            else:
                piv = next((j for j in range(r, a.cols) if cols[j][i] != 0), None)
                if piv is None:
                    continue
                cols[r], cols[piv] = cols[piv], cols[r]
                ucols[r], ucols[piv] = ucols[piv], ucols[r]
                inv = ring.inv(cols[r][i])
                cols[r] = [ring.mul(inv, x) for x in cols[r]]
                ucols[r] = [ring.mul(inv, x) for x in ucols[r]]
                for j in range(a.cols):
                    if j != r and cols[j][i] != 0:
                        f = cols[j][i]
                        cols[j] = [ring.sub(y, ring.mul(f, x)) for x, y in zip(cols[r], cols[j])]
                        ucols[j] = [ring.sub(y, ring.mul(f, x)) for x, y in zip(ucols[r], ucols[j])]
            pivots.append(i)
            r += 1
        self.rank = r
        self.pivot_rows = pivots
        self._cols = cols
        self._ucols = ucols

    @property
    def H(self):
        return Matrix.from_columns(self._cols, self.nrows, self.ring)

    @property
    def U(self):
        return Matrix.from_columns(self._ucols, self.ncols, self.ring)

    def image_basis(self) -> Matrix:
        return Matrix.from_columns(self._cols[:self.rank], self.nrows, self.ring)

    def kernel_basis(self) -> Matrix:
        return Matrix.from_columns(self._ucols[self.rank:], self.ncols, self.ring)

    def solve_vector(self, b):
        """One solution ``x`` of ``A x = b`` over the ring, or ``None``."""
        ring = self.ring
        y = []
        k = 0
        cols = self._cols
        for i in range(self.nrows):
            acc = b[i]
            for j in range(k):
                c = cols[j][i]
                if c:
                    acc = ring.sub(acc, ring.mul(c, y[j]))
            if k < self.rank and self.pivot_rows[k] == i:
                p = cols[k][i]
                if not ring.divides(p, acc):
                    return None
                y.append(ring.exact_div(acc, p))
                k += 1
            elif acc != 0:
                return None
        x = [ring.zero()] * self.ncols
        for j, yj in enumerate(y):
            if yj:
                x = [ring.add(s, ring.mul(yj, t)) for s, t in zip(x, self._ucols[j])]
        return x

    def solve(self, rhs: Matrix):
        if rhs.rows != self.nrows:
            raise ShapeMismatch(f"right-hand side has {rhs.rows} rows, expected {self.nrows}")
        out = []
        for j in range(rhs.cols):
            x = self.solve_vector(rhs.column(j))
            if x is None:
                return None
            out.append(x)
        return Matrix.from_columns(out, self.ncols, self.ring)


def solve_linear(coeffs: Matrix, rhs: Matrix, side: str = "left"):
    """Solve ``coeffs @ X = rhs`` (``side="left"``) or ``X @ coeffs = rhs``.

    Returns one exact solution over the ring of the matrices, or ``None``
    when none exists (e.g. ``2X = 1`` over Z).
    """
    if coeffs.ring != rhs.ring:
        raise RingMismatch(f"{coeffs.ring} vs {rhs.ring}")
    if side == "right":
        sol = solve_linear(coeffs.T, rhs.T, side="left")
        return None if sol is None else sol.T
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    if coeffs.rows != rhs.rows:
        raise ShapeMismatch(f"{coeffs.shape} system with {rhs.shape} right-hand side")
    return ColumnEchelon(coeffs).solve(rhs)


# ---------------------------------------------------------------------------
# nilpotency and idempotents
# ---------------------------------------------------------------------------

def is_nilpotent(m: Matrix):
    """Least ``k`` with ``m**k == 0``, or ``None`` if ``m`` is not nilpotent.

    An ``n x n`` matrix over a domain is nilpotent iff its ``n``-th power
    vanishes, so at most ``n`` products are formed.
    """
    if not m.is_square:
        raise NotSquare("nilpotency of a non-square matrix")
    n = m.rows
    power = Matrix.identity(n, m.ring)
    for k in range(n + 1):
        if power.is_zero():
            return k
        power = power @ m
    return None


@dataclass(frozen=True)
class IdempotentSplit:
    projector: Matrix
    image_basis: Matrix
    section: Matrix

    @property
    def rank(self):
        return self.image_basis.cols

    def restrict(self, endo: Matrix) -> Matrix:
        """Matrix of an endomorphism preserving the image, in the summand basis."""
        return self.section @ endo @ self.image_basis


def split_idempotent(p: Matrix) -> IdempotentSplit:
    """Basis and section of ``im(p)`` as a free direct summand.

    ``image_basis @ section == p`` and ``section @ image_basis == 1``.
    """
    if not p.is_square:
        raise NotSquare("split_idempotent needs a square matrix")
    if p @ p != p:
        raise NotIdempotent("matrix is not idempotent")
    basis = ColumnEchelon(p).image_basis()
    section = solve_linear(basis, p)
    if section is None:
        raise InternalAssertion("image of an idempotent is not a direct summand")
    if basis @ section != p or section @ basis != Matrix.identity(basis.cols, p.ring):
        raise InternalAssertion("idempotent splitting failed its identities")
    return IdempotentSplit(p, basis, section)
