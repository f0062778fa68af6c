"""Laurent polynomials A[z, z^-1], matrices over them, and the localization
A[z, z^-1, (1-z)^-1].

Elements of the localization are carried as ``num / (z^a (1-z)^b)``.  The
same ring is also presented as A[s, t^-1] with ``s = (1-z)^-1`` and
``t = s(1-s) = -z(1-z)^-2``; :func:`z_to_st` and :func:`st_to_z` convert
between the two presentations.
"""

from __future__ import annotations

import contextlib
from itertools import combinations

from .errors import DegreeCapExceeded, NotSquare, RingMismatch, ShapeMismatch
from .linalg import Matrix
from .rings import ZZ, BaseRing

DEFAULT_DEGREE_CAP = 512
_degree_cap = DEFAULT_DEGREE_CAP


def get_degree_cap():
    return _degree_cap


def set_degree_cap(cap):
    global _degree_cap
    _degree_cap = int(cap)


@contextlib.contextmanager
def degree_cap(cap):
    """Temporarily change the maximal allowed degree span."""
    old = get_degree_cap()
    set_degree_cap(cap)
    try:
        yield
    finally:
        set_degree_cap(old)


class LaurentPoly:
    """A Laurent polynomial, stored as a sorted tuple of ``(degree, coeff)``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, terms=None, ring: BaseRing = ZZ):
        self.ring = ring
        acc = {}
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms or ()
        for d, c in items:
            c = ring.normalize(c)
            if c == 0:
                continue
            d = int(d)
            acc[d] = ring.add(acc[d], c) if d in acc else c
        self.terms = tuple(sorted((d, c) for d, c in acc.items() if c != 0))
        self._hash = None
        if self.terms and self.terms[-1][0] - self.terms[0][0] > _degree_cap:
            raise DegreeCapExceeded(
                f"degree span {self.terms[-1][0] - self.terms[0][0]} exceeds cap {_degree_cap}")

    @classmethod
    def _raw(cls, terms, ring):
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        if terms and terms[-1][0] - terms[0][0] > _degree_cap:
            raise DegreeCapExceeded(
                f"degree span {terms[-1][0] - terms[0][0]} exceeds cap {_degree_cap}")
        return obj

    @classmethod
    def constant(cls, c, ring: BaseRing = ZZ):
        return cls({0: c}, ring)

    @classmethod
    def monomial(cls, degree, c=1, ring: BaseRing = ZZ):
        return cls({degree: c}, ring)

    @classmethod
    def from_coefficients(cls, coeffs, low=0, ring: BaseRing = ZZ):
        """``coeffs[i]`` is the coefficient of ``z^(low+i)``."""
        return cls({low + i: c for i, c in enumerate(coeffs)}, ring)

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def low_degree(self):
        return self.terms[0][0] if self.terms else 0

    @property
    def high_degree(self):
        return self.terms[-1][0] if self.terms else 0

    def coeff(self, d):
        for dd, c in self.terms:
            if dd == d:
                return c
        return self.ring.zero()

    def as_dict(self):
        return dict(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.ring)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return LaurentPoly.constant(other, self.ring)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        add = self.ring.add
        for d, c in other.terms:
            acc[d] = add(acc[d], c) if d in acc else c
        return LaurentPoly._raw(tuple(sorted((d, c) for d, c in acc.items() if c != 0)),
                                self.ring)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.neg
        return LaurentPoly._raw(tuple((d, neg(c)) for d, c in self.terms), self.ring)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return LaurentPoly._raw((), self.ring)
        acc = {}
        ring = self.ring
        p = ring.p
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                d = d1 + d2
                acc[d] = acc.get(d, 0) + c1 * c2
        if p:
            items = ((d, c % p) for d, c in acc.items())
        else:
            items = acc.items()
        return LaurentPoly._raw(tuple(sorted((d, c) for d, c in items if c != 0)), ring)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_unit():
                raise ArithmeticError("negative power of a non-unit")
            return self.unit_inverse() ** (-k)
        result = LaurentPoly.constant(1, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, m):
        """Multiply by ``z^m``."""
        return LaurentPoly._raw(tuple((d + m, c) for d, c in self.terms), self.ring)

    def involute(self):
        """``z -> z^-1`` with the coefficient involution (trivial here)."""
        inv = self.ring.involute
        return LaurentPoly._raw(tuple(sorted((-d, inv(c)) for d, c in self.terms)), self.ring)

    def __call__(self, x):
        """Evaluate at an element of the base ring (only ``x = +-1`` for
        negative degrees over Z)."""
        ring = self.ring
        total = ring.zero()
        for d, c in self.terms:
            if d >= 0:
                xd = ring.normalize(x) ** d if ring.p == 0 else pow(ring.normalize(x), d, ring.p)
            else:
                xi = ring.inv(ring.normalize(x))
                xd = xi ** (-d) if ring.p == 0 else pow(xi, -d, ring.p)
            total = ring.add(total, ring.mul(c, ring.normalize(xd)))
        return total

    def augment(self):
        return self(1)

    def is_unit(self):
        """Units of A[z, z^-1] (A a domain) are the monomials ``u z^m``."""
        return len(self.terms) == 1 and self.ring.is_unit(self.terms[0][1])

    def unit_inverse(self):
        (d, c), = self.terms
        return LaurentPoly({-d: self.ring.inv(c)}, self.ring)

    def divmod_exact(self, other):
        """Exact quotient ``self / other`` in A[z, z^-1], or ``None``."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        ring = self.ring
        lead_d, lead_c = other.terms[-1]
        low_o = other.low_degree
        rem = dict(self.terms)
        quot = {}
        low_s = self.low_degree
        while rem:
            top = max(rem)
            if top - lead_d < low_s - low_o:
                return None
            c = rem[top]
            if not ring.divides(lead_c, c):
                return None
            q = ring.exact_div(c, lead_c)
            qd = top - lead_d
            quot[qd] = q
            for d, oc in other.terms:
                nd = d + qd
                v = ring.sub(rem.get(nd, ring.zero()), ring.mul(q, oc))
                if v == 0:
                    rem.pop(nd, None)
                else:
                    rem[nd] = v
        return LaurentPoly(quot, ring)

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms)!r}, ring={self.ring})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for d, c in reversed(self.terms):
            mono = "" if d == 0 else ("z" if d == 1 else f"z^{d}")
            sc = str(c)
            neg = sc.startswith("-")
            mag = sc[1:] if neg else sc
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


def laurent(terms, ring: BaseRing = ZZ) -> LaurentPoly:
    return LaurentPoly(terms, ring)


def z_power(m, ring: BaseRing = ZZ) -> LaurentPoly:
    return LaurentPoly.monomial(m, 1, ring)


def normalize_unit(p: LaurentPoly, *, sign_at_one=True) -> LaurentPoly:
    """Multiply by the unit ``+-z^m`` making the lowest degree 0 and, where
    possible, ``p(1) = 1`` (or ``p(1) > 0`` over Z when ``p(1) != +-1``)."""
    if p.is_zero():
        return p
    q = p.shift(-p.low_degree)
    if not sign_at_one:
        return q
    ring = p.ring
    v = q(1)
    if ring.tag == "Z":
        if v < 0 or (v == 0 and q.terms[-1][1] < 0):
            q = -q
    elif ring.tag == "Q":
        if v != 0:
            q = q * LaurentPoly.constant(1 / v, ring)
    return q


# ---------------------------------------------------------------------------
# matrices over A[z, z^-1]
# ---------------------------------------------------------------------------

class LaurentMatrix:
    """An immutable matrix with :class:`LaurentPoly` entries."""

    __slots__ = ("ring", "rows", "cols", "_data")

    def __init__(self, ring: BaseRing, rows, cols, entries):
        data = tuple(e if isinstance(e, LaurentPoly) else LaurentPoly.constant(e, ring)
                     for e in entries)
        if len(data) != rows * cols:
            raise ShapeMismatch(f"{len(data)} entries for a {rows}x{cols} matrix")
        for e in data:
            if e.ring != ring:
                raise RingMismatch("entry over a different ring")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self._data = data

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
    def from_matrix(cls, m: Matrix):
        return cls(m.ring, m.rows, m.cols, [LaurentPoly.constant(x, m.ring) for x in m.entries()])

    @classmethod
    def from_coefficients(cls, coeffs):
        """Build ``sum_j coeffs[j] z^j`` from a dict ``degree -> Matrix``."""
        mats = list(coeffs.values())
        if not mats:
            raise ShapeMismatch("no coefficient matrices")
        ring, rows, cols = mats[0].ring, mats[0].rows, mats[0].cols
        for m in mats:
            if m.shape != (rows, cols):
                raise ShapeMismatch("coefficient matrices of different shapes")
        entries = []
        for i in range(rows):
            for j in range(cols):
                entries.append(LaurentPoly({d: m[i, j] for d, m in coeffs.items()}, ring))
        return cls(ring, rows, cols, entries)

    @classmethod
    def identity(cls, n, ring: BaseRing = ZZ):
        return cls.from_matrix(Matrix.identity(n, ring))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i * self.cols + j]

    def entries(self):
        return self._data

    def tolist(self):
        return [list(self._data[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return (self.ring == other.ring and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self._data))

    def __repr__(self):
        return f"LaurentMatrix({[[str(e) for e in r] for r in self.tolist()]})"

    def _check(self, other, same_shape=True):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if same_shape and self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check(other)
        return LaurentMatrix(self.ring, self.rows, self.cols,
                             [a + b for a, b in zip(self._data, other._data)])

    def __sub__(self, other):
        self._check(other)
        return LaurentMatrix(self.ring, self.rows, self.cols,
                             [a - b for a, b in zip(self._data, other._data)])

    def __neg__(self):
        return LaurentMatrix(self.ring, self.rows, self.cols, [-a for a in self._data])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            other = LaurentMatrix.from_matrix(other)
        self._check(other, same_shape=False)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        zero = LaurentPoly((), self.ring)
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self[i, k]
                    if a:
                        b = other[k, j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return LaurentMatrix(self.ring, self.rows, other.cols, out)

    def __rmatmul__(self, other):
        if isinstance(other, Matrix):
            return LaurentMatrix.from_matrix(other) @ self
        return NotImplemented

    def scale(self, p):
        if not isinstance(p, LaurentPoly):
            p = LaurentPoly.constant(p, self.ring)
        return LaurentMatrix(self.ring, self.rows, self.cols, [p * a for a in self._data])

    def shift(self, m):
        return LaurentMatrix(self.ring, self.rows, self.cols, [a.shift(m) for a in self._data])

    def involute(self):
        return LaurentMatrix(self.ring, self.rows, self.cols, [a.involute() for a in self._data])

    def involute_transpose(self):
        return LaurentMatrix(self.ring, self.cols, self.rows,
                             [self[i, j].involute() for j in range(self.cols)
                              for i in range(self.rows)])

    @property
    def T(self):
        return LaurentMatrix(self.ring, self.cols, self.rows,
                             [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def low_degree(self):
        nz = [e.low_degree for e in self._data if e]
        return min(nz) if nz else 0

    def high_degree(self):
        nz = [e.high_degree for e in self._data if e]
        return max(nz) if nz else 0

    def coefficient(self, d) -> Matrix:
        return Matrix(self.ring, self.rows, self.cols, [e.coeff(d) for e in self._data])

    def coefficients(self):
        """Dict ``degree -> Matrix`` over the occupied degree window."""
        if all(e.is_zero() for e in self._data):
            return {0: Matrix.zeros(self.rows, self.cols, self.ring)}
        return {d: self.coefficient(d)
                for d in range(self.low_degree(), self.high_degree() + 1)}

    def evaluate(self, x) -> Matrix:
        return Matrix(self.ring, self.rows, self.cols, [e(x) for e in self._data])

    def augment(self) -> Matrix:
        return self.evaluate(1)

    def det(self):
        return laurent_det(self)


def augment(m) -> Matrix:
    """Entrywise ``z := 1``."""
    if isinstance(m, LaurentPoly):
        return Matrix(m.ring, 1, 1, [m(1)])
    return m.augment()


def involute(p: LaurentPoly) -> LaurentPoly:
    return p.involute()


CofactorLimit = 8


def laurent_det(m: LaurentMatrix) -> LaurentPoly:
    """Determinant over the commutative ring A[z, z^-1].

    Minor expansion (memoised over column subsets) up to size 8, Bareiss
    elimination with exact Laurent division beyond.
    """
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    ring = m.ring
    if n == 0:
        return LaurentPoly.constant(1, ring)
    if n <= CofactorLimit:
        return _minor_expansion_det(m)
    return _bareiss_laurent(m)


def _minor_expansion_det(m):
    n = m.rows
    ring = m.ring
    zero = LaurentPoly((), ring)
    # minors[cols] = det of the submatrix on the last len(cols) rows and cols
    minors = {(): LaurentPoly.constant(1, ring)}
    for size in range(1, n + 1):
        r = n - size
        nxt = {}
        for cols in combinations(range(n), size):
            acc = zero
            for pos, c in enumerate(cols):
                a = m[r, c]
                if not a:
                    continue
                sub = minors[cols[:pos] + cols[pos + 1:]]
                if not sub:
                    continue
                term = a * sub
                acc = acc - term if pos % 2 else acc + term
            nxt[cols] = acc
        minors = nxt
    return minors[tuple(range(n))]


def _bareiss_laurent(m):
    n = m.rows
    ring = m.ring
    rows = [[m[i, j] for j in range(n)] for i in range(n)]
    shift = 0
    for i in range(n):
        lo = min((e.low_degree for e in rows[i] if e), default=0)
        rows[i] = [e.shift(-lo) for e in rows[i]]
        shift += lo
    sign = 1
    prev = LaurentPoly.constant(1, ring)
    for k in range(n - 1):
        if not rows[k][k]:
            piv = next((r for r in range(k + 1, n) if rows[r][k]), None)
            if piv is None:
                return LaurentPoly((), ring)
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        akk = rows[k][k]
        for i in range(k + 1, n):
            aik = rows[i][k]
            for j in range(k + 1, n):
                num = rows[i][j] * akk - aik * rows[k][j]
                q = num.divmod_exact(prev)
                if q is None:
                    raise ArithmeticError("Bareiss division was not exact")
                rows[i][j] = q
            rows[i][k] = LaurentPoly((), ring)
        prev = akk
    d = rows[n - 1][n - 1].shift(shift)
    return -d if sign < 0 else d


def laurent_arithmetic(p, q, op):
    """Dispatch ``add``/``mul``/``det`` on polynomials or Laurent matrices."""
    if op == "add":
        return p + q
    if op == "mul":
        return p @ q if isinstance(p, LaurentMatrix) else p * q
    if op == "det":
        return laurent_det(p)
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# the localization A[z, z^-1, (1-z)^-1]
# ---------------------------------------------------------------------------

def one_minus_z(ring: BaseRing = ZZ) -> LaurentPoly:
    return LaurentPoly({0: 1, 1: -1}, ring)


def _divide_one_minus_z(p: LaurentPoly):
    """``p / (1-z)`` when ``p(1) == 0`` (synthetic division)."""
    ring = p.ring
    # p = (1-z) q  <=>  q_d = sum_{e <= d} p_e
    acc = ring.zero()
    out = {}
    for d in range(p.low_degree, p.high_degree):
        acc = ring.add(acc, p.coeff(d))
        if acc != 0:
            out[d] = acc
    return LaurentPoly(out, ring)


class LocalizedElement:
    """``num / (z^a (1-z)^b)`` in canonical form.

    Canonical means: ``num`` has lowest degree 0 (powers of z live in ``a``,
    which may be negative), and ``num(1) != 0`` whenever ``b > 0``.  Over a
    domain this form is unique, so equality is structural.
    """

    __slots__ = ("num", "a", "b")

    def __init__(self, num, a=0, b=0):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if b < 0:
            num = num * one_minus_z(num.ring) ** (-b)
            b = 0
        if num.is_zero():
            self.num, self.a, self.b = num, 0, 0
            return
        low = num.low_degree
        num = num.shift(-low)
        a -= low
        while b > 0 and num(1) == 0:
            num = _divide_one_minus_z(num)
            b -= 1
        self.num, self.a, self.b = num, a, b

    @property
    def ring(self):
        return self.num.ring

    @classmethod
    def from_laurent(cls, p: LaurentPoly):
        return cls(p, 0, 0)

    @classmethod
    def s(cls, ring: BaseRing = ZZ):
        """``(1-z)^-1``."""
        return cls(LaurentPoly.constant(1, ring), 0, 1)

    @classmethod
    def t(cls, ring: BaseRing = ZZ):
        """``s(1-s) = -z(1-z)^-2``."""
        return cls(LaurentPoly.monomial(1, -1, ring), 0, 2)

    def normalize(self):
        return LocalizedElement(self.num, self.a, self.b)

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, LocalizedElement):
            return other
        if isinstance(other, LaurentPoly):
            return LocalizedElement(other)
        return LocalizedElement(LaurentPoly.constant(other, self.ring))

    def __add__(self, other):
        other = self._coerce(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        a = max(self.a, other.a)
        b = max(self.b, other.b)
        w = one_minus_z(self.ring)
        n1 = self.num.shift(a - self.a) * w ** (b - self.b)
        n2 = other.num.shift(a - other.a) * w ** (b - other.b)
        return LocalizedElement(n1 + n2, a, b)

    __radd__ = __add__

    def __neg__(self):
        return LocalizedElement(-self.num, self.a, self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return LocalizedElement(self.num * other.num, self.a + other.a, self.b + other.b)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = LocalizedElement(LaurentPoly.constant(1, self.ring))
        for _ in range(k):
            result = result * self
        return result

    def involute(self):
        """``z -> z^-1``; uses ``1 - z^-1 = -z^-1 (1-z)``."""
        num = self.num.involute() * LaurentPoly.monomial(self.a + self.b, (-1) ** self.b,
                                                          self.ring)
        return LocalizedElement(num, 0, self.b)

    def cross_equal(self, other):
        """Equality by cross-multiplication (independent of canonical form)."""
        other = self._coerce(other)
        w = one_minus_z(self.ring)
        lhs = self.num.shift(other.a) * w ** other.b
        rhs = other.num.shift(self.a) * w ** self.b
        return lhs == rhs

    def __eq__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            other = self._coerce(other)
        if not isinstance(other, LocalizedElement):
            return NotImplemented
        return (self.num, self.a, self.b) == (other.num, other.a, other.b)

    def __hash__(self):
        return hash((self.num, self.a, self.b))

    def to_laurent(self):
        """The element as a Laurent polynomial, or ``None`` if ``b > 0``."""
        if self.b > 0:
            return None
        return self.num.shift(-self.a)

    def __repr__(self):
        return f"LocalizedElement({self.num!r}, a={self.a}, b={self.b})"

    def __str__(self):
        den = []
        if self.a:
            den.append("z" if self.a == 1 else f"z^{self.a}")
        if self.b:
            den.append("(1 - z)" if self.b == 1 else f"(1 - z)^{self.b}")
        if not den:
            return str(self.num)
        return f"({self.num}) / ({' * '.join(den)})"


def localized_arithmetic(x, y, op):
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "eq":
        return x == y
    if op == "normalize":
        return x.normalize()
    raise ValueError(f"unknown op {op!r}")


class STElement:
    """``t^-k * sum_j coeffs[j] s^j`` in A[s, t^-1], with ``k`` minimal."""

    __slots__ = ("k", "coeffs", "ring")

    def __init__(self, k, coeffs, ring: BaseRing = ZZ):
        poly = LaurentPoly(coeffs, ring)
        if poly.low_degree < 0:
            raise ValueError("negative powers of s are not part of A[s, t^-1]")
        while k > 0 and poly and poly.coeff(0) == 0 and poly(1) == 0:
            poly = _divide_one_minus_z(poly.shift(-1))   # (1-s) is the same shape as (1-z)
            k -= 1
        if not poly:
            k = 0
        self.k = k
        self.coeffs = poly.as_dict()
        self.ring = ring

    def _poly(self):
        return LaurentPoly(self.coeffs, self.ring)

    def __add__(self, other):
        k = max(self.k, other.k)
        tpoly = LaurentPoly({1: 1, 2: -1}, self.ring)
        p = self._poly() * tpoly ** (k - self.k) + other._poly() * tpoly ** (k - other.k)
        return STElement(k, p.as_dict(), self.ring)

    def __mul__(self, other):
        return STElement(self.k + other.k, (self._poly() * other._poly()).as_dict(), self.ring)

    def __neg__(self):
        return STElement(self.k, (-self._poly()).as_dict(), self.ring)

    def __eq__(self, other):
        if not isinstance(other, STElement):
            return NotImplemented
        return (self.k, self.coeffs, self.ring) == (other.k, other.coeffs, other.ring)

    def __hash__(self):
        return hash((self.k, tuple(sorted(self.coeffs.items())), self.ring))

    def __repr__(self):
        return f"STElement(k={self.k}, coeffs={self.coeffs})"


def _st_z_power(n, ring):
    # z = -(1-s)^2 t^-1 and z^-1 = -s^2 t^-1
    m = abs(n)
    if n >= 0:
        base = LaurentPoly({0: 1, 1: -2, 2: 1}, ring)
    else:
        base = LaurentPoly({2: 1}, ring)
    p = base ** m * LaurentPoly.constant((-1) ** m, ring)
    return STElement(m, p.as_dict(), ring)


def z_to_st(x: LocalizedElement) -> STElement:
    ring = x.ring
    total = STElement(0, {}, ring)
    for d, c in x.num.terms:
        total = total + _st_z_power(d - x.a, ring) * STElement(0, {0: c}, ring)
    return total * STElement(0, {x.b: 1}, ring)


def st_to_z(x: STElement) -> LocalizedElement:
    ring = x.ring
    s = LocalizedElement.s(ring)
    t_inv = LocalizedElement(-(one_minus_z(ring) ** 2), 1, 0)
    total = LocalizedElement(LaurentPoly((), ring))
    for j, c in x.coeffs.items():
        total = total + (s ** j) * LocalizedElement(LaurentPoly.constant(c, ring))
    return total * t_inv ** x.k


def associated(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Do ``p`` and ``q`` differ by a unit ``u z^m``?"""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    u = p.divmod_exact(q)
    return u is not None and u.is_unit()
