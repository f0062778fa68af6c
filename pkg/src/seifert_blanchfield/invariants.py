"""Knot-theoretic invariants of Seifert forms and a small table of knots."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .blanchfield import covering
from .errors import SingularForm, ValidationError, WrongEta
from .laurent import LaurentMatrix, LaurentPoly, laurent_det, normalize_unit
from .linalg import Matrix, determinant
from .forms import SeifertForm, make_seifert_form
from .rings import ZZ


def alexander(f: SeifertForm) -> LaurentPoly:
    """``det(1 - e + z e)`` moved to lowest degree 0 with ``p(1) = 1``.

    Over Z/p only the degree shift is applied; ``p(1) = 1`` holds anyway for
    a covering presentation since ``1 - e + e = 1``.
    """
    if not f.nonsingular:
        raise SingularForm("the Alexander polynomial needs a nonsingular form")
    p = laurent_det(covering(f.module).d)
    return normalize_unit(p, sign_at_one=f.ring.tag != "Fp")


def symmetric_signature(m: Matrix) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalisation."""
    n = m.rows
    a = [[Fraction(m[i, j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValidationError("signature needs a symmetric matrix")
    pos = neg = 0
    size = n
    while size:
        piv = next((i for i in range(size) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(size) for j in range(size) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/column i += row/column j makes a[i][i] = 2 a[i][j]
            for c in range(size):
                a[i][c] += a[j][c]
            for r in range(size):
                a[r][i] += a[r][j]
            piv = i
        last = size - 1
        a[piv], a[last] = a[last], a[piv]
        for r in a[:size]:
            r[piv], r[last] = r[last], r[piv]
        d = a[last][last]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in range(last):
            f = a[r][last] / d
            if f:
                for c in range(last):
                    a[r][c] -= f * a[last][c]
        size = last
    return pos - neg


def signature(f: SeifertForm) -> int:
    """Signature of ``theta + theta^T`` (only for ``eta = +1``)."""
    if f.eta != 1:
        raise WrongEta("the signature is defined for eta = +1 only")
    if f.ring.tag == "Fp":
        raise ValidationError("signature needs an ordered coefficient ring")
    return symmetric_signature(f.theta + f.theta.T)


def determinant_invariant(f: SeifertForm):
    p = alexander(f)
    v = p(-1)
    return abs(v) if f.ring.tag != "Fp" else v


def seifert_oracle_alexander(theta: Matrix) -> LaurentPoly:
    """``det(theta^T - z theta)``, normalised.  Used only as a cross-check."""
    ring = theta.ring
    z = LaurentPoly.monomial(1, 1, ring)
    n = theta.rows
    mat = LaurentMatrix.from_rows([[LaurentPoly.constant(theta[j, i], ring) - z * theta[i, j]
                                    for j in range(n)] for i in range(n)], ring, cols=n)
    return normalize_unit(laurent_det(mat))


@dataclass(frozen=True)
class KnotRecord:
    name: str
    seifert_matrix: Matrix
    eta: int = 1

    def __post_init__(self):
        lam = self.seifert_matrix - self.seifert_matrix.T.scale(self.eta)
        if determinant(lam) not in (1, -1):
            raise SingularForm(f"{self.name}: theta - eta theta^T is not unimodular")

    def form(self) -> SeifertForm:
        return make_seifert_form(self.seifert_matrix, self.eta)


def _record(name, rows):
    if rows:
        m = Matrix.from_rows(rows, ZZ)
    else:
        m = Matrix.zeros(0, 0, ZZ)
    return KnotRecord(name, m, 1)


KNOTS = {
    "unknot": _record("unknot", []),
    "trefoil": _record("trefoil", [[-1, 1], [0, -1]]),
    "figure-eight": _record("figure-eight", [[1, 1], [0, -1]]),
}


def knot(name: str) -> KnotRecord:
    key = name.lower().replace("_", "-")
    if key in ("figure8", "figure-8", "4_1", "4-1"):
        key = "figure-eight"
    if key in ("3_1", "3-1"):
        key = "trefoil"
    try:
        return KNOTS[key]
    except KeyError:
        raise ValidationError(f"unknown knot {name!r}; known: {sorted(KNOTS)}") from None


@dataclass
class InvariantReport:
    alexander: LaurentPoly
    signature: int | None
    determinant: int
    rank: int
    eta: int
    seconds: float = 0.0
    extra: dict = field(default_factory=dict)


def invariant_report(f: SeifertForm) -> InvariantReport:
    start = time.perf_counter()
    alex = alexander(f)
    sig = signature(f) if f.eta == 1 and f.ring.tag != "Fp" else None
    det = determinant_invariant(f)
    return InvariantReport(alex, sig, det, f.rank, f.eta, time.perf_counter() - start)
