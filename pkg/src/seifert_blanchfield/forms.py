"""Seifert forms, Blanchfield forms on coverings, and the passage between them.

A Seifert form is ``theta : P -> P*`` with ``theta = (theta - eta theta*) e``.
Its covering is the Blanchfield form ``(g_phi, k) = (theta, 1)``, meaning
``B(theta) t^-1`` followed by the identification of ``B(P, e)^`` with
``B(P*, 1 - e*)``.  :func:`uncover` goes back: it turns any nonsingular
Blanchfield form on a covering into a nonsingular Seifert form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .blanchfield import (BlanchfieldMorphism, BlanchfieldPresentation, covering, invert_with_certificate,
                          morphism_equal)
from .errors import (NotIntertwining, NotNonsingularForm, NotSquare, NotSymmetric, ShapeMismatch,
                     SingularForm, ValidationError, require)
from .laurent import LaurentMatrix, LaurentPoly, LocalizedElement, laurent_det, one_minus_z
from .linalg import IdempotentSplit, Matrix, block_matrix, inverse, is_invertible, split_idempotent
from .seifert import SeifertModule, dual_module, eval_poly, intertwines


def _check_eta(eta):
    if eta not in (1, -1):
        raise ValidationError(f"eta must be +1 or -1, got {eta!r}")
    return eta


def lambda_of(theta: Matrix, eta: int) -> Matrix:
    """``theta - eta theta*``."""
    return theta - theta.dual().scale(eta)


@dataclass(frozen=True)
class SeifertForm:
    module: SeifertModule
    theta: Matrix
    eta: int

    def __post_init__(self):
        _check_eta(self.eta)
        if self.theta.shape != (self.module.rank, self.module.rank):
            raise ShapeMismatch(f"theta has shape {self.theta.shape}, module rank "
                                f"{self.module.rank}")
        if self.lam @ self.module.e != self.theta:
            raise NotSymmetric("theta != (theta - eta theta*) e")

    @property
    def ring(self):
        return self.module.ring

    @property
    def rank(self):
        return self.module.rank

    @property
    def e(self):
        return self.module.e

    @property
    def lam(self) -> Matrix:
        return lambda_of(self.theta, self.eta)

    @property
    def nonsingular(self) -> bool:
        return is_invertible(self.lam)

    def __repr__(self):
        return f"SeifertForm(theta={self.theta.tolist()}, e={self.e.tolist()}, eta={self.eta})"


def make_seifert_form(theta: Matrix, eta: int = 1) -> SeifertForm:
    """The nonsingular form with ``e = (theta - eta theta*)^-1 theta``."""
    _check_eta(eta)
    if not theta.is_square:
        raise NotSquare(f"theta must be square, got {theta.shape}")
    lam = lambda_of(theta, eta)
    if not is_invertible(lam):
        raise SingularForm("theta - eta theta* is not invertible")
    e = inverse(lam) @ theta
    return SeifertForm(SeifertModule(e), theta, eta)


def symmetrize(theta_raw: Matrix, module: SeifertModule, eta: int = 1) -> SeifertForm:
    """``(theta - eta theta*) e`` for a map ``theta : (P, e) -> (P*, 1 - e*)``.

    The result is a Seifert form with the same ``theta - eta theta*``; it
    need not be nonsingular.
    """
    _check_eta(eta)
    if theta_raw.shape != (module.rank, module.rank):
        raise ShapeMismatch(f"theta has shape {theta_raw.shape}, module rank {module.rank}")
    if not intertwines(module, dual_module(module), theta_raw):
        raise NotIntertwining("theta does not intertwine (P, e) and (P*, 1 - e*)")
    theta = lambda_of(theta_raw, eta) @ module.e
    return SeifertForm(module, theta, eta)


# ---------------------------------------------------------------------------
# Blanchfield forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlanchfieldForm:
    """``phi = zeta o B(g_phi) t^-k`` on the covering of ``module``."""
    module: SeifertModule
    g_phi: Matrix
    k: int
    eta: int

    def __post_init__(self):
        _check_eta(self.eta)
        n = self.module.rank
        if self.g_phi.shape != (n, n):
            raise ShapeMismatch(f"g_phi has shape {self.g_phi.shape}, module rank {n}")
        if self.k < 0:
            raise ValidationError("k must be non-negative")
        if not intertwines(self.module, dual_module(self.module), self.g_phi):
            raise NotIntertwining("g_phi does not intertwine (P, e) and (P*, 1 - e*)")

    @property
    def morphism(self) -> BlanchfieldMorphism:
        return BlanchfieldMorphism(self.module, dual_module(self.module), self.g_phi, self.k)

    def adjoint(self) -> BlanchfieldMorphism:
        """The pair representing ``eta phi^``, via ``-z = (1-e)^2 t^-1``."""
        m = self.module
        one_minus = m.one() - m.e.dual()
        g = (one_minus @ one_minus @ self.g_phi.dual()).scale(-self.eta)
        return BlanchfieldMorphism(m, dual_module(m), g, self.k + 1)

    def is_symmetric(self) -> bool:
        return morphism_equal(self.morphism, self.adjoint())


def cover_form(f: SeifertForm) -> BlanchfieldForm:
    if not f.nonsingular:
        raise SingularForm("only nonsingular Seifert forms have a Blanchfield covering")
    return BlanchfieldForm(f.module, f.theta, 1, f.eta)


def check_form_morphism(g: Matrix, k: int, src: SeifertForm, tgt: SeifertForm) -> bool:
    """Does ``B(g) t^-k`` carry the covering form of ``tgt`` back to that of
    ``src``?

    Tested as the morphism equality ``(g* lam' g, 2k) == (lam, 0)`` on the
    covering of ``src``, which contains the literal identity
    ``g* lam' g = lam (e(1-e))^(2k)`` as a special case.
    """
    if not intertwines(src.module, tgt.module, g):
        return False
    lhs = BlanchfieldMorphism(src.module, dual_module(src.module),
                              g.dual() @ tgt.lam @ g, 2 * k)
    rhs = BlanchfieldMorphism(src.module, dual_module(src.module), src.lam, 0)
    return morphism_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# uncover
# ---------------------------------------------------------------------------

def splitting_polys(k):
    """Integer polynomials ``P`` and ``c`` in one variable with

    * ``P(x) + P(1-x) = 1``, ``P = 0 mod x^k`` and ``P = 1 mod (1-x)^k``;
    * ``P(x) P(1-x) = (x(1-x))^k c(x)``.

    For ``k = 1`` these are ``P = x`` and ``c = 1``.
    """
    x = LaurentPoly({1: 1})
    y = LaurentPoly({0: 1, 1: -1})
    big = 2 * k - 1
    p = LaurentPoly({})
    q = LaurentPoly({})
    for i in range(k, big + 1):
        p = p + x ** i * y ** (big - i) * comb(big, i)
        q = q + y ** i * x ** (big - i) * comb(big, i)
    require(p + q == LaurentPoly({0: 1}), "P(x) + P(1-x) != 1")
    c = (p * q).divmod_exact((x * y) ** k)
    require(c is not None, "(x(1-x))^k does not divide P(x)P(1-x)")
    to_list = lambda f: [f.coeff(d) for d in range(f.high_degree + 1)] if f else []
    return to_list(p), to_list(c)


@dataclass
class UncoverTrace:
    shortcut: bool
    twist: int
    theta: Matrix
    input_rank: int
    k: int = 0
    h: Matrix | None = None
    h_prime: Matrix | None = None
    p0: Matrix | None = None
    p1: Matrix | None = None
    q_prime: Matrix | None = None
    p_plus: Matrix | None = None
    p_minus: Matrix | None = None
    lam: Matrix | None = None
    split: IdempotentSplit | None = None
    minus_rank: int | None = None
    candidate: Matrix | None = None
    candidate_ok: bool | None = None
    candidate_exponent: int | None = None
    notes: list = field(default_factory=list)

    @property
    def output_rank(self):
        return self.split.rank if self.split is not None else self.input_rank


def _normalize_k(b: BlanchfieldForm):
    """Return ``(g, twist)`` with ``phi`` represented (up to the twist) as
    ``B(g) t^-1``.

    ``k = 0`` is exact: ``B(g) = B(g e(1-e)) t^-1``.  For ``k > 1`` the form
    is replaced by its pullback along ``s^(k-1)``, which is isomorphic and
    equals ``t^(k-1) phi``.
    """
    if b.k == 0:
        return b.g_phi @ b.module.t_matrix(), 0
    return b.g_phi, b.k - 1


def uncover(b: BlanchfieldForm, *, search_candidate=True):
    """A nonsingular Seifert form whose covering is isomorphic to ``b``.

    Returns ``(form, trace)``.  When ``theta - eta theta*`` is already
    invertible the symmetrized form is returned unchanged.  Otherwise the
    form is rebuilt on the summand ``im(p+)`` of ``P* + P``.
    """
    if not b.is_symmetric():
        raise NotSymmetric("the Blanchfield form is not eta-symmetric")
    m, eta = b.module, b.eta
    ring = m.ring
    n = m.rank
    g, twist = _normalize_k(b)
    form = symmetrize(g, m, eta)
    theta = form.theta
    dual = dual_module(m)
    require(morphism_equal(BlanchfieldMorphism(m, dual, theta, 1),
                           BlanchfieldMorphism(m, dual, g, 1)),
            "symmetrization changed the Blanchfield form")
    lam = form.lam
    trace = UncoverTrace(shortcut=True, twist=twist, theta=theta, input_rank=n)
    if is_invertible(lam):
        return form, trace

    trace.shortcut = False
    cert = invert_with_certificate(BlanchfieldMorphism(m, dual, lam, 0))
    if cert is None:
        raise NotNonsingularForm("the Blanchfield form is not an isomorphism")
    h, k = cert.h, cert.j
    require(k >= 1, "lam invertible but the shortcut was not taken")
    result = glue(form, h, k, trace)
    if search_candidate:
        _search_isometry(result, form, trace)
    return result, trace


def _search_isometry(result: SeifertForm, form: SeifertForm, trace: UncoverTrace):
    """Look for an explicit isometry from the covering of ``result`` to that
    of ``form``.

    Candidates are ``c e'^a (1-e')^b`` with ``c`` the projection of
    ``im(p+)`` onto the ``P`` coordinate (it intertwines ``e+`` and ``e``),
    ``a, b <= 1`` and t-exponents up to ``rank + 1``.  Only reported.
    """
    n, ring = form.rank, form.ring
    c = block_matrix([[Matrix.zeros(n, n, ring), Matrix.identity(n, ring)]], ring)
    c = c @ trace.split.image_basis
    e = result.e
    one = result.module.one()
    for a in (0, 1):
        for b in (0, 1):
            g = c @ e ** a @ (one - e) ** b
            for j in range(n + 2):
                if check_form_morphism(g, j, result, form):
                    trace.candidate = g
                    trace.candidate_ok = True
                    trace.candidate_exponent = j
                    return
    trace.candidate = c
    trace.candidate_ok = False
    trace.notes.append("no isometry found among the projection candidates")


def glue(form: SeifertForm, h: Matrix, k: int, trace: UncoverTrace | None = None) -> SeifertForm:
    """Rebuild a nonsingular form from ``form`` and a homotopy inverse ``h``
    of ``lam`` (``h lam = (e(1-e))^k``, ``lam h = (e*(1-e*))^k``).

    The answer lives on the image of an idempotent ``p+`` of ``P* + P``.
    """
    m, eta, lam = form.module, form.eta, form.lam
    ring = m.ring
    n = m.rank
    dual = dual_module(m)
    e = m.e
    one = m.one()
    estar = e.dual()
    t_p = m.t_matrix()
    t_dual = dual.t_matrix()

    h_prime = e @ h - (h.dual() @ estar).scale(eta)
    require(h_prime @ lam == t_p ** k, "h' lam != (e(1-e))^k")
    require(lam @ h_prime == t_dual ** k, "lam h' != (e*(1-e*))^k")

    pk, ck = splitting_polys(k)
    p0 = eval_poly(pk, one - estar)
    p1 = eval_poly(pk, e)
    q_prime = eval_poly(ck, e) @ h_prime
    require(lam @ q_prime == p0 - p0 @ p0, "lam q' != p0 - p0^2")
    require(q_prime @ lam == p1 - p1 @ p1, "q' lam != p1 - p1^2")
    require(q_prime @ p0 == p1 @ q_prime, "q' p0 != p1 q'")
    require(lam @ p1 == p0 @ lam, "lam p1 != p0 lam")
    require(q_prime.dual().scale(-eta) == q_prime, "q' is not (-eta)-symmetric")

    p_plus = block_matrix([[p0, lam], [q_prime, one - p1]], ring)
    big_one = Matrix.identity(2 * n, ring)
    p_minus = big_one - p_plus
    require(p_plus @ p_plus == p_plus, "p+ is not idempotent")
    require(p_minus @ p_minus == p_minus, "p- is not idempotent")
    require(p_plus + p_minus == big_one, "p+ + p- != 1")

    # the hyperbolic pairing of P* + P; restricted to im(p+) it is unimodular
    zero = Matrix.zeros(n, n, ring)
    lam_big = block_matrix([[zero, one.scale(-eta)], [one, zero]], ring)
    require(lam_big.dual().scale(-eta) == lam_big, "big form is not (-eta)-symmetric")

    e_big = block_matrix([[one - estar, zero], [zero, e]], ring)
    require(e_big @ p_plus == p_plus @ e_big, "p+ does not commute with the endomorphism")

    split = split_idempotent(p_plus)
    basis = split.image_basis
    e_plus = split.restrict(e_big)
    lam_plus = basis.dual() @ lam_big @ basis
    require(is_invertible(lam_plus), "restricted form is singular")
    theta_plus = lam_plus @ e_plus
    result = SeifertForm(SeifertModule(e_plus), theta_plus, eta)
    require(result.lam == lam_plus, "restricted form is not a Seifert form")
    require(result.nonsingular, "output form is singular")

    if trace is not None:
        trace.k = k
        trace.h, trace.h_prime = h, h_prime
        trace.p0, trace.p1, trace.q_prime = p0, p1, q_prime
        trace.p_plus, trace.p_minus = p_plus, p_minus
        trace.lam = lam_big
        trace.split = split
        trace.minus_rank = 2 * n - split.rank
    return result


@dataclass(frozen=True)
class RankCertificate:
    skipped: bool
    holds: bool
    output_rank: int
    expected_rank: int
    presentation_degree: int
    base_rank: int
    plus_rank: int | None = None
    minus_rank: int | None = None

    @property
    def doubled_identity(self):
        """``rank(P+) + rank(P-) = 2 rank(P)``, which always holds."""
        if self.plus_rank is None:
            return True
        return self.plus_rank + self.minus_rank == 2 * self.base_rank


def rank_certificate(trace: UncoverTrace, presentation: BlanchfieldPresentation | None = None,
                     module: SeifertModule | None = None) -> RankCertificate:
    """Compare ``rank(P')`` with ``k rank(P0)``, ``k`` the z-degree of the
    input presentation.  A shortcut run is reported as skipped."""
    if presentation is None and module is not None:
        presentation = covering(module)
    if presentation is not None:
        d = presentation.d
        low = d.low_degree()
        deg = d.high_degree() - min(low, 0) if any(x for x in d.entries()) else 0
        base = presentation.rank
    else:
        deg, base = 1, trace.input_rank
    expected = deg * base
    if trace.shortcut:
        return RankCertificate(True, True, trace.output_rank, expected, deg, base)
    return RankCertificate(False, trace.output_rank == expected, trace.output_rank, expected,
                           deg, base, trace.split.rank, trace.minus_rank)


# ---------------------------------------------------------------------------
# the localized form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LocalizedForm:
    rank: int
    matrix: tuple
    eta: int

    def entry(self, i, j) -> LocalizedElement:
        return self.matrix[i][j]

    def involute_transpose(self):
        return tuple(tuple(self.matrix[j][i].involute() for j in range(self.rank))
                     for i in range(self.rank))

    def hermitian_defect(self):
        """``M - eta * conj(M)^T``."""
        bar = self.involute_transpose()
        return tuple(tuple(self.matrix[i][j] - bar[i][j] * self.eta for j in range(self.rank))
                     for i in range(self.rank))


def localize_form(f: SeifertForm) -> LocalizedForm:
    """``(1 - z) theta`` over the ring with ``z`` and ``1 - z`` inverted."""
    if not f.nonsingular:
        raise SingularForm("only nonsingular forms are localized")
    ring = f.ring
    w = LocalizedElement(one_minus_z(ring))
    n = f.rank
    mat = tuple(tuple(w * LaurentPoly.constant(f.theta[i, j], ring) for j in range(n))
                for i in range(n))
    out = LocalizedForm(n, mat, f.eta)
    # the defect computed entrywise must equal (1-z) theta - eta (1-z^-1) theta*
    w_bar = w.involute()
    direct = tuple(tuple(w * LaurentPoly.constant(f.theta[i, j], ring)
                         - w_bar * LaurentPoly.constant(f.theta[j, i], ring) * f.eta
                         for j in range(n)) for i in range(n))
    defect = out.hermitian_defect()
    require(defect == direct, "hermitian defect mismatch")
    require(all(a.cross_equal(b) for ra, rb in zip(defect, direct) for a, b in zip(ra, rb)),
            "hermitian defect mismatch under cross-multiplication")
    return out


def localized_defect_determinant(f: SeifertForm) -> LaurentPoly:
    """``det((1-z) theta - eta (1-z^-1) theta*)`` as a Laurent polynomial.

    Over the localization this is a unit times the Alexander-type
    polynomial ``det(theta - z theta*)`` (up to units ``z^a (1-z)^b``); it is
    reported, not used to decide anything.
    """
    ring = f.ring
    w = one_minus_z(ring)
    w_bar = w.involute()
    n = f.rank
    mat = LaurentMatrix.from_rows(
        [[w * f.theta[i, j] - w_bar * (f.eta * f.theta[j, i]) for j in range(n)]
         for i in range(n)], ring, cols=n)
    return laurent_det(mat)
