"""Randomised property campaigns: the uncover roundtrip and a self-test."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .blanchfield import (compose, covering, dual_of_morphism, identity, invert_with_certificate,
                          morphism_equal, seifertize)
from .errors import AlgebraError, InternalAssertion
from .forms import cover_form, rank_certificate, uncover
from .invariants import alexander, determinant_invariant, signature
from .laurent import associated, laurent_det
from .random_objects import (make_rng, pad_form, random_invertible_morphism, random_module,
                             random_nonsingular_form, random_pad, random_presentation)
from .seifert import is_near_projection, split_near_projection


@dataclass
class RoundtripResult:
    index: int
    eta: int
    rank: int
    padded: bool
    shortcut: bool
    k: int
    output_rank: int
    alexander_ok: bool
    signature_ok: bool | None
    determinant_ok: bool
    nonsingular: bool
    rank_certificate: bool | None
    isometry_found: bool | None
    error: str | None = None

    @property
    def ok(self):
        return (self.error is None and self.nonsingular and self.alexander_ok
                and self.determinant_ok and self.signature_ok is not False)


def roundtrip_instance(rng, index, max_rank=4, pad_every=3) -> RoundtripResult:
    eta = 1 if index % 2 == 0 else -1
    form = random_nonsingular_form(rng, eta, max_rank=max_rank)
    padded = pad_every > 0 and index % pad_every == 0
    b = pad_form(form, random_pad(rng)) if padded else cover_form(form)
    try:
        out, trace = uncover(b)
    except (AlgebraError, InternalAssertion) as exc:
        return RoundtripResult(index, eta, b.module.rank, padded, False, 0, 0, False, None,
                               False, False, None, None, error=f"{type(exc).__name__}: {exc}")
    cert = rank_certificate(trace, module=b.module)
    return RoundtripResult(
        index=index, eta=eta, rank=b.module.rank, padded=padded,
        shortcut=trace.shortcut, k=trace.k, output_rank=out.rank,
        alexander_ok=alexander(out) == alexander(form),
        signature_ok=(signature(out) == signature(form)) if eta == 1 else None,
        determinant_ok=determinant_invariant(out) == determinant_invariant(form),
        nonsingular=out.nonsingular,
        rank_certificate=None if cert.skipped else cert.holds,
        isometry_found=trace.candidate_ok,
    )


def run_roundtrip(seed=0, count=100, max_rank=4, pad_every=3):
    rng = make_rng(seed)
    return [roundtrip_instance(rng, i, max_rank, pad_every) for i in range(count)]


def summarize(results):
    full = [r for r in results if not r.shortcut and r.error is None]
    return {
        "count": len(results),
        "matches": sum(r.ok for r in results),
        "full_path": len(full),
        "rank_certificate_holds": sum(bool(r.rank_certificate) for r in full),
        "isometry_found": sum(bool(r.isometry_found) for r in full),
        "errors": [r.error for r in results if r.error],
        "failures": [asdict(r) for r in results if not r.ok],
    }


def selftest(seed=0, scale=1.0):
    """Scaled-down versions of the property suites; returns ``{name: (passed, total)}``."""
    rng = make_rng(seed)
    out = {}
    start = time.perf_counter()

    n = max(1, int(100 * scale))
    agree = split_ok = 0
    for _ in range(n):
        m = random_module(rng)
        k = is_near_projection(m)
        agree += (k is not None) == laurent_det(covering(m).d).is_unit()
        if k is not None:
            split_near_projection(m)
        split_ok += 1
    out["near_projection"] = (agree, n)
    out["splitting"] = (split_ok, n)

    n = max(1, int(50 * scale))
    ok = 0
    for _ in range(n):
        b = random_presentation(rng)
        m = seifertize(b)
        ok += associated(laurent_det(covering(m).d), laurent_det(b.d))
    out["seifertize"] = (ok, n)

    n = max(1, int(50 * scale))
    ok = 0
    for _ in range(n):
        f, _a = random_invertible_morphism(rng)
        cert = invert_with_certificate(f)
        ok += (cert is not None
               and morphism_equal(compose(f, cert.inverse), identity(f.target))
               and morphism_equal(compose(cert.inverse, f), identity(f.source))
               and morphism_equal(dual_of_morphism(dual_of_morphism(f)), f))
    out["morphisms"] = (ok, n)

    n = max(1, int(30 * scale))
    ok = 0
    for i in range(n):
        f = random_nonsingular_form(rng, 1 if i % 2 == 0 else -1)
        ok += cover_form(f).is_symmetric()
    out["symmetry"] = (ok, n)

    res = run_roundtrip(seed, max(1, int(30 * scale)))
    out["roundtrip"] = (sum(r.ok for r in res), len(res))
    out["_seconds"] = time.perf_counter() - start
    return out
