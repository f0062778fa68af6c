"""Recover a nonsingular Seifert form from a Blanchfield form whose
representing matrix is singular.

The trefoil form is carried on its module plus a nilpotent summand with
zero pairing.  The covering of the summand vanishes, so the Blanchfield
form is unchanged, but theta - theta* is no longer invertible and uncover
has to take the long route through the idempotent p+.

    python3 demos/uncover_padded.py
"""

from seifert_blanchfield import (Matrix, SeifertModule, alexander, determinant_invariant, knot,
                                 rank_certificate, signature, uncover)
from seifert_blanchfield.random_objects import pad_form


def main():
    f = knot("trefoil").form()
    b = pad_form(f, SeifertModule(Matrix.from_rows([[0, 1], [0, 0]])))
    print("input module e:", b.module.e.tolist())
    print("input g_phi:   ", b.g_phi.tolist())
    out, trace = uncover(b)
    print("shortcut taken:", trace.shortcut, " homotopy exponent k:", trace.k)
    print("p+ rank:", trace.split.rank, " p- rank:", trace.minus_rank)
    print("output theta:  ", out.theta.tolist())
    print("output e:      ", out.e.tolist())
    print("nonsingular:   ", out.nonsingular)
    print("alexander  ", alexander(f), "->", alexander(out))
    print("signature  ", signature(f), "->", signature(out))
    print("determinant", determinant_invariant(f), "->", determinant_invariant(out))
    print("explicit isometry found:", trace.candidate_ok,
          "with t-exponent", trace.candidate_exponent)
    cert = rank_certificate(trace, module=b.module)
    print(f"rank certificate: rank(P') = {cert.output_rank}, "
          f"k rank(P0) = {cert.expected_rank}, holds = {cert.holds}")
    print("rank(P+) + rank(P-) = 2 rank(P):", cert.doubled_identity)


if __name__ == "__main__":
    main()
