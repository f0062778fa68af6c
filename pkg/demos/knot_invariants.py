"""Invariants of the built-in knots, computed from their Seifert matrices.

    python3 demos/knot_invariants.py
"""

from seifert_blanchfield import KNOTS, alexander, determinant_invariant, signature
from seifert_blanchfield.invariants import seifert_oracle_alexander


def main():
    for name, record in KNOTS.items():
        f = record.form()
        p = alexander(f)
        print(f"{name}")
        print(f"  theta       {f.theta.tolist()}")
        print(f"  e           {f.e.tolist()}")
        print(f"  alexander   {p}   (p(1) = {p(1)})")
        print(f"  cross-check {seifert_oracle_alexander(f.theta)}")
        print(f"  signature   {signature(f)}")
        print(f"  determinant {determinant_invariant(f)}")


if __name__ == "__main__":
    main()
