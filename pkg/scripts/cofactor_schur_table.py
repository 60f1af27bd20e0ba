"""Print F_k(f, g) in the Schur basis of A u {x} and confirm it by evaluation.

    python scripts/cofactor_schur_table.py --A 1,2,5 --B 3,4,7,9 --k 1
"""

import argparse
from fractions import Fraction

from sylvsum.field import scalar_format, scalar_parse
from sylvsum.poly import poly_from_roots, render
from sylvsum.schur import cofactor_schur_expansion, schur_eval
from sylvsum.subres import bezout_cofactors_det


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--A", default="1,2,5")
    ap.add_argument("--B", default="3,4,7,9")
    ap.add_argument("--k", type=int, default=1)
    args = ap.parse_args()
    A = tuple(scalar_parse(v) for v in args.A.split(","))
    B = tuple(scalar_parse(v) for v in args.B.split(","))
    f, g = poly_from_roots(A), poly_from_roots(B)
    F, _ = bezout_cofactors_det(f, g, args.k)
    terms = cofactor_schur_expansion(A, g, args.k)
    print(f"F_{args.k} = {render(F)}")
    for c, lam in terms:
        print(f"  {scalar_format(c):>12} * s{lam.parts}")
    t = Fraction(max(A + B) + 1)
    total = sum(c * schur_eval(lam, A + (t,)) for c, lam in terms)
    print(f"at x = {t}: expansion {total}, direct {F(t)}, {'ok' if total == F(t) else 'MISMATCH'}")


if __name__ == "__main__":
    main()
