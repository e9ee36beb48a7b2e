"""Re-run the exact spin-representation verifications and show the numbers.

Covers the classical and quantum pairing of the two embedding vectors, the
vector-into-double-spin intertwiner, and the Schur test for the invariant
vector at sample rational q.
"""

from fractions import Fraction

from sutwist.spin import (
    check_V_intertwiner,
    pairing_gh,
    pairing_gh_terms,
    theorem_a1_check,
)


def main() -> None:
    for n in (3, 5):
        cl = pairing_gh(n, "classical")
        print(f"n = {n}: classical <g, h> = {cl}   (predicted (-1)^((n+1)/2) n(n-1))")
    qv = pairing_gh(3, "quantum")
    print(f"n = 3: quantum <g, h> = {qv}")
    print(f"       {len(pairing_gh_terms(3, 'quantum'))} monomials, each a signed power of q")
    print()
    for mode in ("classical", "quantum"):
        ok = check_V_intertwiner(3, mode)
        print(f"V -> U+ (x) U+ intertwiner, n=3, {mode}: {'ok' if ok else 'FAILED'}")
    print()
    for q0 in (Fraction(1), Fraction(1, 4), Fraction(4)):
        ok = theorem_a1_check(3, q0)
        print(f"invariant vector gives a nonzero scalar map at q = {q0}: {'ok' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
