"""Emit the defining relations of a twisted deformation in both formats.

Generates the full relation list for a rank-2 example with a nontrivial tau
twist and prints the LaTeX rendering, then reports the relation census for a
few ranks.
"""

from fractions import Fraction
from math import comb, factorial

from sutwist.classification import ParamTuple, SkewBicharacter
from sutwist.lattice import TauVector
from sutwist.presentation import generate_relations, serialize
from sutwist.scalars import UnitAngle


def main() -> None:
    p = ParamTuple(
        2,
        Fraction(1, 2),
        TauVector(2, [UnitAngle(Fraction(1, 2))]),
        SkewBicharacter.from_upper_block(2, {}),
    )
    rels = generate_relations(p)
    print(serialize(rels, "latex"))
    print()
    for n in (2, 3, 4):
        pn = ParamTuple(
            n,
            Fraction(1, 2),
            TauVector(n, [UnitAngle(Fraction(0))] * (n - 1)),
            SkewBicharacter.from_upper_block(n, {}),
        )
        count = len(generate_relations(pn))
        predicted = 2 * n * comb(n, 2) + 2 * comb(n, 2) ** 2 + 1
        det_terms = factorial(n) + 1
        print(
            f"n = {n}: {count} relations (census predicts {predicted}); "
            f"determinant relation has {det_terms} terms"
        )


if __name__ == "__main__":
    main()
