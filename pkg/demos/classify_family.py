"""Walk through the classification of a small family of parameter tuples.

Builds every (tau, omega) pair on a coarse grid at fixed rank and q, prints
the pairwise isomorphism matrix, and groups the tuples by canonical form.
"""

from fractions import Fraction

from sutwist.classification import (
    ParamTuple,
    SkewBicharacter,
    canonical_form,
    is_isomorphic,
    pair_invariant,
)
from sutwist.lattice import TauVector
from sutwist.scalars import UnitAngle


def main() -> None:
    n, q = 3, Fraction(1, 2)
    thirds = [UnitAngle(Fraction(k, 3)) for k in range(3)]
    params = []
    for t1 in thirds:
        for t2 in thirds:
            for w in (Fraction(0), Fraction(1, 6)):
                omega = SkewBicharacter.from_upper_block(n, {(1, 2): UnitAngle(w)})
                params.append(ParamTuple(n, q, TauVector(n, [t1, t2]), omega))

    print(f"{len(params)} parameter tuples at n={n}, q={q}\n")

    print("pairwise isomorphism (d = direct, m = mirror, . = none):")
    for p in params:
        row = "".join(
            {"direct": "d", "mirror": "m", "no": "."}[is_isomorphic(p, r).value]
            for r in params
        )
        print(f"  {row}")

    classes: dict = {}
    for p in params:
        classes.setdefault(canonical_form(p), []).append(p)
    print(f"\n{len(classes)} isomorphism classes:")
    for rep, members in sorted(classes.items(), key=lambda kv: repr(kv[0])):
        inv = pair_invariant(rep)
        print(f"  canonical {rep}  invariant {inv}  ({len(members)} tuples)")


if __name__ == "__main__":
    main()
