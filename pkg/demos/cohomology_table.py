"""Tabulate the 3-cocycle classes on Z/n attached to the tau parameters.

For each n-torsion vector tau the 2-cochain c_tau on the weight lattice has a
coboundary that descends to a 3-cocycle on Z/n; its cohomology class is a
single residue mod n.  The table shows how the n^(n-1) vectors distribute
over the n classes.
"""

from collections import Counter

from sutwist.cohomology import cyclic_class_invariant
from sutwist.lattice import all_tau_vectors, descend_c_tau


def main() -> None:
    for n in (2, 3, 4):
        print(f"n = {n}:")
        counts: Counter = Counter()
        for tau in all_tau_vectors(n):
            idx = cyclic_class_invariant(descend_c_tau(tau))
            counts[idx] += 1
            if n <= 3:
                entries = ", ".join(str(a) for a in tau.entries)
                print(f"  tau = ({entries})  ->  class {idx}")
        dist = "  ".join(f"class {k}: {counts[k]}" for k in sorted(counts))
        print(f"  distribution over {n ** (n - 1)} vectors: {dist}\n")


if __name__ == "__main__":
    main()
