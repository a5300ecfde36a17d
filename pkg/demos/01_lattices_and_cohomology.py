#!/usr/bin/env python3
"""Build some integral representations and compute their Tate cohomology.

A G-lattice is a finite group acting on Z^n by unimodular integer matrices.
The three rank-1 examples over C2 already show all the behaviors: the
trivial lattice, the regular (permutation) lattice, and the sign lattice.
"""

from retractrat import GLattice, Mat, catalog_group, profile, tate_minus1, tate_zero, h1
from retractrat.lattices import regular_lattice, trivial_lattice

C2 = catalog_group("C2")
full = C2.full_subgroup()

print("== Three lattices over C2 ==")
Z = trivial_lattice(C2)
ZC2 = regular_lattice(C2)
sign = GLattice(C2, 1, {1: Mat.from_rows([[-1]])})

for name, M in [("trivial Z", Z), ("regular Z[C2]", ZC2), ("sign", sign)]:
    print(f"\n{name}: generator acts by {M.act(1).a}")
    print(f"  Tate H^-1(C2, M) = {tate_minus1(full, M)}")
    print(f"  Tate H^0 (C2, M) = {tate_zero(full, M)}")
    print(f"  H^1      (C2, M) = {h1(full, M)}")

print("""
The sign lattice is the interesting one: H^-1 and H^1 are both Z/2, so it
is neither flabby (H^-1 must vanish at every subgroup) nor coflabby (H^1
must vanish).  Permutation lattices are always both.
""")

print("== Profiles over a bigger group ==")
S3 = catalog_group("S3")
M = regular_lattice(S3)
p = profile(M)
print(f"regular lattice over S3: flabby={p.is_flabby}, coflabby={p.is_coflabby}")
for members, (hm1, hone) in p.entries.items():
    print(f"  subgroup {members}: H^-1 = {hm1}, H^1 = {hone}")

print("""
The profile quantifies over subgroups of prime-power order; that is enough
because restriction to Sylow subgroups is injective on Tate cohomology.
Pass subgroups="all" to sweep every subgroup instead.
""")
