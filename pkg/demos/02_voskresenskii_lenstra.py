#!/usr/bin/env python3
"""Why Q(C8) is not retract Q-rational: the units-congruence kernel lattice.

For q = 2^n the unit group pi = (Z/q)^x acts on the free lattice with basis
indexed by the nonzero residues mod q, via t . e_i = e_{ti}.  The kernel of
the degree map phi(e_i) = i (mod q) is a pi-lattice of rank q-1.  For
n >= 3 it is coflabby but NOT flabby: Tate H^-1 is Z/2 at the unique Klein
four subgroup.  Its flabby class is therefore not invertible, and the torus
criterion turns that into a definitive No for retract rationality.
"""

from retractrat import lenstra_lattice, profile, tate_minus1, torus_verdict
from retractrat.resolutions import flabby_resolution, is_invertible

for n in (2, 3, 4):
    data = lenstra_lattice(n)
    q, pi, M = data.q, data.pi, data.M
    print(f"== q = {q}: pi = (Z/{q})^x of order {pi.order}, kernel lattice rank {M.rank} ==")

    prof = profile(M, subgroups="all")
    print(f"  coflabby (H^1 = 0 everywhere): {prof.is_coflabby}")
    print(f"  flabby  (H^-1 = 0 everywhere): {prof.is_flabby}")
    for s in pi.subgroups():
        if s.order == 4 and not s.is_cyclic():
            print(f"  Tate H^-1 at the Klein four subgroup {s.members}: "
                  f"{tate_minus1(s, M)}")

    res = flabby_resolution(M)
    dec = is_invertible(res.F)
    print(f"  flabby resolution: P rank {res.P.rank}, tail F rank {res.F.rank}")
    print(f"  flabby class invertible: {dec.answer}")

    v = torus_verdict(M)
    print(f"  torus verdict: {v.answer}")
    for step in v.trace:
        print(f"    [{step.rule}] {step.premises}")
    print()

print("""For q = 4 the acting group is cyclic, every flabby class over a cyclic
group is invertible, and the verdict is Yes.  From q = 8 on the class
obstruction appears, which is exactly the statement that k(C_{2^n}) is not
retract k-rational when k(zeta_{2^n})/k is not cyclic - e.g. over Q.""")
