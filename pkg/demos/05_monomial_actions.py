#!/usr/bin/env python3
"""Monomial actions: coefficient extensions and their verdicts.

A monomial action twists a multiplicative lattice action by root-of-unity
coefficients: sigma . x_j = zeta_d^(e_j) * prod_i x_i^(a_ij).  The
coefficients define a module extension 0 -> k^x -> M_alpha -> M -> 0 whose
class decides whether a change of variables removes them again.
"""

from retractrat import (
    COMPLEX,
    GLattice,
    Mat,
    MonomialAction,
    RATIONALS,
    catalog_group,
    extension_class,
    monomial_instance_verdict,
    monomial_universal_verdict,
)
from retractrat.lattices import regular_lattice, trivial_lattice
from retractrat.verdict import parse_field

C2 = catalog_group("C2")
inv = GLattice(C2, 1, {1: Mat.from_rows([[-1]])})

print("== Extension classes of three small actions ==")
cases = [
    ("x -> x (purely monomial)", MonomialAction(trivial_lattice(C2), 4, {1: (0,)})),
    ("x -> zeta_4 * x^-1 (d=4)", MonomialAction(inv, 4, {1: (1,)})),
    ("x -> -x (d=2, trivial exponents)", MonomialAction(trivial_lattice(C2), 2, {1: (1,)})),
    ("x -> -x^-1 (d=2, inversion)", MonomialAction(inv, 2, {1: (1,)})),
]
for label, a in cases:
    ec = extension_class(a)
    print(f"{label}:")
    print(f"   vanishes over mu_d: {ec.vanishes_at_d}; over mu_(d*|G|): {ec.vanishes_stably}")
    if ec.rescaling is not None:
        cleared = ec.rescaled_action()
        print(f"   rescaling witness {ec.rescaling} clears the coefficients: "
              f"{cleared.is_purely_monomial}")
print("""
Note the third case: multiplying a FIXED variable by -1 is never removable
by rescaling, no matter how many roots of unity are available - the class
survives every enlargement.  Combining -1 with inversion (fourth case) IS
removable once zeta_4 exists: rescale x by zeta_4.
""")

print("== The universal criterion over C ==")
for name in ["S3", "C12", "V4", "Q8", "A4"]:
    G = catalog_group(name)
    v = monomial_universal_verdict(G)
    print(f"{name}: all monomial fixed fields retract C-rational? {v.answer} "
          f"(Sylow subgroups all cyclic: {G.all_sylow_cyclic()})")

print("\n== Instance verdicts ==")
S3 = catalog_group("S3")
a = MonomialAction(regular_lattice(S3), 1, {s: tuple([0] * 6) for s in S3.generators})
print(f"purely monomial on Z[S3] over C: {monomial_instance_verdict(S3, a, COMPLEX).answer}")

C3 = catalog_group("C3")
a = MonomialAction(regular_lattice(C3), 1, {1: (0, 0, 0)})
print(f"purely monomial on Z[C3] over Q: {monomial_instance_verdict(C3, a, RATIONALS).answer}")

a = MonomialAction(inv, 4, {1: (1,)})
k8 = parse_field({"name": "Q(zeta_8)", "roots_of_unity": {"4": True, "8": True},
                  "cyclotomic_2power_cyclic": {"2": True, "3": True}})
v = monomial_instance_verdict(C2, a, k8)
print(f"zeta_4-twisted inversion over a field with zeta_8: {v.answer} "
      "(rescaled to purely monomial, then the cyclic criterion)")
