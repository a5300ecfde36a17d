#!/usr/bin/env python3
"""The verdict engine on Noether's problem: is k(G) retract k-rational?

Answers are Yes / No / Unknown with a trace of cited rules; Unknown is an
honest answer, since the known criteria do not decide every pair (G, k).
"""

from retractrat import COMPLEX, RATIONALS, catalog_group, noether_verdict, replay_trace
from retractrat.groups import cyclic_group
from retractrat.verdict import parse_field

CASES = [
    ("C8", RATIONALS),
    ("C16", RATIONALS),
    ("C12", RATIONALS),
    ("S3", RATIONALS),
    ("S3", COMPLEX),
    ("D8", COMPLEX),
    ("Q8", COMPLEX),
    ("Q8", RATIONALS),
    ("A4", COMPLEX),
    ("V4", COMPLEX),
]

for name, field in CASES:
    G = catalog_group(name)
    v = noether_verdict(G, field)
    print(f"k(G) for G = {name} over {field.name}: {v.answer}")
    for step in v.trace:
        print(f"   [{step.rule}] {step.premises}")
    if v.implications:
        print(f"   => {v.implications[0]}")
    print(f"   trace replays: {replay_trace(v)}")
    print()

print("== A classical pair ==")
v47 = noether_verdict(cyclic_group(47), RATIONALS)
print(f"Q(C47): {v47.answer} - retract rational, although it is famously not")
print("rational (the class number of Q(zeta_47) obstructs rationality but not")
print("retract rationality).")

print("\n== A field that only partially answers ==")
k = parse_field({"name": "k?", "cyclotomic_2power_cyclic": {}})
v = noether_verdict(catalog_group("C8"), k)
print(f"k(C8) over a field with unknown cyclotomic behavior: {v.answer}")
print("the partial trace shows which oracle answer was missing:")
for step in v.trace:
    print(f"   [{step.rule}] {step.premises}")

print("\n== Quaternion group over Q: honestly Unknown ==")
v = noether_verdict(catalog_group("Q8"), RATIONALS)
print(f"Q(Q8): {v.answer}")
print("(the abelian-normal rule needs zeta_4 in k and no other rule applies;")
print(" settling this pair takes machinery outside the implemented criteria,")
print(" so the engine reports Unknown rather than guessing)")
