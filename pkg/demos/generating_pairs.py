#!/usr/bin/env python3
"""Generating pairs of A4, S4 and A5 up to automorphism.

The counts are checked against a brute force search that conjugates inside
S4 or S5, which realises the full automorphism group in each case.
"""
from maxsym.permgroup import classify_generating_pairs, format_cycles, standard_group
from maxsym.verify import FACTS, brute_force_pair_classes

for label, r, s, _ in FACTS:
    G = standard_group(label)
    classes = classify_generating_pairs(G, r, s)
    brute = brute_force_pair_classes(label, r, s)
    print(f"{label} ({r},{s}): {len(classes)} class(es), brute force {len(brute)}")
    for c in classes:
        x, y = c.representative
        print(f"    x={format_cycles(x):10s} y={format_cycles(y):10s}  |class|={c.class_size}")

S4 = standard_group("S4")
print("\nS4 (3,3):", len(classify_generating_pairs(S4, 3, 3)), "classes  (two 3-cycles only generate A4)")
