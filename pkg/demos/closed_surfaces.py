#!/usr/bin/env python3
"""Largest symmetry groups of a closed surface of genus g in R^3.

Walks through the cyclic and general bounds, shows where the exceptional
groups A4, S4, A5 win over the dihedral family, and prints the witnesses.
"""
from maxsym.classify import ce, ce_o, e, e_o

print("genus  CE°  CE   E°   E")
for g in range(2, 32):
    print(f"{g:5d} {ce_o(g).order:4d} {ce(g).order:4d} {e_o(g).order:4d} {e(g).order:4d}")

# The exceptional genera: the orientation preserving bound is realised by a
# platonic rotation group rather than by the dihedral group of order 2g+2.
for g in (3, 5, 7, 11, 19, 21, 29):
    res = e_o(g)
    groups = sorted({w.group for w in res.witnesses})
    print(f"\ng={g}: |G|={res.order}, realised by {', '.join(groups)}")

# Genus 9 is dihedral after all: S4 with (3,3) has no generating pair.
res = e_o(9)
print("\ng=9 excluded candidates:")
for w in res.excluded:
    print("   ", w.group, w.rs, w.note)

# Genus 21: A5 cannot be extended by a reflection, so the full bound drops to 88.
res = e(21)
print(f"\ng=21 full group order {res.order} via {[w.group for w in res.witnesses]}")
for w in res.excluded:
    if w.group == "A5":
        print("    excluded:", w.note)
