#!/usr/bin/env python3
"""Bordered surfaces with maximal symmetry, indexed by algebraic genus alpha.

For each exceptional alpha we list every case (a) and case (b) quotient,
with the number of boundary components and the resulting surface type.
"""
from maxsym.classify import cea_o, ea, ea_o, enumerate_bordered_cases

for alpha in (2, 3, 4):
    print(f"CEA° alpha={alpha}:", ", ".join(map(str, cea_o(alpha).surfaces)))

print()
for alpha in (3, 5, 7, 11, 19, 21, 29):
    res = ea_o(alpha)
    print(f"alpha={alpha:2d}  EA°={res.order:3d}  EA={ea(alpha).order:3d}  "
          + "  ".join(str(s) for s in res.surfaces))
    for c in enumerate_bordered_cases(alpha):
        kind = "orientable" if c.orientable else "non-orientable"
        print(f"      {c.group} {c.rs} case {c.case}: b={c.boundary:2d} {kind:15s} {c.surface}")
