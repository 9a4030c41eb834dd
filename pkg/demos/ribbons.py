#!/usr/bin/env python3
"""Thicken symmetric graphs into ribbons and read off their surface type.

Builds the platonic 1-skeleta, the genus-21 double dodecahedron and the
rhombic triacontahedron, traces boundaries of the thickened graph, compares
with the polygon-complex oracle, and writes one model as OBJ.
"""
import sys
from pathlib import Path

from maxsym.constructions import (build_genus21, build_platonic, build_triacontahedron, check_invariance,
                                  export_geometry, fixtures, polygon_surface_type, ribbon_from_embedding,
                                  ribbon_surface_type)

for which in "TCODI":
    graph, rot, full = build_platonic(which)
    R = ribbon_from_embedding(graph)
    flat, twisted = ribbon_surface_type(R), ribbon_surface_type(R.with_twists([1] * R.E))
    print(f"{which}: alpha={graph.genus:2d} |G+|={rot.order} |G|={full.order}  flat {flat}  twisted {twisted}")

graph, G = build_genus21()
assert check_invariance(G, graph)
R = ribbon_from_embedding(graph)
print(f"\ngenus21: V={graph.V} E={graph.E} |G|={G.order}  {ribbon_surface_type(R)}")

graph, G = build_triacontahedron()
print(f"triacontahedron: V={graph.V} E={graph.E} |G|={G.order}")

print("\nfixtures (rotation steps per degree, uniform twist):")
for name, fx in sorted(fixtures.FIXTURES.items()):
    R = fixtures.load(name)
    st = ribbon_surface_type(R)
    assert st == polygon_surface_type(R) == fx.expect
    print(f"    {name:12s} steps={fx.steps} twist={fx.twist}  {st}")

out = Path(sys.argv[1] if len(sys.argv) > 1 else "ico-N10-10.obj")
out.write_bytes(export_geometry(fixtures.load("ico-N10-10"), "obj"))
print("\nwrote", out)
