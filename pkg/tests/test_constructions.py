import json

import numpy as np
import pytest

from maxsym.constructions import (ArcCollision, EmbeddedGraph, GroupNotFinite, build_dipole,
                                  build_genus21, build_platonic, build_triacontahedron,
                                  check_invariance, export_geometry, from_json, generate_group,
                                  reflection, rotary_reflection, rotation, to_json, to_obj)
from maxsym.constructions.graphs import _segment_distance, arc_clearance


# ------------------------------------------------------------------------- matrices


def test_generate_group_small():
    assert generate_group([rotation([0, 0, 1], 2 * np.pi / 5)]).order == 5
    assert generate_group([]).order == 1
    assert generate_group([reflection([1, 0, 0])]).orientation_reversing_present


def test_generate_group_rejects_non_orthogonal():
    with pytest.raises(ValueError, match="orthogonal"):
        generate_group([np.diag([1.0, 1.0, 1.1])])


def test_generate_group_blowup():
    with pytest.raises(GroupNotFinite, match="not finite within bound"):
        generate_group([rotation([0, 0, 1], 1.0)], max_order=200)


def test_generate_group_deterministic():
    a = generate_group([rotation([1, 1, 1], 2 * np.pi / 3), rotation([1, 0, 0], np.pi)])
    b = generate_group([rotation([1, 0, 0], np.pi), rotation([1, 1, 1], 2 * np.pi / 3)])
    assert a.order == b.order == 12
    assert all(np.allclose(x, y) for x, y in zip(a.elements, b.elements))


def test_group_elements_orthogonal_and_closed():
    _, _, G = build_platonic("I")
    for m in G.elements:
        assert np.max(np.abs(m.T @ m - np.eye(3))) < 1e-9
    rng = np.random.default_rng(0)
    for _ in range(100):
        i, j = rng.integers(G.order, size=2)
        assert G.contains(G.elements[i] @ G.elements[j])


def test_rotary_reflection_order():
    assert generate_group([rotary_reflection([0, 0, 1], np.pi / 5)]).order == 10
    assert generate_group([rotary_reflection([0, 0, 1], np.pi / 2)]).order == 4


# --------------------------------------------------------------------------- graphs


@pytest.mark.parametrize("which,V,E,rot,full", [
    ("T", 4, 6, 12, 24), ("C", 8, 12, 24, 48), ("O", 6, 12, 24, 48),
    ("D", 20, 30, 60, 120), ("I", 12, 30, 60, 120)])
def test_platonic(which, V, E, rot, full):
    graph, R, F = build_platonic(which)
    assert (graph.V, graph.E, graph.genus) == (V, E, E - V + 1)
    assert (R.order, F.order) == (rot, full)
    assert not R.orientation_reversing_present and F.orientation_reversing_present
    assert check_invariance(R, graph) and check_invariance(F, graph)
    assert graph.is_connected()


def test_full_group_contains_rotations():
    _, R, F = build_platonic("T")
    assert all(F.contains(m) for m in R.elements)
    assert F.rotation_subgroup().order == R.order


def test_invariance_counterexample():
    graph, _, _ = build_platonic("I")
    G = generate_group([rotation([0.3, 0.5, 0.8], 2 * np.pi / 5)])
    rep = check_invariance(G, graph)
    assert not rep and rep.element is not None and rep.item.startswith("vertex")


def test_invariance_needs_coordinates():
    g = EmbeddedGraph(None, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        check_invariance(generate_group([]), g)


@pytest.mark.parametrize("g", range(2, 10))
def test_dipole_variant_1(g):
    graph, groups = build_dipole(g, 1)
    assert (graph.V, graph.E, graph.genus) == (2, g + 1, g)
    assert groups["rotation"].order == g + 1
    assert groups["dihedral"].order == 2 * (g + 1)
    assert groups["full"].order == 4 * g + 4
    assert ("rotary_reflection" in groups) == (g % 2 == 0)
    if g % 2 == 0:
        assert groups["rotary_reflection"].order == 2 * g + 2
    for G in groups.values():
        assert check_invariance(G, graph)


@pytest.mark.parametrize("g", [3, 5, 7, 9])
def test_dipole_variant_2(g):
    graph, groups = build_dipole(g, 2)
    assert graph.genus == g
    G = groups["rotary_reflection"]
    assert G.order == 2 * g and check_invariance(G, graph)


@pytest.mark.parametrize("g,v", [(1, 1), (4, 2), (0, 2)])
def test_dipole_parity(g, v):
    with pytest.raises(ValueError):
        build_dipole(g, v)


def test_dipole_rotation_breaks_under_wrong_angle():
    graph, _ = build_dipole(4, 1)
    G = generate_group([rotation([0, 0, 1], 2 * np.pi / 4)])
    assert not check_invariance(G, graph)


def test_genus21():
    graph, G = build_genus21()
    assert (graph.V, graph.E, graph.genus) == (40, 60, 21)
    assert G.order == 60 and check_invariance(G, graph)
    assert graph.is_connected()
    # every arc joins the inner dodecahedron to the outer one, one arc per group element
    assert all(a < 20 <= b for a, b in graph.edges)
    assert len(set(graph.edges)) == 60
    dist, _ = arc_clearance(graph)
    assert dist > 1e-3


def test_genus21_collision_reported():
    with pytest.raises(ArcCollision) as info:
        build_genus21(clearance=10.0)
    assert info.value.pair is not None


def test_segment_distance():
    p = np.array
    assert _segment_distance(p([0., 0, 0]), p([1., 0, 0]), p([0., 1, 0]), p([1., 1, 0])) == pytest.approx(1)
    assert _segment_distance(p([0., 0, 0]), p([1., 0, 0]), p([.5, -1, 0]), p([.5, 1, 0])) == pytest.approx(0)
    assert _segment_distance(p([0., 0, 0]), p([1., 0, 0]), p([2., 0, 1]), p([3., 0, 1])) == pytest.approx(np.sqrt(2))


def test_triacontahedron():
    graph, G = build_triacontahedron()
    assert (graph.V, graph.E, graph.genus) == (32, 60, 29)
    assert sorted(graph.degree(v) for v in range(32)) == [3] * 20 + [5] * 12
    assert check_invariance(G, graph)


# --------------------------------------------------------------------------- export


def test_json_roundtrip_dipole():
    graph, _ = build_dipole(2, 1)
    again = from_json(to_json(graph))
    assert again == graph
    assert to_json(again) == to_json(graph)


def test_json_schema_fields():
    graph, _ = build_genus21()
    doc = json.loads(export_geometry(graph, "json"))
    assert doc["schema"] == "maxsym-graph/1"
    assert len(doc["vertices"]) == 40 and len(doc["edges"]) == 60
    assert set(doc["edges"][0]) == {"ends", "polyline", "twist"}


def test_obj_counts():
    graph, _, _ = build_platonic("I")
    lines = to_obj(graph).splitlines()
    assert sum(x.startswith("v ") for x in lines) == 12
    assert sum(x.startswith("l ") for x in lines) == 30


def test_obj_deterministic_and_combinatorial_refused():
    graph, _ = build_genus21()
    assert export_geometry(graph, "obj") == export_geometry(build_genus21()[0], "obj")
    with pytest.raises(ValueError):
        to_obj(EmbeddedGraph(None, [(0, 0)]))
    with pytest.raises(ValueError):
        export_geometry(graph, "ply")


def test_combinatorial_graph_json():
    g = EmbeddedGraph(None, [(0, 1), (1, 2), (2, 0)])
    assert g.combinatorial_only and g.genus == 1
    assert from_json(to_json(g)) == g
