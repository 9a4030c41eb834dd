"""JSON and OBJ export of embedded graphs and ribbons.

JSON schema ``maxsym-graph/1``::

    {"schema": "maxsym-graph/1",
     "vertices": [[x, y, z], ...] | null,
     "edges": [{"ends": [i, j], "polyline": [[x, y, z], ...], "twist": 0 | 1}, ...],
     "meta": {...}}

A ribbon also stores its rotation system under ``meta.rotation``.  The OBJ
writer emits ``v`` records for vertices and polyline points, one ``l`` record per
edge, and for ribbons a strip of ``f`` quads along every edge whose width
defaults to 0.05 times the shortest edge.
"""
from __future__ import annotations

import json

import numpy as np

from .graphs import EmbeddedGraph
from .ribbon import RibbonGraph, _plane_normal

SCHEMA = "maxsym-graph/1"
BAND_WIDTH_FACTOR = 0.05


def _split(obj):
    if isinstance(obj, RibbonGraph):
        if obj.embedding is None:
            raise ValueError("ribbon has no embedding to export")
        return obj.embedding, obj
    return obj, None


def to_json(obj: EmbeddedGraph | RibbonGraph) -> str:
    graph, ribbon = _split(obj)
    twists = ribbon.twists if ribbon is not None else (0,) * graph.E
    meta = dict(graph.meta)
    meta["n_vertices"] = graph.V
    if ribbon is not None:
        meta["rotation"] = [list(r) for r in ribbon.rotation]
    doc = {
        "schema": SCHEMA,
        "vertices": None if graph.vertices is None else graph.vertices.tolist(),
        "edges": [{"ends": list(e), "polyline": p.tolist(), "twist": int(t)}
                  for e, p, t in zip(graph.edges, graph.polylines, twists)],
        "meta": meta,
    }
    return json.dumps(doc, sort_keys=True) + "\n"


def from_json(text: str) -> EmbeddedGraph | RibbonGraph:
    """Inverse of :func:`to_json`."""
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"expected schema {SCHEMA!r}")
    meta = dict(doc.get("meta", {}))
    rotation = meta.pop("rotation", None)
    n = meta.pop("n_vertices", None)
    edges = [tuple(e["ends"]) for e in doc["edges"]]
    polys = [np.array(e.get("polyline", []), dtype=float).reshape(-1, 3) for e in doc["edges"]]
    verts = doc["vertices"]
    graph = EmbeddedGraph(None if verts is None else np.array(verts, dtype=float), edges, polys,
                          meta=meta, n_vertices=n)
    if rotation is None:
        return graph
    return RibbonGraph(graph.V, tuple(edges), tuple(map(tuple, rotation)),
                       tuple(int(e.get("twist", 0)) for e in doc["edges"]), graph)


def _num(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s == "-0" else s


def to_obj(obj: EmbeddedGraph | RibbonGraph, band_width: float | None = None) -> str:
    graph, ribbon = _split(obj)
    if graph.vertices is None or graph.combinatorial_only:
        raise ValueError("OBJ export needs coordinates")
    lines = [f"# {SCHEMA} {graph.meta.get('model', '')}".rstrip()]
    coords = [tuple(v) for v in graph.vertices]
    edge_idx = []
    for k, (a, b) in enumerate(graph.edges):
        ids = [a]
        for p in graph.polylines[k]:
            coords.append(tuple(p))
            ids.append(len(coords) - 1)
        edge_idx.append(ids + [b])
    faces = []
    if ribbon is not None:
        lengths = [np.linalg.norm(np.diff(graph.edge_points(k), axis=0), axis=1).sum()
                   for k in range(graph.E)]
        width = band_width if band_width is not None else BAND_WIDTH_FACTOR * min(lengths)
        centroid = graph.vertices.mean(axis=0)
        for k in range(graph.E):
            pts = graph.edge_points(k)
            a = graph.edges[k][0]
            nbr = [graph.edge_points(j)[1] - pts[0] if graph.edges[j][0] == a
                   else graph.edge_points(j)[-2] - pts[0]
                   for j in range(graph.E) if a in graph.edges[j]]
            normal = _plane_normal(pts[0], np.array(nbr), centroid)
            cum = np.concatenate([[0], np.cumsum(np.linalg.norm(np.diff(pts, axis=0), axis=1))])
            section = []
            for i, p in enumerate(pts):
                tangent = pts[min(i + 1, len(pts) - 1)] - pts[max(i - 1, 0)]
                tangent /= np.linalg.norm(tangent)
                side = np.cross(normal, tangent)
                if np.linalg.norm(side) < 1e-12:
                    side = np.cross(np.eye(3)[np.argmin(np.abs(tangent))], tangent)
                side /= np.linalg.norm(side)
                up = np.cross(tangent, side)
                theta = np.pi * ribbon.twists[k] * cum[i] / cum[-1]
                off = 0.5 * width * (np.cos(theta) * side + np.sin(theta) * up)
                coords += [tuple(p - off), tuple(p + off)]
                section.append((len(coords) - 2, len(coords) - 1))
            for (l0, r0), (l1, r1) in zip(section, section[1:]):
                faces.append((l0, r0, r1, l1))
    lines += ["v " + " ".join(_num(x) for x in c) for c in coords]
    lines += ["l " + " ".join(str(i + 1) for i in ids) for ids in edge_idx]
    lines += ["f " + " ".join(str(i + 1) for i in f) for f in faces]
    return "\n".join(lines) + "\n"


def export_geometry(obj: EmbeddedGraph | RibbonGraph, fmt: str, band_width: float | None = None) -> bytes:
    if fmt == "json":
        return to_json(obj).encode()
    if fmt == "obj":
        return to_obj(obj, band_width).encode()
    raise ValueError(f"unknown format {fmt!r}")
