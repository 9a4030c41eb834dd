"""Ribbon graphs: a disk per vertex, a band per edge, bands possibly half-twisted.

Edge k owns half-edges ``2k`` (at ``edges[k][0]``) and ``2k + 1`` (at
``edges[k][1]``).  Boundary components are found by tracing states
``(half_edge, direction)``; each component is traced once in each direction, so
``b = orbits / 2``.  :func:`polygon_surface_type` computes the same invariants
from an explicit polygon complex and serves as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from ..orbifold import SurfaceType
from .graphs import EmbeddedGraph


class RibbonError(ValueError):
    pass


def half_edge_vertex(edges, h: int) -> int:
    return edges[h // 2][h % 2]


@dataclass(frozen=True)
class RibbonGraph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]
    twists: tuple[int, ...]
    embedding: EmbeddedGraph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))
        if len(self.rotation) != self.n_vertices:
            raise RibbonError("one rotation per vertex")
        if len(self.twists) != len(self.edges) or any(t not in (0, 1) for t in self.twists):
            raise RibbonError("one twist bit per edge")
        seen = set()
        for v, rot in enumerate(self.rotation):
            for h in rot:
                if not 0 <= h < 2 * len(self.edges) or h in seen:
                    raise RibbonError(f"half-edge {h} misplaced or repeated")
                if half_edge_vertex(self.edges, h) != v:
                    raise RibbonError(f"half-edge {h} is not incident to vertex {v}")
                seen.add(h)
        if len(seen) != 2 * len(self.edges):
            raise RibbonError("every half-edge must appear in exactly one rotation")

    @property
    def V(self) -> int:
        return self.n_vertices

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def algebraic_genus(self) -> int:
        return self.E - self.V + 1

    def with_twists(self, twists) -> "RibbonGraph":
        return RibbonGraph(self.n_vertices, self.edges, self.rotation, tuple(twists), self.embedding)

    def with_rotation_steps(self, steps) -> "RibbonGraph":
        """Replace the rotation (h_0, ..., h_{d-1}) at vertex v by (h_0, h_k, h_2k, ...), k = steps[v]."""
        rots = []
        for rot, k in zip(self.rotation, steps):
            d = len(rot)
            if d and gcd(k, d) != 1:
                raise RibbonError(f"step {k} does not generate Z_{d}")
            rots.append(tuple(rot[(i * k) % d] for i in range(d)))
        return RibbonGraph(self.n_vertices, self.edges, tuple(rots), self.twists, self.embedding)

    # ------------------------------------------------------------------ invariants

    def _neighbours(self):
        succ, pred = {}, {}
        for rot in self.rotation:
            for i, h in enumerate(rot):
                succ[h] = rot[(i + 1) % len(rot)]
                pred[h] = rot[i - 1]
        return succ, pred

    def boundary_walks(self) -> list[list[tuple[int, int]]]:
        """Orbits of the face-tracing permutation on states (half-edge, +-1)."""
        succ, pred = self._neighbours()
        seen, orbits = set(), []
        for start in ((h, s) for h in range(2 * self.E) for s in (1, -1)):
            if start in seen:
                continue
            orbit, state = [], start
            while state not in seen:
                seen.add(state)
                orbit.append(state)
                h, s = state
                other = h ^ 1
                if self.twists[h // 2]:
                    s = -s
                state = (succ[other] if s > 0 else pred[other], s)
            orbits.append(orbit)
        return orbits

    def boundary_count(self) -> int:
        n = len(self.boundary_walks())
        if self.E == 0:
            return self.V
        if n % 2:
            raise RibbonError("odd number of tracing orbits")
        return n // 2

    def is_orientable(self) -> bool:
        """Signed-graph balance: find vertex signs s with s_u s_v = (-1)^twist on every edge."""
        sign = [0] * self.V
        adj = [[] for _ in range(self.V)]
        for (a, b), t in zip(self.edges, self.twists):
            adj[a].append((b, t))
            adj[b].append((a, t))
        for root in range(self.V):
            if sign[root]:
                continue
            sign[root] = 1
            stack = [root]
            while stack:
                u = stack.pop()
                for w, t in adj[u]:
                    want = sign[u] * (-1 if t else 1)
                    if not sign[w]:
                        sign[w] = want
                        stack.append(w)
                    elif sign[w] != want:
                        return False
        return True


def ribbon_surface_type(R: RibbonGraph) -> SurfaceType:
    """Surface obtained by thickening R; its algebraic genus is E - V + 1."""
    b = R.boundary_count()
    chi = R.V - R.E
    if R.is_orientable():
        twice_g = 2 - chi - b
        if twice_g % 2:
            raise RibbonError("inconsistent ribbon: odd orientable genus")
        return SurfaceType(True, twice_g // 2, b)
    return SurfaceType(False, 2 - chi - b, b)


def combinatorial_ribbon(n_vertices: int, edges, rotation=None, twists=None) -> RibbonGraph:
    """Ribbon on a combinatorial graph; the default rotation lists half-edges in index order."""
    edges = tuple(tuple(e) for e in edges)
    if rotation is None:
        rotation = [[] for _ in range(n_vertices)]
        for h in range(2 * len(edges)):
            rotation[half_edge_vertex(edges, h)].append(h)
    if twists is None:
        twists = (0,) * len(edges)
    return RibbonGraph(n_vertices, edges, tuple(map(tuple, rotation)), tuple(twists))


# ------------------------------------------------------------ rotation from geometry


def _plane_normal(v, dirs, centroid):
    centred = dirs - dirs.mean(axis=0)
    n = np.linalg.svd(centred)[2][-1]
    for ref in (v - centroid, -dirs.mean(axis=0), np.eye(3)[2], np.eye(3)[1], np.eye(3)[0]):
        d = float(n @ ref)
        if abs(d) > 1e-12:
            return n if d > 0 else -n
    return n


def ribbon_from_embedding(graph: EmbeddedGraph, twists=None, tol: float = 1e-9) -> RibbonGraph:
    """Rotation at each vertex = angular order of the incident edge directions projected to
    their best-fit plane, counter-clockwise seen from the chosen normal."""
    if graph.vertices is None:
        raise RibbonError("graph has no coordinates")
    verts = graph.vertices
    centroid = verts.mean(axis=0)
    incident = [[] for _ in range(graph.V)]
    for k in range(graph.E):
        pts = graph.edge_points(k)
        incident[graph.edges[k][0]].append((2 * k, pts[1] - pts[0]))
        incident[graph.edges[k][1]].append((2 * k + 1, pts[-2] - pts[-1]))
    rotation = []
    for v, inc in enumerate(incident):
        if len(inc) <= 2:
            rotation.append(tuple(h for h, _ in inc))
            continue
        dirs = np.array([d / np.linalg.norm(d) for _, d in inc])
        n = _plane_normal(verts[v], dirs, centroid)
        proj = dirs - np.outer(dirs @ n, n)
        norms = np.linalg.norm(proj, axis=1)
        if np.any(norms < tol):
            raise RibbonError(f"ambiguous rotation at vertex {v}: direction normal to the plane")
        u = proj[0] / norms[0]
        w = np.cross(n, u)
        ang = np.mod(np.arctan2(proj @ w, proj @ u), 2 * np.pi)
        order = np.argsort(ang, kind="stable")
        srt = np.sort(ang)
        gaps = np.diff(np.append(srt, srt[0] + 2 * np.pi))
        if np.any(gaps < tol):
            raise RibbonError(f"ambiguous rotation at vertex {v}: coincident directions")
        rotation.append(tuple(inc[i][0] for i in order))
    twists = (0,) * graph.E if twists is None else tuple(twists)
    return RibbonGraph(graph.V, tuple(graph.edges), tuple(rotation), twists, graph)


# ------------------------------------------------------------------ polygon oracle


def polygon_surface_type(R: RibbonGraph) -> SurfaceType:
    """Brute-force oracle: glue vertex polygons and band quadrilaterals, then read off
    the Euler characteristic, boundary cycles and a consistent face orientation."""
    # points: ("L", h), ("R", h) on the disk at the vertex of h
    faces = []  # each face: list of (edge_id, tail_point, head_point)
    for v, rot in enumerate(R.rotation):
        if not rot:
            faces.append([(("disk", v), ("o", v), ("o", v))])
            continue
        cyc = []
        for i, h in enumerate(rot):
            nxt = rot[(i + 1) % len(rot)]
            cyc.append((("att", h), ("L", h), ("R", h)))
            cyc.append((("arc", v, i), ("R", h), ("L", nxt)))
        faces.append(cyc)
    for k, t in enumerate(R.twists):
        h, g = 2 * k, 2 * k + 1
        if t:
            corners = [("R", h), ("L", h), ("L", g), ("R", g)]
        else:
            corners = [("R", h), ("L", h), ("R", g), ("L", g)]
        ids = [("att", h), ("side", k, 0), ("att", g), ("side", k, 1)]
        faces.append([(ids[i], corners[i], corners[(i + 1) % 4]) for i in range(4)])

    uses: dict = {}
    for f, face in enumerate(faces):
        for eid, a, b in face:
            uses.setdefault(eid, []).append((f, a, b))
    points = {p for face in faces for _, a, b in face for p in (a, b)}
    chi = len(points) - len(uses) + len(faces)

    # boundary: edges used once, as a graph on points; every component is a cycle
    parent = {p: p for p in points}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    bpoints = set()
    for eid, us in uses.items():
        if len(us) == 1:
            _, a, b = us[0]
            bpoints |= {a, b}
            parent[find(a)] = find(b)
    b_count = len({find(p) for p in bpoints})

    # orientability: shared edges must be traversed oppositely
    orient = {0: 1}
    stack = [0]
    adj: dict = {}
    for eid, us in uses.items():
        if len(us) == 2:
            (f1, a1, b1), (f2, a2, b2) = us
            same = (a1, b1) == (a2, b2)
            adj.setdefault(f1, []).append((f2, same))
            adj.setdefault(f2, []).append((f1, same))
        elif len(us) > 2:
            raise RibbonError("edge shared by more than two faces")
    orientable = True
    while stack:
        f = stack.pop()
        for f2, same in adj.get(f, []):
            want = -orient[f] if same else orient[f]
            if f2 not in orient:
                orient[f2] = want
                stack.append(f2)
            elif orient[f2] != want:
                orientable = False
    if orientable:
        return SurfaceType(True, (2 - chi - b_count) // 2, b_count)
    return SurfaceType(False, 2 - chi - b_count, b_count)
