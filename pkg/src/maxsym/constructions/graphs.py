"""Equivariant graphs in R^3: dipoles, Platonic skeleta and the genus-21 graph.

Thickening any of these graphs equivariantly gives a closed surface of the same
genus (boundary of a regular neighbourhood) or, with disks and bands, a
bordered surface of the same algebraic genus.

Dipole actions (``build_dipole``), with the axis along z and edge 0 in the xz-plane:

* ``rotation``           tau, rotation by 2pi/(g+1) about z                      (i)
* ``dihedral``           <tau, rho>, rho the pi-rotation about the x-axis         (ii)
* ``rotary_reflection``  <r tau>, r the reflection z -> -z; cyclic of order 2g+2
                         for even g                                              (iii)
* ``full``               <tau, rho, r>, order 4g+4                                (iv)

The second dipole (odd g) has g meridians plus the axis segment and carries
``<r sigma>`` with sigma the rotation by 2pi/g, cyclic of order 2g.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .matrices import (MatrixGroup, default_tol, generate_group, reflection, rotary_reflection,
                       rotation)

PHI = (1 + np.sqrt(5)) / 2

# a seed whose displaced arcs clear each other; see build_genus21
GENUS21_SEED = 0


@dataclass(eq=False)
class EmbeddedGraph:
    """Graph with optional coordinates; ``polylines[k]`` holds the interior points of edge k."""

    vertices: np.ndarray | None
    edges: list[tuple[int, int]]
    polylines: list[np.ndarray] = field(default_factory=list)
    combinatorial_only: bool = False
    meta: dict = field(default_factory=dict)
    n_vertices: int | None = None

    def __post_init__(self):
        if self.vertices is not None:
            self.vertices = np.asarray(self.vertices, dtype=float).reshape(-1, 3)
        if self.n_vertices is None:
            if self.vertices is None:
                self.n_vertices = 1 + max(max(e) for e in self.edges)
            else:
                self.n_vertices = len(self.vertices)
        if self.vertices is None:
            self.combinatorial_only = True
        self.edges = [tuple(int(v) for v in e) for e in self.edges]
        if not self.polylines:
            self.polylines = [np.zeros((0, 3)) for _ in self.edges]
        self.polylines = [np.asarray(p, dtype=float).reshape(-1, 3) for p in self.polylines]
        if len(self.polylines) != len(self.edges):
            raise ValueError("one polyline per edge")

    @property
    def V(self) -> int:
        return self.n_vertices

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def genus(self) -> int:
        """First Betti number E - V + 1 (the graph is connected)."""
        return self.E - self.V + 1

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def is_connected(self) -> bool:
        adj = {v: set() for v in range(self.V)}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, stack = {0}, [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.V

    def edge_points(self, k: int) -> np.ndarray:
        """Full polyline of edge k, endpoints included."""
        a, b = self.edges[k]
        return np.vstack([self.vertices[a], self.polylines[k], self.vertices[b]])

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        if (self.V, self.edges, self.combinatorial_only) != (other.V, other.edges, other.combinatorial_only):
            return False
        if self.vertices is None or other.vertices is None:
            return self.vertices is None and other.vertices is None
        return (np.array_equal(self.vertices, other.vertices)
                and all(np.array_equal(p, q) for p, q in zip(self.polylines, other.polylines)))


# ---------------------------------------------------------------------------- dipoles


def _meridian(phi: float, samples: int) -> np.ndarray:
    theta = np.pi * np.arange(1, samples + 1) / (samples + 1)
    return np.column_stack([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def build_dipole(g: int, variant: int = 1, samples: int = 7, tol: float | None = None):
    """Two vertices on the z-axis joined by g+1 edges; returns (graph, {name: MatrixGroup})."""
    if variant not in (1, 2):
        raise ValueError("variant is 1 or 2")
    if g <= 1 or (variant == 2 and g % 2 == 0):
        raise ValueError("variant 1 needs g > 1, variant 2 needs odd g > 1")
    z = np.array([0.0, 0.0, 1.0])
    verts = np.array([z, -z])
    if variant == 1:
        n = g + 1
        polys = [_meridian(2 * np.pi * k / n, samples) for k in range(n)]
        graph = EmbeddedGraph(verts, [(0, 1)] * n, polys, meta={"model": f"dipole:{g}:1"})
        tau = rotation(z, 2 * np.pi / n)
        rho = rotation([1, 0, 0], np.pi)
        r = reflection(z)
        groups = {"rotation": generate_group([tau], tol),
                  "dihedral": generate_group([tau, rho], tol),
                  "full": generate_group([tau, rho, r], tol)}
        if g % 2 == 0:
            groups["rotary_reflection"] = generate_group([r @ tau], tol)
        return graph, groups
    polys = [_meridian(2 * np.pi * k / g, samples) for k in range(g)]
    axis = np.column_stack([np.zeros(samples), np.zeros(samples),
                            np.cos(np.pi * np.arange(1, samples + 1) / (samples + 1))])
    graph = EmbeddedGraph(verts, [(0, 1)] * (g + 1), polys + [axis], meta={"model": f"dipole:{g}:2"})
    return graph, {"rotary_reflection": generate_group([rotary_reflection(z, 2 * np.pi / g)], tol)}


# --------------------------------------------------------------------------- Platonic


def _cyclic_perms(v):
    return [np.roll(v, k) for k in range(3)]


def platonic_vertices(which: str) -> np.ndarray:
    if which == "T":
        return np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    if which == "C":
        return np.array([[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)], dtype=float)
    if which == "O":
        return np.array([s * np.eye(3)[k] for k in range(3) for s in (1, -1)])
    if which == "I":
        return np.array([p for a in (-1, 1) for b in (-1, 1)
                         for p in _cyclic_perms(np.array([0.0, a, b * PHI]))])
    if which == "D":
        cube = platonic_vertices("C")
        rest = [p for a in (-1, 1) for b in (-1, 1)
                for p in _cyclic_perms(np.array([0.0, a / PHI, b * PHI]))]
        return np.vstack([cube, rest])
    raise ValueError(f"unknown solid {which!r}")


def _shortest_edges(verts: np.ndarray) -> list[tuple[int, int]]:
    d = np.linalg.norm(verts[:, None] - verts[None], axis=2)
    m = d[d > 1e-9].min()
    return [(i, j) for i, j in combinations(range(len(verts)), 2) if abs(d[i, j] - m) < 1e-6]


def _axis_of_order(G: MatrixGroup, k: int) -> np.ndarray:
    """Axis of some rotation of order k in G."""
    for m in G.elements:
        if np.linalg.det(m) < 0:
            continue
        ang = np.arccos(np.clip((np.trace(m) - 1) / 2, -1, 1))
        if abs(ang - 2 * np.pi / k) < 1e-6:
            w, v = np.linalg.eig(m)
            ax = np.real(v[:, np.argmin(np.abs(w - 1))])
            return ax / np.linalg.norm(ax)
    raise ValueError(f"no rotation of order {k}")


def build_platonic(which: str, tol: float | None = None):
    """1-skeleton of T/C/O/D/I with its rotation group and full isometry group."""
    verts = platonic_vertices(which)
    edges = _shortest_edges(verts)
    graph = EmbeddedGraph(verts, edges, meta={"model": f"platonic:{which}"})
    v0 = verts[0]
    deg = graph.degree(0)
    a, b = next(e for e in edges if 0 in e)
    rot = generate_group([rotation(v0, 2 * np.pi / deg),
                          rotation(verts[a] + verts[b], np.pi)], tol)
    if which == "T":
        extra = rotary_reflection(_axis_of_order(rot, 2), np.pi / 2)
    elif which in "CO":
        extra = reflection(_axis_of_order(rot, 4))
    else:
        extra = rotary_reflection(_axis_of_order(rot, 5), np.pi / 5)
    full = generate_group(list(rot.generators) + [extra], tol)
    return graph, rot, full


def build_triacontahedron(tol: float | None = None):
    """Rhombic triacontahedron skeleton: 12 five-valent and 20 three-valent vertices,
    60 edges, algebraic genus 29, with the icosahedral rotation group."""
    # icosahedron dual to the dodecahedron of platonic_vertices("D")
    ico = np.array([p for a in (-1, 1) for b in (-1, 1)
                    for p in _cyclic_perms(np.array([0.0, a * PHI, b]))])
    dod = platonic_vertices("D")
    ico = ico / np.linalg.norm(ico, axis=1)[:, None]
    dod = dod / np.linalg.norm(dod, axis=1)[:, None]
    verts = np.vstack([ico, dod])
    edges = []
    for i, v in enumerate(ico):
        near = np.argsort(-(dod @ v))[:5]
        edges += [(i, 12 + int(j)) for j in sorted(near)]
    graph = EmbeddedGraph(verts, edges, meta={"model": "triacontahedron"})
    _, rot, _ = build_platonic("D", tol)
    return graph, rot


# ------------------------------------------------------------------------- genus 21


class ArcCollision(RuntimeError):
    def __init__(self, pair, distance):
        super().__init__(f"arcs {pair[0]} and {pair[1]} come within {distance:.3g}")
        self.pair = pair
        self.distance = distance


def _segment_distance(p0, p1, q0, q1) -> float:
    """Minimum distance between segments [p0, p1] and [q0, q1]."""
    d1, d2, r = p1 - p0, q1 - q0, p0 - q0
    a, e, f = d1 @ d1, d2 @ d2, d2 @ r
    c, b = d1 @ r, d1 @ d2
    denom = a * e - b * b
    s = np.clip((b * f - c * e) / denom, 0, 1) if denom > 1e-15 else 0.0
    t = (b * s + f) / e
    if t < 0:
        t, s = 0.0, np.clip(-c / a, 0, 1)
    elif t > 1:
        t, s = 1.0, np.clip((b - c) / a, 0, 1)
    return float(np.linalg.norm(p0 + d1 * s - q0 - d2 * t))


def arc_clearance(graph: EmbeddedGraph) -> tuple[float, tuple[int, int] | None]:
    """Smallest distance between two edges away from shared vertices.

    Segments meeting at a common vertex only count when they are parallel there.
    """
    segs = []
    for k in range(graph.E):
        pts = graph.edge_points(k)
        a, b = graph.edges[k]
        n = len(pts) - 1
        for i in range(n):
            ends = (a if i == 0 else None, b if i == n - 1 else None)
            segs.append((k, i, pts[i], pts[i + 1], ends))
    best, where = np.inf, None
    for (k1, i1, p0, p1, e1), (k2, i2, q0, q1, e2) in combinations(segs, 2):
        if k1 == k2 and abs(i1 - i2) <= 1:
            continue
        shared = {v for v in e1 if v is not None} & {v for v in e2 if v is not None}
        if shared:
            # meet only at the shared vertex unless the directions coincide
            v = graph.vertices[shared.pop()]
            u1 = (p1 if np.allclose(p0, v) else p0) - v
            u2 = (q1 if np.allclose(q0, v) else q0) - v
            cosang = u1 @ u2 / (np.linalg.norm(u1) * np.linalg.norm(u2))
            d = float(1 - cosang)
        else:
            d = _segment_distance(p0, p1, q0, q1)
        if d < best:
            best, where = d, (k1, k2)
    return best, where


def _genus21_arc(v, w, rng) -> np.ndarray:
    """Interior points of a 3-segment arc from v to w, nudged off the symmetry axes."""
    jitter = rng.normal(size=(2, 3)) * 0.15
    return np.array([v + (w - v) / 3 + jitter[0], v + 2 * (w - v) / 3 + jitter[1]])


def build_genus21(seed: int | None = None, scale: float = 2.0, clearance: float = 1e-3,
                  tol: float | None = None):
    """Dodecahedron D inside a copy D' scaled by ``scale``, joined by the 60 images of one
    arc from a vertex v of D to a neighbour w of the vertex of D' above v.

    Vertices 0..19 belong to D, 20..39 to D'.  Raises :class:`ArcCollision` when the
    orbit of the arc is not embedded for the given seed.
    """
    seed = GENUS21_SEED if seed is None else seed
    tol = default_tol() if tol is None else tol
    D = platonic_vertices("D")
    verts = np.vstack([D, scale * D])
    _, rot, _ = build_platonic("D", tol)
    nbrs = [j for i, j in _shortest_edges(D) if i == 0] + [i for i, j in _shortest_edges(D) if j == 0]
    v, w = verts[0], verts[20 + min(nbrs)]
    base = _genus21_arc(v, w, np.random.default_rng(seed))

    def locate(p):
        d = np.linalg.norm(verts - p, axis=1)
        k = int(np.argmin(d))
        if d[k] > 1e-6:
            raise RuntimeError("group element does not preserve the vertex set")
        return k

    edges, polys = [], []
    for m in rot.elements:
        edges.append((locate(m @ v), locate(m @ w)))
        polys.append(base @ m.T)
    if len(set(edges)) != 60:
        raise RuntimeError("arc stabiliser is not trivial")
    graph = EmbeddedGraph(verts, edges, polys, meta={"model": "genus21", "seed": seed, "scale": scale})
    dist, pair = arc_clearance(graph)
    if dist < clearance:
        raise ArcCollision(pair, dist)
    return graph, rot


# ----------------------------------------------------------------------- invariance


@dataclass
class InvarianceReport:
    ok: bool
    element: int | None = None
    item: str | None = None

    def __bool__(self):
        return self.ok


def check_invariance(G: MatrixGroup, graph: EmbeddedGraph, tol: float | None = None) -> InvarianceReport:
    """Does every element of G map the vertex set and the edge set (as point sets) to themselves?"""
    tol = default_tol() if tol is None else tol
    if graph.vertices is None:
        raise ValueError("graph has no coordinates")
    verts = graph.vertices
    scale = max(1.0, float(np.max(np.abs(verts))))
    eps = tol * scale * 10
    by_ends: dict[frozenset, list[int]] = {}
    for k, (a, b) in enumerate(graph.edges):
        by_ends.setdefault(frozenset((a, b)), []).append(k)
    for gi, m in enumerate(G.elements):
        img = verts @ m.T
        d = np.linalg.norm(img[:, None] - verts[None], axis=2)
        perm = np.argmin(d, axis=1)
        if np.any(d[np.arange(len(verts)), perm] > eps) or len(set(perm.tolist())) != len(verts):
            bad = int(np.argmax(d[np.arange(len(verts)), perm]))
            return InvarianceReport(False, gi, f"vertex {bad}")
        for k, (a, b) in enumerate(graph.edges):
            pts = graph.polylines[k] @ m.T
            cands = by_ends.get(frozenset((int(perm[a]), int(perm[b]))), [])
            if not any(_same_point_set(pts, graph.polylines[c], eps) for c in cands):
                return InvarianceReport(False, gi, f"edge {k}")
    return InvarianceReport(True)


def _same_point_set(p: np.ndarray, q: np.ndarray, eps: float) -> bool:
    if len(p) != len(q):
        return False
    if len(p) == 0:
        return True
    d = np.linalg.norm(p[:, None] - q[None], axis=2)
    return bool(np.all(d.min(axis=1) < eps) and np.all(d.min(axis=0) < eps))
