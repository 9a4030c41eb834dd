"""Finite subgroups of O(3) given by generator matrices."""
from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

DEFAULT_TOL = 1e-9


def default_tol() -> float:
    return float(os.environ.get("MAXSYM_TOL", DEFAULT_TOL))


class GroupNotFinite(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class MatrixGroup:
    elements: tuple[np.ndarray, ...]
    generators: tuple[np.ndarray, ...]
    tolerance: float

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def orientation_reversing_present(self) -> bool:
        return any(np.linalg.det(m) < 0 for m in self.elements)

    def rotation_subgroup(self) -> "MatrixGroup":
        rots = tuple(m for m in self.elements if np.linalg.det(m) > 0)
        return MatrixGroup(rots, rots, self.tolerance)

    def contains(self, m: np.ndarray) -> bool:
        stack = np.asarray(self.elements)
        return bool(np.any(np.max(np.abs(stack - m), axis=(1, 2)) < self.tolerance))


def rotation(axis, angle: float) -> np.ndarray:
    """Right-handed rotation by ``angle`` about ``axis`` (Rodrigues)."""
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    K = np.array([[0, -a[2], a[1]], [a[2], 0, -a[0]], [-a[1], a[0], 0]])
    return np.eye(3) + np.sin(angle) * K + (1 - np.cos(angle)) * (K @ K)


def reflection(normal) -> np.ndarray:
    """Reflection in the plane through 0 orthogonal to ``normal``."""
    n = np.asarray(normal, dtype=float)
    n = n / np.linalg.norm(n)
    return np.eye(3) - 2 * np.outer(n, n)


def rotary_reflection(axis, angle: float) -> np.ndarray:
    return reflection(axis) @ rotation(axis, angle)


def _sort_key(m: np.ndarray):
    return tuple(np.round(m, 6).ravel() + 0.0)


def generate_group(generators, tol: float | None = None, max_order: int = 1000) -> MatrixGroup:
    """Close a set of orthogonal 3x3 matrices under products.

    Elements are deduplicated within ``tol`` (max-norm) and returned sorted by
    their rounded entries.
    """
    tol = default_tol() if tol is None else tol
    gens = tuple(np.asarray(g, dtype=float) for g in generators)
    for g in gens:
        if g.shape != (3, 3) or np.max(np.abs(g.T @ g - np.eye(3))) >= tol:
            raise ValueError("generator is not an orthogonal 3x3 matrix")
    found = [np.eye(3)]
    frontier = [np.eye(3)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = a @ g
                stack = np.asarray(found)
                if np.any(np.max(np.abs(stack - c), axis=(1, 2)) < tol):
                    continue
                found.append(c)
                nxt.append(c)
                if len(found) > max_order:
                    raise GroupNotFinite(f"group not finite within bound {max_order}")
        frontier = nxt
    found.sort(key=_sort_key)
    return MatrixGroup(tuple(found), gens, tol)
