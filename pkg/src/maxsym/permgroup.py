"""Exact permutation arithmetic for the small groups behind the classification.

Composition convention: ``compose(p, q)`` applies ``q`` first, so
``compose(p, q)(i) == p(q(i))``.  The product ``x y`` written in the
classification proofs (``x`` then ``y``) is therefore ``compose(y, x)``;
:func:`then` spells that out.

Cycle notation grammar accepted by :func:`parse_cycles` (whitespace ignored)::

    perm  ::= "()" | cycle { cycle }
    cycle ::= "(" point { [","] point } ")"
    point ::= digit | "{" integer "}"      (single digits, or any integer with commas)

e.g. ``"(12)(34)"``, ``"(1,10,3)"``, ``"()"``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Sequence

DEFAULT_DEGREE_BOUND = 16

# |Aut(G)| for the groups we classify pairs in; checked, never used to build Aut.
_AUT_ORDERS = {"A4": 24, "S4": 24, "A5": 120}
_LABEL_ORDERS = {"A4": 12, "S4": 24, "A5": 60}


class GroupError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise GroupError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, text: str, degree: int | None = None) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p o q`` (apply ``q`` first)."""
    if p.degree != q.degree:
        raise GroupError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[v - 1] for v in q.images))


def then(x: Permutation, y: Permutation) -> Permutation:
    """The product ``x y`` read left to right: apply ``x``, then ``y``."""
    return compose(y, x)


def element_order(p: Permutation) -> int:
    out = 1
    for c in p.cycles():
        out = out * len(c) // math.gcd(out, len(c))
    return out


_TOKEN = re.compile(r"\(([^()]*)\)")
_POINT = re.compile(r"\{(\d+)\}|(\d)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse cycle notation; see the module docstring for the grammar.

    A product of overlapping cycles is evaluated right to left.
    """
    s = re.sub(r"\s+", "", text)
    cycles = []
    pos = 0
    for m in _TOKEN.finditer(s):
        if m.start() != pos:
            raise GroupError(f"bad cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1)
        if "," in body:
            pts = [int(t) for t in body.split(",")]
        else:
            pts = [int(a or b) for a, b in _POINT.findall(body)]
            if _POINT.sub("", body):
                raise GroupError(f"bad cycle notation: {text!r}")
        if len(set(pts)) != len(pts) or (pts and min(pts) < 1):
            raise GroupError(f"bad cycle {body!r} in {text!r}")
        if pts:
            cycles.append(pts)
    if pos != len(s) or not s:
        raise GroupError(f"bad cycle notation: {text!r}")
    top = max((max(c) for c in cycles), default=1)
    n = degree if degree is not None else top
    if top > n:
        raise GroupError(f"point {top} exceeds degree {n}")
    out = Permutation.identity(n)
    for cyc in cycles:
        imgs = list(range(1, n + 1))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            imgs[a - 1] = b
        out = compose(out, Permutation(tuple(imgs)))
    return out


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    sep = "," if p.degree >= 10 else ""
    return "".join("(" + sep.join(str(v) for v in c) + ")" for c in cyc)


# --------------------------------------------------------------------------- groups


def label_order(label: str) -> int:
    if label in _LABEL_ORDERS:
        return _LABEL_ORDERS[label]
    m = re.fullmatch(r"([ZD])(\d+)", label)
    if not m:
        raise GroupError(f"unknown group label {label!r}")
    n = int(m.group(2))
    return n if m.group(1) == "Z" else 2 * n


@dataclass(frozen=True)
class FiniteGroup:
    """A permutation group given by generators together with its full element list.

    ``elements`` is sorted lexicographically on images, so indices into it are
    stable; ``table[i][j]`` is the index of ``compose(elements[i], elements[j])``.
    """

    degree: int
    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]
    label: str | None = None
    _index: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.label is not None and label_order(self.label) != len(self.elements):
            raise GroupError(f"label {self.label} expects order {label_order(self.label)}, "
                             f"closure has {len(self.elements)}")
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._index

    def __iter__(self):
        return iter(self.elements)

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise GroupError(f"{p} is not an element of the group") from None

    @cached_property
    def identity_index(self) -> int:
        return self.index(Permutation.identity(self.degree))

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        idx, els = self._index, self.elements
        return tuple(tuple(idx[compose(a, b)] for b in els) for a in els)

    @cached_property
    def orders(self) -> tuple[int, ...]:
        return tuple(element_order(e) for e in self.elements)

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity_index
        return tuple(row.index(e) for row in self.table)

    def element_order(self, p: Permutation) -> int:
        return element_order(p)

    def compose(self, p: Permutation, q: Permutation) -> Permutation:
        return compose(p, q)

    def then(self, x: Permutation, y: Permutation) -> Permutation:
        return then(x, y)

    def inverse(self, p: Permutation) -> Permutation:
        return p.inverse()

    def parse(self, text: str) -> Permutation:
        return parse_cycles(text, self.degree)

    def format(self, p: Permutation) -> str:
        return format_cycles(p)

    def subgroup_order(self, gens: Iterable[Permutation]) -> int:
        return len(_closure_indices(self.table, [self.index(g) for g in gens], self.identity_index))

    def subgroup_index(self, gens: Iterable[Permutation]) -> int:
        return subgroup_index(self, list(gens))

    def has_index2_subgroup(self, must_contain: Permutation, must_exclude: Permutation) -> bool:
        return index2_subgroup_containing(self, must_contain, must_exclude)


def _closure_indices(table, gens: Sequence[int], identity: int) -> set[int]:
    seen = {identity}
    frontier = [identity]
    gens = list(dict.fromkeys(gens))
    while frontier:
        nxt = []
        for a in frontier:
            row = table[a]
            for g in gens:
                c = row[g]
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def closure(degree: int, generators: Iterable[Permutation], label: str | None = None,
            degree_bound: int = DEFAULT_DEGREE_BOUND) -> FiniteGroup:
    """The group generated by ``generators`` (empty list gives the trivial group)."""
    if degree > degree_bound:
        raise GroupError(f"degree {degree} exceeds bound {degree_bound}")
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise GroupError(f"generator {g} has degree {g.degree}, expected {degree}")
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = compose(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return FiniteGroup(degree, gens, tuple(sorted(seen)), label)


def subgroup_index(G: FiniteGroup, sub_generators: Sequence[Permutation]) -> int:
    """``[G : <sub_generators>]``."""
    for s in sub_generators:
        if s not in G:
            raise GroupError(f"{s} is not an element of the group")
    return G.order // G.subgroup_order(sub_generators)


def _homomorphisms_to_z2(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All homomorphisms G -> Z/2 as tuples of bits indexed like ``G.elements``."""
    gens = [G.index(g) for g in G.generators]
    out = []
    for bits in range(1 << len(gens)):
        val = {G.identity_index: 0}
        frontier = [G.identity_index]
        ok = True
        while frontier and ok:
            nxt = []
            for a in frontier:
                for k, g in enumerate(gens):
                    c = G.table[a][g]
                    v = val[a] ^ ((bits >> k) & 1)
                    if c in val:
                        if val[c] != v:
                            ok = False
                            break
                    else:
                        val[c] = v
                        nxt.append(c)
                if not ok:
                    break
            frontier = nxt
        if ok:
            out.append(tuple(val[i] for i in range(G.order)))
    return out


def index2_subgroup_containing(G: FiniteGroup, must_contain: Permutation,
                               must_exclude: Permutation) -> bool:
    """Is there H <= G of index 2 with ``must_contain`` in H and ``must_exclude`` not in H?

    Index-2 subgroups are exactly kernels of surjections G -> Z/2, which are
    enumerated from generator images and checked on the whole Cayley graph.
    """
    c, x = G.index(must_contain), G.index(must_exclude)
    for chi in _homomorphisms_to_z2(G):
        if any(chi) and chi[c] == 0 and chi[x] == 1:
            return True
    return False


def standard_group(label: str, degree_bound: int = DEFAULT_DEGREE_BOUND) -> FiniteGroup:
    """Canonical permutation realisations: A4/S4 on 4 points, A5 on 5, Zn, Dn on n."""
    return _standard_group(label, degree_bound)


@lru_cache(maxsize=None)
def _standard_group(label: str, degree_bound: int) -> FiniteGroup:
    P = parse_cycles
    if label == "A4":
        return closure(4, [P("(12)(34)", 4), P("(123)", 4)], "A4", degree_bound)
    if label == "S4":
        return closure(4, [P("(12)", 4), P("(1234)", 4)], "S4", degree_bound)
    if label == "A5":
        return closure(5, [P("(123)", 5), P("(12345)", 5)], "A5", degree_bound)
    m = re.fullmatch(r"([ZD])(\d+)", label)
    if not m or int(m.group(2)) < 1:
        raise GroupError(f"unknown group label {label!r}")
    kind, n = m.group(1), int(m.group(2))
    if n > degree_bound:
        raise GroupError(f"{label} needs degree {n} > bound {degree_bound}; use DihedralGroup")
    rot = Permutation(tuple(list(range(2, n + 1)) + [1]))
    if kind == "Z":
        return closure(n, [rot], label, degree_bound)
    # D1 and D2 cannot be realised faithfully on n points
    if n < 3:
        raise GroupError("dihedral realisation needs n >= 3")
    flip = Permutation(tuple(((1 - i) % n) + 1 for i in range(1, n + 1)))
    return closure(n, [rot, flip], label, degree_bound)


def cyclic_subgroup_index(n: int, k: int) -> int:
    """``[Z_n : <t^k>]`` for a generator ``t``."""
    return math.gcd(n, k)


# ------------------------------------------------------------------ dihedral groups


@dataclass(frozen=True, order=True)
class DihedralElement:
    """``i -> (-1)**flip * i + shift`` on Z/n."""

    shift: int
    flip: int


class DihedralGroup:
    """Symbolic D_n of order 2n, so dihedral cases need no degree bound.

    ``rotation`` is ``r = (1, 0)`` and ``reflection`` is ``s = (0, 1)``.
    """

    def __init__(self, n: int):
        if n < 3:
            raise GroupError("dihedral group needs n >= 3")
        self.n = n
        self.label = f"D{n}"
        self.rotation = DihedralElement(1, 0)
        self.reflection = DihedralElement(0, 1)

    def __repr__(self):
        return f"DihedralGroup({self.n})"

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def elements(self) -> tuple[DihedralElement, ...]:
        return tuple(DihedralElement(k, f) for f in (0, 1) for k in range(self.n))

    def __contains__(self, e) -> bool:
        return isinstance(e, DihedralElement) and 0 <= e.shift < self.n and e.flip in (0, 1)

    def element(self, shift: int, flip: int) -> DihedralElement:
        return DihedralElement(shift % self.n, flip & 1)

    def compose(self, a: DihedralElement, b: DihedralElement) -> DihedralElement:
        sgn = -1 if a.flip else 1
        return self.element(a.shift + sgn * b.shift, a.flip ^ b.flip)

    def then(self, x: DihedralElement, y: DihedralElement) -> DihedralElement:
        return self.compose(y, x)

    def inverse(self, a: DihedralElement) -> DihedralElement:
        return a if a.flip else self.element(-a.shift, 0)

    def element_order(self, a: DihedralElement) -> int:
        if a.flip:
            return 2
        return self.n // math.gcd(self.n, a.shift)

    def subgroup_order(self, gens: Iterable[DihedralElement]) -> int:
        # rotation part is generated by the rotations and pairwise reflection differences
        gens = list(gens)
        d = self.n
        refl = [g.shift for g in gens if g.flip]
        for g in gens:
            if not g.flip:
                d = math.gcd(d, g.shift)
        for k in refl[1:]:
            d = math.gcd(d, k - refl[0])
        rot = self.n // d
        return 2 * rot if refl else rot

    def subgroup_index(self, gens: Iterable[DihedralElement]) -> int:
        return self.order // self.subgroup_order(gens)

    def has_index2_subgroup(self, must_contain: DihedralElement, must_exclude: DihedralElement) -> bool:
        # characters D_n -> Z/2: (shift, flip) -> a*flip + b*shift, b allowed only for even n
        for a in (0, 1):
            for b in ((0, 1) if self.n % 2 == 0 else (0,)):
                if (a, b) == (0, 0):
                    continue
                chi = lambda e: (a * e.flip + b * e.shift) % 2
                if chi(must_contain) == 0 and chi(must_exclude) == 1:
                    return True
        return False

    def format(self, e: DihedralElement) -> str:
        r = "" if e.shift == 0 else ("r" if e.shift == 1 else f"r^{e.shift}")
        if e.flip:
            return r + "s"
        return r or "1"

    def parse(self, text: str) -> DihedralElement:
        t = text.replace(" ", "")
        m = re.fullmatch(r"(?:r(?:\^(-?\d+))?)?(s?)|1", t)
        if not m or t == "":
            raise GroupError(f"bad dihedral element {text!r}")
        if t == "1":
            return self.element(0, 0)
        has_r = t.startswith("r")
        k = int(m.group(1)) if m.group(1) else (1 if has_r else 0)
        # r^k s means: apply s, then r^k
        return self.element(k, 1 if m.group(2) else 0)

    def as_permutation(self, e: DihedralElement) -> Permutation:
        n = self.n
        return Permutation(tuple(((e.shift + (-1 if e.flip else 1) * (i - 1)) % n) + 1
                                 for i in range(1, n + 1)))


class CyclicGroup:
    """Symbolic Z_n; elements are exponents of the generator ``t``."""

    def __init__(self, n: int):
        if n < 1:
            raise GroupError("cyclic group needs n >= 1")
        self.n = n
        self.label = f"Z{n}"

    def __repr__(self):
        return f"CyclicGroup({self.n})"

    @property
    def order(self) -> int:
        return self.n

    def __contains__(self, e) -> bool:
        return isinstance(e, int) and 0 <= e < self.n

    def compose(self, a: int, b: int) -> int:
        return (a + b) % self.n

    then = compose

    def inverse(self, a: int) -> int:
        return (-a) % self.n

    def element_order(self, a: int) -> int:
        return self.n // math.gcd(self.n, a)

    def subgroup_order(self, gens: Iterable[int]) -> int:
        d = self.n
        for g in gens:
            d = math.gcd(d, g)
        return self.n // d

    def subgroup_index(self, gens: Iterable[int]) -> int:
        return self.order // self.subgroup_order(gens)

    def has_index2_subgroup(self, must_contain: int, must_exclude: int) -> bool:
        return self.n % 2 == 0 and must_contain % 2 == 0 and must_exclude % 2 == 1

    def format(self, a: int) -> str:
        return "1" if a == 0 else ("t" if a == 1 else f"t^{a}")

    def parse(self, text: str) -> int:
        t = text.replace(" ", "")
        if t == "1":
            return 0
        m = re.fullmatch(r"t(?:\^(-?\d+))?", t)
        if not m:
            raise GroupError(f"bad cyclic element {text!r}")
        return int(m.group(1) or 1) % self.n


# ------------------------------------------------------ automorphisms & generating pairs


@dataclass(frozen=True)
class GeneratingPairClass:
    representative: tuple[Permutation, Permutation]
    orders: tuple[int, int]
    class_size: int


def _generates(G: FiniteGroup, i: int, j: int) -> bool:
    return len(_closure_indices(G.table, (i, j), G.identity_index)) == G.order


def _small_generating_set(G: FiniteGroup) -> list[int]:
    gens = [G.index(g) for g in G.generators if not g.is_identity()]
    if len(gens) > 2:
        for a in range(G.order):
            for b in range(a, G.order):
                if _generates(G, a, b):
                    return [a, b]
    return gens


def automorphisms(G: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of G as index maps, by generator-image search.

    Generator images range over elements of matching order; each candidate is
    extended along the Cayley graph and kept only if it is a well-defined
    bijective homomorphism.
    """
    return list(_automorphisms(G))


@lru_cache(maxsize=None)
def _automorphisms(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    gens = _small_generating_set(G)
    tbl, e, orders = G.table, G.identity_index, G.orders
    cands = [[k for k in range(G.order) if orders[k] == orders[g]] for g in gens]
    out = []

    def extend(images: Sequence[int]):
        phi = {e: e}
        frontier = [e]
        while frontier:
            nxt = []
            for a in frontier:
                pa = phi[a]
                for g, im in zip(gens, images):
                    c = tbl[a][g]
                    v = tbl[pa][im]
                    got = phi.get(c)
                    if got is None:
                        phi[c] = v
                        nxt.append(c)
                    elif got != v:
                        return None
            frontier = nxt
        if len(set(phi.values())) != G.order:
            return None
        return tuple(phi[i] for i in range(G.order))

    def search(prefix):
        if len(prefix) == len(gens):
            m = extend(prefix)
            if m is not None:
                out.append(m)
            return
        for c in cands[len(prefix)]:
            search(prefix + [c])

    search([])
    return tuple(sorted(out))


def _check_aut(G: FiniteGroup, auts) -> None:
    want = _AUT_ORDERS.get(G.label)
    if want is not None and len(auts) != want:
        raise AssertionError(f"|Aut({G.label})| computed as {len(auts)}, expected {want}")


def generating_pairs(G: FiniteGroup, r: int, s: int) -> list[tuple[int, int]]:
    """Every ordered pair of element indices (x, y) with ord x = r, ord y = s, <x,y> = G."""
    xs = [i for i, o in enumerate(G.orders) if o == r]
    ys = [i for i, o in enumerate(G.orders) if o == s]
    return [(i, j) for i in xs for j in ys if _generates(G, i, j)]


def classify_generating_pairs(G: FiniteGroup, r: int, s: int) -> list[GeneratingPairClass]:
    """Aut(G)-classes of generating pairs of orders (r, s).

    Pairs are ordered; when ``r == s`` a class is also closed under swapping the
    two entries.  Each class is reported by its lexicographically least pair.
    """
    return list(_classify(G, r, s))


@lru_cache(maxsize=None)
def _classify(G: FiniteGroup, r: int, s: int) -> tuple[GeneratingPairClass, ...]:
    if G.label not in _AUT_ORDERS:
        raise GroupError(f"pair classification supports A4, S4, A5; got {G.label!r}")
    if r > s:
        raise GroupError("expected r <= s")
    auts = _automorphisms(G)
    _check_aut(G, auts)
    pairs = generating_pairs(G, r, s)
    todo = set(pairs)
    classes = []
    for p in pairs:
        if p not in todo:
            continue
        orbit = {(a[p[0]], a[p[1]]) for a in auts}
        if r == s:
            orbit |= {(j, i) for i, j in orbit}
        todo -= orbit
        rep = min(orbit, key=lambda q: (G.elements[q[0]], G.elements[q[1]]))
        classes.append(GeneratingPairClass((G.elements[rep[0]], G.elements[rep[1]]), (r, s), len(orbit)))
    classes.sort(key=lambda c: c.representative)
    return tuple(classes)


def aut_equivalent(G: FiniteGroup, p: tuple[Permutation, Permutation],
                   q: tuple[Permutation, Permutation], unordered: bool = False) -> bool:
    """Does some automorphism carry the pair ``p`` onto ``q`` (or its swap if ``unordered``)?"""
    a, b = G.index(p[0]), G.index(p[1])
    c, d = G.index(q[0]), G.index(q[1])
    for sigma in _automorphisms(G):
        if (sigma[a], sigma[b]) == (c, d):
            return True
        if unordered and (sigma[a], sigma[b]) == (d, c):
            return True
    return False


def conjugate_up_to_inverse(G: FiniteGroup, x: Permutation, y: Permutation) -> bool:
    """Is ``y`` conjugate in G to ``x`` or to ``x**-1``?"""
    targets = {y, y.inverse()}
    return any(compose(compose(g, x), g.inverse()) in targets for g in G.elements)


def symmetric_group_elements(n: int) -> list[Permutation]:
    """All of S_n, for brute-force oracles in tests."""
    return [Permutation(tuple(p)) for p in _itperms(range(1, n + 1))]
