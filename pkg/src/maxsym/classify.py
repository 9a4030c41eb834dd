"""Maximum orders of extendable actions and the surfaces realising them.

Closed surfaces (genus g): ``ce_o``, ``ce``, ``e_o``, ``e``.
Bordered surfaces (algebraic genus alpha): ``cea_o``, ``cea``, ``ea_o``, ``ea``,
and the graph versions through :func:`graph_variants`.

Every answer is derived, not looked up: candidate groups come from the finite
subgroups of SO(3) (cyclic, dihedral, A4, S4, A5), their admissible quotient
signatures from Riemann-Hurwitz, and connectivity of the preimage from
whether the two cone-point loops generate the whole group.  Products ``x y``
follow the left-to-right reading (``x`` first), see :func:`maxsym.permgroup.then`.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .orbifold import (CASE_A, CASE_B, SPHERE4, QuotientSignature, SurfaceType,
                       cyclic_quotient_cases, sphere_4cone_genus, surface_from_alpha)
from .permgroup import (CyclicGroup, DihedralGroup, GroupError, classify_generating_pairs,
                        conjugate_up_to_inverse, label_order, standard_group)

EXCEPTIONAL = ("A4", "S4", "A5")
# indices of the three singular half-lines of R^3/G
SINGULAR_LINES = {"A4": (2, 3, 3), "S4": (2, 3, 4), "A5": (2, 3, 5)}

CLOSED_KINDS = ("CEo", "CE", "Eo", "E")
BORDERED_KINDS = ("CEAo", "CEA", "CEA-faithful", "EAo", "EA")
GRAPH_KINDS = ("CEGo", "CEG", "EGo", "EG")
KINDS = CLOSED_KINDS + BORDERED_KINDS + GRAPH_KINDS

UNBOUNDED = ("order unbounded: sphere, torus, disk and annulus carry symmetric "
             "embeddings of every finite order, so genus must be > 1")


class UnboundedOrder(ValueError):
    pass


class ClassificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class Witness:
    """One realising (or excluded) configuration behind a result."""

    group: str
    order: int
    rs: tuple[int, int] | None = None
    pair: tuple[str, str] | None = None
    case: str = ""
    boundary: int | None = None
    surface: SurfaceType | None = None
    note: str = ""

    def signature(self) -> QuotientSignature | None:
        if self.rs is None or self.case not in (SPHERE4, CASE_A, CASE_B):
            return None
        return QuotientSignature.for_case(self.group, *self.rs, self.case)

    def to_json(self) -> dict:
        return {"group": self.group, "order": self.order,
                "rs": list(self.rs) if self.rs else None,
                "pair": list(self.pair) if self.pair else None,
                "case": self.case, "boundary": self.boundary,
                "surface": self.surface.to_json() if self.surface else None,
                "note": self.note}

    @classmethod
    def from_json(cls, d: dict) -> "Witness":
        return cls(d["group"], d["order"], tuple(d["rs"]) if d["rs"] else None,
                   tuple(d["pair"]) if d["pair"] else None, d["case"], d["boundary"],
                   SurfaceType.from_json(d["surface"]) if d["surface"] else None, d["note"])


@dataclass(frozen=True)
class MaxActionResult:
    kind: str
    input: int
    order: int
    surfaces: tuple[SurfaceType, ...] = ()
    witnesses: tuple[Witness, ...] = ()
    flags: tuple[str, ...] = ()
    excluded: tuple[Witness, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {"kind": self.kind, "input": self.input, "order": self.order,
                "surfaces": [s.to_json() for s in self.surfaces],
                "witnesses": [w.to_json() for w in self.witnesses],
                "flags": list(self.flags)}

    @classmethod
    def from_json(cls, d: dict) -> "MaxActionResult":
        return cls(d["kind"], d["input"], d["order"],
                   tuple(SurfaceType.from_json(s) for s in d["surfaces"]),
                   tuple(Witness.from_json(w) for w in d["witnesses"]),
                   tuple(d.get("flags", ())))


@dataclass(frozen=True)
class CandidateCase:
    group: str
    rs: tuple[int, int]
    case: str
    pair: tuple[str, str]
    boundary: int
    orientable: bool
    surface: SurfaceType

    def witness(self) -> Witness:
        return Witness(self.group, label_order(self.group), self.rs, self.pair, self.case,
                       self.boundary, self.surface)


def group_for(label: str):
    """Permutation realisation for A4/S4/A5, symbolic for Zn and Dn."""
    if label in EXCEPTIONAL:
        return standard_group(label)
    if label.startswith("D"):
        return DihedralGroup(int(label[1:]))
    if label.startswith("Z"):
        return CyclicGroup(int(label[1:]))
    raise GroupError(f"unknown group label {label!r}")


def _check_genus(x: int) -> None:
    if x <= 1:
        raise UnboundedOrder(UNBOUNDED)


def _uniq(surfaces) -> tuple[SurfaceType, ...]:
    return tuple(sorted(set(surfaces)))


# ------------------------------------------------------------------- exceptional data


@lru_cache(maxsize=None)
def exceptional_signatures() -> dict[int, tuple[tuple[str, int, int], ...]]:
    """genus -> ((G, r, s), ...) for every G in A4/S4/A5 and 1 < r <= s element orders
    with 1/r + 1/s > 1/2, keyed by the genus of the four-cone-point sphere cover."""
    out: dict[int, list] = {}
    for label in EXCEPTIONAL:
        G = standard_group(label)
        orders = sorted(set(G.orders) - {1})
        for r in orders:
            for s in orders:
                if r > s or Fraction(1, r) + Fraction(1, s) <= Fraction(1, 2):
                    continue
                g = sphere_4cone_genus(G.order, r, s)
                out.setdefault(g, []).append((label, r, s))
    return {g: tuple(v) for g, v in out.items()}


def _pair_classes(label: str, r: int, s: int):
    return classify_generating_pairs(standard_group(label), r, s)


def _same_singular_line(label: str, r: int, s: int, x, y) -> bool:
    """Both cone points on one singular line: r == s and x, y conjugate up to inversion."""
    if r != s or label not in EXCEPTIONAL:
        return False
    return conjugate_up_to_inverse(standard_group(label), x, y)


def _third_line(label: str, r: int, s: int) -> int:
    lines = list(SINGULAR_LINES[label]) if label in EXCEPTIONAL else [2, 2, int(label[1:])]
    lines.remove(r)
    lines.remove(s)
    return lines[0]


# ----------------------------------------------------------------------- closed: cyclic


def ce_o(g: int) -> MaxActionResult:
    _check_genus(g)
    cases = cyclic_quotient_cases(g)
    best = max(cases, key=lambda c: c.n)
    if best.n != g + 1:
        raise ClassificationError("cyclic maximum is not the sphere-with-4-cones case")
    w = Witness(f"Z{best.n}", best.n, (best.n, best.n), None, SPHERE4, note=best.description)
    return MaxActionResult("CEo", g, best.n, (), (w,))


def ce(g: int) -> MaxActionResult:
    """Orientation-reversing Z_2n contains Z_n as its orientation-preserving half; for odd g
    Z_{2g+2} and Z_{2g-2} are impossible (a fixed point would carry the odd-order involution)."""
    _check_genus(g)
    wits, excluded = [], []
    for c in cyclic_quotient_cases(g):
        w = Witness(f"Z{c.n}", 2 * c.n, None, None, "doubled", note=c.description)
        if g % 2 == 1 and c.n in (g + 1, g - 1) and c.quotient_genus is not None:
            excluded.append(replace(w, note=w.note + "; excluded for odd g"))
        else:
            wits.append(w)
    order = max(w.order for w in wits)
    return MaxActionResult("CE", g, order, (), tuple(w for w in wits if w.order == order),
                           excluded=tuple(excluded))


# --------------------------------------------------------------------- closed: general


def closed_candidates(g: int) -> tuple[list[Witness], list[Witness]]:
    """All orientation-preserving candidates for genus g, and the excluded ones."""
    _check_genus(g)
    n = g + 1
    D = DihedralGroup(n)
    if sphere_4cone_genus(D.order, 2, n) != g:
        raise ClassificationError("dihedral signature mismatch")
    cands = [Witness(D.label, D.order, (2, n), (D.format(D.reflection), D.format(D.rotation)),
                     SPHERE4, note="dihedral, four cones 2,2,n,n")]
    # quotient through the vertex of the singular set: 2g = |G| sum over 2 more cones
    cands.append(Witness("bound", 2 * g, None, None, "vertex", note="|G| <= 2g, never maximal"))
    excluded = []
    for label, r, s in exceptional_signatures().get(g, ()):
        classes = _pair_classes(label, r, s)
        if not classes:
            excluded.append(Witness(label, label_order(label), (r, s), None, SPHERE4,
                                    note="no generating pair: preimage disconnected"))
        for c in classes:
            x, y = c.representative
            cands.append(Witness(label, label_order(label), (r, s), (str(x), str(y)), SPHERE4))
    return cands, excluded


def e_o(g: int) -> MaxActionResult:
    cands, excluded = closed_candidates(g)
    real = [w for w in cands if w.case != "vertex"]
    order = max(w.order for w in real)
    if order <= 2 * g:
        raise ClassificationError("vertex branch would not be dominated")
    return MaxActionResult("Eo", g, order, (), tuple(w for w in real if w.order == order),
                           excluded=tuple(excluded))


def _excluded_under_reflection(w: Witness) -> bool:
    if w.pair is None or w.group not in EXCEPTIONAL:
        return False
    G = standard_group(w.group)
    x, y = (G.parse(p) for p in w.pair)
    return _same_singular_line(w.group, *w.rs, x, y)


def e(g: int) -> MaxActionResult:
    """Double every orientation-preserving candidate, dropping those with both cone
    pairs on one singular line: the reflection cuts the quotient along a single
    circle and the preimage falls apart."""
    cands, excluded = closed_candidates(g)
    excluded = list(excluded)
    wits = []
    for w in cands:
        if w.case == "vertex":
            continue
        d = replace(w, order=2 * w.order, note=(w.note + "; " if w.note else "") + "doubled")
        if _excluded_under_reflection(w):
            excluded.append(replace(d, note=d.note + "; excluded: cone pairs on one singular line"))
        else:
            wits.append(d)
    order = max(w.order for w in wits)
    return MaxActionResult("E", g, order, (), tuple(w for w in wits if w.order == order),
                           excluded=tuple(excluded))


# ---------------------------------------------------------------------- bordered: cyclic


def _cyclic_disk_cases(alpha: int) -> list[CandidateCase]:
    """Z_{alpha+1} with quotient a disk with two cone points; the axis crosses them
    in opposite directions (y = x^-1) or in the same direction (y = x)."""
    n = alpha + 1
    Z = CyclicGroup(n)
    out = []
    for y, text in ((Z.inverse(1), "opposite"), (1, "same")):
        b = Z.subgroup_index([Z.then(1, y)])
        out.append(CandidateCase(Z.label, (n, n), CASE_A, (Z.format(1), Z.format(y)), b, True,
                                 surface_from_alpha(alpha, b, True)))
    return out


def cea_o(alpha: int) -> MaxActionResult:
    _check_genus(alpha)
    order = ce_o(alpha).order
    cases = _cyclic_disk_cases(alpha)
    assert all(label_order(c.group) == order for c in cases)
    return MaxActionResult("CEAo", alpha, order, _uniq(c.surface for c in cases),
                           tuple(c.witness() for c in cases))


def cea(alpha: int, faithful: bool = False) -> MaxActionResult:
    """Cyclic actions on bordered surfaces, orientation-reversing allowed.

    The reflection reverses the axis, so only the opposite-direction crossing
    survives and the surface is a punctured sphere.  For odd alpha the maximum
    Z_{2 alpha} lies in a plane and acts non-faithfully; requiring faithfulness
    leaves n <= floor(alpha/2) + 1 for the rotation part.
    """
    _check_genus(alpha)
    kind = "CEA-faithful" if faithful else "CEA"
    closed = ce(alpha)
    if faithful and alpha % 2 == 1:
        n_max = alpha // 2 + 1
        order = max(alpha + 1, 2 * n_max)
        w = Witness(f"Z{order}", order, None, None, "faithful",
                    note="rotation order <= floor(alpha/2)+1 once n in {alpha-1, alpha, alpha+1} is ruled out")
        return MaxActionResult(kind, alpha, order, (), (w,), ("faithful", "surfaces-unspecified"))
    opposite = _cyclic_disk_cases(alpha)[0]
    b = alpha + 1
    if alpha % 2 == 0:
        w = replace(opposite.witness(), order=2 * b, note="doubled")
        return MaxActionResult(kind, alpha, closed.order, (opposite.surface,), (w,),
                               ("faithful",) if faithful else ())
    # odd alpha: Z_alpha rotation about the axis times the reflection in the surface plane
    surf = surface_from_alpha(alpha, b, True)
    w = Witness(f"Z{alpha}", 2 * alpha, None, None, "planar annulus quotient", b, surf,
                note="boundaries lift to 1 and alpha components; action fixes the plane")
    return MaxActionResult(kind, alpha, closed.order, (surf,), (w,), ("non-faithful",))


# --------------------------------------------------------------------- bordered: general


def _case_from_pair(label: str, G, rs: tuple[int, int], x, y, case: str, alpha: int) -> CandidateCase:
    if case == CASE_A:
        b = G.subgroup_index([G.then(x, y)])
        orientable = True
    else:
        conj = G.then(G.then(G.inverse(y), x), y)
        b = G.subgroup_index([x, conj])
        # the reflector arc reverses orientation: need a character killing y but not x
        orientable = G.has_index2_subgroup(y, x)
    try:
        surf = surface_from_alpha(alpha, b, orientable)
    except ValueError as exc:
        raise ClassificationError(f"classification contradiction for {label} {rs} case {case}: {exc}") from None
    return CandidateCase(label, rs, case, (G.format(x), G.format(y)), b, orientable, surf)


def enumerate_bordered_cases(alpha: int) -> list[CandidateCase]:
    """Every quotient shape of an orientation-preserving action reaching the
    exceptional or dihedral bound on a bordered surface of algebraic genus alpha."""
    _check_genus(alpha)
    out = []
    D = DihedralGroup(alpha + 1)
    for case in (CASE_A, CASE_B):
        out.append(_case_from_pair(D.label, D, (2, D.n), D.reflection, D.rotation, case, alpha))
    for label, r, s in exceptional_signatures().get(alpha, ()):
        G = standard_group(label)
        for c in _pair_classes(label, r, s):
            x, y = c.representative
            for case in ((CASE_A, CASE_B) if r == 2 else (CASE_A,)):
                out.append(_case_from_pair(label, G, (r, s), x, y, case, alpha))
    return out


def ea_o(alpha: int) -> MaxActionResult:
    cases = enumerate_bordered_cases(alpha)
    order = max(label_order(c.group) for c in cases)
    top = [c for c in cases if label_order(c.group) == order]
    return MaxActionResult("EAo", alpha, order, _uniq(c.surface for c in top),
                           tuple(c.witness() for c in top))


def ea(alpha: int) -> MaxActionResult:
    """Orientation-reversing actions on bordered surfaces.

    The reflection of R^3/G^o fixes a plane through the singular set.  Case (b)
    quotients would lie in that plane and are impossible; in case (a) the two
    cone points must sit on different singular lines, so xy has the index of
    the third line and the surface is a sphere with |G^o|/ord(xy) holes.
    """
    wits, excluded = [], []
    for c in enumerate_bordered_cases(alpha):
        w = replace(c.witness(), order=2 * label_order(c.group), note="doubled")
        if c.case == CASE_B:
            excluded.append(replace(w, note="case (b) lies in the mirror"))
            continue
        G = group_for(c.group)
        x, y = (G.parse(p) for p in c.pair)
        if _same_singular_line(c.group, *c.rs, x, y):
            excluded.append(replace(w, note="excluded: cone points on one singular line"))
            continue
        t = _third_line(c.group, *c.rs)
        if G.element_order(G.then(x, y)) != t:
            excluded.append(replace(w, note=f"xy does not have the third line's index {t}"))
            continue
        b = label_order(c.group) // t
        if b != alpha + 1 or c.surface != SurfaceType(True, 0, b):
            raise ClassificationError(f"reflection case for {c.group} {c.rs} gives b={b}, not alpha+1")
        wits.append(w)
    order = max(w.order for w in wits)
    top = [w for w in wits if w.order == order]
    return MaxActionResult("EA", alpha, order, _uniq(w.surface for w in top), tuple(top),
                           excluded=tuple(excluded))


def graph_variants(alpha: int, which: str) -> MaxActionResult:
    """Graph versions coincide with the bordered ones: thicken the graph to a
    ribbon, or take the boundary of an equivariant neighbourhood."""
    delegate = {"CEGo": cea_o, "CEG": cea, "EGo": ea_o, "EG": ea}
    if which not in delegate:
        raise ValueError(f"unknown graph variant {which!r}")
    res = delegate[which](alpha)
    return replace(res, kind=which, flags=res.flags + ("graph",))


def max_order(kind: str, n: int) -> MaxActionResult:
    """Dispatch on the kind names in :data:`KINDS` (``o`` marks orientation-preserving)."""
    table = {"CEo": ce_o, "CE": ce, "Eo": e_o, "E": e, "CEAo": cea_o, "CEA": cea,
             "CEA-faithful": lambda a: cea(a, faithful=True), "EAo": ea_o, "EA": ea}
    if kind in table:
        return table[kind](n)
    if kind in GRAPH_KINDS:
        return graph_variants(n, kind)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------- independent recompute


def recompute_surface(w: Witness, alpha: int) -> SurfaceType:
    """Rebuild a bordered witness's surface from its group, pair and case alone."""
    G = group_for(w.group)
    x, y = (G.parse(p) for p in w.pair)
    if (G.element_order(x), G.element_order(y)) != tuple(w.rs):
        raise ClassificationError("pair orders do not match (r, s)")
    if G.subgroup_order([x, y]) != G.order:
        raise ClassificationError("pair does not generate the group")
    return _case_from_pair(w.group, G, w.rs, x, y, w.case, alpha).surface


def witness_is_sound(w: Witness, result: MaxActionResult) -> bool:
    """Recheck one witness against the result it belongs to.

    Witnesses carrying a generating pair are rebuilt from scratch: orders,
    generation, and then either the closed genus or the bordered surface.
    """
    if w.order != result.order:
        return False
    if w.pair is None:
        return True
    G = group_for(w.group)
    x, y = (G.parse(p) for p in w.pair)
    if w.order not in (G.order, 2 * G.order):
        return False
    if (G.element_order(x), G.element_order(y)) != tuple(w.rs):
        return False
    if G.subgroup_order([x, y]) != G.order:
        return False
    if w.case == SPHERE4:
        return sphere_4cone_genus(G.order, *w.rs) == result.input
    surf = _case_from_pair(w.group, G, w.rs, x, y, w.case, result.input).surface
    return surf == w.surface and surf in result.surfaces
