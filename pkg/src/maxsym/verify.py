"""Verification suites: brute-force oracles and closed forms checked against the engines.

Each suite returns a :class:`SuiteReport`; ``report.ok`` is false as soon as one
check fails, and ``report.failures()`` lists the offending checks with a short dump.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .classify import (CASE_A, CASE_B, _case_from_pair, cea, cea_o, ce, ce_o, e, e_o, ea, ea_o,
                       group_for, witness_is_sound)
from .orbifold import SurfaceType
from .permgroup import (FiniteGroup, Permutation, aut_equivalent, classify_generating_pairs, compose,
                        parse_cycles, standard_group, subgroup_index, symmetric_group_elements)

S = lambda g, b: SurfaceType(True, g, b)    # noqa: E731
N = lambda g, b: SurfaceType(False, g, b)   # noqa: E731


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        passed = sum(c.ok for c in self.checks)
        return f"{self.suite}: {passed}/{len(self.checks)} checks passed"


# ------------------------------------------------------------------------ closed forms


def ce_o_closed(g: int) -> int:
    return g + 1


def ce_closed(g: int) -> int:
    return 2 * g + 2 if g % 2 == 0 else 2 * g


E_O_TABLE = {3: 12, 5: 24, 7: 24, 11: 60, 19: 60, 21: 60}


def e_o_closed(g: int) -> int:
    return E_O_TABLE.get(g, 2 * g + 2)


def e_closed(g: int) -> int:
    return 88 if g == 21 else 2 * e_o_closed(g)


def cea_o_closed(alpha: int) -> tuple[int, frozenset]:
    second = S(alpha // 2, 1) if alpha % 2 == 0 else S((alpha - 1) // 2, 2)
    return alpha + 1, frozenset({S(0, alpha + 1), second})


def cea_closed(alpha: int, faithful: bool = False) -> tuple[int, frozenset]:
    if faithful and alpha % 2:
        return alpha + 1, frozenset()
    return (2 * alpha + 2 if alpha % 2 == 0 else 2 * alpha), frozenset({S(0, alpha + 1)})


EA_O_TABLE = {
    3: (12, {S(0, 4), N(1, 3)}),
    5: (24, {S(0, 6), S(1, 4)}),
    7: (24, {S(0, 8), N(4, 4)}),
    11: (60, {S(0, 12), N(6, 6)}),
    19: (60, {S(0, 20), S(4, 12), N(10, 10), N(14, 6)}),
    21: (60, {S(5, 12)}),
    29: (60, {S(0, 30), S(5, 20), S(9, 12), S(14, 2)}),
}

EA_TABLE = {3: 24, 5: 48, 7: 48, 11: 120, 19: 120}


def ea_o_closed(alpha: int) -> tuple[int, frozenset]:
    if alpha in EA_O_TABLE:
        order, surfs = EA_O_TABLE[alpha]
        return order, frozenset(surfs)
    return 2 * alpha + 2, cea_o_closed(alpha)[1]


def ea_closed(alpha: int) -> tuple[int, frozenset]:
    return EA_TABLE.get(alpha, 4 * alpha + 4), frozenset({S(0, alpha + 1)})


# ------------------------------------------------------------------------- facts oracle

# (group, r, s, listed pairs): every generating pair is Aut-equivalent to one listed pair
FACTS = (
    ("A4", 2, 3, (("(12)(34)", "(123)"),)),
    ("S4", 2, 3, (("(12)", "(134)"),)),
    ("S4", 2, 4, (("(12)", "(1234)"),)),
    ("A5", 2, 3, (("(12)(34)", "(135)"),)),
    ("A5", 2, 5, (("(12)(34)", "(12345)"), ("(13)(24)", "(12345)"))),
    ("A5", 3, 3, (("(123)", "(145)"),)),
    ("A5", 3, 5, (("(123)", "(12345)"), ("(132)", "(12345)"),
                  ("(124)", "(12345)"), ("(142)", "(12345)"))),
)

EXPECTED_CLASS_COUNTS = (1, 1, 1, 1, 2, 1, 4)


def _brute_closure(gens: list[Permutation]) -> set[Permutation]:
    n = gens[0].degree
    seen = {Permutation.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = compose(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def _aut_by_conjugation(label: str) -> list[Callable[[Permutation], Permutation]]:
    """Aut(A4) = Aut(S4) = S4 and Aut(A5) = S5, all acting by conjugation."""
    n = 5 if label == "A5" else 4
    return [lambda p, c=c: compose(compose(c, p), c.inverse()) for c in symmetric_group_elements(n)]


def brute_force_pair_classes(label: str, r: int, s: int) -> list[set[tuple[Permutation, Permutation]]]:
    """Orbits of generating pairs computed without the library's automorphism search."""
    G = standard_group(label)
    elems = list(G.elements)
    order = {p: _order(p) for p in elems}
    pairs = [(x, y) for x in elems if order[x] == r for y in elems if order[y] == s
             if len(_brute_closure([x, y])) == G.order]
    auts = _aut_by_conjugation(label)
    todo, orbits = set(pairs), []
    for p in pairs:
        if p not in todo:
            continue
        orbit = {(a(p[0]), a(p[1])) for a in auts}
        if r == s:
            orbit |= {(y, x) for x, y in orbit}
        todo -= orbit
        orbits.append(orbit)
    return orbits


def _order(p: Permutation) -> int:
    k, q = 1, p
    while not q.is_identity():
        q, k = compose(q, p), k + 1
    return k


def suite_facts() -> SuiteReport:
    rep = SuiteReport("facts")
    confirmed = 0
    counts = []
    for i, ((label, r, s, listed), want) in enumerate(zip(FACTS, EXPECTED_CLASS_COUNTS), 1):
        G = standard_group(label)
        classes = classify_generating_pairs(G, r, s)
        oracle = brute_force_pair_classes(label, r, s)
        counts.append(len(classes))
        listed_pairs = [(G.parse(a), G.parse(b)) for a, b in listed]
        ok = len(classes) == want == len(oracle)
        ok &= sorted(len(o) for o in oracle) == sorted(c.class_size for c in classes)
        # every representative matches exactly one listed pair and vice versa
        for c in classes:
            hits = [p for p in listed_pairs if aut_equivalent(G, c.representative, p, unordered=r == s)]
            ok &= len(hits) == 1
        for p in listed_pairs:
            ok &= sum(p in o for o in oracle) == 1
        confirmed += ok
        reps = ", ".join(f"{{{c.representative[0]}, {c.representative[1]}}}" for c in classes)
        rep.add(f"fact ({i}) {label} ({r},{s})", ok, f"{len(classes)} classes: {reps}")
    rep.add("class counts", tuple(counts) == EXPECTED_CLASS_COUNTS, str(tuple(counts)))
    none = classify_generating_pairs(standard_group("S4"), 3, 3)
    rep.add("S4 (3,3) has no generating pair", not none and not brute_force_pair_classes("S4", 3, 3))
    rep.add("facts confirmed", confirmed == 7, f"{confirmed}/7")
    for name, ok, detail in coset_spot_checks():
        rep.add(name, ok, detail)
    for name, ok, detail in case_b_checks():
        rep.add(name, ok, detail)
    return rep


COSET_SPOT_CHECKS = (
    ("A5", ("(12345)",), 12),
    ("A4", ("(134)",), 4),
    ("S4", ("(1234)",), 6),
    ("A5", ("(135)",), 20),
    ("A5", ("(12)(34)", "(23)(45)"), 6),
    ("A5", ("(13)(24)", "(24)(35)"), 10),
)


def coset_spot_checks() -> Iterator[tuple[str, bool, str]]:
    for label, gens, want in COSET_SPOT_CHECKS:
        G = standard_group(label)
        got = subgroup_index(G, [parse_cycles(x, G.degree) for x in gens])
        yield f"[{label}:<{','.join(gens)}>] = {want}", got == want, f"got {got}"


# (case, alpha, group, (r, s), x, y, boundary, orientable): the per-case conclusions for
# quotients with a reflector arc
CASE_B_CONCLUSIONS = (
    ("(i) even", 4, "D5", (2, 5), "s", "r", 1, True),
    ("(i) odd", 5, "D6", (2, 6), "s", "r", 2, True),
    ("(ii)", 3, "A4", (2, 3), "(12)(34)", "(123)", 3, False),
    ("(iii)", 5, "S4", (2, 3), "(12)", "(134)", 4, True),
    ("(iv)", 7, "S4", (2, 4), "(12)", "(1234)", 4, False),
    ("(v)", 11, "A5", (2, 3), "(12)(34)", "(135)", 6, False),
    ("(vi) first", 19, "A5", (2, 5), "(12)(34)", "(12345)", 6, False),
    ("(vi) second", 19, "A5", (2, 5), "(13)(24)", "(12345)", 10, False),
)


def case_b_checks() -> Iterator[tuple[str, bool, str]]:
    for name, alpha, label, rs, xs, ys, b, ori in CASE_B_CONCLUSIONS:
        G = group_for(label)
        c = _case_from_pair(label, G, rs, G.parse(xs), G.parse(ys), CASE_B, alpha)
        yield (f"case (b) {name}: b={b}, {'orientable' if ori else 'non-orientable'}",
               c.boundary == b and c.orientable == ori, f"got b={c.boundary}, {c.surface.sigma_notation}")


# ------------------------------------------------------------------------------ tables


def table_mismatches(g_range: range, a_range: range) -> Iterator[tuple[str, int, object, object]]:
    """Yield (kind, input, engine, closed form) for every disagreement."""
    for g in g_range:
        for kind, fn, cf in (("CEo", ce_o, ce_o_closed), ("CE", ce, ce_closed),
                             ("Eo", e_o, e_o_closed), ("E", e, e_closed)):
            got = fn(g).order
            if got != cf(g):
                yield kind, g, got, cf(g)
    for a in a_range:
        for kind, fn, cf in (("CEAo", cea_o, cea_o_closed), ("CEA", cea, cea_closed),
                             ("CEA-faithful", lambda x: cea(x, True), lambda x: cea_closed(x, True)),
                             ("EAo", ea_o, ea_o_closed), ("EA", ea, ea_closed)):
            res = fn(a)
            got = (res.order, frozenset(res.surfaces))
            if got != cf(a):
                yield kind, a, got, cf(a)


def suite_tables(lo: int = 2, hi: int = 500, alpha_hi: int | None = None) -> SuiteReport:
    rep = SuiteReport("tables")
    alpha_hi = min(hi, 200) if alpha_hi is None else alpha_hi
    bad = list(table_mismatches(range(lo, hi + 1), range(lo, alpha_hi + 1)))
    rep.add(f"closed forms g in [{lo},{hi}], alpha in [{lo},{alpha_hi}]", not bad,
            f"{len(bad)} mismatches" + (f"; first: {bad[0]}" if bad else ""))
    unsound = []
    for a in range(lo, alpha_hi + 1):
        for res in (ea_o(a), ea(a), cea_o(a)):
            unsound += [(res.kind, a, w) for w in res.witnesses if not witness_is_sound(w, res)]
            if any(s.algebraic_genus != a for s in res.surfaces):
                unsound.append((res.kind, a, "algebraic genus"))
    for g in range(lo, min(hi, 200) + 1):
        for res in (e_o(g), e(g)):
            unsound += [(res.kind, g, w) for w in res.witnesses if not witness_is_sound(w, res)]
    rep.add("witness soundness", not unsound, f"first: {unsound[0]}" if unsound else "")
    return rep


# ------------------------------------------------------------------- ribbon and geometry

PLATONIC_FACES = {"T": 4, "C": 6, "O": 8, "D": 12, "I": 20}


def suite_ribbon() -> SuiteReport:
    from .constructions import (build_dipole, build_platonic, combinatorial_ribbon, fixtures,
                                polygon_surface_type, ribbon_from_embedding, ribbon_surface_type)
    rep = SuiteReport("ribbon")
    for which, F in PLATONIC_FACES.items():
        graph, _, _ = build_platonic(which)
        R = ribbon_from_embedding(graph)
        st = ribbon_surface_type(R)
        rep.add(f"{which} untwisted = Σ_(0,{F})", st == S(0, F) and st.algebraic_genus == graph.genus,
                st.sigma_notation)
        if R.E <= 12:
            rep.add(f"{which} polygon oracle", polygon_surface_type(R) == st)
    graph, _, _ = build_platonic("I")
    st = ribbon_surface_type(ribbon_from_embedding(graph, [1] * graph.E))
    rep.add("icosahedron all twisted = Σ⁻_(14,6)", st == N(14, 6), st.sigma_notation)
    for name, fx in fixtures.FIXTURES.items():
        R = fixtures.load(name)
        st = ribbon_surface_type(R)
        rep.add(f"fixture {name}", st == fx.expect and st.algebraic_genus == R.algebraic_genus,
                st.sigma_notation)
    small = [ribbon_from_embedding(build_platonic("T")[0]),
             ribbon_from_embedding(build_platonic("C")[0]),
             ribbon_from_embedding(build_platonic("O")[0]),
             combinatorial_ribbon(2, [(0, 1)] * 3),
             combinatorial_ribbon(1, [(0, 0)])]
    small += [ribbon_from_embedding(build_dipole(g)[0]) for g in range(2, 6)]
    bad = []
    for R in small:
        masks = itertools.product((0, 1), repeat=R.E) if R.E <= 6 else [R.twists]
        for tw in masks:
            T = R.with_twists(tw)
            if ribbon_surface_type(T) != polygon_surface_type(T):
                bad.append((R.edges, tw))
    rep.add("tracing agrees with polygon oracle", not bad, f"first: {bad[0]}" if bad else "")
    return rep


def suite_constructions() -> SuiteReport:
    from .constructions import build_dipole, build_genus21, build_platonic, check_invariance
    rep = SuiteReport("constructions")
    want = {"T": (12, 24), "C": (24, 48), "O": (24, 48), "D": (60, 120), "I": (60, 120)}
    for which, (r, f) in want.items():
        graph, rot, full = build_platonic(which)
        ok = (rot.order, full.order) == (r, f)
        ok &= bool(check_invariance(rot, graph)) and bool(check_invariance(full, graph))
        rep.add(f"platonic {which}: |rot|={r}, |full|={f}", ok, f"got {rot.order}, {full.order}")
    for g in range(2, 9):
        graph, groups = build_dipole(g, 1)
        expect = {"rotation": g + 1, "dihedral": 2 * (g + 1), "full": 4 * g + 4}
        if g % 2 == 0:
            expect["rotary_reflection"] = 2 * g + 2
        got = {k: v.order for k, v in groups.items()}
        ok = got == expect and all(check_invariance(G, graph) for G in groups.values())
        rep.add(f"dipole {g}:1", ok and graph.genus == g, str(got))
        if g % 2:
            graph, groups = build_dipole(g, 2)
            G = groups["rotary_reflection"]
            rep.add(f"dipole {g}:2", G.order == 2 * g and bool(check_invariance(G, graph))
                    and graph.genus == g, str(G.order))
    graph, rot = build_genus21()
    rep.add("genus-21 graph", (graph.V, graph.E, graph.genus, rot.order) == (40, 60, 21, 60)
            and bool(check_invariance(rot, graph)), f"V={graph.V} E={graph.E}")
    return rep


SUITES = {"facts": suite_facts, "tables": suite_tables, "ribbon": suite_ribbon,
          "constructions": suite_constructions}


def run_suite(name: str, lo: int | None = None, hi: int | None = None) -> list[SuiteReport]:
    if name == "all":
        return [r for n in SUITES for r in run_suite(n, lo, hi)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    if name == "tables" and (lo is not None or hi is not None):
        return [suite_tables(lo or 2, hi or 500)]
    return [SUITES[name]()]
