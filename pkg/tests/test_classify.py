from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from maxsym import classify as C
from maxsym.classify import (MaxActionResult, UnboundedOrder, cea, cea_o, ce, ce_o, e, e_o, ea, ea_o,
                             enumerate_bordered_cases, graph_variants, max_order, recompute_surface,
                             witness_is_sound)
from maxsym.orbifold import SurfaceType
from maxsym.permgroup import conjugate_up_to_inverse, standard_group

S = lambda g, b: SurfaceType(True, g, b)    # noqa: E731
N = lambda g, b: SurfaceType(False, g, b)   # noqa: E731


@pytest.mark.parametrize("fn", [ce_o, ce, e_o, e, cea_o, cea, ea_o, ea])
@pytest.mark.parametrize("x", [-3, 0, 1])
def test_unbounded_inputs(fn, x):
    with pytest.raises(UnboundedOrder, match="unbounded"):
        fn(x)


@pytest.mark.parametrize("g,o,full", [(2, 3, 6), (3, 4, 6), (4, 5, 10), (100, 101, 202), (101, 102, 202)])
def test_cyclic_closed(g, o, full):
    assert ce_o(g).order == o
    assert ce(g).order == full


@pytest.mark.parametrize("g,o,full", [(2, 6, 12), (3, 12, 24), (5, 24, 48), (7, 24, 48), (9, 20, 40),
                                      (11, 60, 120), (19, 60, 120), (21, 60, 88), (29, 60, 120)])
def test_general_closed(g, o, full):
    assert e_o(g).order == o
    assert e(g).order == full


def test_genus_9_excludes_s4_33():
    res = e_o(9)
    assert res.order == 20
    assert any(w.group == "S4" and w.rs == (3, 3) for w in res.excluded)


def test_genus_21_reflection_excluded():
    res = e(21)
    assert res.order == 88
    assert all(w.group.startswith("D") for w in res.witnesses)
    assert any(w.group == "A5" and "singular line" in w.note for w in res.excluded)


def test_genus_29_ties_dihedral_and_a5():
    groups = {w.group for w in e_o(29).witnesses}
    assert groups == {"D30", "A5"}


def test_same_line_rule_only_fires_on_a4_and_a5_33():
    """r = s occurs for A4 (3,3), S4 (3,3) (no pairs) and A5 (3,3).

    In A4 every order-3 element is conjugate to any other or to its inverse, so the
    test cannot tell the two index-3 lines apart and flags both A4 classes.
    """
    hits = []
    for g, sigs in C.exceptional_signatures().items():
        for label, r, s in sigs:
            for c in C._pair_classes(label, r, s):
                if C._same_singular_line(label, r, s, *c.representative):
                    hits.append((g, label))
    assert sorted(set(hits)) == [(5, "A4"), (21, "A5")]
    assert e_o(5).order == 24      # A4 at order 12 is not maximal there


@pytest.mark.parametrize("alpha,surfaces", [(2, {S(0, 3), S(1, 1)}), (3, {S(0, 4), S(1, 2)}), (4, {S(0, 5), S(2, 1)})])
def test_cea_o(alpha, surfaces):
    res = cea_o(alpha)
    assert res.order == alpha + 1 and set(res.surfaces) == surfaces


def test_cea():
    r = cea(4)
    assert (r.order, r.surfaces, r.flags) == (10, (S(0, 5),), ())
    r = cea(3)
    assert (r.order, r.surfaces) == (6, (S(0, 4),)) and "non-faithful" in r.flags
    r = cea(3, faithful=True)
    assert r.order == 4 and r.surfaces == () and "surfaces-unspecified" in r.flags
    assert cea(4, faithful=True).order == 10


EA_O_ROWS = {
    3: (12, {S(0, 4), N(1, 3)}),
    5: (24, {S(0, 6), S(1, 4)}),
    7: (24, {S(0, 8), N(4, 4)}),
    9: (20, {S(0, 10), S(4, 2)}),
    11: (60, {S(0, 12), N(6, 6)}),
    19: (60, {S(0, 20), S(4, 12), N(10, 10), N(14, 6)}),
    21: (60, {S(5, 12)}),
    29: (60, {S(0, 30), S(5, 20), S(9, 12), S(14, 2)}),
}


@pytest.mark.parametrize("alpha", sorted(EA_O_ROWS))
def test_ea_o_rows(alpha):
    res = ea_o(alpha)
    assert (res.order, set(res.surfaces)) == EA_O_ROWS[alpha]


@pytest.mark.parametrize("alpha,order", [(3, 24), (5, 48), (7, 48), (11, 120), (19, 120), (21, 88), (9, 40)])
def test_ea(alpha, order):
    res = ea(alpha)
    assert res.order == order and res.surfaces == (S(0, alpha + 1),)


def test_bordered_case_examples():
    cases = enumerate_bordered_cases(19)
    by = {(c.group, c.case, c.boundary): c for c in cases}
    assert by[("A5", "a", 12)].surface == S(4, 12)
    assert by[("A5", "b", 10)].surface == N(10, 10)
    assert by[("A5", "b", 6)].surface == N(14, 6)
    c7 = [c for c in enumerate_bordered_cases(7) if c.group == "S4" and c.case == "b"]
    assert [(c.boundary, c.surface) for c in c7] == [(4, N(4, 4))]
    c21 = [c for c in enumerate_bordered_cases(21) if c.group == "A5"]
    assert [(c.case, c.boundary, c.surface) for c in c21] == [("a", 12, S(5, 12))]


def test_case_viii_products():
    """xy for the four (3,5) pairs, read left to right, have b = 12, 20, 12, 30."""
    A5 = standard_group("A5")
    y = A5.parse("(12345)")
    got = [A5.subgroup_index([A5.then(A5.parse(x), y)]) for x in ("(123)", "(132)", "(124)", "(142)")]
    assert got == [12, 20, 12, 30]
    assert str(A5.then(A5.parse("(142)"), y)) == "(15)(34)"


def test_graph_variants():
    assert graph_variants(11, "EGo").order == 60
    assert graph_variants(4, "CEG").order == 10
    assert graph_variants(3, "EG").order == 24
    assert "graph" in graph_variants(3, "EG").flags
    with pytest.raises(ValueError):
        graph_variants(3, "XX")


def test_max_order_dispatch():
    assert max_order("CEA-faithful", 5).order == 6
    with pytest.raises(ValueError):
        max_order("nope", 4)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 400))
def test_monotone_and_genus(n):
    assert ce_o(n).order <= e_o(n).order
    assert ce(n).order <= e(n).order
    assert cea(n).order <= ea(n).order
    assert cea_o(n).order <= ea_o(n).order
    assert all(s.algebraic_genus == n for s in ea_o(n).surfaces)
    assert all(s.genus == 0 and s.orientable for s in ea(n).surfaces)


@pytest.mark.parametrize("alpha", list(range(2, 40)) + [59, 60, 61])
def test_witness_soundness(alpha):
    for res in (ea_o(alpha), ea(alpha), cea_o(alpha), e_o(alpha), e(alpha)):
        assert res.witnesses
        for w in res.witnesses:
            assert witness_is_sound(w, res)
            if w.case in ("a", "b") and w.pair and w.group in C.EXCEPTIONAL:
                assert recompute_surface(w, alpha) == w.surface


def test_witness_soundness_detects_tampering():
    res = ea_o(19)
    w = res.witnesses[0]
    assert not witness_is_sound(replace(w, surface=S(9, 2)), res)
    assert not witness_is_sound(replace(w, order=61), res)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(C.KINDS), st.integers(2, 120))
def test_json_roundtrip(kind, n):
    res = max_order(kind, n)
    assert MaxActionResult.from_json(res.to_json()) == res


def test_conjugacy_of_case_vii_pair():
    A5 = standard_group("A5")
    assert conjugate_up_to_inverse(A5, A5.parse("(123)"), A5.parse("(145)"))
