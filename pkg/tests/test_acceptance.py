"""Acceptance criteria 1-10, each timed from cold caches against its budget.

Every criterion prints one line ``criterion N: PASS|FAIL (seconds / budget)``.
Run directly (``python3 tests/test_acceptance.py``) for the lines alone.
"""
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from maxsym import classify, permgroup
from maxsym.classify import (MaxActionResult, cea, cea_o, ce, ce_o, e, e_o, ea, ea_o, max_order,
                             witness_is_sound)
from maxsym.orbifold import SurfaceType, _rh_rhs, rh_cover_genus
from maxsym.permgroup import aut_equivalent, classify_generating_pairs, standard_group
from maxsym import verify

S = lambda g, b: SurfaceType(True, g, b)    # noqa: E731
N = lambda g, b: SurfaceType(False, g, b)   # noqa: E731

RESULTS: dict[int, str] = {}


def cold():
    classify.exceptional_signatures.cache_clear()
    permgroup._standard_group.cache_clear()
    permgroup._automorphisms.cache_clear()
    permgroup._classify.cache_clear()


@contextmanager
def criterion(n: int, budget: float | None, capsys=None):
    cold()
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        dt = time.perf_counter() - t0
        within = budget is None or dt < budget
        status = "PASS" if ok and within else "FAIL"
        limit = f" / {budget:g}s" if budget else ""
        line = f"criterion {n}: {status} ({dt:.2f}s{limit})"
        RESULTS[n] = line
        if capsys is not None:
            with capsys.disabled():
                print("\n" + line)
        else:
            print(line)
    assert within, f"criterion {n} took {dt:.2f}s, budget {budget}s"


G_RANGE = range(2, 501)
A_RANGE = range(2, 201)


def test_criterion_1_cyclic_closed(capsys):
    with criterion(1, 1.0, capsys):
        for g in G_RANGE:
            assert ce_o(g).order == g + 1
            assert ce(g).order == (2 * g + 2 if g % 2 == 0 else 2 * g)


def test_criterion_2_general_closed(capsys):
    table = {3: 12, 5: 24, 7: 24, 11: 60, 19: 60, 21: 60}
    with criterion(2, 5.0, capsys):
        for g in G_RANGE:
            eo = e_o(g).order
            assert eo == table.get(g, 2 * g + 2), g
            assert e(g).order == (88 if g == 21 else 2 * eo), g


def test_criterion_3_generating_pair_facts(capsys):
    with criterion(3, 10.0, capsys):
        counts = []
        for (label, r, s, listed), want in zip(verify.FACTS, verify.EXPECTED_CLASS_COUNTS):
            G = standard_group(label)
            classes = classify_generating_pairs(G, r, s)
            oracle = verify.brute_force_pair_classes(label, r, s)
            counts.append(len(classes))
            assert len(oracle) == len(classes) == want
            listed_pairs = [(G.parse(a), G.parse(b)) for a, b in listed]
            for c in classes:
                assert sum(aut_equivalent(G, c.representative, p, unordered=r == s) for p in listed_pairs) == 1
            for p in listed_pairs:
                assert sum(p in o for o in oracle) == 1
        assert tuple(counts) == (1, 1, 1, 1, 2, 1, 4)
        assert classify_generating_pairs(standard_group("S4"), 3, 3) == []
        assert verify.brute_force_pair_classes("S4", 3, 3) == []


def test_criterion_4_cyclic_bordered(capsys):
    with criterion(4, 1.0, capsys):
        for a in A_RANGE:
            r = cea_o(a)
            second = S(a // 2, 1) if a % 2 == 0 else S((a - 1) // 2, 2)
            assert r.order == a + 1 and set(r.surfaces) == {S(0, a + 1), second}
            r = cea(a)
            assert r.surfaces == (S(0, a + 1),)
            if a % 2 == 0:
                assert r.order == 2 * a + 2 and "non-faithful" not in r.flags
            else:
                assert r.order == 2 * a and "non-faithful" in r.flags
                assert cea(a, faithful=True).order == a + 1


EA_O_ROWS = {
    3: (12, {S(0, 4), N(1, 3)}),
    5: (24, {S(0, 6), S(1, 4)}),
    7: (24, {S(0, 8), N(4, 4)}),
    11: (60, {S(0, 12), N(6, 6)}),
    19: (60, {S(0, 20), S(4, 12), N(10, 10), N(14, 6)}),
    21: (60, {S(5, 12)}),
    29: (60, {S(0, 30), S(5, 20), S(9, 12), S(14, 2)}),
}


def test_criterion_5_ea_o(capsys):
    with criterion(5, 10.0, capsys):
        for a in A_RANGE:
            r = ea_o(a)
            if a in EA_O_ROWS:
                assert (r.order, set(r.surfaces)) == EA_O_ROWS[a], a
                assert len(r.surfaces) == len(EA_O_ROWS[a][1])
            else:
                second = S(a // 2, 1) if a % 2 == 0 else S((a - 1) // 2, 2)
                assert (r.order, set(r.surfaces)) == (2 * a + 2, {S(0, a + 1), second}), a


def test_criterion_6_ea(capsys):
    table = {3: 24, 5: 48, 7: 48, 11: 120, 19: 120}
    with criterion(6, 5.0, capsys):
        for a in A_RANGE:
            r = ea(a)
            assert r.order == table.get(a, 4 * a + 4), a
            assert r.surfaces == (S(0, a + 1),), a


def test_criterion_7_coset_indices(capsys):
    with criterion(7, None, capsys):
        for name, ok, detail in verify.coset_spot_checks():
            assert ok, f"{name}: {detail}"


def test_criterion_8_constructions(capsys):
    with criterion(8, 30.0, capsys):
        rep = verify.suite_constructions()
        assert rep.ok, [c for c in rep.failures()]


def test_criterion_9_ribbon_oracle(capsys):
    with criterion(9, 60.0, capsys):
        rep = verify.suite_ribbon()
        assert rep.ok, [c for c in rep.failures()]
        names = {c.name for c in rep.checks}
        for fx in ("ico-S4-12", "ico-N10-10", "tri-S0-30", "tri-S9-12", "tri-S5-20"):
            assert f"fixture {fx}" in names


def test_criterion_10_properties(capsys, tmp_path):
    from maxsym.constructions import (build_dipole, build_genus21, fixtures, from_json, to_json)
    with criterion(10, None, capsys):
        # Riemann-Hurwitz in exact rationals
        for order in range(1, 121):
            for cones in ((), (2, 3), (2, 2, 5, 5), (3, 3, 3, 3), (order,) * 4 if order > 1 else ()):
                rhs = _rh_rhs(order, 0, cones)
                assert isinstance(rhs, Fraction)
                try:
                    g = rh_cover_genus(order, 0, cones)
                except ValueError:
                    continue
                assert Fraction(2 - 2 * g) == rhs
        # witness soundness on every engine output, JSON identity for every result
        for kind in classify.KINDS:
            for n in range(2, 201):
                res = max_order(kind, n)
                assert all(witness_is_sound(w, res) for w in res.witnesses), (kind, n)
                assert MaxActionResult.from_json(res.to_json()) == res
        # case (b) orientability against the eight per-case conclusions
        checks = list(verify.case_b_checks())
        assert len(checks) == 8 and all(ok for _, ok, _ in checks)
        # geometry JSON identity
        for obj in (build_dipole(2)[0], build_genus21()[0], fixtures.load("ico-S4-12")):
            assert from_json(to_json(obj)) == obj


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
