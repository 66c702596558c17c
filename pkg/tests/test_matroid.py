"""Core matroid type and operations, checked against brute force."""

from __future__ import annotations

from itertools import combinations

import pytest

import _oracles as oracle
from laminarmatroids import (
    EliminationFails,
    ExplicitMatroid,
    MatroidError,
    NotAnAntichain,
    OverlappingSets,
    TooLarge,
    TooSmall,
    build_matroid,
    circuit,
    direct_sum,
    excluded_minor,
    fano,
    parallel_connection,
    two_sum,
    uniform,
)
from laminarmatroids.matroid import apply_witness, has_minor, is_isomorphic


def circuits_set(m):
    return {frozenset(c) for c in m.circuits}


def same_labeled(m1, m2):
    """Equality up to ground order: same labels, same circuit family."""
    return set(m1.elements) == set(m2.elements) and circuits_set(m1) == circuits_set(m2)


EM3 = excluded_minor(3)
U24 = uniform(2, 4, ("a", "b", "c", "d"))


class TestBuild:
    def test_uniform_from_circuits(self):
        m = build_matroid("abcd", [c for c in combinations("abcd", 3)])
        assert m == U24
        assert m.rank() == 2

    def test_loop_and_coloop(self):
        m = build_matroid("ab", [("a",)])
        assert m.loops() == frozenset("a")
        assert m.coloops() == frozenset("b")
        assert m.rank() == 1

    def test_not_an_antichain(self):
        with pytest.raises(NotAnAntichain) as e:
            build_matroid("abc", [("a", "b"), ("a", "b", "c")])
        assert e.value.small == frozenset("ab")

    def test_elimination_failure(self):
        with pytest.raises(EliminationFails):
            build_matroid("abc", [("a", "b"), ("b", "c")])

    def test_empty_circuit_rejected(self):
        with pytest.raises(MatroidError):
            build_matroid("ab", [()])

    def test_size_cap(self):
        with pytest.raises(TooLarge):
            build_matroid([f"x{i}" for i in range(17)], [])

    def test_trusted_constructor_guard(self):
        with pytest.raises(MatroidError):
            ExplicitMatroid(U24.ground, U24._masks)

    def test_outputs_satisfy_elimination(self):
        for m in (EM3, U24, fano(), two_sum(uniform(2, 4), uniform(2, 4), "e1", "e1")):
            assert oracle.elimination_holds(m.circuits)


class TestIndependenceRank:
    def test_empty_always_independent(self):
        assert U24.is_independent(())

    def test_circuit_dependent(self):
        assert not U24.is_independent(("a", "b", "c"))

    def test_excluded_minor_sample_independence(self):
        assert EM3.is_independent(("p", "1", "3"))

    def test_excluded_minor_ranks(self):
        assert EM3.rank() == 3
        assert EM3.rank(("1", "2", "3", "4")) == 3

    def test_rank_matches_brute_force(self):
        for m in (U24, EM3, fano(), direct_sum(uniform(1, 2), uniform(2, 3))):
            ind = oracle.independent_from_circuits(m.circuits)
            for s in oracle.subsets(m.elements):
                assert m.rank(s) == oracle.brute_rank(ind, s)


class TestClosure:
    def test_singleton_flat(self):
        assert U24.closure(("a",)) == frozenset("a")

    def test_circuit_pulls_in_tip(self):
        assert EM3.closure(("1", "2")) == frozenset({"p", "1", "2"})

    def test_idempotent(self):
        for m in (U24, EM3):
            for s in oracle.subsets(m.elements):
                cl = m.closure(s)
                assert m.closure(cl) == cl

    def test_matches_brute_force(self):
        ind = oracle.independent_from_circuits(EM3.circuits)
        for s in oracle.subsets(EM3.elements):
            assert EM3.closure(s) == oracle.brute_closure(EM3.elements, ind, s)


class TestDual:
    def test_u24_self_dual(self):
        assert U24.dual() == U24

    def test_uniform_duality(self):
        assert same_labeled(uniform(1, 3).dual(), uniform(2, 3))

    def test_involution(self):
        for m in (EM3, fano(), direct_sum(uniform(1, 2), uniform(2, 3))):
            assert m.dual().dual() == m

    def test_matches_brute_force(self):
        for m in (EM3, uniform(2, 5), direct_sum(uniform(1, 2), uniform(2, 2))):
            assert circuits_set(m.dual()) == oracle.brute_cocircuits(
                m.elements, m.circuits
            )


class TestMinor:
    def test_delete_basepoint_gives_uniform(self):
        m = EM3.minor(delete=("p",))
        assert circuits_set(m) == {frozenset("1234")}
        assert same_labeled(m, uniform(3, 4, ("1", "2", "3", "4")))

    def test_contract_basepoint(self):
        m = EM3.minor(contract=("p",))
        assert circuits_set(m) == {frozenset("12"), frozenset("34")}

    def test_identity(self):
        assert EM3.minor() == EM3

    def test_overlap_rejected(self):
        with pytest.raises(OverlappingSets):
            EM3.minor(delete=("p",), contract=("p",))

    def test_matches_brute_force(self):
        for m in (EM3, uniform(2, 5), fano()):
            els = m.elements
            for d in combinations(els, 1):
                for t in combinations([e for e in els if e not in d], 1):
                    keep, want = oracle.brute_minor(els, m.circuits, d, t)
                    got = m.minor(delete=d, contract=t)
                    assert got.elements == keep
                    assert circuits_set(got) == want


class TestTruncateAndSums:
    def test_uniform_truncation(self):
        assert same_labeled(uniform(3, 3).truncate(), uniform(2, 3))

    def test_double_truncation_to_loops(self):
        m = uniform(2, 2).truncate().truncate()
        assert m.rank() == 0
        assert m.loops() == frozenset(m.elements)

    def test_truncated_double_triangle(self):
        m = direct_sum(uniform(2, 3), uniform(2, 3)).truncate()
        assert m.rank() == 3
        non_spanning = {c for c in circuits_set(m) if len(c) <= m.rank()}
        assert non_spanning == {
            frozenset({"e1", "e2", "e3"}),
            frozenset({"e1'", "e2'", "e3'"}),
        }
        ind = oracle.independent_from_circuits(
            list(circuits_set(direct_sum(uniform(2, 3), uniform(2, 3))))
        )
        want = {
            frozenset(s)
            for s in oracle.subsets(m.elements)
            if len(s) == 4 and oracle.brute_rank(ind, s) == 4
        }
        assert circuits_set(m) == non_spanning | want

    def test_direct_sum_circuits_and_rank(self):
        m = direct_sum(uniform(1, 2, ("a", "b")), uniform(2, 3, ("c", "d", "e")))
        assert circuits_set(m) == {frozenset("ab"), frozenset("cde")}
        assert m.rank() == 3

    def test_direct_sum_identity(self):
        from laminarmatroids import empty

        assert direct_sum(EM3, empty()) == EM3

    def test_direct_sum_renames_collisions(self):
        m = direct_sum(uniform(1, 2), uniform(1, 2))
        assert m.elements == ("e1", "e2", "e1'", "e2'")

    def test_parallel_connection_is_rank3_excluded_minor(self):
        p = parallel_connection(
            circuit(3, ("p", "a", "b")), circuit(3, ("p", "x", "y")), "p", "p"
        )
        assert circuits_set(p) == {
            frozenset({"p", "a", "b"}),
            frozenset({"p", "x", "y"}),
            frozenset({"a", "b", "x", "y"}),
        }
        assert is_isomorphic(p, EM3)

    def test_parallel_connection_of_four_circuits(self):
        p = parallel_connection(circuit(4), circuit(4), "e1", "e1")
        assert p.n == 7
        assert p.rank() == 5

    def test_two_sum_of_triangles_is_four_circuit(self):
        t = two_sum(uniform(2, 3), uniform(2, 3), "e1", "e1")
        assert t.n == 4
        assert t.rank() == 3
        assert circuits_set(t) == {frozenset(t.elements)}

    def test_two_sum_u24_pair(self):
        t = two_sum(
            uniform(2, 4, ("p", "a", "b", "c")), uniform(2, 4, ("p", "x", "y", "z")), "p", "p"
        )
        assert t.n == 6
        assert t.rank() == 3
        abc, xyz = frozenset("abc"), frozenset("xyz")
        want = {abc, xyz}
        for u in combinations("abc", 2):
            for v in combinations("xyz", 2):
                want.add(frozenset(u) | frozenset(v))
        assert circuits_set(t) == want

    def test_two_sum_needs_three_elements(self):
        with pytest.raises(TooSmall):
            two_sum(uniform(1, 2), uniform(2, 3), "e1", "e1")


class TestSimplifyComponents:
    def test_simplify_simple_fixed_point(self):
        assert U24.simplify() == U24

    def test_simplify_merges_parallel_pair(self):
        m = build_matroid("abcd", [("a", "b"), ("a", "c", "d"), ("b", "c", "d")])
        s = m.simplify()
        assert s.elements == ("a", "c", "d")
        assert circuits_set(s) == {frozenset("acd")}

    def test_simplify_drops_loops(self):
        m = build_matroid("a", [("a",)])
        assert m.simplify().n == 0

    def test_components_of_direct_sum(self):
        m = direct_sum(uniform(1, 2, ("a", "b")), uniform(2, 3, ("c", "d", "e")))
        assert m.components() == (frozenset("ab"), frozenset("cde"))
        assert not m.is_connected()

    def test_excluded_minor_connected(self):
        assert EM3.components() == (frozenset(EM3.elements),)
        assert EM3.is_connected()

    def test_free_matroid_components(self):
        m = uniform(3, 3)
        assert m.components() == tuple(frozenset({e}) for e in m.elements)


class TestCyclicFlats:
    def test_u24(self):
        assert set(U24.cyclic_flats()) == {frozenset(), frozenset("abcd")}

    def test_excluded_minor_cyclic_flats(self):
        assert set(EM3.cyclic_flats()) == {
            frozenset(),
            frozenset({"p", "1", "2"}),
            frozenset({"p", "3", "4"}),
            frozenset(EM3.elements),
        }

    def test_free(self):
        assert set(uniform(3, 3).cyclic_flats()) == {frozenset()}

    def test_matches_brute_force(self):
        for m in (EM3, fano(), direct_sum(uniform(1, 2), uniform(2, 3))):
            assert set(m.cyclic_flats()) == oracle.brute_cyclic_flats(
                m.elements, m.circuits
            )


class TestIsomorphism:
    def test_relabelled_triangle(self):
        assert is_isomorphic(circuit(3), uniform(2, 3, ("x", "y", "z")))

    def test_rank3_excluded_minor_is_deleted_k4(self):
        k4e = build_matroid(
            ("12", "13", "14", "23", "24"),
            [("12", "13", "23"), ("12", "14", "24"), ("13", "14", "23", "24")],
        )
        phi = is_isomorphic(EM3, k4e)
        assert phi is not None
        assert phi["p"] == "12"
        assert {frozenset(phi[x] for x in c) for c in EM3.circuits} == circuits_set(k4e)

    def test_rank_mismatch(self):
        assert is_isomorphic(uniform(2, 4), uniform(3, 4)) is None

    def test_agrees_with_brute_force(self):
        pairs = [
            (uniform(2, 4), uniform(2, 4, ("w", "x", "y", "z"))),
            (EM3, EM3.dual()),
            (uniform(2, 5), uniform(3, 5)),
            (direct_sum(uniform(1, 2), uniform(1, 2)), uniform(1, 2).truncate()),
        ]
        for m1, m2 in pairs:
            got = is_isomorphic(m1, m2)
            want = oracle.brute_isomorphism(
                m1.elements, m1.circuits, m2.elements, m2.circuits
            )
            assert (got is None) == (want is None)
            if got is not None:
                assert {
                    frozenset(got[x] for x in c) for c in m1.circuits
                } == circuits_set(m2)


class TestHasMinor:
    def test_u36_has_u24(self):
        w = has_minor(uniform(3, 6), uniform(2, 4))
        assert w is not None
        assert apply_witness(uniform(3, 6), w, uniform(2, 4))

    def test_rank4_excluded_minor_has_u24(self):
        w = has_minor(excluded_minor(4), uniform(2, 4))
        assert w is not None
        assert apply_witness(excluded_minor(4), w, uniform(2, 4))

    def test_too_small(self):
        assert has_minor(uniform(2, 4), EM3) is None

    def test_self_minor_identity(self):
        w = has_minor(EM3, EM3)
        assert w is not None
        assert w.delete == frozenset() and w.contract == frozenset()

    def test_agrees_with_brute_force(self):
        cases = [
            (uniform(2, 5), uniform(2, 4), True),
            (uniform(3, 5), uniform(2, 4), True),
            (EM3, uniform(2, 4), False),
            (fano(), EM3, True),
            (uniform(3, 6), EM3, False),
            (direct_sum(uniform(2, 3), uniform(2, 3)).truncate(), EM3, False),
        ]
        for m, target, expect in cases:
            w = has_minor(m, target)
            assert (w is not None) == expect
            assert expect == oracle.brute_has_minor(
                m.elements, m.circuits, target.elements, target.circuits
            )
            if w is not None:
                assert apply_witness(m, w, target)
