import itertools

import pytest
from hypothesis import given, settings, strategies as st

from setpentagon import catalog
from setpentagon.semigroup import (Congruence, DomainError, ElementMap, FiniteSemigroup,
                                   MalformedTable, NotACongruence, NotAssociative, automorphisms,
                                   canonical_table, center, check_associativity,
                                   enumerate_semigroups, find_identity, has_central_idempotents,
                                   idempotent_leq, idempotents, in_variety_S, is_cancellative,
                                   is_clifford, is_group, isomorphisms, kernel_congruence,
                                   left_units, local_group, principal_structures, quotient,
                                   right_units)

ONE, A, B = 0, 1, 2


@st.composite
def tables(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    return tuple(tuple(draw(st.integers(0, n - 1)) for _ in range(n)) for _ in range(n))


class TestAssociativity:
    def test_singleton(self):
        assert check_associativity([[0]]) == (True, None)

    def test_z2(self):
        assert check_associativity([[0, 1], [1, 0]])[0]

    def test_witness_is_first_failing_triple(self):
        ok, w = check_associativity([[1, 0], [0, 0]])
        assert not ok and w == (0, 0, 1)

    def test_constructor_rejects(self):
        with pytest.raises(NotAssociative) as exc:
            FiniteSemigroup(((1, 0), (0, 0)))
        assert exc.value.triple == (0, 0, 1)

    @pytest.mark.parametrize("bad", [[[0, 1]], [[0, 2], [0, 0]], [[0], [0]], []])
    def test_malformed(self, bad):
        with pytest.raises(MalformedTable):
            FiniteSemigroup(bad)

    @settings(max_examples=400, deadline=None)
    @given(tables())
    def test_acceptance_iff_exhaustive(self, t):
        from conftest import brute_associative
        ok, w = brute_associative(t)
        assert check_associativity(t) == (ok, w)
        if ok:
            FiniteSemigroup(t)
        else:
            with pytest.raises(NotAssociative):
                FiniteSemigroup(t)

    def test_bad_identity(self):
        with pytest.raises(DomainError):
            FiniteSemigroup(catalog.null_semigroup(2).mul, 0)


class TestIdempotents:
    def test_group(self):
        assert idempotents(catalog.cyclic_group(2)) == {0}

    def test_null(self):
        assert idempotents(catalog.null_semigroup(3)) == {0}

    def test_example_monoid(self):
        assert idempotents(catalog.example_monoid()) == {ONE, A}

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_natural_order_is_partial_order(self, n):
        for S in enumerate_semigroups(n):
            E = sorted(S.idempotents)
            for e in E:
                assert idempotent_leq(S, e, e)
            for e, f in itertools.product(E, repeat=2):
                if e != f:
                    assert not (idempotent_leq(S, e, f) and idempotent_leq(S, f, e))
            for e, f, g in itertools.product(E, repeat=3):
                if idempotent_leq(S, e, f) and idempotent_leq(S, f, g):
                    assert idempotent_leq(S, e, g)

    def test_identity_is_top(self):
        M = catalog.example_monoid()
        assert all(idempotent_leq(M, e, ONE) for e in M.idempotents)

    def test_leq_rejects_non_idempotent(self):
        with pytest.raises(DomainError):
            idempotent_leq(catalog.example_monoid(), B, ONE)


class TestPrincipalAndLocal:
    def test_identity_fixes_everything(self):
        M = catalog.example_monoid()
        full = frozenset(M.elements)
        assert principal_structures(M, ONE) == (full, full, full)

    def test_null(self):
        S = catalog.null_semigroup(3)
        assert principal_structures(S, 0) == ({0}, {0}, {0})

    def test_example_at_a(self):
        assert principal_structures(catalog.example_monoid(), A) == ({A}, {A}, {A})

    def test_group_local_group(self):
        G = catalog.dihedral_group(3)
        h, inv = local_group(G, 0)
        assert h == frozenset(G.elements)
        assert all(G.mul[x][inv[x]] == 0 for x in h)

    def test_null_local_group(self):
        assert local_group(catalog.null_semigroup(3), 0)[0] == {0}

    def test_clifford_local_groups_partition(self):
        S = catalog.clifford_z2_zero()
        groups = [local_group(S, e)[0] for e in S.idempotents]
        assert frozenset().union(*groups) == frozenset(S.elements)
        assert sum(map(len, groups)) == S.n

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_local_groups_closed_and_disjoint(self, n):
        for S in enumerate_semigroups(n):
            seen = set()
            for e in sorted(S.idempotents):
                h, inv = local_group(S, e)
                assert e in h and not (h & seen)
                seen |= h
                for x in h:
                    assert S.mul[x][inv[x]] == e == S.mul[inv[x]][x]
                    assert all(S.mul[x][y] in h for y in h)


class TestStructurePredicates:
    def test_central_idempotents(self):
        assert has_central_idempotents(catalog.null_semigroup(3))
        assert has_central_idempotents(catalog.example_monoid())
        assert not has_central_idempotents(catalog.left_zero(2))

    def test_center_of_commutative(self):
        S = catalog.chain_semilattice(3)
        assert center(S) == frozenset(S.elements)

    def test_clifford(self):
        ok, inv = is_clifford(catalog.cyclic_group(3))
        assert ok and inv == (0, 2, 1)
        assert is_clifford(catalog.chain_semilattice(3)) == (True, (0, 1, 2))
        assert is_clifford(catalog.null_semigroup(3)) == (False, None)
        assert is_clifford(catalog.left_zero(2)) == (False, None)

    def test_units(self):
        M = catalog.example_monoid()
        assert right_units(M) == {ONE, B}
        assert left_units(M) == {ONE, B}

    def test_units_need_monoid(self):
        with pytest.raises(DomainError):
            right_units(catalog.null_semigroup(2))

    def test_cancellative(self):
        assert is_cancellative(catalog.cyclic_group(3))
        assert is_group(catalog.cyclic_group(3))
        assert not is_cancellative(catalog.null_semigroup(3))

    def test_variety(self):
        assert in_variety_S(catalog.null_semigroup(3))
        assert in_variety_S(catalog.right_zero(3))
        assert not in_variety_S(catalog.cyclic_group(2))


class TestIsomorphisms:
    def test_group_z2(self):
        assert automorphisms(catalog.cyclic_group(2)) == [(0, 1)]

    def test_null(self):
        assert sorted(automorphisms(catalog.null_semigroup(3))) == [(0, 1, 2), (0, 2, 1)]

    def test_equal_tables(self):
        S = catalog.example_monoid()
        assert (0, 1, 2) in isomorphisms(S, S)

    def test_left_right_zero_not_isomorphic(self):
        assert isomorphisms(catalog.left_zero(2), catalog.right_zero(2)) == []


class TestCongruences:
    def gamma(self):
        M = catalog.example_monoid()
        return M, ElementMap.endo(M, (ONE, A, ONE))

    def test_identity_map_discrete(self):
        M = catalog.example_monoid()
        c = kernel_congruence(ElementMap.endo(M, (0, 1, 2)))
        assert len(c.blocks) == 3
        Q, proj = quotient(M, c)
        assert isomorphisms(Q, M)

    def test_constant_to_identity(self):
        M = catalog.example_monoid()
        c = kernel_congruence(ElementMap.endo(M, (0, 0, 0)))
        assert c.blocks == (frozenset({0, 1, 2}),)
        assert quotient(M, c)[0].n == 1

    def test_example_gamma(self):
        M, g = self.gamma()
        assert g.is_monoid_homomorphism() and g.is_idempotent()
        c = kernel_congruence(g)
        assert set(c.blocks) == {frozenset({ONE, B}), frozenset({A})}
        Q, proj = quotient(M, c)
        assert Q.n == 2 and Q.identity is not None
        assert c.is_system_of_representatives(g.image())

    def test_factorization(self):
        # m = section . projection, the section sending each block to m's value on it
        for n in (2, 3):
            for S in enumerate_semigroups(n):
                for table in itertools.product(S.elements, repeat=n):
                    m = ElementMap.endo(S, table)
                    if not m.is_homomorphism():
                        continue
                    c = kernel_congruence(m)
                    Q, proj = quotient(S, c)
                    section = {proj(x): m(x) for x in S.elements}
                    assert all(section[proj(x)] == m(x) for x in S.elements)
                    assert proj.is_homomorphism()

    def test_incompatible_fibers_mean_not_homomorphism(self):
        S = catalog.cyclic_group(3)
        m = ElementMap.endo(S, (0, 0, 1))
        assert not m.is_homomorphism()
        with pytest.raises(NotACongruence):
            kernel_congruence(m)

    def test_not_compatible(self):
        S = catalog.cyclic_group(3)
        with pytest.raises(NotACongruence):
            Congruence(S, (0, 0, 1))


class TestEnumeration:
    # isomorphism classes of semigroups of order 1..4 (OEIS A027851) and labeled
    # associative tables (OEIS A023814)
    @pytest.mark.parametrize("n,classes,labeled", [(1, 1, 1), (2, 5, 8), (3, 24, 113)])
    def test_counts(self, n, classes, labeled):
        assert len(enumerate_semigroups(n)) == classes
        assert len(enumerate_semigroups(n, up_to_iso=False)) == labeled

    def test_order_four(self):
        assert len(enumerate_semigroups(4)) == 188

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 35)])
    def test_monoid_counts(self, n, count):
        # OEIS A058133
        assert len(enumerate_semigroups(n, monoid_only=True)) == count

    @pytest.mark.parametrize("n", [2, 3])
    def test_against_brute_force(self, n, oracle):
        tables, classes = oracle.classes(n)
        assert sorted(S.mul for S in enumerate_semigroups(n, up_to_iso=False)) == sorted(tables)
        reps = enumerate_semigroups(n)
        assert sorted(S.flat for S in reps) == classes
        for i, S in enumerate(reps):
            for T in reps[i + 1:]:
                assert not isomorphisms(S, T)

    def test_identity_recorded(self):
        for S in enumerate_semigroups(3):
            assert S.identity == find_identity(S.mul)

    def test_canonical_is_least(self):
        S = catalog.example_monoid()
        assert canonical_table(S) <= S.flat

    def test_cap(self):
        with pytest.raises(DomainError):
            enumerate_semigroups(5)
