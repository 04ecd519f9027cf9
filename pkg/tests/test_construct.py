import itertools

import pytest

from setpentagon import catalog
from setpentagon.construct import (GroupConstructionData, HypothesisError,
                                   MonoidConstructionData, clifford_solution, constant_solution,
                                   enumerate_group_solutions, enumerate_monoid_constructions,
                                   extract_group_data, extract_monoid_data, from_endomorphism,
                                   group_solution, idempotent_monoid_homomorphisms,
                                   militaru_solution, monoid_idempotent_solution,
                                   normal_subgroups, representative_systems, variety_S_solution)
from setpentagon.semigroup import (FiniteSemigroup, enumerate_semigroups, has_central_idempotents,
                                   is_cancellative)
from setpentagon.search import enumerate_theta_tables
from setpentagon.solution import classify

ONE, A, B = 0, 1, 2


class TestSimpleConstructions:
    def test_identity_endomorphism(self):
        S = catalog.example_monoid()
        assert from_endomorphism(S, (0, 1, 2)).theta == ((0, 1, 2),) * 3

    def test_endomorphism_hypotheses(self):
        S = catalog.cyclic_group(3)
        with pytest.raises(HypothesisError) as exc:
            from_endomorphism(S, (0, 0, 1))
        assert exc.value.condition == "endomorphism"
        with pytest.raises(HypothesisError) as exc:
            from_endomorphism(S, (0, 2, 1))
        assert exc.value.condition == "gamma^2=gamma"

    def test_endomorphism_iff_on_small_semigroups(self):
        for n in (2, 3):
            for S in enumerate_semigroups(n):
                tables = set(enumerate_theta_tables(S))
                for g in itertools.product(S.elements, repeat=n):
                    rows = (tuple(g),) * n
                    try:
                        sol = from_endomorphism(S, g)
                    except HypothesisError:
                        assert rows not in tables
                    else:
                        assert sol.theta in tables

    def test_constant_solution(self):
        for n in (2, 3):
            for S in enumerate_semigroups(n):
                for e in sorted(S.idempotents):
                    sol = constant_solution(S, e)
                    m = S.mul
                    # idempotent exactly when e fixes every product from the right
                    right = all(m[m[x][y]][e] == m[x][y] for x in S.elements for y in S.elements)
                    assert classify(sol).idempotent == right

    def test_constant_counterexample(self):
        # on the 2-chain, (xy, 0) is a solution but not idempotent: s(1,1) = (1,0), s(1,0) = (0,0)
        sol = constant_solution(catalog.chain_semilattice(2), 0)
        assert not classify(sol).idempotent

    def test_constant_needs_idempotent(self):
        with pytest.raises(HypothesisError):
            constant_solution(catalog.example_monoid(), B)

    def test_variety(self):
        for S in (catalog.right_zero(2), catalog.null_semigroup(3)):
            assert classify(variety_S_solution(S)).idempotent
        with pytest.raises(HypothesisError) as exc:
            variety_S_solution(catalog.cyclic_group(2))
        assert exc.value.condition == "abc=bc"

    def test_clifford(self):
        G = catalog.cyclic_group(3)
        assert clifford_solution(G).theta == ((0, 0, 0),) * 3
        L = catalog.chain_semilattice(3)
        assert clifford_solution(L).theta == ((0, 1, 2),) * 3
        sol = clifford_solution(catalog.clifford_z2_zero())
        assert classify(sol).idempotent
        with pytest.raises(HypothesisError):
            clifford_solution(catalog.null_semigroup(3))

    def test_militaru(self):
        S, sol = militaru_solution(3, (0, 1, 2), (0, 1, 2))
        assert S.mul == catalog.left_zero(3).mul and sol(1, 2) == (1, 2)
        S, sol = militaru_solution(3, (0, 0, 0), (0, 0, 0))
        assert S.mul == catalog.null_semigroup(3).mul
        S, sol = militaru_solution(3, (0, 1, 0), (0, 1, 0))
        f = classify(sol)
        assert f.commutative and f.cocommutative

    def test_militaru_hypotheses(self):
        with pytest.raises(HypothesisError):
            militaru_solution(3, (1, 2, 0), (0, 1, 2))       # f not idempotent
        with pytest.raises(HypothesisError):
            militaru_solution(3, (0, 0, 2), (1, 1, 2))       # fg != gf


class TestGroups:
    def test_trivial_kernel(self):
        G = catalog.cyclic_group(4)
        sol = group_solution(GroupConstructionData(G, {0}, set(G.elements)))
        assert sol.theta == ((0, 1, 2, 3),) * 4

    def test_full_kernel(self):
        G = catalog.dihedral_group(3)
        sol = group_solution(GroupConstructionData(G, set(G.elements), {0}))
        assert sol.theta == ((0,) * 6,) * 6

    def test_z4_roundtrip(self):
        G = catalog.cyclic_group(4)
        data = GroupConstructionData(G, {0, 2}, {0, 1})
        assert data.mu == (0, 1, 0, 1)
        sol = group_solution(data)
        back = extract_group_data(sol)
        assert back.K == {0, 2} and back.mu == data.mu

    def test_hypotheses(self):
        S3 = catalog.dihedral_group(3)
        with pytest.raises(HypothesisError) as exc:
            GroupConstructionData(S3, {0, 3}, {0, 1, 2})        # a reflection subgroup
        assert exc.value.condition == "normality"
        G = catalog.cyclic_group(4)
        with pytest.raises(HypothesisError) as exc:
            GroupConstructionData(G, {0, 2}, {1, 2})
        assert exc.value.condition == "1 in R"
        with pytest.raises(HypothesisError) as exc:
            GroupConstructionData(G, {0, 2}, {0, 2})
        assert exc.value.condition == "coset coverage"
        with pytest.raises(HypothesisError) as exc:
            GroupConstructionData(G, {0, 2}, {0, 1}, mu=(0, 1, 0, 0))
        assert exc.value.condition == "mu(x) in Kx"

    def test_normal_subgroups(self):
        assert len(normal_subgroups(catalog.dihedral_group(3))) == 3
        assert len(normal_subgroups(catalog.quaternion_group())) == 6
        assert len(representative_systems(catalog.cyclic_group(4), {0, 2})) == 2

    @pytest.mark.parametrize("name,G", catalog.small_groups(6))
    def test_construction_equals_search(self, name, G):
        built = [s.theta for s in enumerate_group_solutions(G)]
        assert built == enumerate_theta_tables(G)
        assert len(set(built)) == len(built)


class TestMonoids:
    def test_constant_one(self):
        M = catalog.example_monoid()
        sol = monoid_idempotent_solution(MonoidConstructionData(M, (0, 0, 0)))
        assert sol.theta == ((0, 0, 0),) * 3

    def test_example_solution_t(self):
        M = catalog.example_monoid()
        data = MonoidConstructionData(M, (ONE, A, ONE), {A: (ONE, A, B)})
        assert monoid_idempotent_solution(data).theta == ((0, 1, 0), (0, 1, 2), (0, 1, 0))

    def test_ex5_solution(self):
        M = catalog.ex5_monoid()
        data = MonoidConstructionData(M, (ONE, ONE, B), {B: (A, A, B)})
        sol = monoid_idempotent_solution(data)
        assert sol.theta == ((0, 0, 2), (0, 0, 2), (1, 1, 2))
        assert sol.theta[B][ONE] == A
        assert extract_monoid_data(sol) == data

    def test_mu_hypotheses(self):
        M = catalog.example_monoid()
        with pytest.raises(HypothesisError) as exc:
            MonoidConstructionData(M, (ONE, B, ONE))
        assert exc.value.condition == "mu(x) in E(M)"
        with pytest.raises(HypothesisError) as exc:
            MonoidConstructionData(M, (A, A, A))
        assert exc.value.condition == "mu(1)=1"
        with pytest.raises(HypothesisError) as exc:
            MonoidConstructionData(catalog.ex5_monoid(), (ONE, B, B), {B: (B, B, B)})
        assert exc.value.condition == "right identity"

    def test_family_hypotheses(self):
        M = catalog.example_monoid()
        with pytest.raises(HypothesisError) as exc:
            MonoidConstructionData(M, (ONE, A, ONE), {A: (B, B, B)})
        assert exc.value.condition in {"ast", "astast", "astastast"}

    def test_needs_central_idempotents(self):
        # left-zero pair {a, b} with an identity adjoined
        M = FiniteSemigroup(((0, 1, 2), (1, 1, 1), (2, 2, 2)), 0)
        assert not has_central_idempotents(M)
        with pytest.raises(HypothesisError) as exc:
            MonoidConstructionData(M, (0, 1, 2))
        assert exc.value.condition == "E(M) in Z(M)"

    def test_homomorphisms(self):
        assert idempotent_monoid_homomorphisms(catalog.example_monoid()) == [(0, 0, 0), (0, 1, 0)]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_construction_equals_search(self, n):
        for M in enumerate_semigroups(n, monoid_only=True):
            if not has_central_idempotents(M):
                continue
            built = [s.theta for s in enumerate_monoid_constructions(M)]
            assert built == enumerate_theta_tables(M, {"idempotent"})

    def test_cancellative_unique(self):
        for M in enumerate_semigroups(3, monoid_only=True):
            if is_cancellative(M):
                one = M.identity
                assert [s.theta for s in enumerate_monoid_constructions(M)] == [((one,) * 3,) * 3]
