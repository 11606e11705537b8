import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmfields import kernels
from cmfields.casework import s4_subgroup_names
from cmfields.permgroup import (
    GroupError,
    NotASubgroup,
    Permutation,
    PermutationGroup,
    all_subgroups,
    alternating_group,
    are_conjugate,
    core,
    coset_action,
    cycle_type,
    cyclic_group,
    dihedral_group,
    fixed_cosets,
    generate,
    intermediate_subgroups,
    left_cosets,
    maximal_subgroup_classes,
    normalizer,
    subgroup_classes,
    subgroup_lattice,
    symmetric_group,
)

S4 = symmetric_group(4)
S4_ELEMENTS = sorted(S4.elements, key=lambda p: p.images)


def perm(*cycles, n=6):
    return Permutation.from_cycles(cycles, n)


class TestPermutation:
    def test_composition_is_right_to_left(self):
        p, q = perm((0, 1), n=3), perm((1, 2), n=3)
        assert (p * q)(1) == p(q(1)) == 2

    def test_cycles_and_str(self):
        p = perm((0, 2, 4), (1, 3))
        assert str(p) == "(0 2 4)(1 3)" and p.order() == 6 and p.sign == -1
        assert str(Permutation.identity(3)) == "()"

    def test_labels(self):
        p = Permutation.from_cycles([("1", "a")], 6, labels=["1", "2", "3", "a", "b", "c"])
        assert p == perm((0, 3))

    def test_inverse_and_power(self):
        p = perm((0, 1, 2, 3, 4, 5))
        assert (p * p.inverse()).is_identity() and (p**6).is_identity() and p**-1 == p.inverse()

    def test_conjugate(self):
        g, p = perm((0, 1)), perm((1, 2))
        assert p.conjugate(g) == g * p * g.inverse() == perm((0, 2))

    def test_invalid(self):
        with pytest.raises(GroupError):
            Permutation((0, 0, 1))

    def test_cycle_type(self):
        ct = cycle_type(perm((0, 1), (2, 3), (4, 5)))
        assert ct.parts == (2, 2, 2) and ct.parity == "odd"

    @given(st.permutations(range(6)), st.permutations(range(6)), st.permutations(range(6)))
    def test_associative(self, a, b, c):
        a, b, c = Permutation(a), Permutation(b), Permutation(c)
        assert (a * b) * c == a * (b * c)


class TestGroups:
    @pytest.mark.parametrize(
        "G, order", [(symmetric_group(5), 120), (alternating_group(5), 60), (cyclic_group(6), 6), (dihedral_group(6), 12)]
    )
    def test_orders(self, G, order):
        assert G.order == order

    def test_element_set_must_be_closed(self):
        with pytest.raises(GroupError):
            PermutationGroup(3, [(0, 1, 2), (1, 0, 2), (1, 2, 0)])

    def test_basic_properties(self):
        D = dihedral_group(4)
        assert D.is_transitive() and not D.is_abelian() and D.center().order == 2
        assert D.stabilizer(0).order == 2 and len(D.orbits()) == 1

    def test_s4_counts(self):
        assert len(all_subgroups(S4)) == 30
        assert len(subgroup_classes(S4)) == 11

    def test_s6_counts(self):
        S6 = symmetric_group(6)
        classes = subgroup_classes(S6)
        assert len(classes) == 56 and sum(len(c) for c in classes) == 1455

    def test_maximal_subgroups_of_s6(self):
        orders = sorted(K.order for K in maximal_subgroup_classes(symmetric_group(6)))
        assert orders == [48, 48, 72, 120, 120, 360]


class TestCoresAndCosets:
    def test_core_of_point_stabilizer_is_trivial(self):
        assert core(S4, S4.stabilizer(0)).order == 1

    def test_normalizer(self):
        C = generate([perm((0, 1, 2, 3), n=4)], 4)
        assert normalizer(S4, C).order == 8

    def test_are_conjugate(self):
        names = s4_subgroup_names()
        assert are_conjugate(S4, names["D4^1"], names["D4^2"])
        assert not are_conjugate(S4, names["C4^1"], names["V4^1"])

    def test_cosets_partition(self):
        K = S4.stabilizer(0)
        cos = left_cosets(S4, K)
        assert len(cos) == 4 and frozenset().union(*(c.elements for c in cos)) == frozenset(S4.elements)

    def test_coset_action_is_faithful_on_stabilizer_cosets(self):
        act = coset_action(S4, S4.stabilizer(3))
        assert act.is_faithful and act.image.order == 24 and act.image.is_transitive()

    def test_intermediate(self):
        H = S4.stabilizer(0).stabilizer(1)
        inter = intermediate_subgroups(S4, H)
        assert [x.group.order for x in inter] == sorted(x.group.order for x in inter)
        assert inter[0].group == H and not inter[0].proper and not inter[-1].proper

    def test_intermediate_rejects_non_subgroup(self):
        with pytest.raises((NotASubgroup, GroupError)):
            intermediate_subgroups(S4, PermutationGroup(4, [(0, 1, 2, 3), (1, 0, 2, 3), (0, 1, 3, 2)], check=False))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from(S4_ELEMENTS), min_size=1, max_size=2))
    def test_core_properties(self, gens):
        K = generate(gens, 4)
        C = core(S4, K)
        brute = set(K.images)
        for g in S4.elements:
            brute &= {(g * Permutation(k) * g.inverse()).images for k in K.images}
        assert C.images == frozenset(brute)
        assert C.is_normal_in(S4) and C.is_subgroup_of(K)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from(S4_ELEMENTS), min_size=1, max_size=2), st.sampled_from(S4_ELEMENTS))
    def test_fixed_coset_parity(self, gens, c):
        # an involution moves cosets in 2-cycles, so the fixed count has the parity of the index
        K = generate(gens, 4)
        fixed = fixed_cosets(S4, K, c)
        brute = [cs for cs in left_cosets(S4, K) if (c * cs.representative) in cs]
        assert len(fixed) == len(brute)
        if c.order() == 2:
            assert len(fixed) % 2 == (S4.order // K.order) % 2

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.sampled_from(S4_ELEMENTS), min_size=1, max_size=2))
    def test_normalizer_brute_force(self, gens):
        K = generate(gens, 4)
        brute = {g.images for g in S4.elements if all((g * Permutation(k) * g.inverse()).images in K.images for k in K.images)}
        assert normalizer(S4, K).images == frozenset(brute)


class TestLattices:
    @pytest.mark.parametrize("G, nodes", [(dihedral_group(4), 10), (dihedral_group(6), 16), (S4, 30)])
    def test_node_counts(self, G, nodes):
        assert len(subgroup_lattice(G).nodes) == nodes

    def test_s4_spot_edges(self):
        lat = subgroup_lattice(S4)
        n = s4_subgroup_names()
        for j in (1, 2, 3):
            assert lat.covers(n["V4^n"], n[f"D4^{j}"])
            assert lat.covers(n[f"C4^{j}"], n[f"D4^{j}"])
        assert lat.covers(n["V4^n"], n["A4"]) and lat.covers(n["A4"], S4)
        assert not lat.covers(n["V4^n"], S4)

    def test_edges_are_covers(self):
        lat = subgroup_lattice(dihedral_group(6))
        for lo, up in lat.edges:
            A, B = lat.nodes[lo], lat.nodes[up]
            assert A.is_subgroup_of(B) and A != B
            assert not any(
                A.is_subgroup_of(K) and K.is_subgroup_of(B) and K not in (A, B) for K in lat.nodes
            )

    def test_exports(self):
        lat = subgroup_lattice(dihedral_group(4))
        d = lat.to_dict()
        assert len(d["nodes"]) == 10 and len(d["edges"]) == len(lat.edges)
        assert lat.to_dot().startswith("graph lattice {")


class TestBackends:
    """The compiled kernels and their pure-Python twin must agree exactly."""

    @pytest.fixture(scope="class")
    def table(self):
        return symmetric_group(5).table

    def test_cython_available(self):
        assert kernels.BACKEND in ("cython", "python")

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(0, 119), min_size=1, max_size=3), st.lists(st.integers(0, 119), max_size=6))
    def test_equivalence(self, gens, conj):
        t = symmetric_group(5).table
        impls = kernels.implementations()
        results = {}
        for name, impl in impls.items():
            mul, inv = t.native(name)
            members, packed = impl.closure(mul, t.n, gens, t.identity)
            results[name] = (
                list(members),
                bytes(packed),
                [bytes(x) for x in impl.conjugate_masks(mul, inv, t.n, list(members), conj)],
                [list(x) for x in impl.left_coset_labels(mul, t.n, list(members))],
            )
        values = list(results.values())
        assert all(v == values[0] for v in values)
