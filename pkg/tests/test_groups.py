"""Groups: parsing, subgroup enumeration, and the structure recognizers."""

import itertools

import pytest

from retractrat.errors import UserInputError
from retractrat.groups import (
    CATALOG_NAMES,
    catalog_group,
    catalog_groups_upto,
    cyclic_group,
    parse_group,
)


def brute_force_subgroup_count(G):
    """Independent oracle: count subsets containing 0 that are closed."""
    n = G.order
    count = 0
    for size in range(1, n + 1):
        if n % size:
            continue
        for subset in itertools.combinations(range(1, n), size - 1):
            mem = (0,) + subset
            ms = set(mem)
            if all(G.mul(a, b) in ms for a in mem for b in mem):
                count += 1
    return count


class TestParse:
    def test_c2_table(self):
        G = parse_group({"table": [[0, 1], [1, 0]]})
        assert G.order == 2
        assert G.mul(1, 1) == 0

    def test_s3_from_permutations(self):
        G = parse_group({"perm_generators": [[2, 3, 1], [2, 1, 3]], "degree": 3})
        assert G.order == 6

    def test_non_associative_rejected(self):
        # a Latin square that is not a group table (no associativity)
        table = [[0, 1, 2, 3, 4],
                 [1, 0, 3, 4, 2],
                 [2, 4, 0, 1, 3],
                 [3, 2, 4, 0, 1],
                 [4, 3, 1, 2, 0]]
        with pytest.raises(UserInputError):
            parse_group({"table": table})

    def test_bad_permutation_rejected(self):
        with pytest.raises(UserInputError):
            parse_group({"perm_generators": [[1, 1, 2]], "degree": 3})

    def test_identity_is_zero(self):
        G = parse_group({"perm_generators": [[2, 1]], "degree": 2})
        assert all(G.mul(0, g) == g for g in range(G.order))


class TestSubgroups:
    @pytest.mark.parametrize("name,expected", [("C2", 2), ("S3", 6), ("V4", 5)])
    def test_counts(self, name, expected):
        assert len(catalog_group(name).subgroups()) == expected

    @pytest.mark.parametrize("name", ["C6", "S3", "V4", "D8", "Q8", "A4"])
    def test_counts_against_brute_force(self, name):
        G = catalog_group(name)
        assert len(G.subgroups()) == brute_force_subgroup_count(G)

    @pytest.mark.parametrize("name", [n for n in CATALOG_NAMES])
    def test_closure_and_lagrange(self, name):
        G = catalog_group(name)
        for S in G.subgroups():
            mem = set(S.members)
            assert 0 in mem
            assert G.order % S.order == 0
            for a in S.members:
                assert G.inv(a) in mem
                for b in S.members:
                    assert G.mul(a, b) in mem

    def test_sorted_by_order_then_members(self):
        subs = catalog_group("D8").subgroups()
        keys = [(s.order, s.members) for s in subs]
        assert keys == sorted(keys)

    def test_conjugacy_representatives(self):
        S3 = catalog_group("S3")
        reps = S3.subgroup_conjugacy_representatives()
        # classes: 1, the three conjugate C2's, C3, S3
        assert len(reps) == 4


class TestSylow:
    def test_examples(self):
        assert catalog_group("S3").all_sylow_cyclic() is True
        assert catalog_group("V4").all_sylow_cyclic() is False
        assert catalog_group("Q8").all_sylow_cyclic() is False

    def test_more(self):
        assert catalog_group("C12").all_sylow_cyclic() is True
        assert catalog_group("A4").all_sylow_cyclic() is False
        assert catalog_group("D8").all_sylow_cyclic() is False


class TestZGroupPresentation:
    def test_s3(self):
        z = catalog_group("S3").zgroup_presentation()
        assert (z.m, z.n, z.r) == (3, 2, 2)

    def test_c6(self):
        z = catalog_group("C6").zgroup_presentation()
        assert (z.m, z.n, z.r) == (3, 2, 1)

    def test_q8_absent(self):
        assert catalog_group("Q8").zgroup_presentation() is None

    def test_trivial_group_convention(self):
        z = catalog_group("C1").zgroup_presentation()
        assert (z.m, z.n, z.r) == (1, 1, 1)
        assert z.note

    def test_equivalence_and_verification_over_catalog(self):
        # witness exists iff all Sylow subgroups are cyclic; witnesses verify
        for G in catalog_groups_upto(32):
            z = G.zgroup_presentation()
            assert (z is not None) == G.all_sylow_cyclic()
            if z is not None:
                assert z.verify(G)


class TestAbelianNormalCyclicQuotient:
    def test_s3(self):
        S3 = catalog_group("S3")
        H, tau, e_prime = S3.abelian_normal_cyclic_quotient()
        assert H.order == 3
        assert S3.element_order(tau) == 2
        assert e_prime == 6

    def test_abelian_gives_exponent(self):
        for name in ["C4", "V4", "C12", "C2xC4"]:
            G = catalog_group(name)
            H, tau, e_prime = G.abelian_normal_cyclic_quotient()
            assert e_prime == G.exponent()
            assert H.is_abelian() and H.is_normal

    def test_witness_validity(self):
        for name in ["D8", "D16", "Q8", "A4", "S3"]:
            G = catalog_group(name)
            got = G.abelian_normal_cyclic_quotient()
            if got is None:
                continue
            H, tau, e_prime = got
            Q, proj = G.quotient(H)
            assert Q.is_cyclic()
            assert Q.element_order(proj[tau]) == Q.order

    def test_minimizes_over_all_witnesses(self):
        # brute-force oracle over all (H, tau) pairs
        from math import lcm
        for name in ["C8", "D8", "D16", "Q8", "A4", "C2xC4", "U(32)"]:
            G = catalog_group(name)
            got = G.abelian_normal_cyclic_quotient()
            best = None
            for H in G.subgroups():
                if not H.is_normal or not H.is_abelian():
                    continue
                Q, proj = G.quotient(H)
                if not Q.is_cyclic():
                    continue
                for g in range(G.order):
                    if Q.element_order(proj[g]) == Q.order:
                        key = (lcm(H.exponent(), G.element_order(g)), H.order)
                        best = key if best is None else min(best, key)
            if best is None:
                assert got is None
            else:
                H, tau, e_prime = got
                assert (e_prime, H.order) == best

    def test_a4_has_witness(self):
        # V4 is abelian normal in A4 with cyclic quotient C3
        A4 = catalog_group("A4")
        H, tau, e_prime = A4.abelian_normal_cyclic_quotient()
        assert H.order == 4
        assert e_prime == 6


class TestAbelianDecomposition:
    def test_examples(self):
        assert catalog_group("C12").abelian_decomposition() == [4, 3]
        assert catalog_group("V4").abelian_decomposition() == [2, 2]
        with pytest.raises(UserInputError):
            catalog_group("S3").abelian_decomposition()

    @pytest.mark.parametrize("name", ["C1", "C8", "C10", "C15", "C16",
                                      "C2xC4", "C2xC2xC2", "U(16)", "U(32)"])
    def test_order_statistics_match(self, name):
        # the multiset of element orders determines a finite abelian group
        G = catalog_group(name)
        qs = G.abelian_decomposition()
        # rebuild the group as a product of cyclic groups and compare orders
        H = cyclic_group(1)
        from retractrat.groups import direct_product
        for q in qs:
            H = direct_product(H, cyclic_group(q))
        assert H.order == G.order
        orders_g = sorted(G.element_order(g) for g in range(G.order))
        orders_h = sorted(H.element_order(h) for h in range(H.order))
        assert orders_g == orders_h


class TestQuotient:
    def test_c4_mod_c2(self):
        C4 = catalog_group("C4")
        H = C4.subgroup((0, 2))
        Q, proj = C4.quotient(H)
        assert Q.order == 2
        assert proj[0] == 0 and proj[2] == 0
        assert proj[1] == proj[3] == 1

    def test_projection_is_homomorphism(self):
        for name in ["D8", "Q8", "A4", "C12"]:
            G = catalog_group(name)
            for H in G.subgroups():
                if not H.is_normal:
                    continue
                Q, proj = G.quotient(H)
                for a in range(G.order):
                    for b in range(G.order):
                        assert proj[G.mul(a, b)] == Q.mul(proj[a], proj[b])


class TestBounds:
    def test_parse_order_bound(self):
        from retractrat.errors import ResourceBoundError
        # disjoint cycles of coprime-ish lengths: the closure blows past 1024
        cycle = []
        start = 1
        for length in (5, 7, 9, 11, 13, 16):
            cycle.extend(list(range(start + 1, start + length)) + [start])
            start += length
        with pytest.raises(ResourceBoundError):
            parse_group({"perm_generators": [cycle], "degree": len(cycle)})

    def test_subgroup_enumeration_bound(self):
        from retractrat.errors import ResourceBoundError
        from retractrat.groups import direct_product
        G = direct_product(direct_product(cyclic_group(5), cyclic_group(5)),
                           cyclic_group(3))
        assert G.order == 75
        with pytest.raises(ResourceBoundError):
            G.subgroups()


class TestCatalog:
    def test_aliases(self):
        assert catalog_group("V4").order == 4
        assert catalog_group("U(8)").order == 4
        assert catalog_group("U8").order == 4

    def test_unknown(self):
        with pytest.raises(UserInputError):
            catalog_group("M11")

    def test_unit_groups(self):
        assert catalog_group("U(16)").order == 8
        assert catalog_group("U(32)").order == 16
        assert not catalog_group("U(8)").is_cyclic()

    def test_dihedral_and_quaternion(self):
        D8 = catalog_group("D8")
        Q8 = catalog_group("Q8")
        assert D8.order == 8 and not D8.is_abelian()
        assert Q8.order == 8 and not Q8.is_abelian()
        # Q8 has a unique element of order 2
        assert sum(1 for g in range(8) if Q8.element_order(g) == 2) == 1
        assert sum(1 for g in range(8) if D8.element_order(g) == 2) == 5
