import itertools

import pytest

from nearsemiring.catalog import (b2_x_b2, b2_x_l3, boolean2, godel3,
                                  luk_chain, trivial)
from nearsemiring.congruences import all_congruences
from nearsemiring.ideals import (ElementSet, all_ideals, generate_ideal,
                                 ideal_join_via_coset, is_ideal,
                                 principal_ideal, principal_ideal_report,
                                 pseudocomplement, semiring_claims_report,
                                 skeleton, theta_of_ideal, theta_partition)
from nearsemiring.core import leq

L3 = luk_chain(3)
LUK_CORPUS = (boolean2(), L3, luk_chain(4), b2_x_b2(), b2_x_l3(), trivial())


def es(alg, *members):
    return ElementSet.from_members(alg.size, members)


def ideal_predicate_oracle(alg, members):
    """Test-local reimplementation of the two closure conditions."""
    s = set(members)
    n, t, al = alg.size, alg.times, alg.alpha
    if alg.zero not in s:
        return False
    for a in range(n):
        for b in range(n):
            if t[a][al[b]] in s and b in s and a not in s:
                return False
    for a in range(n):
        for b in range(n):
            if t[al[a]][b] in s and t[al[b]][a] in s:
                for c in range(n):
                    if t[al[t[a][c]]][t[b][c]] not in s:
                        return False
                    if t[al[t[c][a]]][t[c][b]] not in s:
                        return False
    return True


def test_is_ideal_l3_middle_pair_fails_i1():
    check = is_ideal(L3, es(L3, 0, 1))
    assert not check.ok
    assert check.failed == "(I1)"
    assert check.witness == (("a", 2), ("b", 1))
    assert check.render_witness(L3) == "a=1, b=h"


def test_is_ideal_trivial_cases():
    for alg in LUK_CORPUS:
        assert is_ideal(alg, es(alg, alg.zero)).ok
        assert is_ideal(alg, ElementSet.full(alg.size)).ok


def test_is_ideal_matches_test_oracle_on_all_subsets():
    for alg in LUK_CORPUS + (godel3(),):
        for mask in range(1 << alg.size):
            s = ElementSet(alg.size, mask)
            assert is_ideal(alg, s).ok == ideal_predicate_oracle(alg, s.members())


def test_i3_reported():
    # on Lukasiewicz algebras (I3) follows wherever (I1)/(I2) hold
    for alg in LUK_CORPUS:
        for mask in range(1 << alg.size):
            check = is_ideal(alg, ElementSet(alg.size, mask))
            if check.ok:
                assert check.i3_ok


def test_generate_ideal_examples():
    assert generate_ideal(L3, es(L3, 1)).members() == (0, 1, 2)
    for alg in LUK_CORPUS:
        assert generate_ideal(alg, ElementSet.empty(alg.size)).members() == (alg.zero,)
    grown = generate_ideal(b2_x_l3(), es(b2_x_l3(), 3))
    assert grown.members() == (0, 3)  # [0, (1,0)]


def test_generate_ideal_is_minimal():
    # result is contained in every ideal that contains the seed
    for alg in LUK_CORPUS:
        ideals = [ElementSet(alg.size, m) for m in range(1 << alg.size)
                  if is_ideal(alg, ElementSet(alg.size, m)).ok]
        for mask in range(1 << alg.size):
            seed = ElementSet(alg.size, mask)
            grown = generate_ideal(alg, seed)
            for i in ideals:
                if seed.issubset(i):
                    assert grown.issubset(i)


def test_theta_of_ideal_trivial_cases():
    for alg in LUK_CORPUS:
        assert theta_partition(alg, es(alg, alg.zero)).is_discrete()
        assert theta_partition(alg, ElementSet.full(alg.size)).is_full()


def test_theta_of_ideal_b2xb2():
    theta = theta_partition(b2_x_b2(), es(b2_x_b2(), 0, 2))
    assert theta.blocks == ((0, 2), (1, 3))


def test_theta_of_non_ideal_is_diagnosed_not_raised():
    res = theta_of_ideal(L3, es(L3, 0, 1))
    assert res.partition is None
    assert res.defect == "not transitive"
    assert res.witness == (0, 1, 2)


def test_all_ideals_counts_and_members():
    assert [s.members() for s in all_ideals(L3).ideals] == [(0,), (0, 1, 2)]
    assert [s.members() for s in all_ideals(boolean2()).ideals] == [(0,), (0, 1)]
    lat = all_ideals(b2_x_l3())
    assert [s.members() for s in lat.ideals] == [(0,), (0, 3), (0, 1, 2), (0, 1, 2, 3, 4, 5)]


def test_all_ideals_thread_stability():
    for alg in (L3, b2_x_l3()):
        assert all_ideals(alg).ideals == all_ideals(alg, threads=2).ideals


def test_all_ideals_rejects_non_luk():
    with pytest.raises(ValueError, match=r"\(vii\)"):
        all_ideals(godel3())


def test_kernel_ideal_bijection_and_lattice_isomorphism():
    for alg in LUK_CORPUS:
        lat = all_ideals(alg)
        cons = all_congruences(alg)
        # bijection with identity composites
        kernel_of = {}
        for theta in cons:
            k = ElementSet.from_members(alg.size, theta.block_of(alg.zero))
            assert lat.contains(k)
            kernel_of[theta] = k
            assert theta_partition(alg, k) == theta          # theta(0-coset) = theta
        assert len(set(s.mask for s in kernel_of.values())) == len(cons)
        for s in lat.ideals:
            theta = theta_partition(alg, s)
            assert theta in cons
            back = ElementSet.from_members(alg.size, theta.block_of(alg.zero))
            assert back.mask == s.mask                       # 0-coset(theta(I)) = I
        # the bijection is a lattice isomorphism
        for i, p in enumerate(lat.ideals):
            for j, r in enumerate(lat.ideals):
                ti, tj = theta_partition(alg, p), theta_partition(alg, r)
                assert theta_partition(alg, lat.meet(i, j)) == ti.meet(tj)
                assert theta_partition(alg, lat.join(i, j)) == ti.join(tj)


def test_ideal_lattice_distributive():
    for alg in LUK_CORPUS:
        lat = all_ideals(alg)
        k = len(lat.ideals)
        for a, b, c in itertools.product(range(k), repeat=3):
            lhs = lat.meet_table[a][lat.join_table[b][c]]
            rhs = lat.join_table[lat.meet_table[a][b]][lat.meet_table[a][c]]
            assert lhs == rhs


def test_join_distributes_over_arbitrary_families():
    for alg in LUK_CORPUS:
        lat = all_ideals(alg)
        k = len(lat.ideals)
        for j in range(k):
            for r in range(1 << k):
                family = [i for i in range(k) if r >> i & 1]
                lhs = lat.ideals[j] & lat.join_of_family(family)
                meets = [lat.meet_table[j][i] for i in family]
                rhs = lat.join_of_family(meets)
                assert lhs.mask == rhs.mask


def test_pseudocomplement_laws():
    for alg in LUK_CORPUS:
        lat = all_ideals(alg)
        for s in lat.ideals:
            star = lat.pseudocomplement_of(s)
            star2 = lat.pseudocomplement_of(star)
            assert s.issubset(star2)                        # I <= I**
            assert lat.pseudocomplement_of(star2) == star   # I* = I***
        for p in lat.ideals:
            for r in lat.ideals:
                if p.issubset(r):
                    assert lat.pseudocomplement_of(r).issubset(lat.pseudocomplement_of(p))


def test_pseudocomplement_examples():
    lat = all_ideals(b2_x_l3())
    alg = b2_x_l3()
    assert pseudocomplement(alg, es(alg, 0), lat).members() == tuple(range(6))
    assert pseudocomplement(alg, ElementSet.full(6), lat).members() == (0,)
    assert pseudocomplement(alg, es(alg, 0, 3), lat).members() == (0, 1, 2)


def test_join_via_coset_agrees_everywhere():
    for alg in LUK_CORPUS:
        lat = all_ideals(alg)
        for p in lat.ideals:
            for r in lat.ideals:
                cmp = ideal_join_via_coset(alg, p, r)
                assert cmp.agree
                assert cmp.generated == lat.join(lat.index(p), lat.index(r))
    # spot values
    alg = b2_x_l3()
    out = ideal_join_via_coset(alg, es(alg, 0, 3), es(alg, 0, 1, 2))
    assert out.agree and out.generated.members() == tuple(range(6))


def test_ideals_are_convex():
    for alg in LUK_CORPUS:
        for s in all_ideals(alg).ideals:
            for c in s.members():
                for b in range(alg.size):
                    if leq(alg, b, c):
                        assert b in s


def test_principal_ideal_examples():
    assert principal_ideal(L3, 1).members() == (0, 1, 2)
    for alg in LUK_CORPUS:
        assert principal_ideal(alg, alg.zero).members() == (alg.zero,)
        assert len(principal_ideal(alg, alg.one)) == alg.size


def test_principal_ideal_polynomial_route_agrees():
    for alg in LUK_CORPUS:
        for a in range(alg.size):
            assert principal_ideal_report(alg, a).agree


def test_skeleton_reports():
    sk3 = skeleton(L3)
    assert [m.members() for m in sk3.members] == [(0,), (0, 1, 2)]
    assert sk3.ok
    sk4 = skeleton(b2_x_b2())
    assert len(sk4.members) == 4 and sk4.ok
    for alg in LUK_CORPUS:
        assert skeleton(alg).ok


def test_claims_l3_disagreements():
    report = semiring_claims_report(L3)
    bad = report.disagreements()
    assert len(bad) == 2
    subset_finding = next(f for f in bad if f.target_kind == "subset")
    assert subset_finding.target == "{0, h}"
    assert subset_finding.witness == "(I1) a=1, b=h"
    element_finding = next(f for f in bad if f.target_kind == "element")
    assert element_finding.target == "h"
    assert "{0, h}" in element_finding.detail and "{0, h, 1}" in element_finding.detail


def test_claims_b2_all_agree():
    report = semiring_claims_report(boolean2())
    assert report.ok
    assert len(report.findings) == 4 + 2  # 4 subsets + 2 elements


def test_claims_reject_non_semiring():
    with pytest.raises(ValueError, match=r"\(vii\)"):
        semiring_claims_report(godel3())


def test_oracle_partial_path_above_threshold():
    from nearsemiring.core import product
    big = product(boolean2(), luk_chain(8))  # 16 elements
    lat = all_ideals(big)                     # default threshold 14: kernels only
    assert lat.oracle_partial and len(lat.ideals) == 4
    full = all_ideals(big, threshold=16)      # forced subset scan agrees
    assert not full.oracle_partial
    assert [s.mask for s in full.ideals] == [s.mask for s in lat.ideals]


def test_element_set_validation():
    with pytest.raises(ValueError):
        ElementSet(3, 0b1000)
    with pytest.raises(ValueError):
        ElementSet.from_members(3, [5])
    with pytest.raises(ValueError):
        ElementSet(3, 0b1) & ElementSet(4, 0b1)


def test_theta_relation_can_fail_reflexivity():
    from nearsemiring.catalog import godel3
    res = theta_of_ideal(godel3(), es(godel3(), 0))
    assert res.partition is None
    assert res.defect == "not reflexive"
    assert res.witness == (1,)  # h^a * h = h escapes {0}


def test_claims_above_threshold_scan_elements_only():
    report = semiring_claims_report(b2_x_l3(), threshold=5)
    assert not report.subsets_scanned
    assert all(f.target_kind == "element" for f in report.findings)
    assert len(report.findings) == 6
