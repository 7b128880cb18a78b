"""Property tests over randomly drawn elements, subsets and relabelings."""

from hypothesis import given, settings
from hypothesis import strategies as st

from nearsemiring.axioms import LUK_NRS
from nearsemiring.catalog import b2_x_l3, luk_chain
from nearsemiring.congruences import principal_congruence, polynomial_pairs
from nearsemiring.core import find_isomorphism
from nearsemiring.ideals import ElementSet, generate_ideal, is_ideal
from nearsemiring.search import EnumerationTask, canonical_form, enumerate_algebras, relabel

POOL = (enumerate_algebras(EnumerationTask(4, LUK_NRS))
        + enumerate_algebras(EnumerationTask(5, LUK_NRS)))
FORMS = {canonical_form(a).data for a in POOL}


@given(st.sampled_from(POOL), st.data())
@settings(max_examples=60, deadline=None)
def test_relabeling_lands_on_a_known_canonical_form(alg, data):
    mid = data.draw(st.permutations(list(range(1, alg.size - 1))))
    perm = [0] + list(mid) + [alg.size - 1]
    shuffled = relabel(alg, perm)
    assert canonical_form(shuffled).data in FORMS
    assert find_isomorphism(shuffled, alg) is not None


@given(st.sampled_from(POOL), st.data())
@settings(max_examples=60, deadline=None)
def test_principal_congruence_is_closure_of_polynomial_pairs(alg, data):
    a = data.draw(st.integers(0, alg.size - 1))
    b = data.draw(st.integers(0, alg.size - 1))
    pairs = polynomial_pairs(alg, a, b)
    assert pairs.equivalence_closure() == principal_congruence(alg, a, b)
    # Lukasiewicz algebras are congruence permutable: the orbit is already
    # symmetric and transitive
    assert pairs.is_symmetric() and pairs.is_transitive()


@given(st.sampled_from(POOL + (b2_x_l3(), luk_chain(6))), st.data())
@settings(max_examples=80, deadline=None)
def test_generated_ideal_is_least_ideal_containing_seed(alg, data):
    mask = data.draw(st.integers(0, (1 << alg.size) - 1))
    seed = ElementSet(alg.size, mask)
    grown = generate_ideal(alg, seed)
    assert is_ideal(alg, grown).ok
    assert seed.issubset(grown)
    # removing any non-seed, non-zero element breaks one of the conditions
    for v in grown.members():
        if v in seed or v == alg.zero:
            continue
        smaller = ElementSet(alg.size, grown.mask & ~(1 << v))
        assert not is_ideal(alg, smaller).ok or not seed.issubset(smaller)
