import itertools
import random

import pytest

from nearsemiring.axioms import INRS, LUK_NRS, LUK_RS, check_axioms
from nearsemiring.catalog import (b2_x_b2, b2_x_l3, boolean2, l3_x_b2,
                                  luk_chain)
from nearsemiring.core import FiniteAlgebra, find_isomorphism
from nearsemiring.search import (CanonicalForm, EnumerationCapExceeded,
                                 EnumerationTask, canonical_form, count,
                                 enumerate_algebras, frozen_counts, relabel)


def brute_force_models(n, cls):
    """Independent oracle: unpruned scan over every table completion, n <= 4.

    Deduplication uses find_isomorphism, not canonical forms, so the two
    enumeration routes share no code beyond the axiom checker.
    """
    zero, one = 0, n - 1
    mid = list(range(1, n - 1))
    found = []

    def plus_tables():
        cells = list(itertools.combinations(mid, 2))
        for values in itertools.product(range(n), repeat=len(cells)):
            P = [[None] * n for _ in range(n)]
            for i in range(n):
                P[i][i] = i
                P[0][i] = P[i][0] = i
                P[one][i] = P[i][one] = one
            for (i, j), v in zip(cells, values):
                P[i][j] = P[j][i] = v
            yield P

    def alphas():
        for perm in itertools.permutations(range(n)):
            if perm[0] == one and all(perm[perm[i]] == i for i in range(n)):
                yield perm

    for P in plus_tables():
        for alpha in alphas():
            for values in itertools.product(range(n), repeat=len(mid) ** 2):
                T = [[None] * n for _ in range(n)]
                for i in range(n):
                    T[0][i] = T[i][0] = 0
                    T[one][i] = T[i][one] = i
                for (i, j), v in zip(itertools.product(mid, mid), values):
                    T[i][j] = v
                alg = FiniteAlgebra(n, tuple(tuple(r) for r in P),
                                    tuple(tuple(r) for r in T), alpha, 0, one)
                if not check_axioms(alg, cls).ok:
                    continue
                if all(find_isomorphism(alg, seen) is None for seen in found):
                    found.append(alg)
    return found


def test_counts_match_frozen_table():
    table = frozen_counts()["counts"]
    for key, expected in table.items():
        n, cls = key.split(",")
        assert count(int(n), cls) == expected, key


def test_required_counts():
    assert count(2, LUK_NRS) == 1
    assert count(3, LUK_NRS) == 1
    assert count(3, INRS) == 2


def test_independent_oracle_agrees_up_to_n4():
    for n in (2, 3, 4):
        for cls in (INRS, LUK_NRS, LUK_RS):
            expected = len(brute_force_models(n, cls))
            assert count(n, cls) == expected, (n, cls)


def test_n3_models_are_l3_and_g3():
    from nearsemiring.catalog import godel3
    models = enumerate_algebras(EnumerationTask(3, INRS))
    assert len(models) == 2
    matched = {id(m) for target in (luk_chain(3), godel3())
               for m in models if find_isomorphism(m, target) is not None}
    assert len(matched) == 2


def test_every_output_passes_its_class():
    for n in (2, 3, 4, 5):
        for alg in enumerate_algebras(EnumerationTask(n, LUK_NRS)):
            assert check_axioms(alg, LUK_NRS).ok


def test_outputs_pairwise_non_isomorphic():
    algs = enumerate_algebras(EnumerationTask(4, LUK_NRS))
    for a, b in itertools.combinations(algs, 2):
        assert find_isomorphism(a, b) is None
        assert canonical_form(a).data != canonical_form(b).data


def test_canonical_form_examples():
    assert canonical_form(b2_x_l3()) == canonical_form(l3_x_b2())
    assert canonical_form(luk_chain(4)) != canonical_form(b2_x_b2())
    assert isinstance(canonical_form(boolean2()), CanonicalForm)


def test_canonical_form_iff_isomorphic_on_pool():
    pool = list(enumerate_algebras(EnumerationTask(4, INRS))) + [
        b2_x_l3(), l3_x_b2(), luk_chain(4), b2_x_b2()]
    for a, b in itertools.combinations(pool, 2):
        same_form = canonical_form(a).data == canonical_form(b).data
        assert same_form == (find_isomorphism(a, b) is not None)


def test_permutation_completeness():
    rng = random.Random(20260810)
    pool = enumerate_algebras(EnumerationTask(4, LUK_NRS))
    forms = {canonical_form(a).data for a in pool}
    for alg in pool:
        mid = list(range(1, alg.size - 1))
        for _ in range(6):
            rng.shuffle(mid)
            perm = [0] + mid + [alg.size - 1]
            shuffled = relabel(alg, perm)
            assert canonical_form(shuffled).data in forms


def test_cap_raises_and_resume_completes():
    task_full = EnumerationTask(4, INRS)
    full = {canonical_form(a).data for a in enumerate_algebras(task_full)}
    capped = EnumerationTask(4, INRS, max_nodes=40)
    with pytest.raises(EnumerationCapExceeded) as err:
        enumerate_algebras(capped)
    token = err.value.resume
    collected = {canonical_form(a).data for a in err.value.partial}
    resumed = enumerate_algebras(task_full, resume=token)
    collected |= {canonical_form(a).data for a in resumed}
    assert collected == full


def test_thread_count_does_not_change_results():
    for cls in (LUK_NRS, INRS):
        single = enumerate_algebras(EnumerationTask(4, cls))
        multi = enumerate_algebras(EnumerationTask(4, cls, threads=3))
        assert [canonical_form(a).data for a in single] == \
               [canonical_form(a).data for a in multi]


def test_trivial_and_forced_sizes():
    assert len(enumerate_algebras(EnumerationTask(1, LUK_RS))) == 1
    two = enumerate_algebras(EnumerationTask(2, LUK_RS))
    assert len(two) == 1
    assert find_isomorphism(two[0], boolean2()) is not None


def test_enumeration_task_validation():
    with pytest.raises(ValueError):
        EnumerationTask(0, LUK_NRS)
    with pytest.raises(ValueError):
        EnumerationTask(3, "rings")
    with pytest.raises(ValueError):
        EnumerationTask(3, LUK_NRS, max_nodes=0)
    with pytest.raises(ValueError):
        enumerate_algebras(EnumerationTask(3, LUK_NRS, threads=2), resume=(1,))


def test_threads_on_sizes_without_split_points():
    for n in (1, 2, 3):
        single = enumerate_algebras(EnumerationTask(n, LUK_NRS))
        multi = enumerate_algebras(EnumerationTask(n, LUK_NRS, threads=4))
        assert [canonical_form(a).data for a in single] == \
               [canonical_form(a).data for a in multi]


def test_chained_resume_reaches_the_full_enumeration():
    full = {canonical_form(a).data
            for a in enumerate_algebras(EnumerationTask(4, INRS))}
    for cap in (37, 113):
        collected, token = set(), None
        for _ in range(200):
            try:
                out = enumerate_algebras(
                    EnumerationTask(4, INRS, max_nodes=cap), resume=token)
                collected |= {canonical_form(a).data for a in out}
                break
            except EnumerationCapExceeded as err:
                collected |= {canonical_form(a).data for a in err.partial}
                token = err.resume
        else:
            raise AssertionError("resume chain did not terminate")
        assert collected == full


def test_canonical_form_rejects_coinciding_constants():
    from nearsemiring.core import FiniteAlgebra
    broken = FiniteAlgebra(size=2, plus=((0, 0), (0, 0)), times=((0, 0), (0, 0)),
                           alpha=(0, 1), zero=0, one=0)
    with pytest.raises(Exception, match="coincide"):
        canonical_form(broken)
