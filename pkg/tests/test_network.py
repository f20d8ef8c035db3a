import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cmlab.group import LOOP, coxeter_element, generic_element, param_table, wedge_minor_oracle
from cmlab.laurent import LaurentPoly
from cmlab.network import (Bridge, CartanSlice, PathCollection, audit_disjoint, bridge_set, build_network,
                           enumerate_collections, minor_by_paths, paths_from_subset, weight_table)
from cmlab.quiver import CycleQuiver, IntervalModule

A2_AFFINE = CycleQuiver.from_string("+-+")
C = (2, 1, 3)
MINOR = "h1*h2^-1 + tb2*t2*h2*h3^-1 + tb2*t2*tb3*t3*h1^-1*h3"


@pytest.fixture(scope="module")
def net213():
    return build_network(3, C, tuple(reversed(C)))


def test_coxeter_213_slices(net213):
    weights = [s.weight for s in net213.slices if isinstance(s, Bridge)]
    assert weights == ["tb2", "tb1", "tb3", "t3", "t1", "t2"]
    assert sum(isinstance(s, CartanSlice) for s in net213.slices) == 1
    assert "bridge 1->2 weight tb2" in net213.dump()
    assert "level 1 weight h2^1*h1^-1" in net213.dump()


def test_pure_cartan_network():
    N = build_network(4, (), ())
    T = weight_table(4)
    for S in ((1,), (2, 3), (1, 2, 4)):
        cols = enumerate_collections(N, S)
        assert len(cols) == 1 and bridge_set_free(cols[0])
        expected = LaurentPoly.const(T, 1)
        for i in S:
            expected = expected * LaurentPoly.monomial(T, {f"h{i % 4 + 1}": 1, f"h{i}": -1})
        assert minor_by_paths(N, S, T) == expected


def bridge_set_free(P):
    return not P.bridges and all(len(set(r)) == 1 for r in P.routes)


def test_rank2_coxeter_bridges():
    assert sum(isinstance(s, Bridge) for s in build_network(2, (1, 2), (2, 1)).slices) == 4


def test_bad_letter():
    with pytest.raises(ValueError):
        build_network(3, (4,), ())


def test_coxeter_213_collections(net213):
    T = weight_table(3, net213.u, net213.v)
    cols = enumerate_collections(net213, (2, 3))
    assert len(cols) == 3
    assert minor_by_paths(net213, (2, 3), T) == LaurentPoly.parse(MINOR, T)
    assert sorted(sorted(bridge_set(P)) for P in cols) == [[], [2], [2, 3]]
    assert len(enumerate_collections(net213, (2,))) == 4
    assert all(audit_disjoint(P) for P in cols)


def test_paths_from_subset_213(net213):
    m = IntervalModule.interval(3, 2, 3)
    T = weight_table(3, net213.u, net213.v)
    trivial = paths_from_subset(A2_AFFINE, m, (), net213)
    assert not trivial.bridges and bridge_set(trivial) == frozenset()
    third = paths_from_subset(A2_AFFINE, m, {2, 3}, net213)
    assert third.weight(T) == LaurentPoly.parse("tb2*t2*tb3*t3*h1^-1*h3", T)
    by_beta = {bridge_set(P): P for P in enumerate_collections(net213, (2, 3))}
    assert third == by_beta[frozenset({2, 3})]


def test_paths_from_subset_rejects_open_subsets(net213):
    with pytest.raises(ValueError):
        paths_from_subset(A2_AFFINE, IntervalModule.interval(3, 2, 3), {3}, net213)


def test_sign_of_crossing_collection():
    P = PathCollection(build_network(3, (), ()), (1, 2), ((2,), (1,)), frozenset())
    assert P.sign() == -1


def test_oracle_agreement_all_orientations():
    for n in (3, 4):
        for Q in CycleQuiver.all_acyclic(n):
            c = Q.coxeter_word()
            g = coxeter_element(LOOP, n, c)
            N = build_network(n, c, tuple(reversed(c)))
            for k in range(1, n):
                for S in combinations(range(1, n + 1), k):
                    assert minor_by_paths(N, S, g.table) == wedge_minor_oracle(g, S)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_random_factorizations(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    u = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
    v = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
    g = generic_element(LOOP, n, u, v)
    N = build_network(n, u, v)
    S = rng.sample(range(1, n + 1), rng.randint(1, n - 1))
    assert g.table == param_table(LOOP, n, u, v)
    cols = enumerate_collections(N, S)
    assert all(audit_disjoint(P) for P in cols)
    assert minor_by_paths(N, S, g.table) == wedge_minor_oracle(g, S)
