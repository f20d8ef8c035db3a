from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cmlab.cartan import omega
from cmlab.laurent import LaurentPoly
from cmlab.mutation import frame, yhat
from cmlab.quiver import (CycleQuiver, IntervalModule, classify_interval, cluster_character_interval, doubled_matrix,
                          euler_gvector, interval_gvector, kronecker_character, kronecker_matrix, omega_S,
                          target_closed_subsets)

A2_AFFINE = CycleQuiver.from_string("+-+")
EXAMPLE = "(x1*x3 + z2*zb2 + x1*x2*z2*z3*zb2*zb3)/(x2*x3)"


def test_a2_affine_quiver():
    assert A2_AFFINE.exchange_matrix() == ((0, -1, 1), (1, 0, 1), (-1, -1, 0))
    assert A2_AFFINE.coxeter_word() == (2, 1, 3)
    assert list(A2_AFFINE.sinks()) == [2] and list(A2_AFFINE.sources()) == [3]
    assert CycleQuiver.from_matrix(A2_AFFINE.exchange_matrix()) == A2_AFFINE


def test_orientation_errors():
    with pytest.raises(ValueError):
        CycleQuiver.from_string("+++")
    with pytest.raises(ValueError):
        CycleQuiver.from_string("+-")


def test_acyclic_orientation_count():
    for n in range(3, 8):
        qs = CycleQuiver.all_acyclic(n)
        assert len(qs) == 2 ** n - 2
        for Q in qs:
            assert len(Q.sinks()) == len(Q.sources()) >= 1


def test_classification_examples():
    cl = classify_interval(A2_AFFINE, IntervalModule.interval(3, 2, 3))
    assert cl.rigid_regular and cl.sinks == (2,) and cl.sources == (3,) and cl.euler == 0
    Q = CycleQuiver.from_string("+-++")
    sink = Q.sinks()[0]
    assert not classify_interval(Q, IntervalModule.interval(4, sink, sink)).rigid_regular


def test_full_cycle_is_not_classified():
    with pytest.raises(ValueError):
        classify_interval(A2_AFFINE, IntervalModule.full(3))


def test_regularity_criteria_agree():
    # sink/source balance against the Euler pairing with the null root
    for n in range(3, 7):
        for Q in CycleQuiver.all_acyclic(n):
            for m in IntervalModule.all_proper(n):
                cl = classify_interval(Q, m)
                assert cl.rigid_regular == (cl.euler == 0) == (len(cl.sinks) == len(cl.sources))


def test_target_closed_single_arrow():
    Q = CycleQuiver.from_string("+++-")
    assert target_closed_subsets(Q, IntervalModule.interval(4, 1, 2)) == [frozenset(), frozenset({2}),
                                                                        frozenset({1, 2})]


def test_target_closed_a2_affine():
    assert target_closed_subsets(A2_AFFINE, IntervalModule.interval(3, 2, 3)) == [frozenset(), frozenset({2}),
                                                                           frozenset({2, 3})]
    assert target_closed_subsets(A2_AFFINE, IntervalModule.full(3)) == [frozenset(), frozenset({2}), frozenset({1, 2}),
                                                                   frozenset({1, 2, 3})]


def test_gvector_examples():
    assert interval_gvector(A2_AFFINE, IntervalModule.interval(3, 2, 3)) == (omega(3, 1) - omega(3, 2), frozenset({2, 3}))
    assert interval_gvector(A2_AFFINE, IntervalModule.full(3)) == (omega(3, 3) - omega(3, 2), frozenset({2}))


def test_gvector_rejects_nonregular():
    Q = CycleQuiver.from_string("+-++")
    with pytest.raises(ValueError):
        interval_gvector(Q, IntervalModule.interval(4, Q.sinks()[0], Q.sinks()[0]))


def test_gvector_forms_agree_up_to_n8():
    count = 0
    for n in range(3, 9):
        for Q in CycleQuiver.all_acyclic(n):
            for m in IntervalModule.all_proper(n):
                if classify_interval(Q, m).rigid_regular:
                    w, S = interval_gvector(Q, m)
                    assert w == omega_S(n, S) == euler_gvector(Q, m)
                    count += 1
    assert count == 10924


def test_character_a2_affine():
    x = cluster_character_interval(A2_AFFINE, IntervalModule.interval(3, 2, 3))
    assert x == LaurentPoly.parse(EXAMPLE, x.table)


def test_character_full_cycle():
    M = doubled_matrix(A2_AFFINE)
    x = cluster_character_interval(A2_AFFINE, IntervalModule.full(3), M)
    T = x.table
    y = {j: yhat(M, j, T) for j in (1, 2, 3)}
    pre = LaurentPoly.monomial(T, {"x3": 1, "x2": -1})
    assert x == pre * (1 + y[2] + y[2] * y[1] + y[1] * y[2] * y[3])


def test_kronecker():
    assert kronecker_matrix(2) == ((0, 2), (-2, 0))
    for r in (2, 3, 4):
        x = kronecker_character(r)
        T = x.table
        M = frame(kronecker_matrix(r), "doubled")
        y1, y2 = yhat(M, 1, T), yhat(M, 2, T)
        pre = LaurentPoly.monomial(T, {"x1": -1, "x2": r - 1})
        assert x == pre * (1 + y1 + y1 * y2)
        assert len(pre + pre * y1 + pre * y1 * y2) == 3


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 7), st.data())
def test_subsets_are_target_closed(n, data):
    dirs = data.draw(st.lists(st.booleans(), min_size=n, max_size=n).filter(lambda d: 0 < sum(d) < n))
    Q = CycleQuiver(n, tuple(dirs))
    k = data.draw(st.integers(1, n))
    length = data.draw(st.integers(1, n - 1))
    m = IntervalModule(n, k, length)
    support = set(m.vertices())
    subsets = target_closed_subsets(Q, m)
    assert len(set(subsets)) == len(subsets)
    for E in subsets:
        assert E <= support
        for a, b in Q.arrows():
            if a in E and b in support:
                assert b in E
    # brute force count
    verts = sorted(support)
    brute = 0
    for r in range(len(verts) + 1):
        for E in combinations(verts, r):
            E = set(E)
            if all(b in E for a, b in Q.arrows() if a in E and b in support):
                brute += 1
    assert brute == len(subsets)
