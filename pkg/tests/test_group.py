import pytest

from cmlab.cartan import cartan_companion, omega
from cmlab.group import (FINITE, LOOP, ChainConditionError, LoopMatrix, cartan_factor, coxeter_element,
                         extremal_chain_minor, factorization, frozen_weight, generic_element, h_monomial, iota,
                         lowest_minor, param_table, sl_cartan, substitute, substitution_map, twisted_minor,
                         v_recurrence, wedge_minor_oracle)
from cmlab.laurent import LaurentPoly
from cmlab.mutation import frame, variable_along, yhat
from cmlab.quiver import kronecker_character, kronecker_matrix

A2_AFFINE = ((0, -1, 1), (1, 0, 1), (-1, -1, 0))
C2 = ((0, 1, 0), (-2, 0, 2), (0, -1, 0))
MINOR = "h1*h2^-1 + tb2*t2*h2*h3^-1 + tb2*t2*tb3*t3*h1^-1*h3"
C2_MINOR = "h1^-1*h2 + h1*h2^-1*t1*tb1 + h2*h3^-1*t1*tb1*t2*tb2 + h2^-1*h3*t1*tb1*t2*tb2*t3*tb3"


def P(s, T):
    return LaurentPoly.parse(s, T)


def test_sl2_generic_element():
    g = generic_element(FINITE, 2, (1,), (1,))
    T = g.table
    expected = [["h1", "h1*t1"], ["tb1*h1", "tb1*h1*t1 + h1^-1"]]
    assert [[g[i, j] for j in range(2)] for i in range(2)] == [[P(e, T) for e in row] for row in expected]
    assert g.det() == 1


def test_loop_determinant_is_one():
    g = coxeter_element(LOOP, 3, (2, 1, 3))
    assert g.det() == 1


def test_identity_minor():
    T = param_table(LOOP, 3)
    g = LoopMatrix.identity(T, 3, LOOP)
    for S in ((1,), (2, 3), (1, 3)):
        assert wedge_minor_oracle(g, S) == 1


def test_coxeter_213_oracle():
    g = coxeter_element(LOOP, 3, (2, 1, 3))
    assert wedge_minor_oracle(g, (2, 3)) == P(MINOR, g.table)


def test_twisted_minor_trivial_words():
    g = generic_element(FINITE, 3, (1, 2), (2, 1))
    for i in (1, 2):
        assert twisted_minor(g, i, (), ()) == g.minor(tuple(range(i)), tuple(range(i)))


def test_sl2_extremal_minor_is_upper_right_entry():
    # the lift of s_1 moves column 2 into position 1, so Δ^{ω1}_{s1 ω1} reads g_12
    g = generic_element(FINITE, 2, (1,), (1,))
    assert twisted_minor(g, 1, (), (1,)) == g[0, 1] == P("t1*h1", g.table)


def test_substitution_map_basics():
    g = coxeter_element(LOOP, 3, (2, 1, 3))
    smap = substitution_map(A2_AFFINE, g.table)
    for i in (1, 2, 3):
        assert smap[f"x{i}"] == P(f"h{i}", g.table)


def test_yhat_substitution_type_a():
    g = coxeter_element(LOOP, 3, (2, 1, 3))
    T = g.table
    smap = substitution_map(A2_AFFINE, T)
    M = frame(A2_AFFINE, "doubled")
    for i in (1, 2, 3):
        prev, nxt = (i - 2) % 3 + 1, i % 3 + 1
        expected = P(f"t{i}*tb{i}*h{prev}^-1*h{i}^2*h{nxt}^-1", T)
        assert substitute(yhat(M, i), smap) == expected


def test_example_substitution():
    g = coxeter_element(LOOP, 3, (2, 1, 3))
    x = variable_along(frame(A2_AFFINE, "doubled"), (3, 2))
    assert substitute(x, substitution_map(A2_AFFINE, g.table)) == P(MINOR, g.table)


def test_frozen_weights():
    A = cartan_companion(A2_AFFINE)
    c = (2, 1, 3)
    assert frozen_weight(A, c, 2) == omega(3, 2)
    assert frozen_weight(A, c, 1) == omega(3, 1) - omega(3, 2)
    assert frozen_weight(A, c, 3) == omega(3, 3) - omega(3, 2) - omega(3, 1)


def test_iota_factor_rule():
    n, u, v = 3, (1, 2), (2, 1)
    g = generic_element(FINITE, n, u, v)
    F = factorization(FINITE, n, u, v)
    assert iota(g) == F.iota().evaluate(g.table)
    assert iota(iota(g)) == g
    T = g.table
    h = cartan_factor(T, n, FINITE)
    assert iota(h) == cartan_factor(T, n, FINITE, inverse=True)


def test_iota_exchanges_corner_minors():
    g = generic_element(FINITE, 3, (1, 2), (2, 1))
    gi = iota(g)
    for j in (1, 2):
        assert twisted_minor(g, j, (), ()) == lowest_minor(gi, j)


def test_v_recurrence_last_letter():
    A = cartan_companion(A2_AFFINE)
    c = (2, 1, 3)
    T = param_table(LOOP, 3, c, tuple(reversed(c)))
    v = v_recurrence(A, c, T)
    last = c[-1]
    assert v[last] == P(f"t{last}*tb{last}", T) * h_monomial(T, A.alpha_weight(last)) + 1


def test_v_recurrence_matches_iota_sl3():
    A = sl_cartan(3)
    for c in ((1, 2), (2, 1)):
        g = generic_element(FINITE, 3, c, tuple(reversed(c)))
        gi = iota(g)
        v = v_recurrence(A, c, g.table)
        for i in (1, 2):
            assert h_monomial(g.table, omega(2, i)) * twisted_minor(gi, i, (), ()) == v[i]


def test_c2_chain_minor():
    A = cartan_companion(C2)
    T = param_table(LOOP, 3, (1, 2, 3), (3, 2, 1))
    chain = extremal_chain_minor(A, omega(3, 2) - omega(3, 1), (1, 2, 3), T)
    assert chain == P(C2_MINOR, T)
    x = variable_along(frame(C2, "doubled"), (1, 3, 2))
    assert substitute(x, substitution_map(C2, T)) == chain


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_kronecker_chain_minor(r):
    K = kronecker_matrix(r)
    A = cartan_companion(K)
    T = param_table(LOOP, 2, (1, 2), (2, 1))
    lam = (-1, r - 1)
    chain = extremal_chain_minor(A, lam, (1, 2), T)
    expected = (h_monomial(T, lam) + h_monomial(T, (1, -1)) * P("t1*tb1", T)
                + h_monomial(T, (-(r - 1), 1)) * P("t1*tb1*t2*tb2", T))
    assert chain == expected
    assert substitute(kronecker_character(r), substitution_map(K, T)) == chain


def test_chain_condition():
    A = cartan_companion(kronecker_matrix(2))
    T = param_table(LOOP, 2, (1, 2), (2, 1))
    with pytest.raises(ChainConditionError):
        extremal_chain_minor(A, (1, 0), (1, 2), T)


def test_fundamental_identity_small():
    from cmlab.finite import fundid_holds
    g = generic_element(FINITE, 2, (1,), (1,))
    assert fundid_holds(g, (), (), 1)
    g3 = generic_element(FINITE, 3, (1, 2), (2, 1))
    assert fundid_holds(g3, (1,), (1,), 2)
