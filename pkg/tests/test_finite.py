import pytest

from cmlab.finite import (check_finite_belt, check_fundid, check_iota, check_minor_lemmas, check_v_recurrence,
                          coxeter_prefix_pairs, dense_element, fundid_holds, longest_word, sl_coxeter_words,
                          sl_exchange_matrix)
from cmlab.cartan import coxeter_word


def test_coxeter_words_cover_orientations():
    for n in (3, 4, 5):
        words = sl_coxeter_words(n)
        assert len(words) == 2 ** (n - 2)
        for c in words:
            assert sorted(c) == list(range(1, n))
            assert coxeter_word(sl_exchange_matrix(c)) == c


def test_longest_word_length():
    assert len(longest_word(4)) == 6


def test_prefix_pairs_sl4():
    pairs = coxeter_prefix_pairs(4, (1, 2, 3))
    assert ((), (), 1) in pairs
    assert ((1,), (1,), 2) in pairs
    assert all(u == v for u, v, _ in pairs)


def test_fundid_needs_reduced_words():
    g = dense_element(3)
    with pytest.raises(ValueError):
        fundid_holds(g, (1,), (1,), 1)


@pytest.mark.parametrize("n", [3, 4])
def test_fundid(n):
    rep = check_fundid(n)
    assert rep["ok"], rep["counterexample"]
    assert rep["checked"] == {3: 6, 4: 22}[n]


@pytest.mark.parametrize("n", [3, 4])
def test_minor_lemmas(n):
    for c in sl_coxeter_words(n):
        rep = check_minor_lemmas(n, c, 2)
        assert rep["ok"] and rep["checked"] > 0, (c, rep["counterexample"])


@pytest.mark.parametrize("n", [3, 4])
def test_iota_and_v(n):
    for c in sl_coxeter_words(n):
        assert check_iota(n, c)["ok"]
        assert check_v_recurrence(n, c)["ok"]


@pytest.mark.parametrize("n", [3, 4])
def test_belt_variables_are_minors(n):
    for c in sl_coxeter_words(n):
        rep = check_finite_belt(n, c)
        assert rep["ok"], (c, rep["counterexample"])
        # one variable per positive root plus the initial cluster
        assert rep["checked"] == n * (n - 1) // 2 + n - 1
