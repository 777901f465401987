from fractions import Fraction
from itertools import product

import pytest

from cayleycubic import (
    MAX_TREE_DEPTH,
    NotASolutionError,
    continuant,
    continuant_drop_last,
    continuant_interior,
    continuant_power_sequence,
    markov_neighbor,
    markov_tree,
    markov_tree_dot,
    markov_value,
    sequence_overlap_search,
    splitting_identity_holds,
)


def drop_last_or_zero(word):
    # the ratio identity below needs the empty word to count as 0
    return 0 if len(word) == 0 else continuant_drop_last(word)


def test_markov_value():
    assert markov_value(1, 1, 1) == 0
    assert markov_value(1, 2, 5) == 0
    assert markov_value(2, 5, 29) == 0
    assert markov_value(1, 2, 3) == -4


def test_markov_neighbor():
    assert markov_neighbor((1, 2, 5), 0) == (29, 2, 5)
    assert markov_neighbor((1, 2, 5), 2) == (1, 2, 1)
    assert markov_neighbor((1, 1, 1), 0) == (2, 1, 1)
    with pytest.raises(NotASolutionError):
        markov_neighbor((1, 2, 3), 0)
    with pytest.raises(ValueError):
        markov_neighbor((1, 2, 5), 3)


def test_markov_neighbor_is_involutive():
    for t in markov_tree(5):
        for i in range(3):
            w = markov_neighbor(t, i)
            assert markov_value(*w) == 0
            assert markov_neighbor(w, i) == t


def test_markov_tree_levels():
    assert markov_tree(0) == [(1, 1, 1)]
    assert markov_tree(2) == [(1, 1, 1), (1, 1, 2), (1, 2, 5)]
    assert [len(markov_tree(d)) for d in range(7)] == [1, 2, 3, 5, 9, 17, 33]
    five = markov_tree(5)
    assert (2, 5, 29) in five
    assert (1, 13, 34) in five
    assert all(markov_value(*t) == 0 for t in five)


def test_markov_tree_depth_validation():
    with pytest.raises(ValueError):
        markov_tree(-1)
    with pytest.raises(ValueError):
        markov_tree(MAX_TREE_DEPTH + 1)


def test_markov_tree_dot():
    dot = markov_tree_dot(2)
    assert dot.startswith("digraph ")
    assert '"1,1,1" -> "1,1,2";' in dot
    assert '"1,1,2" -> "1,2,5";' in dot


def test_continuant_values():
    assert continuant(()) == 1
    assert continuant((7,)) == 7
    assert continuant((2, 1, 1)) == 5
    assert continuant((1, 2, 3)) == 10
    # all-ones words give Fibonacci numbers
    assert [continuant((1,) * n) for n in range(1, 8)] == [1, 2, 3, 5, 8, 13, 21]


def test_continuant_word_validation():
    with pytest.raises(ValueError):
        continuant((1, 0, 2))
    with pytest.raises(ValueError):
        continuant((1, -1))
    with pytest.raises(ValueError):
        continuant_drop_last(())
    with pytest.raises(ValueError):
        continuant_interior((5,))


def test_continuant_recurrence_and_mirror():
    words = [w for n in range(0, 5) for w in product((1, 2, 3), repeat=n)]
    for w in words:
        assert continuant(w) == continuant(tuple(reversed(w)))
    # K(w + a) = a*K(w) + K(w[:-1]), with K of the empty word equal to 1
    for w in words:
        if not w:
            continue
        for a in (1, 2, 5):
            assert continuant(w + (a,)) == a * continuant(w) + continuant(w[:-1])


def test_continuant_truncations():
    assert continuant_drop_last((2,)) == 1
    assert continuant_drop_last((2, 1, 1)) == continuant((2, 1))
    assert continuant_interior((3, 4)) == 1
    assert continuant_interior((2, 1, 1, 3)) == continuant((1, 1))


def test_power_sequence_values():
    assert continuant_power_sequence((1, 1), (2,), 4) == [1, 2, 5, 13]
    assert continuant_power_sequence((1, 1), (), 3) == [0, 1, 3]
    assert continuant_power_sequence((2, 2), (1,), 5) == [1, 5, 29, 169, 985]


def test_power_sequence_recurrence():
    # terms obey x_{k+1} = q x_k - x_{k-1} with q = K'(aa)/K'(a); the module
    # cross-checks each term against the direct continuant, so here we only
    # confirm the advertised shape
    for alpha in ((1, 1), (1, 2), (2, 2), (1, 1, 2, 2)):
        q = Fraction(continuant_drop_last(alpha + alpha), continuant_drop_last(alpha))
        for beta in ((), (1,), (2, 1)):
            seq = continuant_power_sequence(alpha, beta, 6)
            for k in range(2, 6):
                assert seq[k] == q * seq[k - 1] - seq[k - 2]


def test_power_sequence_validation():
    with pytest.raises(ValueError):
        continuant_power_sequence((1,), (2,), 3)
    with pytest.raises(ValueError):
        continuant_power_sequence((), (2,), 3)


def test_splitting_identity_bounded_space():
    count = 0
    for alen in (2, 4):
        for alpha in product((1, 2, 3), repeat=alen):
            for blen in (1, 2, 3):
                for beta in product((1, 2, 3), repeat=blen):
                    assert splitting_identity_holds(alpha, beta)
                    lhs = drop_last_or_zero(alpha + alpha + beta)
                    rhs = continuant(alpha) * drop_last_or_zero(alpha + beta)
                    rhs += drop_last_or_zero(alpha) * continuant_interior(alpha + beta)
                    assert lhs == rhs
                    count += 1
    assert count == 3510


def test_ratio_identity_bounded_space():
    # K'(aa)/K'(a) == (K'(l aa r) + K'(l r)) / K'(l a r), cross-multiplied;
    # the empty-word value 0 makes the bare l = r = () case work too
    count = 0
    for alen in (2, 4):
        for alpha in product((1, 2, 3), repeat=alen):
            for llen in (0, 1, 2):
                for rlen in (0, 1, 2):
                    for lam in product((1, 2), repeat=llen):
                        for rho in product((1, 2), repeat=rlen):
                            lhs = drop_last_or_zero(alpha + alpha) * drop_last_or_zero(lam + alpha + rho)
                            rhs = drop_last_or_zero(alpha) * (
                                drop_last_or_zero(lam + alpha + alpha + rho)
                                + drop_last_or_zero(lam + rho)
                            )
                            assert lhs == rhs, (alpha, lam, rho)
                            count += 1
    assert count == 4410


def test_overlap_search_defaults_find_nothing():
    report = sequence_overlap_search()
    assert report.bounds == {"max_entry": 3, "max_block_len": 4, "max_terms": 6}
    assert report.matches_s_ge_2 == []
    assert report.s1_coincidences == []


def test_overlap_search_small_bounds():
    report = sequence_overlap_search(max_entry=2, max_block_len=2, max_terms=5)
    assert report.matches_s_ge_2 == []
    assert report.s1_coincidences == []
    blob = report.as_dict()
    assert sorted(blob) == ["bounds", "matches_s_ge_2", "s1_coincidences"]


def test_overlap_search_validation():
    with pytest.raises(ValueError):
        sequence_overlap_search(max_terms=2)
    with pytest.raises(ValueError):
        sequence_overlap_search(max_entry=0)
    with pytest.raises(ValueError):
        sequence_overlap_search(max_block_len=1)
