import itertools

import pytest
from hypothesis import given, strategies as st

from emdpoly.arith import CapExceeded, binomial
from emdpoly.partitions import (
    Partition,
    RectBound,
    conjugate,
    enumerate_partitions,
    fits,
    sum_sym_diff,
    sym_diff_size,
)


def all_partitions_bruteforce(a, b):
    """Par(a x b) by filtering every vector in {0..b}^a."""
    out = set()
    for v in itertools.product(range(b + 1), repeat=a):
        if all(v[i] >= v[i + 1] for i in range(a - 1)):
            out.add(Partition(v))
    return out


def literal_sym_diff(lam, mu):
    return len(lam.boxes() ^ mu.boxes())


def pairwise_sum(a, b, c, d):
    return sum(literal_sym_diff(x, y)
               for x in all_partitions_bruteforce(a, b)
               for y in all_partitions_bruteforce(c, d))


partitions_3x3 = enumerate_partitions(RectBound(3, 3))


def test_partition_canonical():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition() == Partition(()) == ()
    assert Partition().length == 0 and Partition().width == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_rect_bound_rejects_negative():
    with pytest.raises(ValueError):
        RectBound(-1, 2)


def test_fits():
    assert fits(Partition((6, 5, 2, 2, 1)), RectBound(5, 6))
    assert fits(Partition(), RectBound(0, 0))
    assert not fits(Partition((3,)), RectBound(1, 2))
    assert not fits(Partition((6, 5, 2, 2, 1)), (4, 6))


def test_enumerate_examples():
    assert enumerate_partitions(RectBound(1, 3)) == [(), (1,), (2,), (3,)]
    two_by_two = enumerate_partitions(RectBound(2, 2))
    assert set(two_by_two) == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}
    assert two_by_two == [(), (1,), (1, 1), (2,), (2, 1), (2, 2)]
    assert enumerate_partitions(RectBound(0, 7)) == [()]
    assert enumerate_partitions(RectBound(4, 0)) == [()]


def test_enumeration_order_is_lexicographic_on_padded_vectors():
    for a, b in [(2, 3), (3, 3), (4, 2)]:
        parts = enumerate_partitions(RectBound(a, b))
        padded = [p.padded(a) for p in parts]
        assert padded == sorted(padded)
        assert parts[0] == () and parts[-1] == (b,) * a


@pytest.mark.parametrize("a", range(7))
@pytest.mark.parametrize("b", range(7))
def test_enumeration_count_and_content(a, b):
    parts = enumerate_partitions(RectBound(a, b))
    assert len(parts) == binomial(a + b, a)
    assert len(set(parts)) == len(parts)
    if a <= 4 and b <= 4:
        assert set(parts) == all_partitions_bruteforce(a, b)


def test_conjugate():
    assert conjugate(Partition((6, 5, 2, 2, 1))) == (5, 4, 2, 2, 2, 1)
    assert conjugate(Partition()) == ()
    assert conjugate(Partition((2, 1))) == (2, 1)


def test_conjugate_is_transpose_of_boxes():
    for lam in partitions_3x3:
        assert conjugate(lam).boxes() == {(j, i) for i, j in lam.boxes()}


@pytest.mark.parametrize("a,b", [(2, 3), (3, 1), (1, 4), (3, 3)])
def test_conjugate_maps_rectangle_onto_transpose(a, b):
    image = {conjugate(lam) for lam in enumerate_partitions(RectBound(a, b))}
    assert image == set(enumerate_partitions(RectBound(b, a)))
    assert all(conjugate(conjugate(lam)) == lam for lam in image)


def test_sym_diff_examples():
    lam, mu = Partition((6, 5, 2, 2, 1)), Partition((4, 4, 4, 3))
    assert sym_diff_size(lam, mu) == literal_sym_diff(lam, mu) == 7
    assert sym_diff_size(lam, lam) == 0
    assert sym_diff_size(Partition((2,)), Partition((1, 1))) == 2


def test_sym_diff_matches_box_sets_on_3x3():
    for lam in partitions_3x3:
        for mu in partitions_3x3:
            assert sym_diff_size(lam, mu) == literal_sym_diff(lam, mu)
            assert sym_diff_size(lam, mu) == sym_diff_size(mu, lam)


def test_row_column_duality_on_3x3():
    for lam in partitions_3x3:
        for mu in partitions_3x3:
            assert sym_diff_size(lam, mu) == sym_diff_size(conjugate(lam), conjugate(mu))


def test_triangle_inequality_on_3x3():
    for lam, mu, nu in itertools.product(partitions_3x3, repeat=3):
        assert sym_diff_size(lam, nu) <= sym_diff_size(lam, mu) + sym_diff_size(mu, nu)


def test_sum_sym_diff_examples():
    assert sum_sym_diff(RectBound(1, 3), RectBound(1, 3)) == 20
    assert sum_sym_diff(RectBound(2, 2), RectBound(2, 2)) == 56
    assert sum_sym_diff(RectBound(1, 0), RectBound(1, 0)) == 0
    assert sum_sym_diff((0, 0), (0, 5)) == 0


@pytest.mark.parametrize("a,b,c,d", [(1, 3, 1, 3), (2, 2, 2, 2), (2, 3, 1, 1), (0, 2, 3, 1), (3, 2, 2, 3)])
def test_sum_sym_diff_against_box_set_oracle(a, b, c, d):
    assert sum_sym_diff((a, b), (c, d)) == pairwise_sum(a, b, c, d)


def test_sum_sym_diff_small_chunks_agree():
    assert sum_sym_diff((3, 3), (2, 4), chunk_cells=1) == sum_sym_diff((3, 3), (2, 4))


def test_sum_sym_diff_cap():
    with pytest.raises(CapExceeded):
        sum_sym_diff((3, 3), (3, 3), max_pairs=399)
    assert sum_sym_diff((3, 3), (3, 3), max_pairs=400) > 0


def test_conjugation_lemma_exhaustive():
    for a, b, c, d in itertools.product(range(4), repeat=4):
        assert sum_sym_diff((a, b), (c, d)) == sum_sym_diff((b, a), (d, c))


def test_construction_identity():
    S = lambda a, b, c, d: pairwise_sum(a, b, c, d)
    for k, l, m in itertools.product(range(1, 4), repeat=3):
        rhs = (S(k, l - 1, k, m) + S(k, l, k, m - 1) - S(k, l - 1, k, m - 1)
               + S(k - 1, l, k - 1, m)
               + abs(l - m) * binomial(k - 1 + l, l) * binomial(k - 1 + m, m))
        assert S(k, l, k, m) == rhs
        assert sum_sym_diff((k, l), (k, m)) == rhs


@st.composite
def partitions(draw, max_rows=6, max_cols=6):
    rows = draw(st.lists(st.integers(0, max_cols), max_size=max_rows))
    return Partition(sorted(rows, reverse=True))


@given(partitions(), partitions())
def test_sym_diff_is_box_set_symmetric_difference(lam, mu):
    assert sym_diff_size(lam, mu) == literal_sym_diff(lam, mu)
    assert sym_diff_size(lam, mu) == sym_diff_size(conjugate(lam), conjugate(mu))
    assert conjugate(conjugate(lam)) == lam
