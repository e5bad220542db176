import pytest
from hypothesis import given, strategies as st

from gtpop import oracles
from gtpop.errors import ContractViolation
from gtpop.partition import (
    BreakResult,
    Partition,
    Rectangle,
    box_size_counts,
    break_multi,
    break_multi_inv,
    break_single,
    break_single_inv,
    enumerate_colored,
    enumerate_in_box,
    enumerate_partitions_of,
)

P = Partition


@st.composite
def partitions(draw, max_part=12, max_len=8):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return P(sorted(parts, reverse=True))


def test_partition_normalizes_trailing_zeros():
    assert P((6, 4, 3, 3, 1, 0, 0)).parts == (6, 4, 3, 3, 1)
    assert P().parts == ()
    assert P((0, 0)).parts == ()


def test_partition_rejects_bad_input():
    with pytest.raises(ContractViolation):
        P((1, 2))
    with pytest.raises(ContractViolation):
        P((2, -1))


def test_fits_in():
    assert P((6, 4, 3, 3, 1)).fits_in(Rectangle(7, 6))
    assert not P((6, 4, 3, 3, 1)).fits_in(Rectangle(4, 6))
    assert P().fits_in(Rectangle(0, 0))


def test_complement():
    assert P((6, 4, 3, 3, 1)).complement(Rectangle(7, 6)) == P((6, 6, 5, 3, 3, 2))
    assert P().complement(Rectangle(3, 4)) == P((4, 4, 4))
    q = P((5, 3, 1))
    assert q.complement(Rectangle(4, 6)).complement(Rectangle(4, 6)) == q


def test_complement_size_identity():
    rect = Rectangle(4, 5)
    for q in enumerate_in_box(rect):
        assert q.size + q.complement(rect).size == rect.area


def test_complement_requires_fit():
    with pytest.raises(ContractViolation):
        P((7,)).complement(Rectangle(3, 3))


def test_break_single_examples():
    assert break_single(0, P((4, 3, 1, 1))) == (2, 2, P((2, 1)), P((1, 1)))
    assert break_single(2, P()) == (2, 0, P(), P())
    assert break_single(-1, P((1,))) == (0, 1, P(), P((1,)))


def test_break_single_inv_examples():
    assert break_single_inv(2, 2, P((2, 1)), P((1, 1))) == (0, P((4, 3, 1, 1)))
    assert break_single_inv(0, 1, P(), P((1,))) == (-1, P((1,)))
    c, p = break_single_inv(3, 2, P(), P())
    assert (c, p) == (1, P((2, 2, 2)))
    assert break_single(c, p) == (3, 2, P(), P())


def test_break_single_roundtrip_small():
    for size in range(9):
        for p in enumerate_partitions_of(size):
            for c in range(-4, 10):
                a, b, p1, p2 = break_single(c, p)
                assert p.size == a * b + p1.size + p2.size
                assert p1.num_parts <= a and p2.largest <= b
                assert break_single_inv(a, b, p1, p2) == (c, p)


def test_break_multi_example():
    res = break_multi((0, 1), P((3, 2, 1)))
    assert res.a_seq == (2, 2)
    assert res.b_seq == (2, 1)
    assert res.pieces == (P((1,)), P(), P((1,)))
    assert break_multi_inv(res) == ((0, 1), P((3, 2, 1)))


def test_break_multi_single_offset_matches_break_single():
    for p in enumerate_partitions_of(6):
        for c in range(-3, 5):
            a, b, p1, p2 = break_single(c, p)
            res = break_multi((c,), p)
            assert res.a_seq == (a,) and res.b_seq == (b,)
            assert res.pieces == (p1, p2)


def test_break_multi_empty_partition():
    res = break_multi((0, 1, 3), P())
    assert res.a_seq == (0, 1, 3)
    assert res.b_seq == (0, 0, 0)
    assert all(q == P() for q in res.pieces)
    assert break_multi_inv(res) == ((0, 1, 3), P())


def test_break_multi_rejects_decreasing_offsets():
    with pytest.raises(ContractViolation):
        break_multi((2, 1), P((3,)))


def test_break_multi_inv_rejects_bad_shapes():
    with pytest.raises(ContractViolation):
        break_multi_inv(BreakResult((1,), (2,), (P((1, 1)), P())))
    with pytest.raises(ContractViolation):
        break_multi_inv(BreakResult((1,), (2,), (P(), P((3,)))))


@given(partitions(), st.lists(st.integers(-10, 10), min_size=1, max_size=5))
def test_break_multi_roundtrip_random(p, cs):
    c_seq = tuple(sorted(cs))
    res = break_multi(c_seq, p)
    covered = sum(q.size for q in res.pieces)
    steps = sum(
        (res.a_seq[j] - (res.a_seq[j - 1] if j else 0)) * res.b_seq[j]
        for j in range(len(res.a_seq))
    )
    assert p.size == covered + steps
    assert all(res.b_seq[i] >= res.b_seq[i + 1] for i in range(len(res.b_seq) - 1))
    assert break_multi_inv(res) == (c_seq, p)


def test_enumerate_in_box_counts():
    assert sum(1 for _ in enumerate_in_box(Rectangle(2, 2))) == 6
    assert list(enumerate_in_box(Rectangle(0, 5))) == [P()]
    assert list(enumerate_in_box(Rectangle(1, 3))) == [P(), P((1,)), P((2,)), P((3,))]
    for a in range(9):
        for b in range(9):
            count = sum(1 for _ in enumerate_in_box(Rectangle(a, b)))
            assert count == oracles.pascal(a + b, a)


def test_enumerate_in_box_no_duplicates():
    seen = list(enumerate_in_box(Rectangle(3, 4)))
    assert len(set(seen)) == len(seen)


def test_box_size_counts_match_enumeration():
    for a in range(5):
        for b in range(5):
            hist = [0] * (a * b + 1)
            for q in enumerate_in_box(Rectangle(a, b)):
                hist[q.size] += 1
            assert tuple(hist) == box_size_counts(a, b)


def test_enumerate_partitions_of_order():
    got = [q.parts for q in enumerate_partitions_of(5)]
    assert got == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_enumerate_colored_counts():
    assert sum(1 for _ in enumerate_colored(2, 2)) == 5
    assert sum(1 for _ in enumerate_colored(1, 0)) == 1
    assert sum(1 for _ in enumerate_colored(1, 5)) == 7 == oracles.partition_count(5)
    for r in (1, 2, 3):
        for d in range(6):
            count = sum(1 for _ in enumerate_colored(r, d))
            assert count == oracles.colored_count(r, d)


def test_enumerate_colored_distinct():
    seen = list(enumerate_colored(3, 4))
    assert len(set(seen)) == len(seen)
