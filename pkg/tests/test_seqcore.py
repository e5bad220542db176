import random
from itertools import product

import pytest

from gtpop import oracles
from gtpop.errors import ContractViolation
from gtpop.seqcore import (
    interlaces,
    majorizes,
    norm_sq,
    weakly_interlaces,
    weakly_majorizes,
)


def nonincr(entries, n):
    """All non-increasing tuples of length n over the given entry range."""
    return [t for t in product(entries, repeat=n) if all(t[i] >= t[i + 1] for i in range(n - 1))]


def test_interlaces_examples():
    assert interlaces((7, 4), (7, 5, 3))
    assert interlaces((), (5,))
    assert not interlaces((3,), (2, 1))


def test_interlaces_length_mismatch():
    with pytest.raises(ContractViolation) as exc:
        interlaces((1, 1), (3, 2, 1, 0))
    assert exc.value.constraint == "length"


def test_weak_interlacing_examples():
    assert weakly_interlaces((7, 5, 3), (7, 4))
    assert weakly_interlaces((4, 2, 0), (3, 3))
    assert not weakly_interlaces((2, 1), (4,))


def test_interlacing_implies_weak():
    for hi in nonincr(range(-2, 3), 3):
        for lo in nonincr(range(-2, 3), 2):
            if interlaces(lo, hi):
                assert weakly_interlaces(hi, lo)


def test_weak_interlacing_matches_subset_definition_exhaustive():
    for hi in nonincr(range(-2, 3), 3):
        for lo in product(range(-2, 3), repeat=2):
            assert weakly_interlaces(hi, lo) == oracles.weakly_interlaces_subsets(hi, lo)


def test_weak_interlacing_matches_subset_definition_randomized():
    rng = random.Random(171)
    for _ in range(2000):
        n = rng.randint(1, 6)
        hi = tuple(sorted((rng.randint(-4, 4) for _ in range(n)), reverse=True))
        lo = tuple(rng.randint(-4, 4) for _ in range(n - 1))
        assert weakly_interlaces(hi, lo) == oracles.weakly_interlaces_subsets(hi, lo)


def test_majorizes_examples():
    assert majorizes((3, 1), (2, 2))
    assert majorizes((4, 0, -1), (4, 0, -1))
    assert not majorizes((2, 2), (3, 1))


def test_weak_majorization_allows_sum_slack():
    assert weakly_majorizes((3, 1), (2, 1))
    assert not majorizes((3, 1), (2, 1))


def test_majorizes_length_mismatch():
    with pytest.raises(ContractViolation):
        majorizes((1,), (1, 0))


def test_majorization_lower_bounds():
    for x in product(range(-2, 3), repeat=3):
        for y in product(range(-2, 3), repeat=3):
            if majorizes(x, y):
                assert oracles.majorization_lower_bounds_hold(x, y)


def test_majorization_lower_bounds_randomized():
    rng = random.Random(92)
    found = 0
    while found < 300:
        n = rng.randint(1, 6)
        x = tuple(rng.randint(-4, 4) for _ in range(n))
        shuffle = sorted(range(n), key=lambda _: rng.random())
        y = list(x)
        for _ in range(rng.randint(0, 3)):
            i, j = rng.randrange(n), rng.randrange(n)
            y[i] += 1
            y[j] -= 1
        y = tuple(y[i] for i in shuffle)
        if majorizes(x, y):
            found += 1
            assert oracles.majorization_lower_bounds_hold(x, y)


def test_majorization_implies_weak_interlacing():
    for lam in nonincr(range(-2, 4), 3):
        for mu in product(range(-2, 4), repeat=3):
            if majorizes(lam, mu):
                assert weakly_interlaces(lam, mu[:-1])


def test_norm_sq():
    assert norm_sq((7, 5, 3)) == 83
    assert norm_sq(()) == 0
    assert norm_sq((5, 6, 4)) == 77
    assert norm_sq((-3, 2)) == 13
