import pytest

from gtpop.errors import ContractViolation
from gtpop.pattern import (
    GTPattern,
    area_pair,
    diagnose,
    enumerate_patterns,
    traparea_pair,
)
from gtpop.seqcore import norm_sq

PATEX = GTPattern([[5], [7, 4], [7, 5, 3]])


def test_weight_examples():
    assert PATEX.weight == (5, 6, 4)
    assert GTPattern([[5]]).weight == (5,)
    assert GTPattern([[3], [3, 0], [3, 0, 0]]).weight == (3, 0, 0)


def test_weight_sums_to_bounding_sum():
    assert sum(PATEX.weight) == sum(PATEX.bounding)


def test_pair_areas():
    assert area_pair((7, 5, 3), (7, 4)) == 1
    assert traparea_pair((7, 5, 3), (7, 4)) == 1
    assert area_pair((7, 4), (5,)) == 2
    assert traparea_pair((7, 4), (5,)) == 2
    assert area_pair((5,), ()) == 0
    assert traparea_pair((5,), ()) == 0


def test_pair_areas_require_interlacing():
    with pytest.raises(ContractViolation):
        area_pair((2, 1), (3,))


def test_pattern_areas():
    assert PATEX.area == 3
    assert PATEX.traparea == 3
    assert PATEX.traparea == (norm_sq((7, 5, 3)) - norm_sq((5, 6, 4))) // 2
    assert GTPattern([[9]]).area == 0
    assert GTPattern([[9]]).traparea == 0
    assert GTPattern([[3], [3, 0], [3, 0, 0]]).area == 0


def test_validate_diagnostics():
    assert diagnose(((5,), (7, 4), (7, 5, 3))) is None
    assert diagnose(((6,), (7, 4), (7, 5, 3))) is None
    assert diagnose(((8,), (7, 4), (7, 5, 3))) == "row 1 entry 1 exceeds row 2 entry 1"
    assert diagnose(((3,), (7, 4), (7, 5, 3))) == "row 2 entry 2 exceeds row 1 entry 1"
    assert diagnose(((5,), (7, 4, 0), (7, 5, 3))) == "row 2 has length 3; expected 2"
    assert diagnose(((5,), (4, 7))) == "row 2 is not non-increasing"


def test_constructor_rejects_invalid_rows():
    with pytest.raises(ContractViolation) as exc:
        GTPattern([[8], [7, 4], [7, 5, 3]])
    assert exc.value.constraint == "pattern"


def test_enumerate_patterns_counts():
    pats = list(enumerate_patterns((2, 0)))
    assert len(pats) == 3
    assert [p.rows[0] for p in pats] == [(2,), (1,), (0,)]
    assert len(list(enumerate_patterns((7,)))) == 1


def test_enumerate_patterns_weight_filter():
    pats = list(enumerate_patterns((7, 5, 3), weight=(5, 6, 4)))
    assert PATEX in pats
    for p in pats:
        assert p.weight == (5, 6, 4)
    everything = [p for p in enumerate_patterns((7, 5, 3)) if p.weight == (5, 6, 4)]
    assert pats == everything


def test_enumerate_patterns_weight_sum_mismatch_is_empty():
    assert list(enumerate_patterns((2, 0), weight=(2, 1))) == []


def test_enumerate_patterns_requires_non_increasing():
    with pytest.raises(ContractViolation):
        list(enumerate_patterns((1, 2)))


def test_enumeration_is_deterministic():
    a = [p.rows for p in enumerate_patterns((3, 1, 0))]
    b = [p.rows for p in enumerate_patterns((3, 1, 0))]
    assert a == b
    assert len(set(a)) == len(a)
