import pytest

from gtpop.errors import ContractViolation
from gtpop.maxarea import max_area_pattern, max_area_step
from gtpop.pattern import area_pair, enumerate_patterns, traparea_pair
from gtpop.seqcore import majorizes, norm_sq
from gtpop.verify import majorized_tuples, nonincr_tuples, suite_maxarea


def test_step_examples():
    assert max_area_step((7, 5, 3), (5, 6, 4)) == (7, 4)
    assert max_area_step((3, 1), (3, 1)) == (3,)
    assert max_area_step((5,), (5,)) == ()


def test_step_postconditions():
    out = max_area_step((7, 5, 3), (5, 6, 4))
    assert sum(out) == 5 + 6
    assert majorizes(out, (5, 6))


def test_pattern_examples():
    pat = max_area_pattern((7, 5, 3), (5, 6, 4))
    assert pat.rows == ((5,), (7, 4), (7, 5, 3))
    assert pat.area == 3

    prefix = max_area_pattern((4, 2, 1), (4, 2, 1))
    assert prefix.rows == ((4,), (4, 2), (4, 2, 1))
    assert prefix.area == 0

    small = max_area_pattern((2, 0), (1, 1))
    assert small.rows == ((1,), (2, 0))
    assert small.area == 1 == (norm_sq((2, 0)) - norm_sq((1, 1))) // 2


def test_rejects_non_majorized_weight():
    with pytest.raises(ContractViolation) as exc:
        max_area_pattern((2, 0), (3, -1))
    assert exc.value.constraint == "majorization"


def test_exhaustive_small_oracle():
    for lam in nonincr_tuples(3, 3):
        by_weight = {}
        for pat in enumerate_patterns(lam):
            by_weight.setdefault(pat.weight, []).append(pat)
        for mu in majorized_tuples(lam):
            built = max_area_pattern(lam, mu)
            group = by_weight[mu]
            assert built in group
            assert 2 * built.area == norm_sq(lam) - norm_sq(mu)
            for other in group:
                if other != built:
                    assert other.area < built.area
                    for t in range(len(lam)):
                        assert majorizes(built.rows[t], other.rows[t])


def test_step_pair_areas_agree_on_output():
    for lam in nonincr_tuples(3, 3):
        for mu in majorized_tuples(lam):
            built = max_area_pattern(lam, mu)
            for j in range(1, built.n):
                hi, lo = built.rows[j], built.rows[j - 1]
                assert traparea_pair(hi, lo) == area_pair(hi, lo)


def test_suite_small():
    report = suite_maxarea(3, 3)
    assert report["ok"], report
