import random

import pytest
from hypothesis import given, strategies as st

from gtpop.errors import ContractViolation
from gtpop.partition import ColoredPartition, Partition, enumerate_colored
from gtpop.pattern import GTPattern, enumerate_patterns
from gtpop.pop import POP, empty_overlay, enumerate_pops, full_overlay, generator_pop
from gtpop.stability import (
    AONP,
    NearPattern,
    complement_pop,
    cp_to_pop,
    embed,
    nearly_interlaces,
    phi,
    proptrap_pair,
    shift,
    shift_seq,
    stable_range,
    stable_range_report,
    theta_tuple,
    xi,
    xi_inv,
    xi_np,
    xi_np_inv,
)

P = Partition


def test_nearly_interlaces():
    assert nearly_interlaces((3, 2, 0), (2, 1))
    assert nearly_interlaces((0, 7), (12,))  # s = 1 imposes nothing
    assert not nearly_interlaces((3, 2, 0), (4, 1))
    assert not nearly_interlaces((3, 2, 0), (2, -1))
    # last lower entry may exceed its left neighbour
    assert nearly_interlaces((0, 1, 0, 7), (0, 1, 7))


def test_proptrap_pair():
    assert proptrap_pair((3, 2, 0), (2, 1)) == 1
    assert proptrap_pair((5, -2), (9,)) == 0


def test_proptrap_of_pattern_is_traparea_minus_area():
    for pat in enumerate_patterns((3, 1, 0)):
        near = NearPattern(pat.rows)
        assert near.proptrap == pat.traparea - pat.area
        assert near.weight == pat.weight


def test_xi_examples():
    assert xi((3, 1), 2, P((2, 1))) == ((2,), (P((2, 1)),))
    assert xi((3, 2, 0), 2, P((2, 1))) == ((2, 1), (P((1,)), P((1,))))
    assert xi((2, 1, 0), 1, P()) == ((2, 0), (P(), P()))


def test_xi_inv_examples():
    assert xi_inv((3, 2, 0), (2, 1), (P((1,)), P((1,)))) == (2, P((2, 1)))
    assert xi_inv((3, 1), (2,), (P((2, 1)),)) == (2, P((2, 1)))


def test_xi_inv_rejects_bad_input():
    with pytest.raises(ContractViolation):
        xi_inv((3, 2, 0), (4, 1), (P(), P()))
    with pytest.raises(ContractViolation):
        xi_inv((3, 2, 0), (2, 1), (P((1, 1)), P((1,))))


@st.composite
def xi_inputs(draw):
    s = draw(st.integers(1, 5))
    mid = sorted(
        draw(st.lists(st.integers(-8, 8), min_size=max(0, s - 1), max_size=max(0, s - 1))),
        reverse=True,
    )
    eta = (draw(st.integers(-8, 8)),) + tuple(mid) + (draw(st.integers(-8, 8)),)
    mu = draw(st.integers(-8, 8))
    parts = draw(st.lists(st.integers(1, 9), max_size=7))
    return eta, mu, P(sorted(parts, reverse=True))


@given(xi_inputs())
def test_xi_roundtrip(data):
    eta, mu, p = data
    eta2, pieces = xi(eta, mu, p)
    assert sum(eta) - sum(eta2) == mu
    assert proptrap_pair(eta, eta2) + sum(q.size for q in pieces) == p.size
    assert xi_inv(eta, eta2, pieces) == (mu, p)


def test_xi_np_examples():
    a = xi_np((3, 1), (2,), (P((2, 1)),))
    assert a.rows == ((2,), (3, 1))
    assert a.overlay == ((P((2, 1)),),)
    assert a.weight == (2, 2)

    b = xi_np((0, 0), (0,), (P((2,)),))
    assert b.rows == ((0,), (0, 0))
    assert b.overlay == ((P((2,)),),)


def test_xi_np_roundtrip_random():
    rng = random.Random(5)
    for _ in range(150):
        r = rng.randint(1, 3)
        mid = sorted((rng.randint(-5, 5) for _ in range(max(0, r - 1))), reverse=True)
        bounding = (rng.randint(-5, 5),) + tuple(mid) + (rng.randint(-5, 5),)
        mus = tuple(rng.randint(-5, 5) for _ in range(r))
        ps = tuple(
            P(sorted((rng.randint(1, 6) for _ in range(rng.randint(0, 4))), reverse=True))
            for _ in range(r)
        )
        aonp = xi_np(bounding, mus, ps)
        assert xi_np_inv(aonp) == (mus, ps)
        assert aonp.proptrap + aonp.boxes == sum(q.size for q in ps)
        assert aonp.weight == (sum(bounding) - sum(mus),) + mus


def test_shift_seq():
    assert shift_seq(1, (7, 5, 3)) == (9, 6, 3)
    assert shift_seq(0, (7, 5, 3)) == (7, 5, 3)
    assert shift_seq(2, (5,)) == (7,)
    assert shift_seq(3, (1, 0)) == (7, 0)


def test_shift_preserves_proptrap_and_moves_weight():
    a = xi_np((4, 2, 1), (3, 2), (P((2,)), P((1, 1))))
    for k in (0, 1, 4):
        moved = shift(k, a)
        assert moved.proptrap == a.proptrap
        assert moved.overlay == a.overlay
        assert moved.weight == tuple(v + k for v in a.weight)


def test_xi_shift_commutation():
    rng = random.Random(11)
    for _ in range(100):
        s = rng.randint(1, 4)
        mid = sorted((rng.randint(-5, 5) for _ in range(max(0, s - 1))), reverse=True)
        eta = (rng.randint(-5, 5),) + tuple(mid) + (rng.randint(-5, 5),)
        mu = rng.randint(-5, 5)
        parts = sorted((rng.randint(1, 5) for _ in range(rng.randint(0, 4))), reverse=True)
        p = P(parts)
        k = rng.randint(0, 6)
        eta2, pieces = xi(eta, mu, p)
        assert xi(shift_seq(k, eta), mu + k, p) == (shift_seq(k, eta2), pieces)


def test_phi_image_counts():
    lam, mus = (0, 0, 0), (0, 0)
    images = [phi(lam, mus, cp) for cp in enumerate_colored(2, 2)]
    assert len(images) == 5
    assert len(set(images)) == 5
    for a in images:
        assert a.rows[-1] == lam
        assert a.weight == (0, 0, 0)
        assert a.proptrap + a.boxes == 2


def test_phi_empty_colored_partition():
    a = phi((2, 1, 0), (1, 0), ColoredPartition((P(), P())))
    assert a.proptrap + a.boxes == 0


def test_phi_requires_majorization():
    with pytest.raises(ContractViolation) as exc:
        phi((1, 0), (2,), ColoredPartition((P(),),))
    assert exc.value.constraint == "majorization"


def test_cp_to_pop_examples():
    pop = cp_to_pop((0, 0), (0,), 2, ColoredPartition((P((2,)),)))
    assert pop.pattern.rows == ((2,), (4, 0))
    assert pop.overlay == ((P((2,)),),)
    assert pop.pattern.weight == (2, 2)

    pop2 = cp_to_pop((0, 0), (0,), 2, ColoredPartition((P((1, 1)),)))
    assert pop2.pattern.rows == ((2,), (4, 0))
    assert pop2.overlay == ((P((1, 1)),),)

    pop3 = cp_to_pop((3, 1), (2,), 5, ColoredPartition((P(),),))
    assert pop3.boxes == 0
    assert pop3.pattern.weight == (2 + 5, 2 + 5)


def test_cp_to_pop_rejects_small_shift():
    with pytest.raises(ContractViolation) as exc:
        cp_to_pop((0, 0), (0,), 1, ColoredPartition((P((2,)),)))
    assert exc.value.constraint == "stable_shift"


def test_complement_pop():
    pat = GTPattern([[5], [7, 4], [7, 5, 3]])
    full = POP(pat, full_overlay(pat))
    empty = POP(pat, empty_overlay(pat))
    assert complement_pop(full) == empty
    assert complement_pop(empty) == full
    for pop in enumerate_pops((3, 1, 0)):
        comp = complement_pop(pop)
        assert complement_pop(comp) == pop
        assert comp.boxes == pop.pattern.area - pop.boxes


def test_embed_properties():
    for pop in enumerate_pops((2, 2, 0)):
        assert embed(pop, 0) == pop
        img = embed(pop, 2)
        assert img.depth == pop.depth
        assert img.pattern.weight == tuple(v + 2 for v in pop.pattern.weight)
        assert embed(embed(pop, 1), 2) == embed(pop, 3)


def test_embed_generator():
    gen = generator_pop((3, 1, 0))
    img = embed(gen, 2)
    target_bounding = shift_seq(2, (3, 1, 0))
    depth0 = list(enumerate_pops(target_bounding, weight=(5, 3, 2), depth=0))
    assert depth0 == [img]


def test_theta_tuple():
    assert theta_tuple(2) == (2, 0)
    assert theta_tuple(4) == (2, 1, 1, 0)
    with pytest.raises(ContractViolation):
        theta_tuple(1)


def test_stable_range_examples():
    pop = cp_to_pop((0, 0), (0,), 2, ColoredPartition((P((2,)),)))
    report = stable_range((0, 0), 2, pop)
    assert (report.ell, report.depth, report.stable) == (0, 2, True)

    gen = generator_pop((3, 1, 0))
    for k in range(4):
        img = embed(gen, k)
        rep = stable_range((3, 1, 0), k, img)
        assert rep.depth == 0 and rep.stable

    arithmetic = stable_range_report((0, 0), 1, (1, 1), 2)
    assert (arithmetic.ell, arithmetic.stable) == (0, False)


def test_stable_range_rejects_wrong_bounding():
    pop = generator_pop((3, 1, 0))
    with pytest.raises(ContractViolation) as exc:
        stable_range((3, 1, 0), 1, pop)
    assert exc.value.constraint == "bounding"


def test_compat_equations_small():
    lam = (2, 1, 0)
    for mu in [(2, 1, 0), (1, 1, 1)]:
        mus = mu[1:]
        for cp in enumerate_colored(2, 2):
            base = phi(lam, mus, cp)
            for k in (0, 1, 2):
                moved = phi(shift_seq(k, lam), tuple(v + k for v in mus), cp)
                for j in (0, 1, 2):
                    assert shift(j + k, base) == shift(j, moved)
                    if j + k >= 2:
                        lhs = complement_pop(shift(j + k, base).to_pop())
                        rhs = complement_pop(shift(j, moved).to_pop())
                        assert lhs == rhs


def test_aonp_as_pop_roundtrip():
    pop = generator_pop((2, 1, 0))
    aonp = AONP.from_pop(pop)
    assert aonp.to_pop() == pop
