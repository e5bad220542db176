"""Verification suites: invariants checked against brute-force oracles.

Each suite returns a JSON-ready report with one entry per property; a
property carries its name, pass/fail, the number of cases checked, and a
counterexample dump for the first failure.  Randomized suites are
deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

from . import oracles
from .maxarea import _pivot_candidates, _step_at, max_area_pattern
from .partition import (
    BreakResult,
    ColoredPartition,
    Partition,
    box_size_counts,
    break_multi,
    break_multi_inv,
    break_single,
    break_single_inv,
    enumerate_colored,
    enumerate_partitions_of,
)
from .pattern import GTPattern, enumerate_patterns
from .pop import (
    CLEntry,
    CLIndex,
    _cl_bound,
    enumerate_pops,
    from_cl_index,
    generator_pop,
    graded_character,
    rectangle_at,
    to_cl_index,
    top_grade_profile,
)
from .seqcore import interlaces, majorizes, norm_sq
from .stability import (
    approx_overlay_diagnostic,
    complement_pop,
    cp_to_pop,
    embed,
    near_interlace_diagnostic,
    phi,
    proptrap_pair,
    shift,
    shift_seq,
    xi,
    xi_inv,
    xi_np,
    xi_np_inv,
)


class _Check:
    def __init__(self, name: str):
        self.name = name
        self.ok = True
        self.checked = 0
        self.counterexample = None

    def add(self, ok: bool, counterexample=None) -> None:
        self.checked += 1
        if not ok and self.ok:
            self.ok = False
            self.counterexample = counterexample

    def prop(self) -> dict:
        d = {"name": self.name, "ok": self.ok, "checked": self.checked}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


def _report(suite: str, params: dict, checks: Sequence[_Check]) -> dict:
    props = sorted((c.prop() for c in checks), key=lambda p: p["name"])
    return {
        "suite": suite,
        "params": params,
        "ok": all(p["ok"] for p in props),
        "properties": props,
    }


def nonincr_tuples(max_entry: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All non-increasing tuples with entries in [0, max_entry] and lengths
    1..max_len, shortest first, descending lexicographic within a length."""

    def rec(slots: int, cap: int):
        if slots == 0:
            yield ()
            return
        for v in range(cap, -1, -1):
            for rest in rec(slots - 1, v):
                yield (v,) + rest

    for n in range(1, max_len + 1):
        yield from rec(n, max_entry)


def majorized_tuples(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """All integer tuples majorized by ``lam`` (entries necessarily between
    the last and first entries of ``lam``), ascending lexicographic."""
    lam = tuple(lam)
    lo, hi = lam[-1], lam[0]
    n = len(lam)
    total = sum(lam)
    out = []

    def rec(i: int, acc: list[int], rem: int):
        if i == n:
            if rem == 0 and majorizes(lam, acc):
                out.append(tuple(acc))
            return
        rest = n - i - 1
        for v in range(lo, hi + 1):
            r2 = rem - v
            if lo * rest <= r2 <= hi * rest:
                acc.append(v)
                rec(i + 1, acc, r2)
                acc.pop()

    rec(0, [], total)
    return out


def _random_partition(rng: random.Random, max_total: int) -> Partition:
    total = rng.randint(0, max_total)
    parts = []
    remaining = total
    while remaining > 0:
        v = rng.randint(1, remaining)
        parts.append(v)
        remaining -= v
    return Partition(sorted(parts, reverse=True))


def _random_box_partition(rng: random.Random, rows: int, cols: int) -> Partition:
    return Partition(sorted((rng.randint(0, cols) for _ in range(rows)), reverse=True))


def _random_nonincr(rng: random.Random, n: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(sorted((rng.randint(lo, hi) for _ in range(n)), reverse=True))


def _random_majorized(rng: random.Random, lam: Sequence[int]) -> tuple[int, ...]:
    """Weight of a uniformly chosen pattern below ``lam``: always majorized."""
    rows = [tuple(lam)]
    while len(rows[-1]) > 1:
        hi = rows[-1]
        rows.append(tuple(rng.randint(hi[i + 1], hi[i]) for i in range(len(hi) - 1)))
    rows.reverse()
    out = []
    prev = 0
    for row in rows:
        s = sum(row)
        out.append(s - prev)
        prev = s
    return tuple(out)


# ---------------------------------------------------------------------------
# max-area suite


def suite_maxarea(max_entry: int = 3, max_len: int = 3) -> dict:
    in_enum = _Check("constructed_in_enumeration")
    gap = _Check("area_equals_norm_gap_half")
    unique = _Check("unique_strict_maximizer")
    rowdom = _Check("rowwise_majorization")
    pivot = _Check("pivot_tie_break_independent")
    for lam in nonincr_tuples(max_entry, max_len):
        groups: dict[tuple[int, ...], list[GTPattern]] = {}
        for pat in enumerate_patterns(lam):
            groups.setdefault(pat.weight, []).append(pat)
        for mu in majorized_tuples(lam):
            ce = {"lam": lam, "mu": mu}
            built = max_area_pattern(lam, mu)
            group = groups.get(mu, [])
            in_enum.add(any(built.rows == q.rows for q in group), ce)
            gap2 = norm_sq(lam) - norm_sq(mu)
            gap.add(2 * built.area == gap2, ce)
            others = [q for q in group if q.rows != built.rows]
            unique.add(all(q.area < built.area for q in others), ce)
            rowdom.add(
                all(
                    majorizes(built.rows[t], q.rows[t])
                    for q in others
                    for t in range(len(lam))
                ),
                ce,
            )
            cur = lam
            same = True
            for j in range(len(lam), 1, -1):
                head = sum(mu[: j - 1])
                results = {_step_at(cur, head, k) for k in _pivot_candidates(cur, head)}
                same = same and len(results) == 1
                cur = results.pop()
            pivot.add(same and built.rows[0] == cur, ce)
    return _report(
        "maxarea",
        {"max_entry": max_entry, "max_len": max_len},
        [in_enum, gap, unique, rowdom, pivot],
    )


def suite_areas(max_entry: int = 3, max_len: int = 3) -> dict:
    wmaj = _Check("bounding_majorizes_weight")
    pair = _Check("pair_trapezoid_identity")
    pat_id = _Check("pattern_trapezoid_identity")
    dom = _Check("traparea_dominates_area")
    for lam in nonincr_tuples(max_entry, max_len):
        for pat in enumerate_patterns(lam):
            ce = {"rows": pat.rows}
            wmaj.add(majorizes(lam, pat.weight), ce)
            ok_pairs = True
            for j in range(1, pat.n):
                hi, lo = pat.rows[j], pat.rows[j - 1]
                m = len(lo)
                tp = sum(
                    (hi[a] - lo[a]) * (lo[b] - hi[b + 1])
                    for a in range(m)
                    for b in range(a, m)
                )
                rhs = norm_sq(hi) - norm_sq(lo) - (sum(hi) - sum(lo)) ** 2
                ok_pairs = ok_pairs and 2 * tp == rhs
            pair.add(ok_pairs, ce)
            pat_id.add(
                2 * pat.traparea == norm_sq(lam) - norm_sq(pat.weight), ce
            )
            dom.add(pat.traparea >= pat.area, ce)
    return _report(
        "areas",
        {"max_entry": max_entry, "max_len": max_len},
        [wmaj, pair, pat_id, dom],
    )


# ---------------------------------------------------------------------------
# bijection suite


def _random_near_pair(rng: random.Random):
    s = rng.randint(1, 6)
    mid = sorted((rng.randint(-10, 10) for _ in range(max(0, s - 1))), reverse=True)
    eta = (rng.randint(-10, 10),) + tuple(mid) + (rng.randint(-10, 10),)
    if s == 1:
        return eta, (rng.randint(-10, 10),), (_random_partition(rng, 12),)
    e2 = [0] * s
    e2[0] = eta[0] - rng.randint(0, 4)
    e2[s - 1] = eta[s] + rng.randint(0, 4)
    for i in range(2, s):
        e2[i - 1] = rng.randint(eta[i], eta[i - 1])
    pieces = []
    first = sorted(
        (rng.randint(1, 8) for _ in range(rng.randint(0, eta[0] - e2[0]))),
        reverse=True,
    )
    pieces.append(Partition(first))
    for j in range(2, s):
        pieces.append(_random_box_partition(rng, eta[j - 1] - e2[j - 1], e2[j - 1] - eta[j]))
    width = e2[s - 1] - eta[s]
    last = []
    if width > 0:
        last = sorted((rng.randint(1, width) for _ in range(rng.randint(0, 5))), reverse=True)
    pieces.append(Partition(last))
    return eta, tuple(e2), tuple(pieces)


def _random_break_result(rng: random.Random) -> BreakResult:
    t = rng.randint(2, 5)
    a = sorted(rng.randint(0, 6) for _ in range(t - 1))
    b = sorted((rng.randint(0, 6) for _ in range(t - 1)), reverse=True)
    pieces = [
        Partition(
            sorted((rng.randint(1, 8) for _ in range(rng.randint(0, a[0]))), reverse=True)
        )
    ]
    for j in range(2, t):
        pieces.append(_random_box_partition(rng, a[j - 1] - a[j - 2], b[j - 2] - b[j - 1]))
    pieces.append(_random_box_partition(rng, rng.randint(0, 5), b[-1]))
    return BreakResult(tuple(a), tuple(b), tuple(pieces))


def suite_bijection(cases: int = 200, seed: int = 0, exhaustive: int = 8) -> dict:
    rng = random.Random(seed)
    bs_rt = _Check("break_single_roundtrip")
    bs_sz = _Check("break_single_size_identity")
    bm_rt = _Check("break_multi_roundtrip")
    bm_inv = _Check("break_multi_invariants")
    b_img = _Check("break_inverse_image")
    xi_rt = _Check("xi_roundtrip")
    xi_pr = _Check("xi_output_properties")
    xi_img = _Check("xi_inverse_image")
    np_rt = _Check("xi_np_roundtrip")
    np_bk = _Check("xi_np_weight_boxes")

    def check_single(c: int, p: Partition):
        a, b, p1, p2 = break_single(c, p)
        ce = {"c": c, "p": p.parts}
        c2, p_back = break_single_inv(a, b, p1, p2)
        bs_rt.add(c2 == c and p_back == p, ce)
        bs_sz.add(
            p.size == a * b + p1.size + p2.size
            and p1.num_parts <= a
            and p2.largest <= b,
            ce,
        )

    def check_multi(c_seq: tuple[int, ...], p: Partition):
        res = break_multi(c_seq, p)
        ce = {"c_seq": c_seq, "p": p.parts}
        back = break_multi_inv(res)
        bm_rt.add(back == (c_seq, p), ce)
        covered = sum(res.pieces[j].size for j in range(res.t))
        rect_sum = sum(
            (res.a_seq[j] - (res.a_seq[j - 1] if j else 0)) * res.b_seq[j]
            for j in range(res.t - 1)
        )
        fits = res.pieces[0].num_parts <= res.a_seq[0] and res.pieces[-1].largest <= (
            res.b_seq[-1]
        )
        for j in range(2, res.t):
            piece = res.pieces[j - 1]
            fits = fits and piece.num_parts <= res.a_seq[j - 1] - res.a_seq[j - 2]
            fits = fits and piece.largest <= res.b_seq[j - 2] - res.b_seq[j - 1]
        b_sorted = all(
            res.b_seq[i] >= res.b_seq[i + 1] for i in range(len(res.b_seq) - 1)
        )
        bm_inv.add(p.size == covered + rect_sum and fits and b_sorted, ce)

    def check_xi(eta: tuple[int, ...], mu: int, p: Partition):
        s = len(eta) - 1
        eta2, pieces = xi(eta, mu, p)
        ce = {"eta": eta, "mu": mu, "p": p.parts}
        ok = near_interlace_diagnostic(eta, eta2) is None
        ok = ok and approx_overlay_diagnostic(eta, eta2, pieces) is None
        ok = ok and sum(eta) - sum(eta2) == mu
        ok = ok and proptrap_pair(eta, eta2) + sum(q.size for q in pieces) == p.size
        if ok and s >= 2:
            c = tuple(mu - eta[j] for j in range(1, s))
            res = break_multi(c, p)
            for j in range(0, s):
                a_j = sum(eta[i] - eta2[i] for i in range(j))
                ok = ok and a_j == (res.a_seq[j - 1] if j else 0)
            for j in range(1, s):
                b_j = sum(eta2[i] - eta[i + 1] for i in range(j, s))
                ok = ok and b_j == res.b_seq[j - 1]
        xi_pr.add(ok, ce)
        back = xi_inv(eta, eta2, pieces)
        xi_rt.add(back == (mu, p), ce)

    # exhaustive small sweep
    small_partitions = [
        p for size in range(exhaustive + 1) for p in enumerate_partitions_of(size)
    ]
    for p in small_partitions:
        for c in range(-5, exhaustive + 2):
            check_single(c, p)
        for c1 in range(-2, 4):
            for c2 in range(c1, 4):
                check_multi((c1, c2), p)
        for eta in [(3, 1), (3, 2, 0), (2, 1, 0), (4, 2, 2, 1)]:
            for mu in range(-2, 5):
                check_xi(eta, mu, p)
        for bounding, mus in [((3, 1, 0), (2, 1)), ((2, 2), (3,))]:
            rb = len(mus)
            variants = {(p,) + (Partition(),) * (rb - 1), (Partition(),) * (rb - 1) + (p,)}
            for ps in sorted(variants, key=lambda v: [q.parts for q in v]):
                aonp = xi_np(bounding, mus, ps)
                np_rt.add(
                    xi_np_inv(aonp) == (mus, ps),
                    {"bounding": bounding, "mus": mus, "p": p.parts},
                )

    # randomized sweep
    for _ in range(cases):
        p = _random_partition(rng, 30)
        check_single(rng.randint(-10, 10), p)
        t = rng.randint(2, 6)
        c_seq = tuple(sorted(rng.randint(-10, 10) for _ in range(t - 1)))
        check_multi(c_seq, _random_partition(rng, 30))

        res = _random_break_result(rng)
        c_back, p_back = break_multi_inv(res)
        b_img.add(
            break_multi(c_back, p_back) == res,
            {"a": res.a_seq, "b": res.b_seq, "pieces": [q.parts for q in res.pieces]},
        )

        s = rng.randint(1, 6)
        mid = sorted((rng.randint(-10, 10) for _ in range(max(0, s - 1))), reverse=True)
        eta = (rng.randint(-10, 10),) + tuple(mid) + (rng.randint(-10, 10),)
        check_xi(eta, rng.randint(-10, 10), _random_partition(rng, 30))

        eta, eta2, pieces = _random_near_pair(rng)
        mu, p_star = xi_inv(eta, eta2, pieces)
        xi_img.add(
            xi(eta, mu, p_star) == (eta2, pieces),
            {"eta": eta, "eta2": eta2, "pieces": [q.parts for q in pieces]},
        )

        r = rng.randint(1, 3)
        mid = sorted((rng.randint(-6, 6) for _ in range(max(0, r - 1))), reverse=True)
        bounding = (rng.randint(-6, 6),) + tuple(mid) + (rng.randint(-6, 6),)
        mus = tuple(rng.randint(-6, 6) for _ in range(r))
        ps = tuple(_random_partition(rng, 12) for _ in range(r))
        aonp = xi_np(bounding, mus, ps)
        ce = {"bounding": bounding, "mus": mus, "ps": [q.parts for q in ps]}
        np_rt.add(xi_np_inv(aonp) == (mus, ps), ce)
        w = aonp.weight
        np_bk.add(
            w[1:] == mus
            and w[0] == sum(bounding) - sum(mus)
            and aonp.proptrap + aonp.boxes == sum(q.size for q in ps),
            ce,
        )

    return _report(
        "bijection",
        {"cases": cases, "seed": seed, "exhaustive": exhaustive},
        [bs_rt, bs_sz, bm_rt, bm_inv, b_img, xi_rt, xi_pr, xi_img, np_rt, np_bk],
    )


# ---------------------------------------------------------------------------
# counting suite


def _poly_mul_trunc(p: Sequence[int], q: Sequence[int], cap: int) -> tuple[int, ...]:
    out = [0] * min(len(p) + len(q) - 1, cap + 1)
    for i, a in enumerate(p):
        if a == 0 or i > cap:
            continue
        for j, b in enumerate(q):
            if i + j > cap:
                break
            out[i + j] += a * b
    return tuple(out)


def count_boxcon_pops(bounding: Sequence[int], weight: Sequence[int], d: int) -> int:
    """Number of POPs with the given bounding row and weight whose proper
    trapezoidal area plus boxes equals d, by pattern enumeration and
    box-polynomial convolution."""
    total = 0
    for pat in enumerate_patterns(bounding, weight):
        pt = pat.traparea - pat.area
        if pt > d:
            continue
        target = d - pt
        poly: tuple[int, ...] = (1,)
        for j in range(1, pat.n):
            for i in range(1, j + 1):
                rect = rectangle_at(pat.rows, j, i)
                poly = _poly_mul_trunc(poly, box_size_counts(rect.rows, rect.cols), target)
        if target < len(poly):
            total += poly[target]
    return total


def default_lams(r: int) -> list[tuple[int, ...]]:
    if r == 1:
        return [(0, 0), (2, 0), (3, 1)]
    if r == 2:
        return [(0, 0, 0), (2, 1, 0)]
    if r == 3:
        return [(1, 1, 0, 0), (2, 1, 1, 0)]
    raise ValueError(f"no default grid for r={r}")


def suite_counting_bijection(r: int, d: int, k: int | None = None) -> dict:
    """Colored partitions of d versus POPs at shift level k (default d)."""
    if k is None:
        k = d
    valid = _Check("bijection_images_valid")
    distinct = _Check("bijection_images_distinct")
    count_eq = _Check("pop_count_matches_colored_count")
    set_eq = _Check("boxcon_set_equals_images")
    expected = oracles.colored_count(r, d)
    cps = list(enumerate_colored(r, d))
    for lam in default_lams(r):
        shifted = shift_seq(k, lam)
        for mu in majorized_tuples(lam):
            target_weight = tuple(v + k for v in mu)
            ce = {"lam": lam, "mu": mu, "d": d, "k": k}
            images = []
            all_valid = True
            for cp in cps:
                pop = cp_to_pop(lam, mu[1:], k, cp)
                pt = pop.pattern.traparea - pop.pattern.area
                all_valid = all_valid and (
                    pop.pattern.bounding == shifted
                    and pop.pattern.weight == target_weight
                    and pt + pop.boxes == d
                )
                images.append(pop)
            valid.add(all_valid, ce)
            distinct.add(len(set(images)) == len(cps), ce)
            count_eq.add(
                count_boxcon_pops(shifted, target_weight, d) == expected, ce
            )
            if r <= 2 and k <= 4 and sum(shifted) <= 14:
                full = {
                    pop
                    for pop in enumerate_pops(shifted, weight=target_weight)
                    if (pop.pattern.traparea - pop.pattern.area) + pop.boxes == d
                }
                set_eq.add(full == set(images), ce)
    return _report(
        "counting_bijection",
        {"r": r, "d": d, "k": k},
        [valid, distinct, count_eq, set_eq],
    )


def suite_sl2_count(max_m: int = 12) -> dict:
    count = _Check("sl2_pop_count_is_binomial_sum")
    for m in range(max_m + 1):
        total = sum(1 for _ in enumerate_pops((m, 0)))
        expected = oracles.sl2_pop_count(m)
        count.add(total == expected == 2**m, {"m": m, "total": total})
    return _report("sl2_count", {"max_m": max_m}, [count])


def suite_topgrade(max_entry: int = 3, max_len: int = 3) -> dict:
    top_one = _Check("top_coefficient_is_one")
    top_gap = _Check("top_grade_matches_norm_gap")
    prof = _Check("profile_matches_character")
    for lam in nonincr_tuples(max_entry, max_len):
        char = graded_character(lam)
        for w, coeffs in char.items():
            ce = {"lam": lam, "w": w}
            top_one.add(coeffs[-1] == 1, ce)
            top_gap.add(2 * (len(coeffs) - 1) == norm_sq(lam) - norm_sq(w), ce)
            profile = top_grade_profile(lam, w)
            prof.add(
                profile.present
                and profile.max_boxes == len(coeffs) - 1
                and profile.count == coeffs[-1]
                and profile.consistent,
                ce,
            )
    return _report(
        "topgrade", {"max_entry": max_entry, "max_len": max_len}, [top_one, top_gap, prof]
    )


def suite_counting(
    r: int = 2,
    d: int = 3,
    k: int | None = None,
    max_m: int = 10,
    tg_entry: int = 2,
    tg_len: int = 3,
) -> dict:
    sub = [
        suite_counting_bijection(r, d, k),
        suite_sl2_count(max_m),
        suite_topgrade(tg_entry, tg_len),
    ]
    props = [p for rep in sub for p in rep["properties"]]
    return {
        "suite": "counting",
        "params": {"r": r, "d": d, "k": k if k is not None else d, "max_m": max_m,
                   "tg_entry": tg_entry, "tg_len": tg_len},
        "ok": all(p["ok"] for p in props),
        "properties": sorted(props, key=lambda p: p["name"]),
    }


# ---------------------------------------------------------------------------
# stability suite


def suite_compat(r: int, d: int, k: int, js: Sequence[int] = (0, 1, 2)) -> dict:
    compat = _Check("shift_phi_compatibility")
    cps = list(enumerate_colored(r, d))
    for lam in default_lams(r):
        shifted_lam = shift_seq(k, lam)
        for mu in majorized_tuples(lam):
            mus = mu[1:]
            mus_k = tuple(v + k for v in mus)
            for cp in cps:
                base = phi(lam, mus, cp)
                moved = phi(shifted_lam, mus_k, cp)
                ok = all(shift(j + k, base) == shift(j, moved) for j in js)
                compat.add(ok, {"lam": lam, "mu": mu, "d": d, "k": k})
    return _report("compat", {"r": r, "d": d, "k": k, "js": tuple(js)}, [compat])


def suite_embedding(
    boundings: Sequence[Sequence[int]] = ((3, 1, 0), (2, 2, 0)),
    js: Sequence[int] = (0, 1, 2),
) -> dict:
    invol = _Check("complement_involution")
    boxmap = _Check("complement_box_count")
    emb_depth = _Check("embed_preserves_depth")
    emb_weight = _Check("embed_shifts_weight")
    emb_add = _Check("embed_composes_additively")
    emb_gen = _Check("embed_generator_is_generator")
    for bounding in boundings:
        bounding = tuple(bounding)
        pops = list(enumerate_pops(bounding))
        for pop in pops:
            ce = {"bounding": bounding, "rows": pop.pattern.rows}
            comp = complement_pop(pop)
            invol.add(complement_pop(comp) == pop, ce)
            boxmap.add(comp.boxes == pop.pattern.area - pop.boxes, ce)
            for j in js:
                img = embed(pop, j)
                emb_depth.add(img.depth == pop.depth, ce)
                emb_weight.add(
                    img.pattern.weight
                    == tuple(v + j for v in pop.pattern.weight),
                    ce,
                )
                for j2 in js:
                    emb_add.add(embed(img, j2) == embed(pop, j + j2), ce)
        gen = generator_pop(bounding)
        for j in js:
            img = embed(gen, j)
            target_bounding = shift_seq(j, bounding)
            target_weight = tuple(v + j for v in bounding)
            depth0 = [
                p
                for p in enumerate_pops(target_bounding, weight=target_weight, depth=0)
            ]
            emb_gen.add(
                len(depth0) == 1 and depth0[0] == img,
                {"bounding": bounding, "j": j},
            )
    return _report(
        "embedding",
        {"boundings": tuple(tuple(b) for b in boundings), "js": tuple(js)},
        [invol, boxmap, emb_depth, emb_weight, emb_add, emb_gen],
    )


def suite_shift_properties(cases: int = 100, seed: int = 0) -> dict:
    """Randomized checks of the shift commutation of xi and of the
    interlacing threshold for shifted nearly interlacing pairs."""
    rng = random.Random(seed)
    commute = _Check("xi_shift_commutation")
    threshold = _Check("shift_interlace_threshold")
    to_pop_ok = _Check("aonp_shift_to_pop")
    from .stability import proptrap_pair

    for _ in range(cases):
        s = rng.randint(1, 5)
        mid = sorted((rng.randint(-6, 6) for _ in range(max(0, s - 1))), reverse=True)
        eta = (rng.randint(-6, 6),) + tuple(mid) + (rng.randint(-6, 6),)
        mu = rng.randint(-6, 6)
        p = _random_partition(rng, 15)
        k = rng.randint(0, 8)
        eta2, pieces = xi(eta, mu, p)
        eta2_k, pieces_k = xi(shift_seq(k, eta), mu + k, p)
        commute.add(
            eta2_k == shift_seq(k, eta2) and pieces_k == pieces,
            {"eta": eta, "mu": mu, "p": p.parts, "k": k},
        )

        lam = _random_nonincr(rng, s + 1, -5, 5)
        full_mu = _random_majorized(rng, lam)
        eta2, pieces = xi(lam, full_mu[-1], _random_partition(rng, 12))
        k0 = (
            proptrap_pair(lam, eta2)
            + pieces[0].size
            + pieces[-1].size
        )
        ok = True
        for k in (k0, k0 + 3):
            hi = shift_seq(k, lam)
            lo = shift_seq(k, eta2)
            ok = ok and interlaces(lo, hi)
            ok = ok and all(
                pieces[j - 1].num_parts <= hi[j - 1] - lo[j - 1]
                and pieces[j - 1].largest <= lo[j - 1] - hi[j]
                for j in range(1, s + 1)
            )
            ok = ok and majorizes(lo, tuple(v + k for v in full_mu[:-1]))
        threshold.add(ok, {"lam": lam, "mu": full_mu, "pieces": [q.parts for q in pieces]})

        r = rng.randint(1, 3)
        lam = _random_nonincr(rng, r + 1, -4, 4)
        full_mu = _random_majorized(rng, lam)
        cp = ColoredPartition(tuple(_random_partition(rng, 6) for _ in range(r)))
        aonp = phi(lam, full_mu[1:], cp)
        k0 = aonp.proptrap + sum(
            aonp.overlay[j][0].size + aonp.overlay[j][j].size for j in range(r)
        )
        try:
            shift(k0, aonp).to_pop()
            ok = True
        except Exception:
            ok = False
        to_pop_ok.add(ok, {"lam": lam, "mu": full_mu, "cp": [q.parts for q in cp.components]})

    return _report("shift_properties", {"cases": cases, "seed": seed}, [commute, threshold, to_pop_ok])


def suite_stability(
    r: int = 2,
    d: int = 3,
    k: int | None = None,
    cases: int = 100,
    seed: int = 0,
) -> dict:
    if k is None:
        k = d
    sub = [
        suite_compat(r, d, k),
        suite_shift_properties(cases, seed),
        suite_embedding(),
    ]
    props = [p for rep in sub for p in rep["properties"]]
    return {
        "suite": "stability",
        "params": {"r": r, "d": d, "k": k, "cases": cases, "seed": seed},
        "ok": all(p["ok"] for p in props),
        "properties": sorted(props, key=lambda p: p["name"]),
    }


# ---------------------------------------------------------------------------
# index-bijection suite


def suite_clindex(bounding: Sequence[int] = (3, 1, 0)) -> dict:
    bounding = tuple(int(v) for v in bounding)
    roundtrip = _Check("index_roundtrip")
    bound_ok = _Check("largest_part_bound")
    distinct = _Check("indices_distinct")
    zero_gen = _Check("zero_index_is_generator")
    seen = set()
    count = 0
    for pop in enumerate_pops(bounding):
        count += 1
        idx = to_cl_index(pop)
        seen.add(idx)
        ce = {"bounding": bounding, "rows": pop.pattern.rows}
        ok = True
        for j in range(1, idx.r + 1):
            for i in range(1, j + 1):
                ell, s = idx.entries[j - 1][i - 1]
                if ell > 0 and s[-1] > _cl_bound(bounding, idx.entries, i, j):
                    ok = False
        bound_ok.add(ok, ce)
        roundtrip.add(from_cl_index(bounding, idx) == pop, ce)
    distinct.add(len(seen) == count, {"bounding": bounding})
    r = len(bounding) - 1
    zero = CLIndex(
        tuple(tuple(CLEntry(0, ()) for _ in range(j)) for j in range(1, r + 1))
    )
    zero_gen.add(
        from_cl_index(bounding, zero) == generator_pop(bounding),
        {"bounding": bounding},
    )
    return _report(
        "clindex", {"bounding": bounding}, [roundtrip, bound_ok, distinct, zero_gen]
    )


SUITES = {
    "maxarea": suite_maxarea,
    "areas": suite_areas,
    "bijection": suite_bijection,
    "counting": suite_counting,
    "stability": suite_stability,
    "clindex": suite_clindex,
}
