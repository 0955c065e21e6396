"""Acceptance criteria 1-8.

Each criterion prints one ``PASS``/``FAIL`` line with its runtime; run with
``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from shapes import (
    FIVE_ROWS,
    SMALL_BAD,
    TWO_BLOCKS,
    GENERIC_2x3,
    GENERIC_2x4,
    GENERIC_3x5,
    random_instances,
)

from ladderfiber.gorenstein import (
    decide,
    is_gorenstein_L,
    is_gorenstein_M,
    purity_oracle,
)
from ladderfiber.invariants import fiber_dimension, invariants
from ladderfiber.ladder import blocks, gaps
from ladderfiber.lattice import count_lattice, h_vector, leq, multichain_hilbert
from ladderfiber.minors import diagonal_leading_check, fiber_hilbert_direct
from ladderfiber.poset import (
    chain_length,
    expand,
    ji_leq,
    join_irreducibles,
    join_irreducibles_oracle,
    maximals,
    minimals,
    saturated_chains,
    to_dot,
)

GOLDEN = Path(__file__).parent / "golden" / "two_blocks.dot"
RANDOM = random_instances(250, seed=7)

# instances checked by criterion 8, filled in as 1-5 run
SEEN: list[tuple] = []


def names(xs):
    return {str(x) for x in xs}


def criterion_1():
    ok = count_lattice(FIVE_ROWS) == 1769
    ok &= is_gorenstein_L(FIVE_ROWS).verdict and purity_oracle(FIVE_ROWS, 1).pure
    g = gaps(FIVE_ROWS)
    ok &= g.eps(1) == 3 and g.eps(2) == 1 and g.eps(3) == g.eps(4) == 2
    ok &= g.th(1) == g.th(2) == g.th(4) == 1 and g.th(3) == 4
    SEEN.append((FIVE_ROWS, 1))
    return ok, "1769 generators, Gorenstein, gap profile"


def criterion_2():
    ok = count_lattice(SMALL_BAD) == 12 and fiber_dimension(SMALL_BAD, 1) == 7
    rep = decide(SMALL_BAD, 1)
    ok &= not rep.verdict and bool(rep.witnesses)
    pur = purity_oracle(SMALL_BAD, 1)
    ok &= not pur.pure and {2, 3} <= set(pur.lengths)
    ok &= not h_vector(SMALL_BAD, 1).is_symmetric()
    SEEN.append((SMALL_BAD, 1))
    return ok, f"witness {rep.witnesses[0]['detail']}, chain lengths {sorted(pur.lengths)}"


def criterion_3():
    P = join_irreducibles(TWO_BLOCKS, 1)
    ok = len(P) == 17 and P.n_components == 2
    ok &= join_irreducibles(TWO_BLOCKS, 2).n_components == 3
    ok &= names(P.minimal()) == names(minimals(TWO_BLOCKS)) == {"a[1,2]", "a[3,5]", "a[5,11]"}
    ok &= names(P.maximal()) == names(maximals(TWO_BLOCKS)) == {"a[1,5]", "a[2,7]", "a[4,11]", "a[5,13]"}
    ok &= to_dot(P) == GOLDEN.read_text()
    SEEN.extend([(TWO_BLOCKS, 1), (TWO_BLOCKS, 2)])
    return ok, "17 nodes, components 2 and 3, DOT golden"


def criterion_4():
    ok = True
    for shape, m in ((GENERIC_2x4, 4), (GENERIC_3x5, 5)):
        for r in range(2, m + 2):
            v = is_gorenstein_M(shape, r).verdict
            ok &= v == (r == m) == purity_oracle(shape, r).pure
            SEEN.append((shape, r))
    ok &= decide(GENERIC_2x4, 1).verdict and h_vector(GENERIC_2x4, 1).coeffs == (1, 1)
    SEEN.append((GENERIC_2x4, 1))
    return ok, "Gorenstein iff r = m; 2x4 at r = 1 has h = (1,1)"


def _instance_ok(shape, r, rng) -> bool:
    rep = decide(shape, r)
    pure = purity_oracle(shape, r).pure
    hv = h_vector(shape, r)
    ok = rep.verdict == pure == hv.is_symmetric()
    ok &= all(v == rep.verdict for v in rep.criteria.values())
    P = join_irreducibles(shape, r)
    Q = join_irreducibles_oracle(shape, r)
    img = {a: expand(a, shape, r) for a in P.elements}
    ok &= set(img.values()) == set(Q.elements)
    ok &= all(ji_leq(x, y, shape.n) == leq(img[x], img[y]) for x in P.elements for y in P.elements)
    ok &= len(P) == sum(b - a for a, b in shape.intervals) + r - 1
    ok &= P.n_components == blocks(shape).t + (r >= 2)
    pairs = [(lo, hi) for lo, hi in combinations(P.elements, 2) if lo.row <= shape.n and hi.row <= shape.n]
    pairs = [(lo, hi) if ji_leq(lo, hi, shape.n) else (hi, lo) for lo, hi in pairs]
    pairs = [(lo, hi) for lo, hi in pairs if ji_leq(lo, hi, shape.n)]
    for lo, hi in rng.sample(pairs, min(5, len(pairs))):
        want = 2 * (lo.row - hi.row) + hi.col - lo.col
        ok &= chain_length(hi, lo, shape.n) == want
        ok &= {len(ch) - 1 for ch in saturated_chains(P, lo, hi)} == {want}
    inv = invariants(shape, r)
    ok &= hv.degree == inv.reg
    return ok


def criterion_5():
    rng = random.Random(11)
    bad = [(s, r) for s, r in RANDOM if not _instance_ok(s, r, rng)]
    SEEN.extend(RANDOM)
    return not bad, f"{len(RANDOM)} distinct shapes, {len(bad)} disagreements"


def criterion_6():
    shapes = [TWO_BLOCKS, FIVE_ROWS, SMALL_BAD] + sorted({s for s, _ in RANDOM}, key=lambda s: s.intervals)
    failed = [s for s in shapes if not diagonal_leading_check(s).ok]
    return not failed, f"{len(shapes)} shapes, {len(failed)} failures"


def criterion_7():
    got = {}
    for label, shape in (("2x3", GENERIC_2x3), ("2x4", GENERIC_2x4), ("1-5,4-6", SMALL_BAD)):
        direct = [fiber_hilbert_direct(shape, 1, d) for d in (1, 2)]
        comb = multichain_hilbert(shape, 1, 2)[1:]
        got[label] = (direct, comb)
    ok = all(d == c for d, c in got.values())
    ok &= got["2x3"][0] == [3, 6] and got["2x4"][0] == [6, 20]
    return ok, ", ".join(f"{k}: {d[0]}/{d[1]}" for k, (d, _) in got.items())


def criterion_8():
    bad = []
    for shape, r in SEEN:
        inv = invariants(shape, r)
        delta = sum(b - a for a, b in shape.intervals)
        ok = inv.reg == inv.p_size - inv.rank - 1 == h_vector(shape, r).degree
        ok &= inv.dim == inv.p_size + 1 == delta + r
        ok &= inv.a_inv == inv.reg - inv.dim
        if inv.gorenstein:
            ok &= inv.closed_forms == {"reg": inv.reg, "aInv": inv.a_inv}
            if r >= 2:
                ok &= inv.a_inv == -r
        if not ok:
            bad.append((shape, r))
    ex = invariants(FIVE_ROWS, 1)
    ok = not bad and (ex.reg, ex.a_inv) == (23, -8)
    return ok, f"{len(SEEN)} instances, five-row ladder reg {ex.reg} aInv {ex.a_inv}"


CRITERIA = [
    (1, criterion_1, 10),
    (2, criterion_2, 1),
    (3, criterion_3, 1),
    (4, criterion_4, 30),
    (5, criterion_5, 300),
    (6, criterion_6, 60),
    (7, criterion_7, 60),
    (8, criterion_8, None),
]


def evaluate(number, fn, limit):
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    in_time = limit is None or elapsed < limit
    bound = "" if limit is None else f" < {limit} s"
    status = "PASS" if ok and in_time else "FAIL"
    line = f"criterion {number}: {status}  ({elapsed:.2f} s{bound})  {detail}"
    return ok, in_time, line


@pytest.mark.parametrize("number, fn, limit", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, fn, limit, capsys):
    if number == 8 and len(SEEN) < 5:
        # run alone: replay 1-5 to collect their instances
        for _, f, _ in CRITERIA[:5]:
            f()
    ok, in_time, line = evaluate(number, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert in_time, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(a and b for a, b, _ in results) else 1)
