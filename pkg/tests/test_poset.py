from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from shapes import FIVE_ROWS, SMALL_BAD, TWO_BLOCKS, ladders

from ladderfiber.errors import LadderError
from ladderfiber.gorenstein import tuple_poset
from ladderfiber.ladder import blocks
from ladderfiber.lattice import leq
from ladderfiber.poset import (
    JoinIrr,
    chain_length,
    components,
    count_maximal_chains,
    expand,
    is_pure,
    ji_leq,
    join_irreducibles,
    join_irreducibles_oracle,
    maximal_chains,
    maximals,
    minimals,
    rank,
    saturated_chains,
    to_dot,
    to_grid,
)

GOLDEN = Path(__file__).parent / "golden" / "two_blocks.dot"


def names(elems):
    return {str(e) for e in elems}


def test_two_blocks_structure():
    P = join_irreducibles(TWO_BLOCKS, 1)
    assert len(P) == 17 and len(P.covers) == 21
    assert names(P.minimal()) == {"a[1,2]", "a[3,5]", "a[5,11]"}
    assert names(P.maximal()) == {"a[1,5]", "a[2,7]", "a[4,11]", "a[5,13]"}
    assert names(minimals(TWO_BLOCKS)) == names(P.minimal())
    assert names(maximals(TWO_BLOCKS)) == names(P.maximal())
    assert P.n_components == 2
    assert components(TWO_BLOCKS, 2)[0] == 3


def test_dot_golden():
    dot = to_dot(join_irreducibles(TWO_BLOCKS, 1))
    assert dot == GOLDEN.read_text()
    assert dot.count("->") == 21 and dot.count("label=") == 17


def test_grid_layout():
    grid = to_grid(SMALL_BAD, 2).splitlines()
    assert len(grid) == 3
    assert grid[0].split() == ["0", "a[1,2]", "a[1,3]", "a[1,4]", "a[1,5]", "0"]
    assert grid[2].split() == ["a[3,2]"]


def test_five_rows_pure():
    P = join_irreducibles(FIVE_ROWS, 1)
    assert (len(P), len(P.covers), P.n_components) == (30, 45, 1)
    pur = is_pure(P)
    assert pur.pure and pur.rank == 6 == rank(P)
    assert count_maximal_chains(P) == len(maximal_chains(P)) == count_maximal_chains(tuple_poset(FIVE_ROWS, 1))


def test_small_bad_not_pure():
    pur = is_pure(join_irreducibles(SMALL_BAD, 1))
    assert not pur.pure
    assert pur.lengths == {2, 3}
    assert {len(ch) - 1 for ch in pur.witness} == {2, 3}


def test_purity_without_enumeration():
    P = join_irreducibles(SMALL_BAD, 1)
    pur = is_pure(P, cap=1)
    assert not pur.enumerated and not pur.pure and pur.lengths == {2, 3}


def test_cross_family_incomparable():
    n = SMALL_BAD.n
    assert not ji_leq(JoinIrr(1, 2), JoinIrr(n + 1, 2), n)
    assert ji_leq(JoinIrr(n + 1, 2), JoinIrr(n + 1, 3), n)


def test_expand_rejects_bad_element():
    with pytest.raises(LadderError):
        expand(JoinIrr(1, 1), SMALL_BAD)


def check_isomorphic(shape, r):
    P = join_irreducibles(shape, r)
    Q = join_irreducibles_oracle(shape, r)
    image = {expand(a, shape, r): a for a in P.elements}
    assert set(image) == set(Q.elements)
    for x, y in combinations(P.elements, 2):
        ex, ey = expand(x, shape, r), expand(y, shape, r)
        assert ji_leq(x, y, shape.n) == leq(ex, ey)
        assert ji_leq(y, x, shape.n) == leq(ey, ex)
    covers = {(expand(P.elements[a], shape, r), expand(P.elements[b], shape, r)) for a, b in P.covers}
    assert covers == {(Q.elements[a], Q.elements[b]) for a, b in Q.covers}


@pytest.mark.parametrize("shape, r", [(TWO_BLOCKS, 1), (TWO_BLOCKS, 2), (SMALL_BAD, 3)])
def test_definition_matches_brute_force(shape, r):
    check_isomorphic(shape, r)


@settings(max_examples=80, deadline=None)
@given(ladders(), st.integers(1, 4))
def test_definition_matches_brute_force_random(shape, r):
    check_isomorphic(shape, r)
    P = join_irreducibles(shape, r)
    assert len(P) == sum(b - a for a, b in shape.intervals) + r - 1
    assert P.n_components == blocks(shape).t + (r >= 2)


@settings(max_examples=60, deadline=None)
@given(ladders(), st.randoms(use_true_random=False))
def test_saturated_chain_lengths(shape, rng):
    P = join_irreducibles(shape, 1)
    pairs = [(x, y) for x in P.elements for y in P.elements if x != y and ji_leq(x, y, shape.n)]
    for lo, hi in rng.sample(pairs, min(10, len(pairs))):
        want = chain_length(hi, lo, shape.n)
        assert want == 2 * (lo.row - hi.row) + hi.col - lo.col
        assert {len(ch) - 1 for ch in saturated_chains(P, lo, hi)} == {want}


def test_rank_of_empty_poset():
    from ladderfiber.ladder import EMPTY_SHAPE

    P = join_irreducibles(EMPTY_SHAPE, 1)
    assert len(P) == 0 and rank(P) == -1 and is_pure(P).pure
