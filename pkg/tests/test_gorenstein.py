import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from shapes import FIVE_ROWS, SMALL_BAD, TWO_BLOCKS, GENERIC_2x4, GENERIC_3x5, ladders

import ladderfiber.gorenstein as g
from ladderfiber.errors import LadderError, OracleDisagreement
from ladderfiber.gorenstein import (
    BLOCK,
    CONNECTED,
    LOCAL,
    MODULE,
    ORACLES,
    check_gorenstein,
    decide,
    hvector_oracle,
    is_gorenstein_connected,
    is_gorenstein_L,
    is_gorenstein_local,
    is_gorenstein_M,
    purity_oracle,
    required_r,
)
from ladderfiber.ladder import blocks


def test_five_rows():
    rep = is_gorenstein_L(FIVE_ROWS)
    assert rep.verdict and rep.method == BLOCK and rep.witnesses == []
    assert is_gorenstein_connected(FIVE_ROWS).verdict
    assert is_gorenstein_local(FIVE_ROWS).verdict
    assert purity_oracle(FIVE_ROWS, 1).pure


def test_five_rows_modules():
    assert required_r(FIVE_ROWS) == [8]
    verdicts = {r: is_gorenstein_M(FIVE_ROWS, r).verdict for r in range(2, 11)}
    assert [r for r, v in verdicts.items() if v] == [8]
    for r in (7, 8, 9):
        assert purity_oracle(FIVE_ROWS, r).pure == verdicts[r]


def test_small_bad_witness():
    rep = decide(SMALL_BAD, 1)
    assert not rep.verdict
    assert rep.witnesses[0]["pair"] == [1, 2]
    assert rep.witnesses[0]["condition"] == "a"
    assert rep.criteria == {CONNECTED: False, LOCAL: False}


@pytest.mark.parametrize("shape, m", [(GENERIC_2x4, 4), (GENERIC_3x5, 5)])
def test_generic_ladders(shape, m):
    for r in range(2, m + 2):
        rep = is_gorenstein_M(shape, r)
        assert rep.method == MODULE
        assert rep.verdict == (r == m) == purity_oracle(shape, r).pure


def test_generic_2x4_at_r_1_is_a_quadric():
    assert decide(GENERIC_2x4, 1).verdict
    assert hvector_oracle(GENERIC_2x4, 1)


def test_connected_forms_need_one_block():
    assert blocks(TWO_BLOCKS).t == 2
    with pytest.raises(LadderError):
        is_gorenstein_connected(TWO_BLOCKS)
    with pytest.raises(LadderError):
        is_gorenstein_local(TWO_BLOCKS)


def test_module_form_at_one_copy_uses_ideal_form():
    rep = is_gorenstein_M(GENERIC_2x4, 1)
    assert rep.verdict and rep.method == BLOCK
    with pytest.raises(LadderError):
        is_gorenstein_M(SMALL_BAD, 0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_two_blocks_all_oracles(r):
    rep = check_gorenstein(TWO_BLOCKS, r, oracles=("purity", "hvector", "joinirr"))
    assert rep.consistent
    assert rep.oracles["purity"] == rep.oracles["hvector"] == rep.verdict
    assert rep.oracles["joinirr"]


def test_all_oracles_on_small_shape():
    rep = check_gorenstein(SMALL_BAD, 1, oracles=ORACLES)
    assert rep.consistent and not rep.verdict
    assert rep.oracle_witnesses["hvector"] == [1, 5, 3]
    assert rep.oracle_witnesses["direct-hilbert"]["direct"] == [12, 66]
    d = rep.to_dict()
    assert d["fRegular"] is False and d["consistent"] is True


def test_disagreement_raises(monkeypatch):
    real = g.decide

    def lying(shape, r=1):
        rep = real(shape, r)
        rep.verdict = not rep.verdict
        return rep

    monkeypatch.setattr(g, "decide", lying)
    with pytest.raises(OracleDisagreement) as info:
        check_gorenstein(SMALL_BAD, 1)
    assert info.value.dump["oracles"] == {"purity": False}
    rep = check_gorenstein(SMALL_BAD, 1, raise_on_disagreement=False)
    assert not rep.consistent


@settings(max_examples=150, deadline=None)
@given(ladders(), st.integers(1, 5))
def test_closed_forms_match_oracles(shape, r):
    rep = decide(shape, r)
    assert rep.verdict == purity_oracle(shape, r).pure
    assert all(v == rep.verdict for v in rep.criteria.values())
    assert (rep.witnesses == []) == rep.verdict


@settings(max_examples=60, deadline=None)
@given(ladders(), st.integers(1, 4))
def test_h_vector_symmetry_matches(shape, r):
    assert hvector_oracle(shape, r) == decide(shape, r).verdict
