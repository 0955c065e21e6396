"""Graded invariants of the special fiber ring read off the join-irreducible poset."""

from __future__ import annotations

from dataclasses import dataclass

from .gorenstein import decide
from .ladder import LadderShape, blocks
from .lattice import poset_size
from .poset import join_irreducibles, rank


@dataclass
class InvariantReport:
    p_size: int
    rank: int
    reg: int
    red_number: int
    dim: int
    a_inv: int
    gorenstein: bool
    closed_forms: dict | None = None

    def to_dict(self) -> dict:
        return {
            "pSize": self.p_size,
            "rank": self.rank,
            "reg": self.reg,
            "redNumber": self.red_number,
            "dim": self.dim,
            "aInv": self.a_inv,
            "gorenstein": self.gorenstein,
            "closedForms": self.closed_forms,
        }


def fiber_dimension(shape: LadderShape, r: int = 1) -> int:
    """Krull dimension of the fiber, which is also the analytic spread of the module."""
    dim = sum(b - a for a, b in shape.intervals) + r
    assert dim == poset_size(shape, r) + 1
    return dim


def closed_forms(shape: LadderShape, r: int) -> dict | None:
    """Regularity and a-invariant in the Gorenstein case; None when no formula applies."""
    delta = [b - a for a, b in shape.intervals]
    if r >= 2:
        return {"reg": sum(delta), "aInv": -r}
    if not delta:
        return None
    i_min = blocks(shape).i_min[0]
    return {"reg": sum(delta[1:]) - i_min + 1, "aInv": -delta[0] - i_min}


def invariants(shape: LadderShape, r: int = 1) -> InvariantReport:
    """Regularity, reduction number, dimension and a-invariant.

    ``reg = |P| - rank(P) - 1`` and the reduction number equals it; both are
    reported for every shape.  When the fiber is Gorenstein the closed forms
    are attached and must agree.
    """
    P = join_irreducibles(shape, r)
    p_size = len(P)
    rk = rank(P)
    reg = p_size - rk - 1
    dim = fiber_dimension(shape, r)
    gor = decide(shape, r).verdict
    rep = InvariantReport(p_size, rk, reg, reg, dim, reg - dim, gor)
    if gor:
        rep.closed_forms = closed_forms(shape, r)
        if rep.closed_forms is not None:
            assert rep.closed_forms == {"reg": rep.reg, "aInv": rep.a_inv}, (rep, rep.closed_forms)
    return rep
