"""Gorenstein decisions for the special fiber ring, with oracle cross-checks.

The closed-form criteria look only at the gap statistics of the shape.  The
oracles check the same property from first principles: purity of the
join-irreducible poset (Hibi's criterion) and symmetry of the h-vector
obtained from multichain counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LadderError, OracleDisagreement
from .ladder import LadderShape, blocks, gaps, gt_one
from .lattice import DEFAULT_LATTICE_CAP, h_vector
from .poset import (
    DEFAULT_CHAIN_CAP,
    FinitePoset,
    Purity,
    _transitive_reduction,
    expand,
    is_pure,
    ji_elements,
)

CONNECTED = "ConnectedPairwise"
LOCAL = "LocalGaps"
BLOCK = "BlockForm"
MODULE = "ModuleForm"

ORACLES = ("purity", "hvector", "joinirr", "direct-hilbert")


@dataclass
class GorensteinReport:
    verdict: bool
    method: str
    witnesses: list[dict] = field(default_factory=list)
    oracles: dict[str, bool] = field(default_factory=dict)
    criteria: dict[str, bool] = field(default_factory=dict)
    oracle_witnesses: dict[str, object] = field(default_factory=dict)

    @property
    def f_regular(self) -> bool:
        # Gorenstein together with F-rationality gives F-regularity.
        return self.verdict

    @property
    def consistent(self) -> bool:
        verdicts = [self.verdict, *self.criteria.values()]
        verdicts += [v for k, v in self.oracles.items() if k in ("purity", "hvector")]
        checks = [v for k, v in self.oracles.items() if k not in ("purity", "hvector")]
        return len(set(verdicts)) == 1 and all(checks)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "witnesses": self.witnesses,
            "criteria": dict(self.criteria),
            "oracles": dict(self.oracles),
            "oracleWitnesses": {k: _plain(v) for k, v in self.oracle_witnesses.items()},
            "fRegular": self.f_regular,
            "consistent": self.consistent,
        }

    def __bool__(self):
        return self.verdict


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


# ------------------------------------------------------------- conditions


def _pairwise(shape: LadderShape, p: int, q: int) -> list[dict]:
    """Violations of the pairwise minima/maxima conditions on rows ``p..q``."""
    g = gaps(shape)
    u, v = shape.u, shape.v
    out = []
    mins = [i for i in range(p, q + 1) if gt_one(g.eps(i))]
    maxs = [i for i in range(p, q + 1) if gt_one(g.th(i - 1))]
    for a, idx, vals in (("a", mins, u), ("b", maxs, v)):
        for x in range(len(idx)):
            for y in range(x + 1, len(idx)):
                i, k = idx[x], idx[y]
                diff = vals[k - 1] - vals[i - 1]
                if diff != 2 * (k - i):
                    name = "u" if a == "a" else "v"
                    out.append(
                        {
                            "condition": a,
                            "pair": [i, k],
                            "detail": f"{name}_{k} - {name}_{i} = {diff} != {2 * (k - i)}",
                        }
                    )
    return out


def _require_connected(shape: LadderShape) -> None:
    if blocks(shape).t > 1:
        raise LadderError("shape has several blocks; use is_gorenstein_L or is_gorenstein_M")


def is_gorenstein_connected(shape: LadderShape) -> GorensteinReport:
    _require_connected(shape)
    wit = _pairwise(shape, 1, shape.n)
    return GorensteinReport(not wit, CONNECTED, wit)


def is_gorenstein_local(shape: LadderShape) -> GorensteinReport:
    """Consecutive-extrema form: each gap > 1 points at the next one."""
    _require_connected(shape)
    n = shape.n
    g = gaps(shape)
    wit = []
    for i in range(1, n):
        e = g.eps(i)
        if e == 1:
            continue
        k = i + e - 1
        if k > n:
            wit.append({"condition": "a", "index": i, "detail": f"eps_{i} = {e} points past row n = {n}"})
            continue
        bad = [j for j in range(i + 1, k) if g.eps(j) != 1]
        if bad:
            wit.append({"condition": "a", "index": i, "detail": f"eps_{bad[0]} != 1"})
        if not gt_one(g.eps(k)):
            wit.append({"condition": "a", "index": i, "detail": f"eps_{k} = 1"})
    for i in range(1, n):
        t = g.th(i)
        if t == 1:
            continue
        h = i - (t - 1)
        if h < 0:
            wit.append({"condition": "b", "index": i, "detail": f"theta_{i} = {t} points before index 0"})
            continue
        bad = [j for j in range(h + 1, i) if g.th(j) != 1]
        if bad:
            wit.append({"condition": "b", "index": i, "detail": f"theta_{bad[0]} != 1"})
        if not gt_one(g.th(h)):
            wit.append({"condition": "b", "index": i, "detail": f"theta_{h} = 1"})
    return GorensteinReport(not wit, LOCAL, wit)


def block_chain_length(shape: LadderShape, p: int, i_s: int) -> int:
    """Common length of the maximal chains in a block, when they agree."""
    return shape.intervals[p - 1][1] - shape.intervals[p - 1][0] + i_s - p - 1


def is_gorenstein_L(shape: LadderShape) -> GorensteinReport:
    bd = blocks(shape)
    wit = []
    for (p, q) in bd.blocks:
        wit += [dict(w, block=[p, q]) for w in _pairwise(shape, p, q)]
    if bd.t:
        ref = block_chain_length(shape, 1, bd.i_min[0])
        for s, ((p, q), i_s) in enumerate(zip(bd.blocks, bd.i_min), 1):
            length = block_chain_length(shape, p, i_s)
            if length != ref:
                wit.append(
                    {
                        "condition": "block-length",
                        "block": [p, q],
                        "detail": f"Delta_{p} + i_{s} - p_{s} = {length + 1} != Delta_1 + i_1 - 1 = {ref + 1}",
                    }
                )
    return GorensteinReport(not wit, BLOCK, wit)


def required_r(shape: LadderShape) -> list[int]:
    """Per block, the only ``r >= 2`` compatible with that block's chain length."""
    bd = blocks(shape)
    return [block_chain_length(shape, p, i_s) + 2 for (p, _), i_s in zip(bd.blocks, bd.i_min)]


def is_gorenstein_M(shape: LadderShape, r: int) -> GorensteinReport:
    """Module form for ``r >= 2``; ``r = 1`` is answered by the ideal form."""
    if r < 1:
        raise LadderError(f"r must be at least 1, got {r}")
    if r == 1:
        return is_gorenstein_L(shape)
    bd = blocks(shape)
    wit = []
    for (p, q) in bd.blocks:
        wit += [dict(w, block=[p, q]) for w in _pairwise(shape, p, q)]
    for (p, q), need in zip(bd.blocks, required_r(shape)):
        if r != need:
            wit.append({"condition": "c", "block": [p, q], "detail": f"r = {r} != Delta_{p} + i_s - {p} + 1 = {need}"})
    return GorensteinReport(not wit, MODULE, wit)


def decide(shape: LadderShape, r: int = 1) -> GorensteinReport:
    """Closed-form verdict, routed by ``r``; connected shapes also get the two local forms."""
    rep = is_gorenstein_L(shape) if r == 1 else is_gorenstein_M(shape, r)
    if r == 1 and shape.n and blocks(shape).t == 1:
        rep.criteria[CONNECTED] = is_gorenstein_connected(shape).verdict
        rep.criteria[LOCAL] = is_gorenstein_local(shape).verdict
    return rep


# ---------------------------------------------------------------- oracles


def tuple_poset(shape: LadderShape, r: int = 1) -> FinitePoset:
    """Join-irreducibles ordered by componentwise comparison of their tuples."""
    elems = ji_elements(shape, r)
    pts = [expand(a, shape, r).coords() for a in elems]
    if not elems:
        return FinitePoset([], [])
    X = np.array(pts, dtype=np.int64)
    less = (X[:, None, :] <= X[None, :, :]).all(axis=2)
    np.fill_diagonal(less, False)
    red = _transitive_reduction(less)
    return FinitePoset(elems, [(int(a), int(b)) for a, b in zip(*np.nonzero(red))])


def purity_oracle(shape: LadderShape, r: int = 1, chain_cap: int = DEFAULT_CHAIN_CAP) -> Purity:
    return is_pure(tuple_poset(shape, r), chain_cap)


def hvector_oracle(shape: LadderShape, r: int = 1, cap: int = DEFAULT_LATTICE_CAP) -> bool:
    return h_vector(shape, r, cap).is_symmetric()


def check_gorenstein(
    shape: LadderShape,
    r: int = 1,
    oracles=("purity",),
    lattice_cap: int = DEFAULT_LATTICE_CAP,
    chain_cap: int = DEFAULT_CHAIN_CAP,
    det_n: int = 8,
    raise_on_disagreement: bool = True,
) -> GorensteinReport:
    """Closed-form verdict plus every requested oracle.

    Any disagreement raises :class:`OracleDisagreement` carrying the full
    report, unless ``raise_on_disagreement`` is false.
    """
    rep = decide(shape, r)
    for name in oracles:
        if name == "purity":
            pur = purity_oracle(shape, r, chain_cap)
            rep.oracles[name] = pur.pure
            if pur.witness:
                rep.oracle_witnesses[name] = [[str(a) for a in ch] for ch in pur.witness]
        elif name == "hvector":
            hv = h_vector(shape, r, lattice_cap)
            rep.oracles[name] = hv.is_symmetric()
            rep.oracle_witnesses[name] = list(hv.coeffs)
        elif name == "joinirr":
            from .poset import join_irreducibles_oracle

            brute = join_irreducibles_oracle(shape, r, lattice_cap)
            mine = {expand(a, shape, r) for a in ji_elements(shape, r)}
            rep.oracles[name] = set(brute.elements) == mine
        elif name == "direct-hilbert":
            from .lattice import multichain_hilbert
            from .minors import fiber_hilbert_direct

            hf = multichain_hilbert(shape, r, 2, cap=lattice_cap)
            direct = [fiber_hilbert_direct(shape, r, d, max_n=det_n) for d in (1, 2)]
            rep.oracles[name] = direct == hf[1:3]
            rep.oracle_witnesses[name] = {"direct": direct, "multichain": hf[1:3]}
        else:
            raise ValueError(f"unknown oracle {name!r}")
    if raise_on_disagreement and not rep.consistent:
        raise OracleDisagreement("closed-form criteria and oracles disagree", rep.to_dict())
    return rep
