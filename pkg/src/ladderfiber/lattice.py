"""The distributive lattice of maximal-minor column tuples and its product with a chain.

Elements of the lattice are strictly increasing tuples ``c`` with ``c_i`` in
row ``i``'s interval; elements of the product carry an extra copy index in
``[1, r]``.  Order, meet and join are componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import CapExceeded, LadderError
from .ladder import LadderShape

DEFAULT_LATTICE_CAP = 200_000
DEFAULT_BOX_CAP = 4_000_000
PAIRWISE_CAP = 3_000

ColumnTuple = tuple  # tuple[int, ...], strictly increasing


class FiberPoint(NamedTuple):
    c: tuple
    copy: int = 1

    def coords(self) -> tuple:
        return (*self.c, self.copy)

    def __str__(self):
        return "(" + ",".join(map(str, self.c)) + f";{self.copy})"


def in_lattice(shape: LadderShape, c: Sequence[int]) -> bool:
    if len(c) != shape.n:
        return False
    for i, (a, b) in enumerate(shape.intervals):
        if not a <= c[i] <= b:
            return False
        if i and c[i - 1] >= c[i]:
            return False
    return True


def count_lattice(shape: LadderShape) -> int:
    """Number of lattice elements, by dynamic programming over rows."""
    if shape.n == 0:
        return 1
    a, b = shape.intervals[0]
    ways = {c: 1 for c in range(a, b + 1)}
    for a, b in shape.intervals[1:]:
        # prefix sums over the previous row's columns
        cols = sorted(ways)
        acc, running, k = {}, 0, 0
        for c in range(a, b + 1):
            while k < len(cols) and cols[k] < c:
                running += ways[cols[k]]
                k += 1
            if running:
                acc[c] = running
        ways = acc
    return sum(ways.values())


def iter_lattice(shape: LadderShape) -> Iterator[tuple]:
    """Yield lattice elements in lexicographic order."""
    n = shape.n
    if n == 0:
        yield ()
        return
    ivs = shape.intervals
    # largest value row i may take and still leave room below it
    hi = [0] * n
    hi[-1] = ivs[-1][1]
    for i in range(n - 2, -1, -1):
        hi[i] = min(ivs[i][1], hi[i + 1] - 1)
    cur = [0] * n

    def rec(i: int, lo: int):
        a = max(ivs[i][0], lo)
        for c in range(a, hi[i] + 1):
            cur[i] = c
            if i == n - 1:
                yield tuple(cur)
            else:
                yield from rec(i + 1, c + 1)

    yield from rec(0, 0)


def enumerate_lattice(shape: LadderShape, cap: int = DEFAULT_LATTICE_CAP) -> list[tuple]:
    size = count_lattice(shape)
    if size > cap:
        raise CapExceeded("lattice size", cap, size)
    out = list(iter_lattice(shape))
    assert len(out) == size
    return out


def fiber_points(shape: LadderShape, r: int, cap: int = DEFAULT_LATTICE_CAP) -> list[FiberPoint]:
    """Elements of the product lattice, ordered by tuple then copy."""
    size = count_lattice(shape) * r
    if size > cap:
        raise CapExceeded("lattice size", cap, size)
    return [FiberPoint(c, k) for c in iter_lattice(shape) for k in range(1, r + 1)]


# ------------------------------------------------------------------ order ops


def _check_pair(a: FiberPoint, b: FiberPoint) -> None:
    if len(a.c) != len(b.c):
        raise LadderError(f"points {a} and {b} come from different shapes")


def leq(a: FiberPoint, b: FiberPoint) -> bool:
    _check_pair(a, b)
    return a.copy <= b.copy and all(x <= y for x, y in zip(a.c, b.c))


def meet(a: FiberPoint, b: FiberPoint) -> FiberPoint:
    _check_pair(a, b)
    return FiberPoint(tuple(map(min, a.c, b.c)), min(a.copy, b.copy))


def join(a: FiberPoint, b: FiberPoint) -> FiberPoint:
    _check_pair(a, b)
    return FiberPoint(tuple(map(max, a.c, b.c)), max(a.copy, b.copy))


def comparable(a: FiberPoint, b: FiberPoint) -> bool:
    return leq(a, b) or leq(b, a)


@dataclass(frozen=True)
class HibiRelation:
    a: FiberPoint
    b: FiberPoint
    meet: FiberPoint
    join: FiberPoint

    def __str__(self):
        return f"T[{self.a}]·T[{self.b}] = T[{self.meet}]·T[{self.join}]"

    def to_dict(self) -> dict:
        enc = lambda p: {"c": list(p.c), "copy": p.copy}  # noqa: E731
        return {"a": enc(self.a), "b": enc(self.b), "meet": enc(self.meet), "join": enc(self.join)}


def hibi_relations(
    shape: LadderShape, r: int = 1, cap: int = DEFAULT_LATTICE_CAP
) -> list[HibiRelation]:
    """One binomial ``T_a T_b - T_{a^b} T_{avb}`` per unordered incomparable pair."""
    pts = fiber_points(shape, r, cap)
    if len(pts) < 2:
        return []
    X = np.array([p.coords() for p in pts], dtype=np.int64)
    rels = []
    for i in range(len(pts) - 1):
        rest = X[i + 1 :]
        below = (rest <= X[i]).all(axis=1)
        above = (rest >= X[i]).all(axis=1)
        for j in np.nonzero(~(below | above))[0]:
            a, b = pts[i], pts[i + 1 + int(j)]
            rels.append(HibiRelation(a, b, meet(a, b), join(a, b)))
    return rels


# --------------------------------------------------------- Hilbert functions


def _zeta_box(shape: LadderShape, r: int, dmax: int, box_cap: int) -> list[int]:
    dims = [b - a + 1 for a, b in shape.intervals] + [r]
    cells = prod(dims)
    if cells > box_cap:
        raise CapExceeded("Hilbert box", box_cap, cells)
    mask = np.zeros(dims, dtype=bool)
    if shape.n:
        lows = np.array(shape.u, dtype=np.int64)
        elems = np.array(list(iter_lattice(shape)), dtype=np.int64)
        mask[tuple((elems - lows).T)] = True
    else:
        mask[...] = True
    hf = [1]
    f = np.where(mask, 1, 0).astype(object)
    for d in range(1, dmax + 1):
        if d > 1:
            for axis in range(f.ndim):
                f = np.cumsum(f, axis=axis, dtype=object)
            f = np.where(mask, f, 0)
        hf.append(int(f.sum()))
    return hf[: dmax + 1]


def _zeta_pairwise(shape: LadderShape, r: int, dmax: int, cap: int = PAIRWISE_CAP) -> list[int]:
    pts = fiber_points(shape, r, cap)
    X = np.array([p.coords() for p in pts], dtype=np.int64)
    # below[y, x] is True when x <= y
    below = (X[None, :, :] <= X[:, None, :]).all(axis=2)
    lower_sets = [np.nonzero(row)[0] for row in below]
    f = [1] * len(pts)
    hf = [1]
    for d in range(1, dmax + 1):
        if d > 1:
            f = [sum(f[x] for x in lower) for lower in lower_sets]
        hf.append(sum(f))
    return hf[: dmax + 1]


def multichain_hilbert(
    shape: LadderShape,
    r: int,
    dmax: int,
    cap: int = DEFAULT_LATTICE_CAP,
    box_cap: int = DEFAULT_BOX_CAP,
    method: str = "auto",
) -> list[int]:
    """``HF(d)`` for ``d = 0..dmax``: the number of multichains of length ``d``.

    The default route runs iterated axis-wise prefix sums on the bounding box
    of the lattice (zero outside it), which is a zeta transform of the
    componentwise order.  ``method="pairwise"`` sums over explicit lower sets
    and exists as a cross-check for small lattices.
    """
    size = count_lattice(shape) * r
    if size > cap:
        raise CapExceeded("lattice size", cap, size)
    if method == "pairwise":
        return _zeta_pairwise(shape, r, dmax, max(cap, PAIRWISE_CAP))
    if method not in ("auto", "box"):
        raise ValueError(f"unknown method {method!r}")
    try:
        return _zeta_box(shape, r, dmax, box_cap)
    except CapExceeded:
        if method == "box" or size > PAIRWISE_CAP:
            raise
        return _zeta_pairwise(shape, r, dmax)


@dataclass(frozen=True)
class HVector:
    coeffs: tuple[int, ...]
    dim: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_symmetric(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def hilbert(self, d: int) -> int:
        """Reconstruct ``HF(d)`` from the numerator of the Hilbert series."""
        if self.dim == 0:
            return self.coeffs[d] if d < len(self.coeffs) else 0
        return sum(
            h * comb(d - i + self.dim - 1, self.dim - 1)
            for i, h in enumerate(self.coeffs)
            if i <= d
        )


def poset_size(shape: LadderShape, r: int) -> int:
    return sum(b - a for a, b in shape.intervals) + r - 1


def h_vector(shape: LadderShape, r: int = 1, cap: int = DEFAULT_LATTICE_CAP, **kw) -> HVector:
    dim = poset_size(shape, r) + 1
    bound = dim + 1
    hf = multichain_hilbert(shape, r, bound, cap=cap, **kw)
    h = [
        sum((-1) ** j * comb(dim, j) * hf[k - j] for j in range(min(k, dim) + 1))
        for k in range(bound + 1)
    ]
    if h[-1] or h[-2]:
        raise LadderError(f"h-vector did not stabilize by degree {bound}: {h}")
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    if any(x < 0 for x in h):
        raise LadderError(f"negative h-vector entry: {h}")
    return HVector(tuple(h), dim)
