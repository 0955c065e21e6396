"""The poset of join-irreducibles of the ladder lattice, read off the shape.

``a[i,j]`` for ``i`` in ``[n]`` and ``j`` in ``[u_i + 1, v_i]`` is the tuple
``(u_1, ..., u_{i-1}, j, max(j+1, u_{i+1}), ..., max(j+n-i, u_n))`` in copy 1;
``a[n+1,k]`` for ``k`` in ``[2, r]`` is the bottom tuple in copy ``k``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import CapExceeded, LadderError
from .ladder import LadderShape, gaps, gt_one
from .lattice import DEFAULT_LATTICE_CAP, FiberPoint, fiber_points

DEFAULT_CHAIN_CAP = 1_000_000


class JoinIrr(NamedTuple):
    row: int
    col: int

    def __str__(self):
        return f"a[{self.row},{self.col}]"

    @property
    def dot_name(self) -> str:
        return f"a_{self.row}_{self.col}"


@dataclass
class FinitePoset:
    """Elements plus cover edges ``(lower, upper)`` given as element indices."""

    elements: list
    covers: list[tuple[int, int]]
    labels: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.index = {e: k for k, e in enumerate(self.elements)}
        self.up = defaultdict(list)
        self.down = defaultdict(list)
        for lo, hi in self.covers:
            self.up[lo].append(hi)
            self.down[hi].append(lo)
        if not self.labels:
            self.labels = _component_labels(len(self.elements), self.covers)
        self._topo = _toposort(len(self.elements), self.up, self.down)

    def __len__(self):
        return len(self.elements)

    def minimal(self) -> list:
        return [e for k, e in enumerate(self.elements) if not self.down[k]]

    def maximal(self) -> list:
        return [e for k, e in enumerate(self.elements) if not self.up[k]]

    def closure(self) -> np.ndarray:
        """``M[x, y]`` is True when ``x <= y``."""
        N = len(self.elements)
        M = np.eye(N, dtype=bool)
        for k in reversed(self._topo):
            for hi in self.up[k]:
                M[k] |= M[hi]
        return M

    @property
    def n_components(self) -> int:
        return len(set(self.labels))


def _component_labels(N: int, edges) -> list[int]:
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    roots = {}
    return [roots.setdefault(find(k), len(roots)) for k in range(N)]


def _toposort(N, up, down) -> list[int]:
    indeg = [len(down[k]) for k in range(N)]
    order = [k for k in range(N) if indeg[k] == 0]
    for k in order:
        for hi in up[k]:
            indeg[hi] -= 1
            if indeg[hi] == 0:
                order.append(hi)
    if len(order) != N:
        raise LadderError("cover graph has a cycle")
    return order


# ------------------------------------------------------------ construction


def ji_elements(shape: LadderShape, r: int = 1) -> list[JoinIrr]:
    out = [JoinIrr(i, j) for i, (a, b) in enumerate(shape.intervals, 1) for j in range(a + 1, b + 1)]
    out += [JoinIrr(shape.n + 1, k) for k in range(2, r + 1)]
    return out


def _check(a: JoinIrr, shape: LadderShape, r: int) -> None:
    n = shape.n
    if 1 <= a.row <= n:
        lo, hi = shape.intervals[a.row - 1]
        if lo + 1 <= a.col <= hi:
            return
    elif a.row == n + 1 and 2 <= a.col <= r:
        return
    raise LadderError(f"{a} is not a join-irreducible of this shape with r={r}")


def expand(a: JoinIrr, shape: LadderShape, r: int = 1) -> FiberPoint:
    _check(a, shape, r)
    u, n = shape.u, shape.n
    if a.row == n + 1:
        return FiberPoint(u, a.col)
    i, j = a
    c = u[: i - 1] + tuple(max(j + s, u[i - 1 + s]) for s in range(n - i + 1))
    return FiberPoint(c, 1)


def ji_leq(x: JoinIrr, y: JoinIrr, n: int) -> bool:
    """Whether ``x <= y``; rows ``<= n`` use the index rule, row ``n+1`` is a separate chain."""
    if (x.row == n + 1) != (y.row == n + 1):
        return False
    if y.row == n + 1:
        return x.col <= y.col
    return x.row >= y.row and x.col - y.col <= x.row - y.row


def ji_covers(shape: LadderShape, r: int = 1) -> list[tuple[JoinIrr, JoinIrr]]:
    """Cover edges ``(lower, upper)`` in row-major order of the upper element."""
    u, n = shape.u, shape.n
    edges = []
    for a in ji_elements(shape, r):
        i, j = a
        if i == n + 1:
            if j > 2:
                edges.append((JoinIrr(i, j - 1), a))
            continue
        if j >= u[i - 1] + 2:
            edges.append((JoinIrr(i, j - 1), a))
        if i != n and j >= u[i]:
            edges.append((JoinIrr(i + 1, j + 1), a))
    return edges


def join_irreducibles(shape: LadderShape, r: int = 1) -> FinitePoset:
    elems = ji_elements(shape, r)
    expected = sum(b - a for a, b in shape.intervals) + r - 1
    assert len(elems) == expected, (len(elems), expected)
    idx = {e: k for k, e in enumerate(elems)}
    covers = [(idx[lo], idx[hi]) for lo, hi in ji_covers(shape, r)]
    return FinitePoset(elems, covers)


def minimals(shape: LadderShape, r: int = 1) -> list[JoinIrr]:
    g = gaps(shape)
    out = [JoinIrr(i, a + 1) for i, (a, _) in enumerate(shape.intervals, 1) if gt_one(g.eps(i))]
    if r >= 2:
        out.append(JoinIrr(shape.n + 1, 2))
    return out


def maximals(shape: LadderShape, r: int = 1) -> list[JoinIrr]:
    g = gaps(shape)
    out = [JoinIrr(i, b) for i, (_, b) in enumerate(shape.intervals, 1) if gt_one(g.th(i - 1))]
    if r >= 2:
        out.append(JoinIrr(shape.n + 1, r))
    return out


def components(shape: LadderShape, r: int = 1) -> tuple[int, dict]:
    """Number of connected components and a label per element."""
    P = join_irreducibles(shape, r)
    return P.n_components, {e: P.labels[k] for k, e in enumerate(P.elements)}


# ------------------------------------------------------------------- chains


def chain_length(a: JoinIrr, b: JoinIrr, n: int) -> int:
    """Length of any saturated chain from ``b`` up to ``a`` (rows ``<= n``)."""
    if a.row > n or b.row > n:
        raise LadderError("chain_length is defined for rows 1..n only")
    if not ji_leq(b, a, n):
        raise LadderError(f"{b} is not below {a}")
    return 2 * (b.row - a.row) + a.col - b.col


def saturated_chains(P: FinitePoset, lo, hi, cap: int = DEFAULT_CHAIN_CAP) -> list[list]:
    """All saturated chains from ``lo`` up to ``hi``."""
    start, stop = P.index[lo], P.index[hi]
    out: list[list] = []
    path = [start]

    def walk(k):
        if k == stop:
            out.append([P.elements[x] for x in path])
            if len(out) > cap:
                raise CapExceeded("saturated chains", cap)
            return
        for nxt in P.up[k]:
            path.append(nxt)
            walk(nxt)
            path.pop()

    walk(start)
    return out


def count_maximal_chains(P: FinitePoset) -> int:
    ways = [0] * len(P)
    for k in reversed(P._topo):
        ways[k] = 1 if not P.up[k] else sum(ways[h] for h in P.up[k])
    return sum(ways[k] for k in range(len(P)) if not P.down[k])


def maximal_chains(P: FinitePoset, cap: int = DEFAULT_CHAIN_CAP) -> list[list]:
    total = count_maximal_chains(P)
    if total > cap:
        raise CapExceeded("maximal chains", cap, total)
    out = []
    path: list[int] = []

    def walk(k):
        path.append(k)
        if not P.up[k]:
            out.append([P.elements[x] for x in path])
        for h in P.up[k]:
            walk(h)
        path.pop()

    for k in range(len(P)):
        if not P.down[k]:
            walk(k)
    return out


def _extreme_chain(P: FinitePoset, pick) -> list:
    """Longest (``pick=max``) or shortest (``pick=min``) maximal chain via DP."""
    best = [0] * len(P)
    nxt: list = [None] * len(P)
    for k in reversed(P._topo):
        if P.up[k]:
            h = pick(P.up[k], key=lambda x: best[x])
            best[k], nxt[k] = best[h] + 1, h
    starts = [k for k in range(len(P)) if not P.down[k]]
    if not starts:
        return []
    k = pick(starts, key=lambda x: best[x])
    chain = [k]
    while nxt[k] is not None:
        k = nxt[k]
        chain.append(k)
    return [P.elements[x] for x in chain]


def rank(P: FinitePoset) -> int:
    """Length of the longest chain; -1 for the empty poset."""
    return len(_extreme_chain(P, max)) - 1


@dataclass
class Purity:
    pure: bool
    rank: int
    witness: tuple = ()  # two maximal chains of different lengths
    lengths: frozenset = frozenset()
    enumerated: bool = False

    def __bool__(self):
        return self.pure


def is_pure(P: FinitePoset, cap: int = DEFAULT_CHAIN_CAP) -> Purity:
    """All maximal chains have one length.

    Chains are enumerated when there are at most ``cap`` of them; otherwise
    the longest and shortest maximal chains are found by dynamic programming,
    which decides purity without listing every chain.
    """
    if len(P) == 0:
        return Purity(True, -1, (), frozenset(), True)
    if count_maximal_chains(P) <= cap:
        chains = maximal_chains(P, cap)
        by_len: dict[int, list] = {}
        for ch in chains:
            by_len.setdefault(len(ch) - 1, ch)
        lengths = frozenset(by_len)
        top = max(lengths)
        witness = () if len(lengths) == 1 else (by_len[min(lengths)], by_len[top])
        return Purity(len(lengths) == 1, top, witness, lengths, True)
    longest, shortest = _extreme_chain(P, max), _extreme_chain(P, min)
    lengths = frozenset({len(longest) - 1, len(shortest) - 1})
    witness = () if len(lengths) == 1 else (shortest, longest)
    return Purity(len(lengths) == 1, len(longest) - 1, witness, lengths, False)


# ------------------------------------------------------------ brute force


def join_irreducibles_oracle(
    shape: LadderShape, r: int = 1, cap: int = DEFAULT_LATTICE_CAP
) -> FinitePoset:
    """Join-irreducibles of the full product lattice, found by brute force.

    Covers of the lattice come from the transitive reduction of the
    componentwise order; an element is join-irreducible when it covers
    exactly one element.  The returned poset carries the induced order on
    those elements (covers again by transitive reduction).
    """
    pts = fiber_points(shape, r, cap)
    X = np.array([p.coords() for p in pts], dtype=np.int64)
    less = (X[:, None, :] <= X[None, :, :]).all(axis=2)
    np.fill_diagonal(less, False)
    covers = _transitive_reduction(less)
    ji = [k for k in range(len(pts)) if covers[:, k].sum() == 1]
    sub = less[np.ix_(ji, ji)]
    red = _transitive_reduction(sub)
    edges = [(int(a), int(b)) for a, b in zip(*np.nonzero(red))]
    return FinitePoset([pts[k] for k in ji], edges)


def _transitive_reduction(less: np.ndarray) -> np.ndarray:
    """``less[x, y]`` strict order -> cover relation."""
    L = less.astype(np.int32)
    two_step = (L @ L) > 0
    return less & ~two_step


# ------------------------------------------------------------------ export


def to_dot(P: FinitePoset, name: str = "P") -> str:
    """Cover diagram in DOT; an edge ``x -> y`` means ``y`` covers ``x``."""
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for e in P.elements:
        lines.append(f'  {_dot_id(e)} [label="{e}"];')
    for lo, hi in sorted(P.covers, key=lambda ed: (_sort_key(P.elements[ed[1]]), _sort_key(P.elements[ed[0]]))):
        lines.append(f"  {_dot_id(P.elements[lo])} -> {_dot_id(P.elements[hi])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_id(e) -> str:
    if isinstance(e, JoinIrr):
        return e.dot_name
    return '"' + str(e) + '"'


def _sort_key(e):
    return tuple(e) if isinstance(e, JoinIrr) else e.coords()


def to_grid(shape: LadderShape, r: int = 1) -> str:
    """Matrix layout: ``a[i,j]`` at row ``i`` column ``j``, ``0`` elsewhere."""
    m = shape.m
    rows = []
    for i, (a, b) in enumerate(shape.intervals, 1):
        rows.append([str(JoinIrr(i, j)) if a + 1 <= j <= b else "0" for j in range(1, m + 1)])
    if r >= 2:
        rows.append([str(JoinIrr(shape.n + 1, k)) for k in range(2, r + 1)])
    if not rows:
        return ""
    width = max(len(x) for row in rows for x in row)
    return "\n".join(" ".join(x.rjust(width) for x in row) for row in rows) + "\n"
