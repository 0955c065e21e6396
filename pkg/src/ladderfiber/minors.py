"""Symbolic maximal minors of the ladder matrix.

Determinants are expanded along the last row with memoization on the set of
columns still available, which keeps the work small because of the zero
pattern.  ``det_leibniz`` is the plain permutation expansion, kept as an
independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Sequence

from .errors import CapExceeded, LadderError
from .exact import bareiss_rank
from .ladder import LadderShape
from .lattice import (
    DEFAULT_LATTICE_CAP,
    count_lattice,
    fiber_points,
    in_lattice,
    iter_lattice,
)
from .polynomial import Monomial, Polynomial, mono_from_vars

DEFAULT_MAX_DET_N = 8
DEFAULT_RANK_BUDGET = 5_000


def entry(shape: LadderShape, i: int, j: int) -> Polynomial:
    a, b = shape.intervals[i - 1]
    return Polynomial.var(i, j) if a <= j <= b else Polynomial()


def ladder_matrix(shape: LadderShape) -> list[list[Polynomial]]:
    return [[entry(shape, i, j) for j in range(1, shape.m + 1)] for i in range(1, shape.n + 1)]


@lru_cache(maxsize=64)
def _expander(intervals: tuple):
    @lru_cache(maxsize=None)
    def det(k: int, cols: tuple) -> Polynomial:
        # rows 1..k on the sorted columns ``cols``
        if k == 0:
            return Polynomial.const(1)
        a, b = intervals[k - 1]
        out = Polynomial()
        for pos, j in enumerate(cols):
            if not a <= j <= b:
                continue
            sub = det(k - 1, cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = sub * Polynomial.var(k, j)
            out = out - term if (k - 1 + pos) % 2 else out + term
        return out

    return det


def minor_det(shape: LadderShape, c: Sequence[int], max_n: int = DEFAULT_MAX_DET_N) -> Polynomial:
    """Determinant of the maximal minor on columns ``c`` (zero entries respected)."""
    if shape.n > max_n:
        raise CapExceeded("determinant order", max_n, shape.n)
    c = tuple(c)
    if not in_lattice(shape, c):
        raise LadderError(f"{c} is not a column tuple of this shape")
    return _expander(shape.intervals)(shape.n, c)


def det_leibniz(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    n = len(matrix)
    out = Polynomial()
    for perm in permutations(range(n)):
        inv = sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
        term = Polynomial.const(-1 if inv % 2 else 1)
        for row, col in enumerate(perm):
            term = term * matrix[row][col]
            if term.is_zero():
                break
        out = out + term
    return out


def diagonal_monomial(c: Sequence[int]) -> Monomial:
    return mono_from_vars((i, cj) for i, cj in enumerate(c, 1))


def leading_term(p: Polynomial):
    return p.leading_term()


@dataclass
class DiagonalCheck:
    ok: bool
    checked: int
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


def diagonal_leading_check(
    shape: LadderShape, cap: int = DEFAULT_LATTICE_CAP, max_n: int = DEFAULT_MAX_DET_N
) -> DiagonalCheck:
    """Every minor's tau-leading term is its diagonal monomial with coefficient +1."""
    size = count_lattice(shape)
    if size > cap:
        raise CapExceeded("lattice size", cap, size)
    checked = 0
    for c in iter_lattice(shape):
        p = minor_det(shape, c, max_n)
        if p.is_zero():
            return DiagonalCheck(False, checked, (c, "zero"))
        mono, coef = p.leading_term()
        if mono != diagonal_monomial(c) or coef != 1:
            return DiagonalCheck(False, checked, (c, str(p)))
        checked += 1
    return DiagonalCheck(True, checked)


def fiber_hilbert_direct(
    shape: LadderShape,
    r: int,
    d: int,
    budget: int = DEFAULT_RANK_BUDGET,
    max_n: int = DEFAULT_MAX_DET_N,
) -> int:
    """Dimension of the degree-``d`` part of the fiber, measured on the minors.

    Every product of ``d`` generators ``det[c] * t_k`` is expanded; the rank
    of their coefficient matrix over the monomials is the Hilbert function.
    The copy markers ``t_k`` are the variables ``(n + 1, k)``.
    """
    pts = fiber_points(shape, r, cap=budget)
    n_products = comb(len(pts) + d - 1, d)
    if n_products > budget:
        raise CapExceeded("direct Hilbert products", budget, n_products)
    gens = [minor_det(shape, p.c, max_n) * Polynomial.var(shape.n + 1, p.copy) for p in pts]
    products = []
    for combo in combinations_with_replacement(range(len(gens)), d):
        prod = Polynomial.const(1)
        for g in combo:
            prod = prod * gens[g]
        products.append(prod)
    monos = sorted({m for p in products for m in p.terms})
    col = {m: k for k, m in enumerate(monos)}
    rows = []
    for p in products:
        row = [0] * len(monos)
        for m, c in p.terms.items():
            row[col[m]] = c
        rows.append(row)
    return bareiss_rank(rows)


__all__ = [
    "DiagonalCheck",
    "det_leibniz",
    "diagonal_leading_check",
    "diagonal_monomial",
    "entry",
    "fiber_hilbert_direct",
    "ladder_matrix",
    "leading_term",
    "minor_det",
]
