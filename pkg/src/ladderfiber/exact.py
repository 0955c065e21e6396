"""Exact integer linear algebra."""

from __future__ import annotations

from typing import Sequence


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the divisions by the
    previous pivot are exact and all arithmetic stays in the integers.
    """
    M = [list(map(int, row)) for row in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if M[i][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p_row = M[rank]
        p = p_row[col]
        for i in range(rank + 1, nrows):
            row = M[i]
            f = row[col]
            for j in range(col + 1, ncols):
                q, rem = divmod(p * row[j] - f * p_row[j], prev)
                assert not rem, "Bareiss division must be exact"
                row[j] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank
