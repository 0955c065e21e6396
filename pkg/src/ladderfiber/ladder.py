"""Ladder shapes: parsing, validation, normalization and gap statistics.

A ladder shape is a list of ``n`` row intervals ``[u_i, v_i]`` (1-based
column indices).  Row ``i`` of the associated ``n x m`` matrix carries an
indeterminate in every column of its interval and zeros elsewhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import ShapeError


class _Unbounded:
    """The value ``infinity`` used for ``eps_n`` and ``theta_0``.

    Compares greater than every integer and equal only to itself; it is
    never a large integer so that arithmetic on it fails loudly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __str__(self):
        return "∞"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ladderfiber.Unbounded")

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __reduce__(self):
        return (_Unbounded, ())


Unbounded = _Unbounded()
Gap = Union[int, _Unbounded]


def gt_one(x: Gap) -> bool:
    """``x > 1`` with the unbounded sentinel counting as true."""
    return x is Unbounded or x > 1


@dataclass(frozen=True)
class LadderShape:
    """Row intervals of a ladder matrix; ``intervals[i-1] == (u_i, v_i)``."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "intervals", tuple((int(a), int(b)) for a, b in self.intervals)
        )

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def m(self) -> int:
        return max((b for _, b in self.intervals), default=0)

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.intervals)

    @property
    def v(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.intervals)

    def row(self, i: int) -> range:
        """Columns of row ``i`` (1-based)."""
        a, b = self.intervals[i - 1]
        return range(a, b + 1)

    def __str__(self):
        return format_shape(self)


def format_shape(shape: LadderShape) -> str:
    return ",".join(f"{a}-{b}" for a, b in shape.intervals)


_TOKEN = re.compile(r"^(\d+)-(\d+)$")


def parse_shape(text: str) -> LadderShape:
    """Parse ``"1-5,4-6"`` into a raw (unnormalized) shape."""
    cleaned = re.sub(r"\s+", "", text or "")
    if not cleaned:
        raise ShapeError("empty shape")
    intervals = []
    for token in cleaned.split(","):
        match = _TOKEN.match(token)
        if not match:
            raise ShapeError(f"malformed interval token {token!r}")
        a, b = int(match.group(1)), int(match.group(2))
        if a < 1:
            raise ShapeError(f"column indices are 1-based, got {token!r}")
        if a > b:
            raise ShapeError(f"interval {token!r} has start after end")
        intervals.append((a, b))
    return LadderShape(tuple(intervals))


def shape_from_obj(obj) -> tuple[LadderShape, int]:
    """Read the structured form ``{"intervals": [[u, v], ...], "r": 1}``.

    A bare string is accepted as shape text.  Returns ``(shape, r)``.
    """
    if isinstance(obj, str):
        return parse_shape(obj), 1
    if not isinstance(obj, dict):
        raise ShapeError("shape object must be a mapping or a shape string")
    r = obj.get("r", 1)
    if not isinstance(r, int) or isinstance(r, bool) or r < 1:
        raise ShapeError(f"r must be a positive integer, got {r!r}")
    if "shape" in obj and "intervals" not in obj:
        return parse_shape(obj["shape"]), r
    raw = obj.get("intervals")
    if not isinstance(raw, list) or not raw:
        raise ShapeError("'intervals' must be a nonempty list of [u, v] pairs")
    intervals = []
    for pair in raw:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise ShapeError(f"bad interval {pair!r}")
        a, b = pair
        if a < 1 or a > b:
            raise ShapeError(f"bad interval {pair!r}")
        intervals.append((a, b))
    return LadderShape(tuple(intervals)), r


def load_shape_file(path: str | Path) -> tuple[LadderShape, int]:
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return parse_shape(text.strip()), 1
    return shape_from_obj(obj)


# ---------------------------------------------------------------- validation


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(shape: LadderShape) -> ValidationReport:
    """Check the normalized-form invariants; violations are returned, not raised."""
    out = ValidationReport()
    n, m, u, v = shape.n, shape.m, shape.u, shape.v
    if n == 0:
        out.violations.append("no rows")
        return out
    if u[0] != 1:
        out.violations.append(f"u_1 = {u[0]} != 1")
    if v[0] <= 1:
        out.violations.append(f"v_1 = {v[0]} <= 1")
    for i in range(2, n + 1):
        if u[i - 1] == u[i - 2]:
            out.violations.append(f"u_{i} = u_{i - 1}")
        elif u[i - 1] < u[i - 2]:
            out.violations.append(f"u_{i} < u_{i - 1}")
        if v[i - 1] == v[i - 2]:
            out.violations.append(f"v_{i} = v_{i - 1}")
        elif v[i - 1] < v[i - 2]:
            out.violations.append(f"v_{i} < v_{i - 1}")
        if u[i - 1] > v[i - 2] + 1:
            out.violations.append(f"u_{i} > v_{i - 1} + 1 (zero columns)")
    for i in range(1, n + 1):
        if u[i - 1] >= v[i - 1]:
            rel = "=" if u[i - 1] == v[i - 1] else ">"
            out.violations.append(f"u_{i} {rel} v_{i}")
    if u[-1] >= m:
        out.violations.append(f"u_n = {u[-1]} >= m = {m}")
    if n >= m:
        out.violations.append(f"n = {n} >= m = {m}")
    return out


def is_normalized(shape: LadderShape) -> bool:
    return validate(shape).ok


# ------------------------------------------------------------- normalization


@dataclass(frozen=True)
class BumpedDuplicateU:
    row: int

    def apply(self, iv: list[list[int]]) -> None:
        iv[self.row - 1][0] = iv[self.row - 2][0] + 1

    def __str__(self):
        return f"BumpedDuplicateU({self.row})"


@dataclass(frozen=True)
class ShrunkDuplicateV:
    row: int

    def apply(self, iv: list[list[int]]) -> None:
        iv[self.row - 1][1] = iv[self.row][1] - 1

    def __str__(self):
        return f"ShrunkDuplicateV({self.row})"


@dataclass(frozen=True)
class RemovedZeroColumns:
    first: int
    last: int

    def apply(self, iv: list[list[int]]) -> None:
        width = self.last - self.first + 1
        for pair in iv:
            for k in (0, 1):
                if pair[k] > self.last:
                    pair[k] -= width

    def __str__(self):
        return f"RemovedZeroColumns({self.first}-{self.last})"


@dataclass(frozen=True)
class DroppedDegenerateRow:
    row: int

    def apply(self, iv: list[list[int]]) -> None:
        del iv[self.row - 1]

    def __str__(self):
        return f"DroppedDegenerateRow({self.row})"


@dataclass(frozen=True)
class ReducedSquareCase:
    def apply(self, iv: list[list[int]]) -> None:
        iv.clear()

    def __str__(self):
        return "ReducedSquareCase"


NormalizationStep = Union[
    BumpedDuplicateU, ShrunkDuplicateV, RemovedZeroColumns, DroppedDegenerateRow, ReducedSquareCase
]
NormalizationTrace = list  # list[NormalizationStep]

EMPTY_SHAPE = LadderShape(())


def replay(shape: LadderShape, trace: Iterable[NormalizationStep]) -> LadderShape:
    """Apply a recorded trace step by step to ``shape``."""
    iv = [list(p) for p in shape.intervals]
    for step in trace:
        step.apply(iv)
    return LadderShape(tuple(tuple(p) for p in iv))


def _zero_column_runs(iv: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    m = max(b for _, b in iv)
    covered = [False] * (m + 1)
    for a, b in iv:
        for c in range(a, b + 1):
            covered[c] = True
    runs = []
    c = 1
    while c <= m:
        if not covered[c]:
            start = c
            while c <= m and not covered[c]:
                c += 1
            runs.append((start, c - 1))
        else:
            c += 1
    return runs


def normalize(shape: LadderShape, strict: bool = False) -> tuple[LadderShape, list]:
    """Reduce ``shape`` to normalized form, recording every step.

    Steps run in a fixed order: duplicate starts are bumped top-down,
    duplicate ends shrunk bottom-up, uncovered columns deleted, rows with
    a single entry dropped (then the whole pass repeats), and finally a
    shape that has lost every row is reported as the square case.

    With ``strict=True`` any invariant violation raises instead.
    """
    if shape.n == 0:
        raise ShapeError("empty shape")
    if strict:
        report = validate(shape)
        if not report.ok:
            raise ShapeError("shape is not normalized: " + "; ".join(report.violations))
        return shape, []
    for a, b in shape.intervals:
        if a < 1 or a > b:
            raise ShapeError(f"bad interval {a}-{b}")
    u, v = shape.u, shape.v
    for i in range(1, shape.n):
        if u[i] < u[i - 1] or v[i] < v[i - 1]:
            raise ShapeError(
                f"rows {i} and {i + 1} do not form a ladder (starts and ends must be nondecreasing)"
            )

    iv = [list(p) for p in shape.intervals]
    trace: list = []
    while iv:
        for i in range(1, len(iv)):
            if iv[i][0] <= iv[i - 1][0]:
                step = BumpedDuplicateU(i + 1)
                step.apply(iv)
                trace.append(step)
        for i in range(len(iv) - 2, -1, -1):
            if iv[i][1] >= iv[i + 1][1]:
                step = ShrunkDuplicateV(i + 1)
                step.apply(iv)
                trace.append(step)
        for a, b in iv:
            if a > b:
                raise ShapeError(f"cannot normalize {format_shape(shape)}: an interval empties out")
        for first, last in reversed(_zero_column_runs(iv)):
            step = RemovedZeroColumns(first, last)
            step.apply(iv)
            trace.append(step)
        degenerate = [i + 1 for i, (a, b) in enumerate(iv) if a == b]
        if not degenerate:
            break
        for row in reversed(degenerate):
            step = DroppedDegenerateRow(row)
            step.apply(iv)
            trace.append(step)
    if not iv or len(iv) >= max(b for _, b in iv):
        trace.append(ReducedSquareCase())
        return EMPTY_SHAPE, trace
    out = LadderShape(tuple(tuple(p) for p in iv))
    assert validate(out).ok, validate(out).violations
    return out, trace


# ---------------------------------------------------------------- statistics


@dataclass(frozen=True)
class GapProfile:
    """``delta[i-1] = Δ_i``, ``epsilon[j-1] = ε_j`` (last is ∞), ``theta[j] = θ_j`` (first is ∞)."""

    delta: tuple[int, ...]
    epsilon: tuple[Gap, ...]
    theta: tuple[Gap, ...]

    def eps(self, j: int) -> Gap:
        if not 1 <= j <= len(self.epsilon):
            raise IndexError(f"epsilon index {j} out of range")
        return self.epsilon[j - 1]

    def th(self, j: int) -> Gap:
        if not 0 <= j < len(self.theta):
            raise IndexError(f"theta index {j} out of range")
        return self.theta[j]

    def to_dict(self) -> dict:
        enc = lambda xs: [None if x is Unbounded else x for x in xs]  # noqa: E731
        return {"delta": list(self.delta), "epsilon": enc(self.epsilon), "theta": enc(self.theta)}


def gaps(shape: LadderShape) -> GapProfile:
    u, v, n = shape.u, shape.v, shape.n
    delta = tuple(v[i] - u[i] for i in range(n))
    epsilon = tuple(u[j + 1] - u[j] for j in range(n - 1)) + ((Unbounded,) if n else ())
    theta = ((Unbounded,) if n else ()) + tuple(v[j + 1] - v[j] for j in range(n - 1))
    return GapProfile(delta, epsilon, theta)


@dataclass(frozen=True)
class BlockDecomposition:
    C: tuple[int, ...]
    blocks: tuple[tuple[int, int], ...]
    i_min: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.blocks)


def blocks(shape: LadderShape) -> BlockDecomposition:
    n, u, v = shape.n, shape.u, shape.v
    if n == 0:
        return BlockDecomposition((), (), ())
    g = gaps(shape)
    C = tuple(i for i in range(1, n) if v[i - 1] < u[i]) + (n,)
    bl = []
    p = 1
    for q in C:
        bl.append((p, q))
        p = q + 1
    i_min = []
    for s, (p, q) in enumerate(bl):
        if s + 1 < len(bl):
            assert g.eps(q) >= 2 and g.th(q) >= 2, "block boundary gaps must be at least 2"
        i_min.append(next(i for i in range(p, q + 1) if gt_one(g.eps(i))))
    return BlockDecomposition(C, tuple(bl), tuple(i_min))
