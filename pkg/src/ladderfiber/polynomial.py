"""Sparse multivariate polynomials with integer coefficients.

Variables are pairs ``(i, j)`` standing for ``x[i,j]``.  A monomial is a
tuple of ``(variable, exponent)`` pairs sorted by variable with positive
exponents only.  The monomial order ``tau`` is lexicographic with
``x[i,j] > x[l,k]`` iff ``i < l`` or (``i == l`` and ``j < k``).
"""

from __future__ import annotations

from typing import Iterable

Var = tuple  # (i, j)
Monomial = tuple  # tuple[tuple[Var, int], ...]

ONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = k = 0
    while i < len(a) and k < len(b):
        va, ea = a[i]
        vb, eb = b[k]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            k += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[k])
            k += 1
    out.extend(a[i:])
    out.extend(b[k:])
    return tuple(out)


def mono_from_vars(vs: Iterable[Var]) -> Monomial:
    exps: dict = {}
    for v in vs:
        exps[v] = exps.get(v, 0) + 1
    return tuple(sorted(exps.items()))


def tau_key(mono: Monomial) -> tuple:
    """Sort key realizing ``tau``: a larger key means a larger monomial."""
    return tuple(((-v[0], -v[1]), e) for v, e in mono)


def mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def mono_str(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(f"x[{v[0]},{v[1]}]" + (f"^{e}" if e > 1 else "") for v, e in mono)


class Polynomial:
    """Immutable sparse polynomial: a mapping monomial -> nonzero int."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def var(cls, i: int, j: int) -> "Polynomial":
        return cls({(((i, j), 1),): 1})

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls({ONE: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.const(1)
        for _ in range(k):
            out = out * self
        return out

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=tau_key)
        return mono, self.terms[mono]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: tau_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono_str(mono)
            if mono and mag == 1:
                text = body
            elif mono:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            parts.append((("-" if sign == "-" else "") if k == 0 else f" {sign} ") + text)
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"
