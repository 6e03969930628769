"""Weighted degrees over Γ = Z^r with lexicographic order.

``Gamma`` is a tuple subclass, so Python's tuple comparison is already the
lexicographic order (first coordinate dominant).  ``NEG_INF`` is the degree of
the zero polynomial.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Sequence

from .errors import ArityMismatch, Inconclusive, NotAField, ZeroComponent
from .linalg import det_generic, minors
from .poly import Polynomial


class Gamma(tuple):
    """An element of Z^r; + and - are componentwise, ``k * g`` scales."""

    __slots__ = ()

    @classmethod
    def of(cls, value):
        if isinstance(value, Gamma):
            return value
        if isinstance(value, int):
            return cls((value,))
        return cls(int(x) for x in value)

    @classmethod
    def zero(cls, rank: int):
        return cls((0,) * rank)

    @property
    def rank(self):
        return len(self)

    def __add__(self, other):
        if other is NEG_INF:
            return NEG_INF
        if len(other) != len(self):
            raise ArityMismatch("Γ elements of different rank")
        return Gamma(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        if len(other) != len(self):
            raise ArityMismatch("Γ elements of different rank")
        return Gamma(a - b for a, b in zip(self, other))

    def __neg__(self):
        return Gamma(-a for a in self)

    def __mul__(self, k):
        return Gamma(a * k for a in self)

    __rmul__ = __mul__

    def is_pos(self) -> bool:
        return any(self) and next(a for a in self if a) > 0

    def is_nonneg(self) -> bool:
        return not any(self) or self.is_pos()

    def __repr__(self):
        return f"Gamma{tuple(self)!r}"


@total_ordering
class _MinusInfinity:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


NEG_INF = _MinusInfinity()


def gsum(values, rank):
    total = Gamma.zero(rank)
    for v in values:
        total = total + v
    return total


def multiple_of(d, g):
    """Return l >= 0 with d = l*g, or None."""
    if not any(g):
        return 0 if not any(d) else None
    k = next(i for i, a in enumerate(g) if a)
    if d[k] % g[k]:
        return None
    l = d[k] // g[k]
    if l < 0 or Gamma(g) * l != Gamma(d):
        return None
    return l


class Weight:
    """An n-tuple of Γ elements of a common rank."""

    __slots__ = ("entries", "rank", "_cols", "all_pos", "all_nonneg")

    def __init__(self, entries):
        if isinstance(entries, Weight):
            entries = entries.entries
        ents = tuple(Gamma.of(e) for e in entries)
        if not ents:
            raise ArityMismatch("empty weight")
        r = len(ents[0])
        if any(len(e) != r for e in ents):
            raise ArityMismatch("weight entries of different rank")
        self.entries = ents
        self.rank = r
        self._cols = tuple(tuple(e[k] for e in ents) for k in range(r))
        self.all_pos = all(e.is_pos() for e in ents)
        self.all_nonneg = all(e.is_nonneg() for e in ents)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, Weight) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        if self.rank == 1:
            return f"Weight({[e[0] for e in self.entries]})"
        return f"Weight({[tuple(e) for e in self.entries]})"

    def total(self) -> Gamma:
        return gsum(self.entries, self.rank)

    def dot(self, exps) -> Gamma:
        return Gamma(sum(a * c for a, c in zip(exps, col)) for col in self._cols)

    def permuted(self, order):
        """Weight whose i-th entry is self[order[i]-1] (1-based order)."""
        return Weight([self.entries[k - 1] for k in order])

    def sub(self, indices):
        return Weight([self.entries[k - 1] for k in indices])

    def to_json(self):
        return [list(e) for e in self.entries]


def as_weight(w) -> Weight:
    return w if isinstance(w, Weight) else Weight(w)


def _check_arity(f: Polynomial, w: Weight):
    if f.nvars != len(w):
        raise ArityMismatch(f"polynomial in {f.nvars} variables, weight of length {len(w)}")


def deg_w(f: Polynomial, w) -> Gamma:
    w = as_weight(w)
    _check_arity(f, w)
    if not f.terms:
        return NEG_INF
    return max(w.dot(e) for e in f.terms)


def initial_form(f: Polynomial, w) -> Polynomial:
    w = as_weight(w)
    _check_arity(f, w)
    if not f.terms:
        return f
    degs = {e: w.dot(e) for e in f.terms}
    top = max(degs.values())
    return Polynomial(f.nvars, f.ring, {e: c for e, c in f.terms.items() if degs[e] == top}, _clean=True)


def is_homogeneous(f: Polynomial, w) -> bool:
    w = as_weight(w)
    return len({w.dot(e) for e in f.terms}) <= 1


def homogeneous_parts(f: Polynomial, w) -> dict:
    w = as_weight(w)
    parts = {}
    for e, c in f.terms.items():
        parts.setdefault(w.dot(e), {})[e] = c
    return {d: Polynomial(f.nvars, f.ring, t, _clean=True) for d, t in parts.items()}


class Multidegree:
    __slots__ = ("entries", "total")

    def __init__(self, entries, rank):
        self.entries = tuple(entries)
        self.total = gsum(self.entries, rank)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if isinstance(other, Multidegree):
            return self.entries == other.entries
        return self.entries == tuple(Gamma.of(x) for x in other)

    def __repr__(self):
        return f"Multidegree({list(self.entries)}, total={self.total})"

    def to_json(self):
        def enc(d):
            return None if d is NEG_INF else list(d)

        return {"mdeg": [enc(d) for d in self.entries], "total": enc(self.total)}


def mdeg_w(F: Sequence[Polynomial], w) -> Multidegree:
    w = as_weight(w)
    return Multidegree([deg_w(f, w) for f in F], w.rank)


def total_deg_w(F, w):
    return mdeg_w(F, w).total


def initial_tuple(F: Sequence[Polynomial], w) -> tuple:
    out = []
    for i, f in enumerate(F):
        if f.is_zero():
            raise ZeroComponent(f"component {i + 1} is zero")
        out.append(initial_form(f, w))
    return tuple(out)


def jacobian(fs: Sequence[Polynomial]):
    fs = tuple(fs)
    n = fs[0].nvars
    return [[f.partial(j) for j in range(1, n + 1)] for f in fs]


def poly_det(matrix):
    z = matrix[0][0]
    zero = Polynomial.zero(z.nvars, z.ring)
    one = Polynomial.const(1, z.nvars, z.ring)
    return det_generic(matrix, zero, one)


def wedge_deg(fs: Sequence[Polynomial], w):
    """deg_w of df_1∧...∧df_r: max over r-subsets of deg_w(minor · x_{i1}···x_{ir})."""
    w = as_weight(w)
    fs = tuple(fs)
    if not fs:
        raise ArityMismatch("need at least one polynomial")
    for f in fs:
        _check_arity(f, w)
    r = len(fs)
    if r > fs[0].nvars:
        raise ArityMismatch("more forms than variables")
    J = jacobian(fs)
    best = NEG_INF
    for _, cols, sub in minors(J, r):
        m = poly_det(sub)
        if m.is_zero():
            continue
        d = deg_w(m, w) + gsum((w[c] for c in cols), w.rank)
        if best is NEG_INF or d > best:
            best = d
    return best


def initial_injective(F: Sequence[Polynomial], w) -> bool:
    """Whether the initial forms are algebraically independent (Jacobian criterion)."""
    w = as_weight(w)
    F = tuple(F)
    if len(F) != F[0].nvars:
        raise ArityMismatch("initial_injective needs a square tuple")
    ring = F[0].ring
    if not ring.is_field:
        raise NotAField(f"Jacobian criterion needs a field, got {ring}")
    Fw = initial_tuple(F, w)
    d = poly_det(jacobian(Fw))
    if not d.is_zero():
        return True
    if ring.characteristic != 0:
        raise Inconclusive("Jacobian vanishes in positive characteristic")
    return False


def is_permutation_of(d, w) -> bool:
    return sorted(d) == sorted(w)
