"""Sparse multivariate polynomials over an exact coefficient ring.

Variables are ``x1..xn`` and every public index is 1-based.  Terms live in a
dict ``{exponent tuple: coefficient}`` that never stores zeros; instances are
treated as immutable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .coeff import QQ, Ring
from .errors import ArityMismatch, BudgetExceeded

DEFAULT_BUDGET = 10**6


class Polynomial:
    __slots__ = ("nvars", "ring", "terms", "_hash")

    def __init__(self, nvars: int, ring: Ring = QQ, terms=None, _clean=False):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        self.ring = ring
        self._hash = None
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            norm = ring.normalize
            out = {}
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars or any(k < 0 for k in e):
                    raise ArityMismatch(f"bad exponent {e} for {nvars} variables")
                c = norm(c)
                if c != 0:
                    out[e] = c
            self.terms = out

    # constructors

    @classmethod
    def zero(cls, nvars, ring=QQ):
        return cls(nvars, ring, {}, _clean=True)

    @classmethod
    def const(cls, c, nvars, ring=QQ):
        return cls(nvars, ring, {(0,) * nvars: c})

    @classmethod
    def var(cls, i, nvars, ring=QQ):
        if not 1 <= i <= nvars:
            raise ArityMismatch(f"x{i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, ring, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps, nvars=None, ring=QQ, coeff=1):
        exps = tuple(exps)
        return cls(len(exps) if nvars is None else nvars, ring, {exps: coeff})

    @classmethod
    def parse(cls, text, nvars=None, ring=QQ):
        from .parse import parse_polynomial

        return parse_polynomial(text, nvars=nvars, ring=ring)

    # basic queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self) -> list:
        return sorted(self.terms, reverse=True)

    def items(self):
        """Terms in canonical (descending lexicographic) order."""
        return [(e, self.terms[e]) for e in sorted(self.terms, reverse=True)]

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self) -> set:
        """1-based indices of variables that actually occur."""
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i + 1)
        return used

    def involves(self, i) -> bool:
        return any(e[i - 1] for e in self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_nonzerodivisor(self) -> bool:
        return self.ring.content_is_unit(self.terms.values())

    # arithmetic

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.nvars != self.nvars or other.ring != self.ring:
            raise ArityMismatch(
                f"operands differ: {self.nvars} vars over {self.ring} vs "
                f"{other.nvars} vars over {other.ring}"
            )

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other, self.nvars, self.ring)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._from_raw(out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.normalize
        return Polynomial(self.nvars, self.ring, {e: norm(-c) for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return self._from_raw(out)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other, budget=None):
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.nvars, self.ring)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        n = self.nvars
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([ea[k] + eb[k] for k in range(n)])
                out[e] = get(e, 0) + ca * cb
            if budget is not None and len(out) > budget:
                raise BudgetExceeded(f"product exceeds {budget} terms")
        return self._from_raw(out)

    def scalar_mul(self, c):
        c = self.ring.normalize(c)
        return self._from_raw({e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        return self.pow(k)

    def pow(self, k: int, budget=None):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.const(1, self.nvars, self.ring)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, budget)
            k >>= 1
            if k:
                base = base.mul(base, budget)
        return result

    def _from_raw(self, raw):
        norm = self.ring.normalize
        out = {}
        for e, c in raw.items():
            c = norm(c)
            if c != 0:
                out[e] = c
        return Polynomial(self.nvars, self.ring, out, _clean=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other, self.nvars, self.ring)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.ring, frozenset(self.terms.items())))
        return self._hash

    # calculus and substitution

    def partial(self, i: int):
        if not 1 <= i <= self.nvars:
            raise ArityMismatch(f"x{i} out of range for {self.nvars} variables")
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            if e[k]:
                f = list(e)
                f[k] -= 1
                out[tuple(f)] = c * e[k]
        return self._from_raw(out)

    def substitute(self, images: Sequence["Polynomial"], budget=DEFAULT_BUDGET):
        """Return self(images[0], ..., images[r-1])."""
        images = tuple(images)
        if len(images) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} images, got {len(images)}")
        if not images:
            raise ArityMismatch("substitution into a polynomial with no variables")
        target = images[0]
        for g in images:
            target._check(g)
        powers = [[Polynomial.const(1, target.nvars, target.ring)] for _ in images]

        def power(i, k):
            cache = powers[i]
            while len(cache) <= k:
                cache.append(cache[-1].mul(images[i], budget))
            return cache[k]

        acc = {}
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    p = power(i, k)
                    term = p if term is None else term.mul(p, budget)
            if term is None:
                z = (0,) * target.nvars
                acc[z] = acc.get(z, 0) + c
                continue
            for te, tc in term.terms.items():
                acc[te] = acc.get(te, 0) + c * tc
            if budget is not None and len(acc) > budget:
                raise BudgetExceeded(f"substitution exceeds {budget} terms")
        return Polynomial(target.nvars, target.ring, acc)

    def embed(self, new_nvars: int):
        """View self inside a ring with more variables (pads exponents)."""
        if new_nvars < self.nvars:
            raise ArityMismatch("cannot embed into fewer variables")
        pad = (0,) * (new_nvars - self.nvars)
        return Polynomial(new_nvars, self.ring, {e + pad: c for e, c in self.terms.items()}, _clean=True)

    def rename(self, mapping: Sequence[int], new_nvars=None):
        """Send x_i to x_{mapping[i-1]} (1-based targets)."""
        m = new_nvars if new_nvars is not None else self.nvars
        out = {}
        for e, c in self.terms.items():
            f = [0] * m
            for i, k in enumerate(e):
                if k:
                    f[mapping[i] - 1] += k
            f = tuple(f)
            out[f] = out.get(f, 0) + c
        return Polynomial(m, self.ring, out)

    def restrict(self, keep: Sequence[int]):
        """Drop to the variables listed in ``keep`` (1-based, in order)."""
        pos = [k - 1 for k in keep]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in range(self.nvars) if i not in pos):
                raise ArityMismatch("polynomial involves a dropped variable")
            out[tuple(e[i] for i in pos)] = c
        return Polynomial(len(pos), self.ring, out, _clean=True)

    def change_ring(self, ring: Ring):
        return Polynomial(self.nvars, ring, dict(self.terms))

    # printing

    def __str__(self):
        from .parse import format_polynomial

        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, nvars={self.nvars}, ring={self.ring})"


def variables(nvars: int, ring: Ring = QQ):
    return tuple(Polynomial.var(i, nvars, ring) for i in range(1, nvars + 1))


def identity_tuple(nvars: int, ring: Ring = QQ):
    return variables(nvars, ring)


def compose_tuples(F: Sequence[Polynomial], G: Sequence[Polynomial], budget=DEFAULT_BUDGET):
    """Tuple of F∘G, i.e. (g_1(F), ..., g_r(F))."""
    return tuple(g.substitute(F, budget) for g in G)


def check_tuple(F: Iterable[Polynomial]):
    F = tuple(F)
    if not F:
        raise ArityMismatch("empty tuple")
    for f in F[1:]:
        F[0]._check(f)
    return F
