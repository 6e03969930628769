"""Automorphisms as words in affine, elementary and permutation generators.

Convention: a word ``[G1, ..., Gk]`` denotes G1∘...∘Gk, where maps act on the
polynomial ring and (F∘G)(x_i) = F(G(x_i)).  The tuple of F∘G is therefore
(g_1(F), ..., g_n(F)); appending a generator to a word substitutes the current
tuple into that generator's components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .coeff import Ring
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    NotElementaryWord,
    PreconditionFailed,
    TheoremViolated,
)
from .linalg import det_ring, inverse_matrix, mat_vec
from .poly import DEFAULT_BUDGET, Polynomial, identity_tuple
from .worder import Gamma, as_weight, deg_w, initial_form
from .wapprox import semigroup_member


# generators

@dataclass(frozen=True)
class Elementary:
    """x_l -> a*x_l + p with p free of x_l (l is 1-based)."""

    l: int
    a: object
    p: Polynomial

    def __post_init__(self):
        if not 1 <= self.l <= self.p.nvars:
            raise ArityMismatch(f"index {self.l} out of range")
        if self.p.involves(self.l):
            raise ValueError(f"p must not involve x{self.l}")
        ring = self.p.ring
        object.__setattr__(self, "a", ring.normalize(self.a))
        if not ring.is_unit(self.a):
            raise PreconditionFailed(f"{self.a} is not a unit")

    @property
    def nvars(self):
        return self.p.nvars

    @property
    def ring(self):
        return self.p.ring

    def apply_to(self, T, budget=DEFAULT_BUDGET):
        T = list(T)
        k = self.l - 1
        T[k] = T[k].scalar_mul(self.a) + self.p.substitute(T, budget)
        return tuple(T)

    def inverse(self):
        ring = self.ring
        ainv = ring.inv(self.a)
        return Elementary(self.l, ainv, self.p.scalar_mul(ring.neg(ainv)))

    def embed(self, m):
        return Elementary(self.l, self.a, self.p.embed(m))

    def to_json(self):
        return {"kind": "elem", "l": self.l, "a": str(self.a), "p": str(self.p)}


@dataclass(frozen=True)
class Permutation:
    """x_i -> x_{sigma(i)} (1-based)."""

    sigma: tuple
    ring: Ring

    def __post_init__(self):
        s = tuple(int(x) for x in self.sigma)
        if sorted(s) != list(range(1, len(s) + 1)):
            raise ValueError(f"{s} is not a permutation")
        object.__setattr__(self, "sigma", s)

    @property
    def nvars(self):
        return len(self.sigma)

    def apply_to(self, T, budget=DEFAULT_BUDGET):
        return tuple(T[s - 1] for s in self.sigma)

    def inverse(self):
        inv = [0] * len(self.sigma)
        for i, s in enumerate(self.sigma):
            inv[s - 1] = i + 1
        return Permutation(tuple(inv), self.ring)

    def embed(self, m):
        return Permutation(self.sigma + tuple(range(len(self.sigma) + 1, m + 1)), self.ring)

    def to_json(self):
        return {"kind": "perm", "sigma": list(self.sigma)}


@dataclass(frozen=True)
class Affine:
    """x_i -> Σ_j M_ij x_j + c_i."""

    matrix: tuple
    shift: tuple
    ring: Ring

    def __post_init__(self):
        ring = self.ring
        M = tuple(tuple(ring.normalize(x) for x in row) for row in self.matrix)
        c = tuple(ring.normalize(x) for x in self.shift)
        n = len(M)
        if any(len(row) != n for row in M) or len(c) != n:
            raise ArityMismatch("affine data is not square")
        if not ring.is_unit(det_ring(M, ring)):
            raise PreconditionFailed("affine matrix determinant is not a unit")
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "shift", c)

    @property
    def nvars(self):
        return len(self.matrix)

    def apply_to(self, T, budget=DEFAULT_BUDGET):
        out = []
        for row, c in zip(self.matrix, self.shift):
            acc = Polynomial.const(c, T[0].nvars, T[0].ring)
            for m, t in zip(row, T):
                if m:
                    acc = acc + t.scalar_mul(m)
            out.append(acc)
        return tuple(out)

    def inverse(self):
        Minv = inverse_matrix(self.matrix, self.ring)
        c = mat_vec(Minv, self.shift, self.ring)
        return Affine(tuple(map(tuple, Minv)), tuple(self.ring.neg(x) for x in c), self.ring)

    def embed(self, m):
        n = self.nvars
        M = [[self.matrix[i][j] if i < n and j < n else int(i == j) for j in range(m)] for i in range(m)]
        return Affine(M, tuple(self.shift) + (0,) * (m - n), self.ring)

    def to_json(self):
        return {
            "kind": "affine",
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "shift": [str(x) for x in self.shift],
        }


def elementary(l, a, p, nvars=None, ring=None):
    """Convenience: p may be a string."""
    if isinstance(p, str):
        from .coeff import QQ

        p = Polynomial.parse(p, nvars=nvars, ring=ring or QQ)
    return Elementary(l, a, p)


# words

class AutWord:
    """A generator word with its composed tuple cached."""

    def __init__(self, nvars, ring, generators=(), verify=False, budget=DEFAULT_BUDGET):
        self.nvars = nvars
        self.ring = ring
        self.generators = tuple(generators)
        for g in self.generators:
            if g.nvars != nvars or g.ring != ring:
                raise ArityMismatch("generator does not match the word's arity or ring")
        self.budget = budget
        self._tuple = None
        if verify:
            self.verify()

    @classmethod
    def identity(cls, nvars, ring):
        return cls(nvars, ring, ())

    @property
    def tuple(self):
        if self._tuple is None:
            T = identity_tuple(self.nvars, self.ring)
            for g in self.generators:
                T = g.apply_to(T, self.budget)
                if self.budget is not None and any(len(t) > self.budget for t in T):
                    raise BudgetExceeded(f"word tuple exceeds {self.budget} terms")
            self._tuple = T
        return self._tuple

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.tuple)

    def __getitem__(self, i):
        return self.tuple[i]

    def compose(self, other: "AutWord") -> "AutWord":
        if other.nvars != self.nvars or other.ring != self.ring:
            raise ArityMismatch("words of different arity or ring")
        w = AutWord(self.nvars, self.ring, self.generators + other.generators, budget=self.budget)
        if self._tuple is not None:
            T = self._tuple
            for g in other.generators:
                T = g.apply_to(T, self.budget)
            w._tuple = T
        return w

    def invert(self) -> "AutWord":
        return AutWord(self.nvars, self.ring, [g.inverse() for g in reversed(self.generators)], budget=self.budget)

    def verify(self) -> bool:
        T = self.tuple
        for g in reversed(self.generators):
            T = g.inverse().apply_to(T, self.budget)
        if T != identity_tuple(self.nvars, self.ring):
            raise PreconditionFailed("word composed with its inverse is not the identity")
        return True

    def embed(self, m) -> "AutWord":
        return AutWord(m, self.ring, [g.embed(m) for g in self.generators], budget=self.budget)

    def is_identity(self) -> bool:
        return self.tuple == identity_tuple(self.nvars, self.ring)

    def to_json(self):
        return [g.to_json() for g in self.generators]

    @classmethod
    def from_json(cls, data, nvars, ring, budget=DEFAULT_BUDGET):
        gens = []
        for item in data:
            kind = item.get("kind")
            if kind == "elem":
                p = Polynomial.parse(str(item.get("p", "0")), nvars=nvars, ring=ring)
                gens.append(Elementary(int(item["l"]), Fraction(str(item.get("a", "1"))), p))
            elif kind == "perm":
                gens.append(Permutation(tuple(item["sigma"]), ring))
            elif kind == "affine":
                M = [[Fraction(str(x)) for x in row] for row in item["matrix"]]
                c = [Fraction(str(x)) for x in item.get("shift", ["0"] * len(M))]
                gens.append(Affine(M, c, ring))
            else:
                raise ValueError(f"unknown generator kind {kind!r}")
        return cls(nvars, ring, gens, budget=budget)

    def __repr__(self):
        return f"AutWord({[str(f) for f in self.tuple]})"


def compose(F: AutWord, G: AutWord) -> AutWord:
    return F.compose(G)


def invert(F: AutWord) -> AutWord:
    return F.invert()


def as_tuple(F):
    if isinstance(F, AutWord):
        return F.tuple
    return tuple(F)


def permutation_word(sigma, ring):
    sigma = tuple(sigma)
    n = len(sigma)
    if sigma == tuple(range(1, n + 1)):
        return AutWord.identity(n, ring)
    return AutWord(n, ring, [Permutation(sigma, ring)])


# E_n^w membership

def in_E_w(F: AutWord, w) -> bool:
    if not isinstance(F, AutWord):
        raise NotElementaryWord("membership is certified by the word shape; pass an AutWord")
    if any(isinstance(g, Affine) for g in F.generators):
        raise NotElementaryWord("word contains an affine generator")
    w = as_weight(w)
    return all(initial_form(f, w).is_nonzerodivisor() for f in F.tuple)


# index sets and the dichotomy

def thm11_sets(F, I, w):
    """J = {j : f_j ∈ k[x_I]} and I0 = {i0 ∈ I : every deg f_j (j ∈ J) ∈ Σ_{I∖{i0}} Z≥0 w_i}."""
    T = as_tuple(F)
    w = as_weight(w)
    I = sorted(set(I))
    if not I:
        raise ValueError("I must be nonempty")
    outside = [k for k in range(1, len(w) + 1) if k not in I]
    J = [j for j, f in enumerate(T, start=1) if not any(f.involves(k) for k in outside)]
    degs = {j: deg_w(T[j - 1], w) for j in J}
    I0 = []
    for i0 in I:
        gens = [w[i - 1] for i in I if i != i0]
        if all(semigroup_member(degs[j], gens) is not None for j in J):
            I0.append(i0)
    return J, I0


@dataclass(frozen=True)
class CaseA:
    sigma: dict


@dataclass(frozen=True)
class CaseB:
    witness: int


def _match(J, I, ok):
    """Bipartite matching J -> I; a free target is taken before any augmenting path."""
    owner = {}

    def augment(j, seen):
        free = next((i for i in I if ok(j, i) and i not in owner), None)
        if free is not None:
            owner[free] = j
            return True
        for i in I:
            if ok(j, i) and i not in seen:
                seen.add(i)
                if i not in owner or augment(owner[i], seen):
                    owner[i] = j
                    return True
        return False

    for j in J:
        if not augment(j, set()):
            return None
    return {j: i for i, j in owner.items()}


def thm11_dichotomy(F, I, w, v=None):
    T = as_tuple(F)
    w = as_weight(w)
    v = as_weight(v) if v is not None else as_weight([Gamma.zero(w.rank)] * len(w))
    J, I0 = thm11_sets(T, I, w)
    I = sorted(set(I))
    degs = {j: deg_w(T[j - 1], w) for j in J}
    if len(J) == len(I):
        sigma = _match(J, I, lambda j, i: degs[j] == w[i - 1])
        if sigma is not None:
            return CaseA(sigma)
    total_J = sum((degs[j] for j in J), Gamma.zero(w.rank))
    total_I = sum((w[i - 1] for i in I), Gamma.zero(w.rank))
    if total_J > total_I or len(I) > len(J):
        forms = [initial_form(initial_form(T[j - 1], w), v) for j in J]
        for i in I0:
            if all(any(e[i - 1] == 0 for e in g.terms) for g in forms):
                return CaseB(i)
    raise TheoremViolated(f"neither case holds for I={I}, J={J}, I0={I0}")


def covering_index(F, w):
    """Smallest i with every deg f_j in Σ_{l≠i} Z≥0 w_l, or None."""
    T = as_tuple(F)
    w = as_weight(w)
    degs = [deg_w(f, w) for f in T]
    for i in range(1, len(w) + 1):
        gens = [w[l - 1] for l in range(1, len(w) + 1) if l != i]
        if all(semigroup_member(d, gens) is not None for d in degs):
            return i
    return None


def nonempty_subsets(n):
    for k in range(1, n + 1):
        for c in combinations(range(1, n + 1), k):
            yield c


# random words

def _random_unit(rng, ring):
    if ring.kind == "Q":
        return rng.choice([1, 1, -1, 2, -2, Fraction(1, 2)])
    while True:
        a = rng.randrange(1, ring.modulus)
        if ring.is_unit(a):
            return a


def _random_coeff(rng, ring):
    if ring.kind == "Q":
        return rng.choice([1, 1, 1, -1, -1, 2, -2, 3, Fraction(1, 2)])
    return rng.randrange(1, ring.modulus)


def random_elementary(rng, n, ring, l=None, max_terms=2, max_deg=2, allowed=None):
    l = rng.randrange(1, n + 1) if l is None else l
    others = [i for i in (allowed or range(1, n + 1)) if i != l]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * n
        if others:
            for _ in range(rng.randint(1, max_deg)):
                e[rng.choice(others) - 1] += 1
        terms[tuple(e)] = _random_coeff(rng, ring)
    return Elementary(l, _random_unit(rng, ring), Polynomial(n, ring, terms))


def random_affine(rng, n, ring):
    if not ring.is_field:
        raise PreconditionFailed("affine sampling needs a field")
    while True:
        M = [[rng.choice([0, 0, 1, 1, -1, 2]) for _ in range(n)] for _ in range(n)]
        if ring.is_unit(det_ring(M, ring)):
            c = [rng.choice([0, 0, 1, -1]) for _ in range(n)]
            return Affine(M, c, ring)


def random_tame(n, ring, length, term_budget=DEFAULT_BUDGET, seed=0, verify=True, kinds=None):
    """Seeded random word; ``kinds`` weights elem/affine/perm choices."""
    rng = random.Random(seed)
    kinds = kinds or {"elem": 7, "affine": 2, "perm": 1}
    names = list(kinds)
    gens = []
    for _ in range(length):
        kind = rng.choices(names, [kinds[k] for k in names])[0]
        if kind == "affine" and ring.is_field:
            gens.append(random_affine(rng, n, ring))
        elif kind == "perm":
            s = list(range(1, n + 1))
            rng.shuffle(s)
            gens.append(Permutation(tuple(s), ring))
        else:
            gens.append(random_elementary(rng, n, ring))
    word = AutWord(n, ring, gens, budget=term_budget)
    word.tuple
    if verify:
        word.verify()
    return word


def jacobian_is_unit_constant(F) -> bool:
    from .worder import jacobian, poly_det

    T = as_tuple(F)
    d = poly_det(jacobian(T))
    return d.is_constant() and not d.is_zero() and T[0].ring.is_unit(d.constant_term())
