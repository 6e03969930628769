"""Weight approximation over finite exponent sets.

* ``strict_positive_vector``: integer v with a·v >= 1 for all a in S, by exact
  Fourier–Motzkin elimination.
* ``approximate_weight``: an integer weight v inducing the same comparisons as
  a Γ-valued weight w on a finite set S.
* ``monomializing_weight`` / ``refine_weight``: weights making initial forms
  monomials, or reproducing iterated initial forms in one step.
* ``semigroup_member``: membership in Z≥0 g_1 + ... + Z≥0 g_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import ceil, floor, gcd

from .errors import InternalInfeasible, UnboundedSemigroup, ZeroComponent
from .poly import Polynomial
from .worder import Gamma, Weight, as_weight, initial_form


class _Infeasible:
    def __repr__(self):
        return "Infeasible"

    def __bool__(self):
        return False


Infeasible = _Infeasible()


def _primitive(v):
    g = reduce(gcd, (abs(x) for x in v), 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _lcm(a, b):
    return a * b // gcd(a, b)


# Fourier–Motzkin

def strict_positive_vector(S):
    """Integer v with a·v >= 1 for every a in S, or ``Infeasible``.

    The system {a·v >= 1} is feasible over Q iff the homogeneous strict system
    {a·v > 0} is (scale any solution), so the elimination runs on the latter,
    where every constraint can be kept as a primitive integer vector.
    """
    S = [tuple(int(x) for x in a) for a in S]
    if not S:
        return ()
    n = len(S[0])
    if any(len(a) != n for a in S):
        raise ValueError("vectors of different dimension")
    system = {_primitive(a) for a in S}
    stages = []
    for k in range(n):
        if any(not any(a) for a in system):
            return Infeasible
        stages.append(system)
        pos = [a for a in system if a[k] > 0]
        neg = [a for a in system if a[k] < 0]
        nxt = {a for a in system if a[k] == 0}
        for p in pos:
            for q in neg:
                c = tuple(-q[k] * x + p[k] * y for x, y in zip(p, q))
                nxt.add(_primitive(c))
        system = nxt
    if any(not any(a) for a in system):
        return Infeasible

    v = [Fraction(0)] * n
    for k in reversed(range(n)):
        lo = hi = None
        for a in stages[k]:
            if a[k] == 0:
                continue
            rest = sum(a[j] * v[j] for j in range(k + 1, n))
            bound = Fraction(-rest, a[k])
            if a[k] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        v[k] = _pick(lo, hi)
    den = reduce(_lcm, (x.denominator for x in v), 1)
    out = _primitive([int(x * den) for x in v])
    for a in S:
        if sum(x * y for x, y in zip(a, out)) < 1:
            raise InternalInfeasible(f"elimination produced a bad vector {out} for {a}")
    return out


def _pick(lo, hi):
    """A value strictly inside (lo, hi), preferring small integers."""
    if lo is None and hi is None:
        return Fraction(0)
    if hi is None:
        return Fraction(floor(lo) + 1)
    if lo is None:
        return Fraction(ceil(hi) - 1)
    if lo >= hi:
        raise InternalInfeasible("empty interval during back-substitution")
    if lo < 0 < hi:
        return Fraction(0)
    cand = floor(lo) + 1
    if cand < hi:
        return Fraction(cand)
    return (lo + hi) / 2


# weight approximation

@dataclass(frozen=True)
class EquivWitness:
    v: tuple
    S: tuple
    w: Weight

    def verify(self) -> bool:
        return equivalent_on(self.S, self.w, self.v)


def equivalent_on(S, w, v) -> bool:
    """Exhaustive check of a·w >= b·w  <=>  a·v >= b·v over all pairs of S."""
    w = as_weight(w)
    vals = [(w.dot(a), sum(x * y for x, y in zip(a, v))) for a in S]
    for gw, iv in vals:
        for hw, jv in vals:
            if (gw >= hw) != (iv >= jv):
                return False
    return True


def approximate_weight(S, w, preserve_signs=False) -> EquivWitness:
    """Integer v with w ∼_S v.

    Writing w_i = Σ_k u_ik e_k in the coordinate basis of Z^r, any v' ∈ Z^r gives
    v_i = Σ_k v'_k u_ik.  Pairs with equal w-value get equal v-value for free, so
    only the strictly increasing gaps between the sorted distinct w-values need
    v'·gap > 0; the other strict pairs follow by transitivity.
    """
    w = as_weight(w)
    n = len(w)
    S = tuple(sorted({tuple(int(x) for x in a) for a in S}))
    if any(len(a) != n for a in S):
        raise ValueError("support vectors do not match the weight length")
    work = set(S)
    if preserve_signs:
        work.add((0,) * n)
        for i in range(n):
            work.add(tuple(int(i == j) for j in range(n)))
    values = sorted({w.dot(a) for a in work})
    gaps = [tuple(b - a for a, b in zip(lo, hi)) for lo, hi in zip(values, values[1:])]
    if gaps:
        vp = strict_positive_vector(gaps)
        if vp is Infeasible:
            raise InternalInfeasible("no integer functional separates lexicographically ordered values")
    else:
        vp = (1,) + (0,) * (w.rank - 1)
    v = tuple(sum(vp[k] * w[i][k] for k in range(w.rank)) for i in range(n))
    witness = EquivWitness(v, tuple(sorted(work)), w)
    if not witness.verify():
        raise InternalInfeasible(f"approximation {v} does not reproduce the order of {w}")
    return EquivWitness(v, S, w)


def monomializing_weight(fs) -> Weight:
    """Rank-1 weight v_j = (B+1)^(j-1) with B = 1 + max exponent; each f^v is a term."""
    fs = list(fs)
    if any(f.is_zero() for f in fs):
        raise ZeroComponent("cannot monomialize the zero polynomial")
    n = fs[0].nvars
    top = max((max(e, default=0) for f in fs for e in f.terms), default=0)
    base = top + 2
    return Weight([base**j for j in range(n)])


def refine_weight(ws, fs) -> Weight:
    """Single rank-1 weight w with (...(f^{w_1})^{w_2}...)^{w_s} = f^w for every f."""
    ws = [as_weight(x) for x in ws]
    fs = list(fs)
    if not ws:
        raise ValueError("need at least one weight")
    if any(f.is_zero() for f in fs):
        raise ZeroComponent("refine_weight needs nonzero polynomials")
    S = sorted({e for f in fs for e in f.terms})
    positive = ws[0].all_pos
    if len(ws) == 1:
        return Weight(approximate_weight(S, ws[0], preserve_signs=True).v)
    vp = refine_weight(ws[:-1], fs).entries
    vp = tuple(x[0] for x in vp)
    vpp = approximate_weight(S, ws[-1], preserve_signs=True).v

    def dot(e, v):
        return sum(a * b for a, b in zip(e, v))

    t0 = None
    for f in fs:
        top = initial_form(f, Weight(vp))
        rest = [e for e in f.terms if e not in top.terms]
        if not rest:
            continue
        D = dot(next(iter(top.terms)), vp)
        M = max(dot(a, vpp) for a in top.terms)
        for b in rest:
            gap = D - dot(b, vp)
            slope = dot(b, vpp) - M
            if slope > 0:
                t = Fraction(gap, slope)
                t0 = t if t0 is None else min(t0, t)
    if positive:
        for a, b in zip(vp, vpp):
            if b < 0:
                t = Fraction(a, -b)
                t0 = t if t0 is None else min(t0, t)
    t = Fraction(1) if t0 is None else t0 / 2
    v = [t.denominator * a + t.numerator * b for a, b in zip(vp, vpp)]
    g = reduce(gcd, (abs(x) for x in v), 0)
    if g > 1:
        v = [x // g for x in v]
    return Weight(v)


def iterated_initial_form(f: Polynomial, ws) -> Polynomial:
    for w in ws:
        f = initial_form(f, w)
    return f


# semigroups

def semigroup_member(d, gens):
    """Lexicographically smallest (a_i) >= 0 with Σ a_i gens_i = d, or None."""
    d = Gamma.of(d)
    gens = [Gamma.of(g) for g in gens]
    r = len(d)
    if any(len(g) != r for g in gens):
        raise ValueError("rank mismatch")
    live = [i for i, g in enumerate(gens) if any(g)]
    if not any(d):
        return tuple([0] * len(gens))
    if not live:
        return None
    sub = [gens[i] for i in live]
    phi = strict_positive_vector(sub)
    if phi is Infeasible:
        if r == 1:
            coeffs = _mixed_sign_rank1(d[0], [g[0] for g in sub])
        else:
            raise UnboundedSemigroup("generators admit no strictly positive functional")
    else:
        coeffs = _bounded_search(d, sub, phi)
    if coeffs is None:
        return None
    out = [0] * len(gens)
    for i, c in zip(live, coeffs):
        out[i] = c
    return tuple(out)


def _bounded_search(d, gens, phi):
    val = [sum(a * b for a, b in zip(g, phi)) for g in gens]
    k = len(gens)
    memo = {}

    def feasible(i, rem):
        if i == k:
            return not any(rem)
        key = (i, rem)
        if key in memo:
            return memo[key]
        budget = sum(a * b for a, b in zip(rem, phi))
        ok = False
        if budget >= 0:
            for a in range(budget // val[i] + 1):
                if feasible(i + 1, tuple(x - a * y for x, y in zip(rem, gens[i]))):
                    ok = True
                    break
        memo[key] = ok
        return ok

    rem = tuple(d)
    if not feasible(0, rem):
        return None
    coeffs = []
    for i in range(k):
        budget = sum(a * b for a, b in zip(rem, phi))
        for a in range(budget // val[i] + 1):
            nxt = tuple(x - a * y for x, y in zip(rem, gens[i]))
            if feasible(i + 1, nxt):
                coeffs.append(a)
                rem = nxt
                break
    return coeffs


def _mixed_sign_rank1(d, gens):
    """Rank 1 with generators of both signs: the semigroup is gcd(gens)·Z.

    Coefficients are fixed greedily from the left, each the least value whose
    remainder the later generators can still reach.  A one-signed tail reaches
    every multiple of its gcd beyond the Frobenius bound (< max^2), so the
    search for each coefficient is finite.
    """
    g = reduce(gcd, (abs(x) for x in gens), 0)
    if d % g:
        return None
    mx = max(abs(x) for x in gens)

    def reach(i, rem):
        tail = gens[i:]
        if not tail:
            return rem == 0
        if any(x > 0 for x in tail) and any(x < 0 for x in tail):
            return rem % reduce(gcd, (abs(x) for x in tail), 0) == 0
        s = 1 if tail[0] > 0 else -1
        if rem * s < 0:
            return False
        return _bounded_search((rem,), [(x,) for x in tail], (s,)) is not None

    coeffs = []
    rem = d
    for i, x in enumerate(gens):
        bound = (abs(rem) + mx * mx) // abs(x) + mx + 1
        a = next(a for a in range(bound + 1) if reach(i + 1, rem - a * x))
        coeffs.append(a)
        rem -= a * x
    assert rem == 0
    return coeffs
