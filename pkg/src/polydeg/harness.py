"""Seeded property suites over random automorphisms and weights.

Every suite returns a :class:`SuiteReport`.  A failure is a counterexample to
a proven statement (or to a certificate check); a flagged case is one the
bounded search could not settle and is reported separately.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .autmap import (
    Affine,
    AutWord,
    Elementary,
    Permutation,
    covering_index,
    nonempty_subsets,
    random_elementary,
    random_tame,
    thm11_dichotomy,
)
from .coeff import QQ, mod_ring, prime_field
from .errors import BudgetExceeded, PreconditionFailed, TheoremViolated
from .linalg import det_ring
from .poly import Polynomial
from .sured import (
    ExprWitness,
    elementary_reduction_search,
    plane_proportionality,
    no_sured_in_S,
    s_shape,
    su_inequality_check,
    InequalityHolds,
)
from .tamecert import (
    chain_realize,
    factor_min_degree,
    realize_ascending,
    realize_lem73,
    realize_thm72,
    realize_sc,
    realize_small,
    lem73_conditions,
    small_degree_window,
)
from .wapprox import (
    Infeasible,
    approximate_weight,
    iterated_initial_form,
    refine_weight,
    semigroup_member,
    strict_positive_vector,
)
from .worder import NEG_INF, Gamma, Weight, deg_w, initial_form, initial_injective, is_permutation_of, mdeg_w, wedge_deg


@dataclass
class SuiteReport:
    suite: str
    cases: int
    passed: int = 0
    failures: list = field(default_factory=list)
    flagged: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def fail(self, **info):
        self.failures.append(info)

    def bump(self, key, k=1):
        self.stats[key] = self.stats.get(key, 0) + k

    def to_json(self):
        return {
            "suite": self.suite,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
            "flagged": self.flagged[:20],
            "flagged_count": len(self.flagged),
            "stats": dict(sorted(self.stats.items())),
            "ok": self.ok,
        }


def _timed(fn):
    def run(cases, seed=0, **kw):
        t0 = time.perf_counter()
        rep = fn(cases, seed, **kw)
        rep.elapsed = time.perf_counter() - t0
        return rep

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# random weights

def random_weight(rng, n, rank=None, low=1, high=5, positive=True):
    rank = rank or rng.choice([1, 1, 1, 2])
    out = []
    for _ in range(n):
        while True:
            g = Gamma(rng.randint(-2 if rank > 1 else low, high) for _ in range(rank))
            if (g.is_pos() if positive else g.is_nonneg()) and (rank > 1 or g[0] >= (low if positive else 0)):
                break
        out.append(g)
    return Weight(out)


SPECIAL_WEIGHTS = [Weight([1, 1, 1]), Weight([10, 1, 1]), Weight([1, 2, 3]), Weight([2, 2, 5])]


def weights_for(rng, k):
    ws = [SPECIAL_WEIGHTS[rng.randrange(len(SPECIAL_WEIGHTS))]]
    while len(ws) < k:
        ws.append(random_weight(rng, 3))
    return ws


def _word_seed(seed, i):
    return seed * 1_000_003 + i


# degree bound and minimality

@_timed
def suite_thm33(cases, seed=0, weights_per_word=10, max_length=8):
    """deg_w F >= |w|; equality ⟺ mdeg a permutation of w ⟺ initial forms independent; inverse keeps mdeg = w."""
    rep = SuiteReport("thm33", cases)
    rng = random.Random(seed)
    for c in range(cases):
        word = random_tame(3, QQ, rng.randint(1, max_length), seed=_word_seed(seed, c), verify=False)
        T = word.tuple
        for w in weights_for(rng, weights_per_word):
            md = mdeg_w(T, w)
            tot = md.total
            if tot < w.total():
                rep.fail(case=c, w=w.to_json(), why="deg_w F < |w|")
                continue
            eq = tot == w.total()
            perm = is_permutation_of(md.entries, w.entries)
            inj = initial_injective(T, w)
            if not (eq == perm == inj):
                rep.fail(case=c, w=w.to_json(), why="equivalence", eq=eq, perm=perm, inj=inj)
                continue
            if eq:
                rep.bump("minimal")
            if md.entries == w.entries:
                rep.bump("mdeg_equals_w")
                if mdeg_w(word.invert().tuple, w).entries != w.entries:
                    rep.fail(case=c, w=w.to_json(), why="inverse mdeg differs from w")
                    continue
            rep.passed += 1
    rep.cases = cases * weights_per_word
    return rep


@_timed
def suite_thm11(cases, seed=0, weights_per_word=5, max_length=6):
    """The index-set dichotomy never fails and the covering index exists above |w|."""
    rep = SuiteReport("thm11", cases)
    rng = random.Random(seed)
    subsets = list(nonempty_subsets(3))
    for c in range(cases):
        word = random_tame(3, QQ, rng.randint(1, max_length), seed=_word_seed(seed, c), verify=False,
                           kinds={"elem": 6, "perm": 2, "affine": 1})
        T = word.tuple
        for w in weights_for(rng, weights_per_word):
            bad = False
            v = Weight([Gamma(rng.randint(-3, 3) for _ in range(w.rank)) for _ in range(3)])
            for I in subsets:
                for vv in (None, v):
                    try:
                        thm11_dichotomy(T, I, w, vv)
                    except TheoremViolated as exc:
                        rep.fail(case=c, w=w.to_json(), I=list(I), why=str(exc))
                        bad = True
            if mdeg_w(T, w).total > w.total():
                rep.bump("above_minimal")
                if covering_index(T, w) is None:
                    rep.fail(case=c, w=w.to_json(), why="no covering index")
                    bad = True
            if not bad:
                rep.passed += 1
    rep.cases = cases * weights_per_word
    return rep


# weight approximation

def brute_positive_vector(S, bound=6):
    dim = len(S[0])
    for v in product(range(-bound, bound + 1), repeat=dim):
        if all(sum(a * b for a, b in zip(s, v)) >= 1 for s in S):
            return v
    return None


def _random_poly(rng, n, ring=QQ, terms=4, max_exp=3):
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(0, max_exp) for _ in range(n))
        out[e] = rng.choice([1, -1, 2, 3, Fraction(1, 2)])
    p = Polynomial(n, ring, out)
    return p if not p.is_zero() else Polynomial.var(1, n, ring)


@_timed
def suite_wapprox(cases, seed=0):
    """Positive vectors agree with a box search; approximations and refinements pass exhaustive checks."""
    rep = SuiteReport("wapprox", cases)
    rng = random.Random(seed)
    for c in range(cases):
        ok = True
        dim = rng.randint(1, 3)
        S = [tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(rng.randint(1, 5))]
        v = strict_positive_vector(S)
        box = brute_positive_vector(S)
        if v is Infeasible and box is not None:
            rep.fail(case=c, S=S, why="box found a vector where elimination reported infeasible")
            ok = False
        if v is not Infeasible:
            rep.bump("feasible")
            if any(sum(a * b for a, b in zip(s, v)) < 1 for s in S):
                rep.fail(case=c, S=S, why="returned vector violates a constraint")
                ok = False
        # approximation
        n = rng.randint(1, 3)
        w = random_weight(rng, n, rank=rng.randint(1, 3), low=-3, high=4, positive=False)
        pts = [tuple(rng.randint(0, 4) for _ in range(n)) for _ in range(rng.randint(1, 8))]
        wit = approximate_weight(pts, w)
        if not wit.verify():
            rep.fail(case=c, why="approximation witness fails", w=w.to_json(), S=pts)
            ok = False
        # refinement
        fs = [_random_poly(rng, n) for _ in range(rng.randint(1, 3))]
        ws = [random_weight(rng, n, rank=rng.randint(1, 2), low=0, high=4, positive=False) for _ in range(rng.randint(1, 3))]
        rw = refine_weight(ws, fs)
        if any(iterated_initial_form(f, ws) != initial_form(f, rw) for f in fs):
            rep.fail(case=c, why="refined weight disagrees with iterated initial forms", ws=[x.to_json() for x in ws])
            ok = False
        if ok:
            rep.passed += 1
    return rep


# realizers

CHECK_RINGS = (QQ, prime_field(5), mod_ring(4), mod_ring(6))


def _cross_ring(rep, cert, tag):
    for ring in CHECK_RINGS:
        again = cert.over(ring)
        if not again.ok:
            rep.fail(kind=tag, ring=str(ring), checks=again.checks, target=[list(x) for x in cert.target])
            return False
    return True


def _rand_combo(rng, gens, max_coeff=2):
    total = Gamma.zero(len(gens[0]))
    for g in gens:
        total = total + g * rng.randint(0, max_coeff)
    return total


def _chain_request(rng):
    n = 3
    w = Weight([rng.randint(1, 4) for _ in range(n)])
    sigma = tuple(rng.sample(range(1, n + 1), n))
    tau = tuple(rng.sample(range(1, n + 1), n))
    r = rng.randint(1, n)
    es = [w[t - 1] for t in tau]
    ds = []
    for i in range(n):
        if i >= r:
            ds.append(es[i])
            continue
        span = ds[:i] + es[i + 1:]
        d = es[i] if rng.random() < 0.2 else _rand_combo(rng, span)
        if d < es[i] or semigroup_member(d, span) is None:
            return None
        ds.append(d)
    d = [None] * n
    for i, s in enumerate(sigma):
        d[s - 1] = ds[i]
    return w, sigma, tau, r, d


@_timed
def suite_realize(cases, seed=0, attempts=20000):
    """Certificates from the realizers re-verify over Q, F_5, Z/4 and Z/6."""
    rep = SuiteReport("realize", cases)
    rng = random.Random(seed)
    kinds = ["chain", "thm72", "lem73"]
    made = 0
    tries = 0
    while made < cases and tries < attempts:
        tries += 1
        kind = kinds[made % 3]
        cert = None
        if kind == "chain":
            req = _chain_request(rng)
            if req is None:
                continue
            w, sigma, tau, r, d = req
            cert = chain_realize(None, sigma, tau, r, d, w.entries, w, QQ)
        elif kind == "thm72":
            w = Weight([rng.randint(1, 4) for _ in range(3)])
            d1 = _rand_combo(rng, [w[1], w[2]])
            d2 = _rand_combo(rng, [d1, w[2]])
            d3 = _rand_combo(rng, [d1, d2])
            try:
                cert = realize_thm72([d1, d2, d3], w)
            except PreconditionFailed:
                continue
        else:
            w = Weight(sorted(rng.randint(1, 4) for _ in range(3)))
            dp = Gamma((rng.randint(1, 4),))
            es = sorted(rng.randint(1, 4) for _ in range(3))
            d = [dp * e for e in es]
            choices = [(l, m) for l in range(1, 4) for m in range(2, 4)]
            rng.shuffle(choices)
            for l, m in choices:
                try:
                    if all(lem73_conditions(d, w, dp, l, m).values()):
                        cert = realize_lem73(d, w, dp, l, m)
                        break
                except PreconditionFailed:
                    break
            if cert is None:
                continue
        made += 1
        rep.bump(kind)
        if not cert.ok:
            rep.fail(kind=kind, checks=cert.checks)
            continue
        if _cross_ring(rep, cert, kind):
            rep.passed += 1
    rep.stats["attempts"] = tries
    if made < cases:
        rep.fail(why=f"only {made} requests satisfied the preconditions in {tries} attempts")
    # ascending degrees with a prefix-semigroup member, unit weights
    for n in (3, 4, 5):
        for _ in range(max(1, cases // 20)):
            base = sorted(rng.randint(1, 6) for _ in range(n - 1))
            idx = rng.randint(1, n - 1)
            extra = _rand_combo(rng, [Gamma((x,)) for x in base[:idx]], 3)
            if not any(extra):
                extra = Gamma((base[0],))
            d = sorted([Gamma((x,)) for x in base] + [extra])
            try:
                cert = realize_ascending(d)
            except PreconditionFailed as exc:
                rep.fail(kind="ascending", n=n, d=[list(x) for x in d], why=str(exc))
                continue
            rep.bump(f"ascending_n{n}")
            _cross_ring(rep, cert, "ascending")
    return rep


# minimal-degree factorization

def _block_affine(rng, w, ring):
    n = len(w)
    M = [[0] * n for _ in range(n)]
    classes = {}
    for i, x in enumerate(w):
        classes.setdefault(x, []).append(i)
    for idx in classes.values():
        while True:
            blk = [[rng.choice([0, 1, 1, -1, 2]) for _ in idx] for _ in idx]
            if det_ring(blk, ring) != 0:
                break
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                M[i][j] = blk[a][b]
    c = [rng.choice([0, 0, 1, -2]) for _ in range(n)]
    return Affine(M, c, ring)


def _filtered_elem(rng, w, ring):
    n = len(w)
    l = rng.randint(1, n)
    others = [j for j in range(1, n + 1) if j != l]
    terms = {}
    for _ in range(rng.randint(1, 3)):
        e = [0] * n
        for _ in range(rng.randint(1, 4)):
            j = rng.choice(others)
            e[j - 1] += 1
            if w.dot(e) > w[l - 1]:
                e[j - 1] -= 1
                break
        terms[tuple(e)] = rng.choice([1, -1, 2, Fraction(1, 3)])
    return Elementary(l, rng.choice([1, -1, 2]), Polynomial(n, ring, terms))


def minimal_word(rng, w, ring=QQ, length=6):
    """Word with deg_w = |w|: w-filtered generators, then a component permutation."""
    n = len(w)
    gens = [_block_affine(rng, w, ring) if rng.random() < 0.3 else _filtered_elem(rng, w, ring) for _ in range(length)]
    s = list(range(1, n + 1))
    rng.shuffle(s)
    gens.append(Permutation(tuple(s), ring))
    return AutWord(n, ring, gens)


@_timed
def suite_factor(cases, seed=0):
    """Minimal-degree automorphisms factor into words that recompose exactly."""
    rep = SuiteReport("factor", cases)
    rng = random.Random(seed)
    for c in range(cases):
        n = rng.choice([2, 3, 3, 4])
        w = Weight([rng.randint(1, 3) for _ in range(n)])
        word = minimal_word(rng, w, length=rng.randint(1, 7))
        T = word.tuple
        if mdeg_w(T, w).total != w.total():
            rep.fail(case=c, why="generator produced a non-minimal map")
            continue
        cert = factor_min_degree(T, w)
        if cert.word.tuple != T:
            rep.fail(case=c, why="recomposition differs")
            continue
        rep.bump("generators", len(cert.word.generators))
        rep.passed += 1
    return rep


# S(w, k) samples

def random_S_element(rng, w, ring=QQ, length=4, max_tries=200):
    """Automorphism with f_3 = αx_3 + p (p ∈ k[x1,x2], deg_w p <= w_3) and deg_w F > |w|."""
    for _ in range(max_tries):
        terms = {}
        for _ in range(rng.randint(0, 2)):
            e = [0, 0, 0]
            for _ in range(rng.randint(1, 3)):
                j = rng.randint(1, 2)
                e[j - 1] += 1
                if w.dot(e) > w[2]:
                    e[j - 1] -= 1
                    break
            terms[tuple(e)] = rng.choice([1, -1, 2])
        gens = [Elementary(3, rng.choice([1, -1, 2]), Polynomial(3, ring, terms))]
        for _ in range(length):
            if rng.random() < 0.25:
                while True:
                    blk = [[rng.choice([0, 1, 1, -1]) for _ in range(2)] for _ in range(2)]
                    if det_ring(blk, ring) != 0:
                        break
                M = [blk[0] + [0], blk[1] + [0], [0, 0, 1]]
                gens.append(Affine(M, [rng.choice([0, 1]), rng.choice([0, -1]), 0], ring))
            else:
                gens.append(random_elementary(rng, 3, ring, l=rng.randint(1, 2), max_terms=2, max_deg=2))
        try:
            word = AutWord(3, ring, gens, budget=2000)
            T = word.tuple
        except BudgetExceeded:
            continue
        if s_shape(T, w) is not None:
            return word
    return None


def _span_disjunction(d):
    return any(semigroup_member(d[i], [d[j] for j in range(3) if j != i]) is not None for i in range(3))


@_timed
def suite_reduction(cases, seed=0, budget=64):
    """Elements of S(w, Q) ∩ T_3 admit an elementary reduction; their degrees satisfy the membership disjunction."""
    rep = SuiteReport("reduction", cases)
    rng = random.Random(seed)
    for c in range(cases):
        w = Weight([rng.randint(1, 4) for _ in range(3)]) if rng.random() < 0.7 else random_weight(rng, 3, rank=2)
        word = random_S_element(rng, w, length=rng.randint(1, 4))
        if word is None:
            rep.flagged.append({"case": c, "why": "no sample found"})
            continue
        T = word.tuple
        d = mdeg_w(T, w).entries
        if not _span_disjunction(d):
            rep.fail(case=c, why="membership disjunction fails", d=[list(x) for x in d])
            continue
        res = elementary_reduction_search(T, w, budget)
        if res.status == "found":
            rep.bump(f"stage_{res.stage}")
            rep.passed += 1
        elif res.status == "budget":
            rep.flagged.append({"case": c, "w": w.to_json(), "F": [str(f) for f in T]})
        else:
            rep.fail(case=c, why="no reduction although deg_w F > |w|", F=[str(f) for f in T])
    return rep


@_timed
def suite_fixed_last(cases, seed=0):
    """Degrees of S(w, Q) samples in the membership case, and of maps in the small-degree window, are realized with certificates."""
    rep = SuiteReport("fixed_last", cases)
    rng = random.Random(seed)
    for c in range(cases):
        w = Weight([rng.randint(1, 4) for _ in range(3)])
        word = random_S_element(rng, w, length=rng.randint(1, 4))
        ok = True
        if word is not None:
            d = mdeg_w(word.tuple, w).entries
            if _span_disjunction(d):
                try:
                    realize_sc(d, w)
                    rep.bump("fixed_x3")
                except PreconditionFailed as exc:
                    rep.fail(case=c, route="fixed_x3", w=w.to_json(), d=[list(x) for x in d], why=str(exc))
                    ok = False
        T = random_tame(3, QQ, rng.randint(1, 6), seed=_word_seed(seed, c), verify=False).tuple
        d = mdeg_w(T, w).entries
        if small_degree_window(d, w):
            try:
                realize_small(d, w)
                rep.bump("window")
            except PreconditionFailed as exc:
                rep.fail(case=c, route="window", w=w.to_json(), d=[list(x) for x in d], why=str(exc))
                ok = False
        if ok:
            rep.passed += 1
    return rep


# SU refutations

def su_candidate(F, sigma, a, b, c, Q):
    """G with (F_σ, G_σ) meeting SU1 by construction: G_σ = F_σ∘(x1+a x3²+c x3, x2+b x3, x3)∘(x1, x2, x3+Q)."""
    Fs = [F[k - 1] for k in sigma]
    g1 = Fs[0] + (Fs[2] * Fs[2]).scalar_mul(a) + Fs[2].scalar_mul(c)
    g2 = Fs[1] + Fs[2].scalar_mul(b)
    g3 = Fs[2] + Q.substitute([g1, g2])
    Gs = [g1, g2, g3]
    G = [None] * 3
    for i, k in enumerate(sigma):
        G[k - 1] = Gs[i]
    return tuple(G)


SMALL_Q = ["0", "x1", "x2", "x1^2", "x1*x2", "x2^2 - x1"]


@_timed
def suite_su_refute(cases, seed=0):
    """No element of S(w, Q) passes all SU conditions against bounded candidates."""
    rep = SuiteReport("su_refute", cases)
    rng = random.Random(seed)
    Qs = [Polynomial.parse(q, 2) for q in SMALL_Q]
    for c in range(cases):
        w = Weight([rng.randint(1, 3) for _ in range(3)])
        word = random_S_element(rng, w, length=rng.randint(1, 3))
        if word is None:
            rep.flagged.append({"case": c, "why": "no sample found"})
            continue
        F = word.tuple
        bad = False
        for sigma in permutations((1, 2, 3)):
            for a, b, cc in product((0, 1, -1), repeat=3):
                for Q in rng.sample(Qs, 2):
                    G = su_candidate(F, sigma, a, b, cc, Q)
                    try:
                        ref = no_sured_in_S(F, G, sigma, w, Q=Q)
                    except TheoremViolated as exc:
                        rep.fail(case=c, sigma=sigma, why=str(exc))
                        bad = True
                        continue
                    rep.bump(f"refuted_{ref.condition}")
        if not bad:
            rep.passed += 1
    return rep


# n = 2 proportionality

@_timed
def suite_plane(cases, seed=0, max_length=6):
    """For n = 2 and deg_w F > |w|, one initial form is proportional to a power of the other."""
    rep = SuiteReport("plane", cases)
    rng = random.Random(seed)
    done = 0
    k = 0
    while done < cases and k < cases * 50:
        k += 1
        word = random_tame(2, QQ, rng.randint(1, max_length), seed=_word_seed(seed, k), verify=False)
        T = word.tuple
        w = random_weight(rng, 2, rank=rng.choice([1, 2]), low=0, high=4, positive=False)
        if not mdeg_w(T, w).total > w.total():
            continue
        done += 1
        if plane_proportionality(T, w) is None or not all(deg_w(f, w).is_pos() for f in T):
            rep.fail(F=[str(f) for f in T], w=w.to_json())
            continue
        rep.passed += 1
    if done < cases:
        rep.fail(why=f"only {done} samples exceeded |w|")
    return rep


# the inequality for expressions in two polynomials

def _homog_monomial(rng, w, n):
    while True:
        e = tuple(rng.randint(0, 2) for _ in range(n))
        if any(e):
            return e


def planted_expression(rng, w, ring=QQ):
    """ExprWitness with f = μ^l + lower, g = μ^m + lower and p = g^l - f^m + extra."""
    n = len(w)
    while True:
        l, m = rng.choice([(1, 2), (2, 3), (1, 3), (3, 2), (2, 5), (1, 1)])
        mu = Polynomial(n, ring, {_homog_monomial(rng, w, n): 1})
        for _ in range(rng.randint(0, 1)):
            e = _homog_monomial(rng, w, n)
            if w.dot(e) == deg_w(mu, w):
                mu = mu + Polynomial(n, ring, {e: rng.choice([1, -2])})
        Dmu = deg_w(mu, w)

        def lower(bound):
            terms = {}
            for _ in range(rng.randint(1, 3)):
                e = tuple(rng.randint(0, 3) for _ in range(n))
                if w.dot(e) < bound:
                    terms[e] = rng.choice([1, -1, 3, Fraction(1, 2)])
            return Polynomial(n, ring, terms)

        f = mu**l + lower(Dmu * l)
        g = mu**m + lower(Dmu * m)
        if _dependent(f, g, w):
            continue
        coeffs = {(0, l): 1, (m, 0): -1}
        top = Dmu * (l * m)
        for _ in range(rng.randint(0, 2)):
            i, j = rng.randint(0, m), rng.randint(0, l)
            if (i, j) not in coeffs and deg_w(f, w) * i + deg_w(g, w) * j < top:
                coeffs[(i, j)] = rng.choice([1, -1, 2])
        wit = ExprWitness(Polynomial.zero(n, ring), f, g, coeffs)
        wit.p = wit.reconstruct()
        if wit.p.is_zero():
            continue
        return wit


def _dependent(f, g, w):
    return wedge_deg([f, g], w) is NEG_INF


@_timed
def suite_inequality(cases, seed=0):
    """Planted expressions with deg^S p > deg p satisfy the coprime proportionality and the degree bound."""
    rep = SuiteReport("inequality", cases)
    rng = random.Random(seed)
    for c in range(cases):
        n = rng.choice([2, 3])
        w = Weight([rng.randint(1, 3) for _ in range(n)]) if rng.random() < 0.7 else random_weight(rng, n, rank=2)
        wit = planted_expression(rng, w)
        try:
            verdict = su_inequality_check(wit, w)
        except TheoremViolated as exc:
            rep.fail(case=c, why=str(exc), p=str(wit.p), f=str(wit.f), g=str(wit.g))
            continue
        if isinstance(verdict, InequalityHolds):
            rep.bump("strict")
            rep.passed += 1
        else:
            rep.flagged.append({"case": c, "why": "deg^S p = deg p"})
    return rep


SUITES = {
    "thm33": suite_thm33,
    "thm11": suite_thm11,
    "wapprox": suite_wapprox,
    "realize": suite_realize,
    "factor": suite_factor,
    "reduction": suite_reduction,
    "fixed_last": suite_fixed_last,
    "su_refute": suite_su_refute,
    "plane": suite_plane,
    "inequality": suite_inequality,
}


def run_suite(name, cases, seed=0):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](cases, seed)
