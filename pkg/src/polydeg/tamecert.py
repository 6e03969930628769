"""Explicit constructions of automorphisms with prescribed weighted multidegree.

Every realizer returns a :class:`Certificate`: a generator word together with
the checks it passed (multidegree, nonzero-divisor initial forms, fixed
components).  Certificates can be re-verified at any time, including over a
different coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from .autmap import (
    Affine,
    AutWord,
    Elementary,
    Permutation,
    as_tuple,
)
from .coeff import QQ, Ring
from .errors import NotAField, PreconditionFailed, TheoremViolated
from .poly import Polynomial, identity_tuple
from .wapprox import semigroup_member
from .worder import (
    NEG_INF,
    Gamma,
    Weight,
    as_weight,
    deg_w,
    initial_form,
    mdeg_w,
    multiple_of,
)


# certificates

@dataclass
class Certificate:
    word: AutWord
    w: Weight
    target: tuple
    kind: str
    fixed: tuple = ()
    checks: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def verify(self) -> dict:
        T = self.word.tuple
        md = mdeg_w(T, self.w)
        checks = {
            "mdeg": md.entries == tuple(self.target),
            "nonzerodivisor_initial_forms": all(initial_form(f, self.w).is_nonzerodivisor() for f in T),
            "elementary_word": not any(isinstance(g, Affine) for g in self.word.generators),
        }
        if self.fixed:
            checks["fixed_components"] = all(
                T[i - 1] == Polynomial.var(i, self.word.nvars, self.word.ring) for i in self.fixed
            )
        self.checks = checks
        return checks

    def over(self, ring: Ring) -> "Certificate":
        """The same construction with coefficients read in another ring."""
        gens = []
        for g in self.word.generators:
            if isinstance(g, Elementary):
                gens.append(Elementary(g.l, g.a, g.p.change_ring(ring)))
            elif isinstance(g, Permutation):
                gens.append(Permutation(g.sigma, ring))
            else:
                gens.append(Affine(g.matrix, g.shift, ring))
        cert = Certificate(AutWord(self.word.nvars, ring, gens), self.w, self.target, self.kind, self.fixed, info=dict(self.info))
        cert.verify()
        return cert

    def to_json(self):
        return {
            "kind": self.kind,
            "ring": str(self.word.ring),
            "word": self.word.to_json(),
            "tuple": [str(f) for f in self.word.tuple],
            "target": [list(d) for d in self.target],
            "checks": self.checks,
            "info": {k: _jsonable(v) for k, v in self.info.items()},
        }


def _jsonable(v):
    if isinstance(v, Gamma):
        return list(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, Polynomial):
        return str(v)
    return v


def _certify(word, w, target, kind, fixed=(), strict=True, **info):
    cert = Certificate(word, w, tuple(Gamma.of(d) for d in target), kind, tuple(fixed), info=info)
    cert.verify()
    if strict and not cert.ok:
        failed = [k for k, v in cert.checks.items() if not v]
        raise TheoremViolated(f"{kind} construction failed checks {failed}: {word}")
    return cert


# small word-building helpers

def _mono(n, ring, exps):
    """x^exps as a polynomial (exps indexed 1..n via a dict or a full tuple)."""
    if isinstance(exps, dict):
        e = [0] * n
        for i, k in exps.items():
            e[i - 1] += k
        exps = e
    return Polynomial(n, ring, {tuple(exps): 1})


def _x(i, n, ring):
    return Polynomial.var(i, n, ring)


def _elem(l, p):
    return Elementary(l, 1, p)


def _perm_to(n, ring, source):
    """Permutation generator putting component source[pos] at each position."""
    sigma = tuple(source)
    if sigma == tuple(range(1, n + 1)):
        return []
    return [Permutation(sigma, ring)]


def _invert_perm(sigma):
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def _gammas(seq):
    return tuple(Gamma.of(d) for d in seq)


def _in_span(d, gens):
    return semigroup_member(d, gens) is not None


# coordinate witnesses

@dataclass(frozen=True)
class CoordinateWitness:
    index: int
    exponents: tuple
    coordinate: Polynomial
    word: AutWord
    degree: Gamma

    def to_json(self):
        return {
            "index": self.index,
            "exponents": list(self.exponents),
            "coordinate": str(self.coordinate),
            "degree": list(self.degree),
            "word": self.word.to_json(),
        }


def cw_witness(d, w, ring: Ring = QQ):
    """A coordinate of w-degree d when d ∈ C(w) ∪ {w_i}, else None.

    Candidates are tried from the largest w_i downward, so the variable that
    appears linearly is the heaviest one possible.
    """
    w = as_weight(w)
    d = Gamma.of(d)
    n = len(w)
    order = sorted(range(1, n + 1), key=lambda i: (tuple(-x for x in w[i - 1]), i))
    for i in order:
        if w[i - 1] == d:
            x = _x(i, n, ring)
            return CoordinateWitness(i, (0,) * n, x, AutWord.identity(n, ring), d)
    for i in order:
        if d < w[i - 1]:
            continue
        others = [j for j in range(1, n + 1) if j != i]
        coeffs = semigroup_member(d, [w[j - 1] for j in others])
        if coeffs is None:
            continue
        exps = [0] * n
        for j, c in zip(others, coeffs):
            exps[j - 1] = c
        p = _mono(n, ring, exps)
        coord = _x(i, n, ring) + p
        if deg_w(coord, w) != d:
            raise TheoremViolated(f"coordinate {coord} has the wrong degree")
        return CoordinateWitness(i, tuple(exps), coord, AutWord(n, ring, [_elem(i, p)]), d)
    return None


def in_cw(d, w) -> bool:
    """d ∈ C(w) ∪ {w_1, ..., w_n}."""
    return cw_witness(d, w) is not None


# factoring minimal-degree automorphisms

def _perm_affine(sigma, ring):
    n = len(sigma)
    M = [[int(sigma[i] == j + 1) for j in range(n)] for i in range(n)]
    return Affine(M, (0,) * n, ring)


def factor_min_degree(F, w) -> Certificate:
    """Affine/elementary word composing exactly to F, assuming deg_w F = |w|."""
    T = as_tuple(F)
    w = as_weight(w)
    n = len(T)
    ring = T[0].ring
    if not ring.is_field:
        raise NotAField("factorization needs field coefficients")
    if not w.all_pos:
        raise PreconditionFailed("weight must be strictly positive")
    md = mdeg_w(T, w)
    if md.total != w.total():
        raise PreconditionFailed(f"deg_w F = {md.total} differs from |w| = {w.total()}")
    gens = _factor(T, w, ring)
    word = AutWord(n, ring, gens)
    if word.tuple != T:
        raise TheoremViolated("factorization does not recompose to the input")
    cert = Certificate(word, w, md.entries, "factor_min_degree")
    cert.checks = {
        "recomposes": True,
        "mdeg": True,
        "affine_elementary_only": all(isinstance(g, (Affine, Elementary)) for g in gens),
    }
    return cert


def _factor(T, w, ring):
    n = len(T)
    degs = [deg_w(f, w) for f in T]
    tau = sorted(range(1, n + 1), key=lambda i: (degs[i - 1], i))
    rho = sorted(range(1, n + 1), key=lambda i: (w[i - 1], i))
    rho_inv = _invert_perm(rho)
    # F'' = P_{rho^-1} ∘ F ∘ P_tau, so F = P_rho ∘ F'' ∘ P_{tau^-1}
    Fs = tuple(T[t - 1].rename(rho_inv) for t in tau)
    ws = w.permuted(rho)
    inner = _factor_sorted(Fs, ws, ring)
    out = []
    if tuple(rho) != tuple(range(1, n + 1)):
        out.append(_perm_affine(rho, ring))
    out.extend(inner)
    tau_inv = _invert_perm(tau)
    if tuple(tau_inv) != tuple(range(1, n + 1)):
        out.append(_perm_affine(tau_inv, ring))
    return out


def _factor_sorted(T, w, ring):
    n = len(T)
    for i, f in enumerate(T):
        if deg_w(f, w) != w[i]:
            raise PreconditionFailed("sorted multidegree is not w; the input is not an automorphism")
    if all(x == w[0] for x in w):
        M = [[f.coeff(tuple(int(k == j) for k in range(n))) for j in range(n)] for f in T]
        c = [f.constant_term() for f in T]
        for f in T:
            if f.total_degree() > 1:
                raise PreconditionFailed("equal weights but a nonlinear component")
        if T == identity_tuple(n, ring):
            return []
        try:
            return [Affine(M, c, ring)]
        except PreconditionFailed as exc:
            raise PreconditionFailed("linear part is singular; the input is not an automorphism") from exc
    l = next(i for i in range(n, 0, -1) if w[i - 1] != w[n - 1]) + 1
    low = l - 1
    F0 = []
    for f in T[:low]:
        if any(f.involves(k) for k in range(l, n + 1)):
            raise PreconditionFailed("low-weight component involves a top-weight variable")
        F0.append(f.restrict(range(1, low + 1)))
    A = [[int(i == j) for j in range(n)] for i in range(n)]
    elems = []
    for i in range(l, n + 1):
        f = T[i - 1]
        lower = {}
        for e, c in f.terms.items():
            top = [k for k in range(low, n) if e[k]]
            if not top:
                lower[e] = c
            elif not (len(top) == 1 and sum(e) == 1):
                raise PreconditionFailed("top-weight component is not linear plus a lower part")
        for k in range(low, n):
            A[i - 1][k] = f.coeff(tuple(int(j == k) for j in range(n)))
        g = Polynomial(n, ring, lower, _clean=True)
        if not g.is_zero():
            elems.append(Elementary(i, 1, g))
    out = []
    if A != [[int(i == j) for j in range(n)] for i in range(n)]:
        try:
            out.append(Affine(A, (0,) * n, ring))
        except PreconditionFailed as exc:
            raise PreconditionFailed("linear part is singular; the input is not an automorphism") from exc
    out.extend(elems)
    sub = _factor(tuple(F0), w.sub(range(1, low + 1)), ring)
    out.extend(g.embed(n) for g in sub)
    return out


# n = 2 style constructions (also used with a fixed tail)

def _two_var_candidates(d, w, prefer_simple):
    """Yield (i, j, r, s, branch, l_r, u) data for the two-variable construction."""
    for j in (1, 2):
        i = 3 - j
        for r in (1, 2):
            s = 3 - r
            wr, ws = w[r - 1], w[s - 1]
            dj, di = d[j - 1], d[i - 1]
            lr = multiple_of(dj, wr)
            if not lr:
                continue
            u = multiple_of(di, dj)
            if not u:
                continue
            if prefer_simple and lr == 1 and di > ws:
                yield i, j, r, s, "simple", lr, u
            if dj >= ws:
                if di > wr:
                    yield i, j, r, s, "1a", lr, u
                elif di == wr:
                    yield i, j, r, s, "1b", lr, u
            elif lr == 1 and di >= ws:
                yield i, j, r, s, "2", lr, u


def _two_var_word(n, ring, i, j, r, s, branch, lr, u):
    """Generators realizing the branch on positions {i, j} = {r, s} = {1, 2}."""
    xr, xs = _x(r, n, ring), _x(s, n, ring)
    if branch in ("simple", "2"):
        # g_i = x_s + x_r^u, g_j = x_r
        gens = [_elem(s, xr**u)]
        src = {i: s, j: r}
    elif branch == "1a":
        # g_j = x_s + x_r^lr, g_i = x_r + g_j^u
        gens = [_elem(s, xr**lr), _elem(r, xs**u)]
        src = {i: r, j: s}
    else:
        # g_i = x_r, g_j = x_s + x_r^lr
        gens = [_elem(s, xr**lr)]
        src = {i: r, j: s}
    source = [src.get(k, k) for k in range(1, n + 1)]
    return gens + _perm_to(n, ring, source)


def _realize_pair(d12, w, ring, n, prefer_simple=True, case=None, kind="realize_2var"):
    """Realize (d_1, d_2) on x_1, x_2 with the remaining components fixed."""
    w = as_weight(w)
    d12 = _gammas(d12)
    target = d12 + tuple(w[k] for k in range(2, n))
    fixed = tuple(range(3, n + 1))
    w12 = (w[0], w[1])
    if d12 == w12:
        return _certify(AutWord.identity(n, ring), w, target, kind, fixed, branch="identity")
    if d12 == (w12[1], w12[0]):
        word = AutWord(n, ring, _perm_to(n, ring, [2, 1] + list(range(3, n + 1))))
        return _certify(word, w, target, kind, fixed, branch="swap")
    for i, j, r, s, branch, lr, u in _two_var_candidates(d12, w12, prefer_simple):
        if case:
            if "i" in case and case["i"] != i:
                continue
            if "u" in case and case["u"] != u:
                continue
            if "branch" in case and case["branch"] != branch:
                continue
        word = AutWord(n, ring, _two_var_word(n, ring, i, j, r, s, branch, lr, u))
        cert = _certify(word, w, target, kind, fixed, strict=False, i=i, j=j, r=r, s=s, branch=branch, l_r=lr, u=u)
        if cert.ok:
            return cert
    return None


def realize_2var(d, w, ring: Ring = QQ, prefer_simple=True, case=None):
    """Word in E_2^w with multidegree d, or None when d lacks the divisibility structure."""
    w = as_weight(w)
    if len(w) != 2 or len(d) != 2:
        raise PreconditionFailed("realize_2var needs two entries")
    if not w.all_nonneg:
        raise PreconditionFailed("weights must be nonnegative")
    return _realize_pair(d, w, ring, 2, prefer_simple, case)


def analyze(F, w) -> dict:
    """Case data read off a tuple by support inspection."""
    T = as_tuple(F)
    w = as_weight(w)
    n = len(T)
    info = {"mdeg": [list(x) if x is not NEG_INF else None for x in mdeg_w(T, w)]}
    tail = set(range(3, n + 1))
    info["in_x12"] = [not (f.variables() & tail) for f in T]
    info["initial_in_x12"] = [not (initial_form(f, w).variables() & tail) for f in T]
    if n >= 2:
        a, b = initial_form(T[0], w), initial_form(T[1], w)
        for i, (p, q) in ((1, (a, b)), (2, (b, a))):
            u = proportional_power(p, q, w)
            if u is not None:
                info["proportional"] = {"i": i, "u": u}
                break
    if n == 3:
        f3 = T[2]
        a = f3.coeff((0, 0, 1))
        p = f3 - _x(3, 3, f3.ring).scalar_mul(a)
        if a != 0 and not p.involves(3):
            info["f3_shape"] = {"a": str(a), "p": str(p), "p_deg": None if p.is_zero() else list(deg_w(p, w))}
    return info


def proportional_power(p, q, w):
    """u >= 1 with p = λ q^u for a scalar λ, or None."""
    if p.is_zero() or q.is_zero():
        return None
    dp, dq = deg_w(p, w), deg_w(q, w)
    u = multiple_of(dp, dq)
    if not u:
        if any(dq):
            return None
        # degree 0 in q: only q constant can work
        return None
    qu = q**u
    (e, c) = qu.items()[0]
    if p.coeff(e) == 0:
        return None
    lam = p.ring.div(p.coeff(e), c)
    return u if qu.scalar_mul(lam) == p else None


def realize_vdk3(w, target, ring: Ring = QQ, source=None, case=None, prefer_simple=True):
    """Word fixing x_3..x_n realizing target, for source data meeting (a)-(d)."""
    w = as_weight(w)
    n = len(w)
    d = _gammas(target)
    if len(d) != n or n < 2:
        raise PreconditionFailed("target length must match the weight")
    for k in range(2, n):
        if d[k] != w[k]:
            raise PreconditionFailed(f"(c) fails: entry {k + 1} differs from w_{k + 1}")
    if not d[0] + d[1] > w[0] + w[1]:
        raise PreconditionFailed("(b) fails: d_1 + d_2 must exceed w_1 + w_2")
    if source is not None:
        T = as_tuple(source)
        if mdeg_w(T, w).entries != d:
            raise PreconditionFailed("source multidegree differs from the target")
        tail = set(range(3, n + 1))
        for k in (0, 1):
            if initial_form(T[k], w).variables() & tail:
                raise PreconditionFailed(f"(a) fails: f_{k + 1}^w involves x_3..x_n")
        if n > 2 and w.all_pos:
            H = identity_tuple(n, T[0].ring)[:2] + T[2:]
            try:
                factor_min_degree(H, w)
            except PreconditionFailed as exc:
                raise PreconditionFailed("(d) fails: x_1, x_2, f_3, ... do not generate the ring") from exc
    cert = _realize_pair(d[:2], w, ring, n, prefer_simple, case, kind="realize_vdk3")
    if cert is None:
        raise PreconditionFailed("no proportional structure: the pair fails the divisibility condition")
    return cert


# chains of elementary steps

def chain_realize(psi, sigma, tau, r, d, e, w, ring: Ring = None) -> Certificate:
    """Elementary word φ with mdeg(ψ∘φ) = d, following the chain hypothesis."""
    w = as_weight(w)
    n = len(w)
    if psi is None:
        psi = AutWord.identity(n, ring or QQ)
    ring = psi.ring
    d, e = _gammas(d), _gammas(e)
    if mdeg_w(psi.tuple, w).entries != e:
        raise PreconditionFailed("mdeg of psi differs from e")
    sigma, tau = tuple(sigma), tuple(tau)
    if not 0 <= r <= n:
        raise PreconditionFailed("r out of range")
    ds = [d[sigma[i] - 1] for i in range(n)]
    es = [e[tau[i] - 1] for i in range(n)]
    for i in range(r, n):
        if ds[i] != es[i]:
            raise PreconditionFailed(f"entry {i + 1} beyond r must satisfy d_sigma = e_tau")
    gens = []
    steps = []
    for i in range(1, r + 1):
        di, ei = ds[i - 1], es[i - 1]
        if di < ei:
            raise PreconditionFailed(f"step {i}: d_sigma({i}) < e_tau({i})")
        idx = list(range(1, i)) + list(range(i + 1, n + 1))
        span = [ds[j - 1] for j in range(1, i)] + [es[j - 1] for j in range(i + 1, n + 1)]
        coeffs = semigroup_member(di, span)
        if coeffs is None:
            raise PreconditionFailed(f"step {i}: membership fails for {list(di)}")
        exps = {j: c for j, c in zip(idx, coeffs) if c}
        alpha = int(di > ei)
        steps.append({"i": i, "exponents": exps, "alpha": alpha})
        if alpha:
            gens.append(_elem(i, _mono(n, ring, exps)))
    word_gens = list(psi.generators) + _perm_to(n, ring, tau) + gens + _perm_to(n, ring, _invert_perm(sigma))
    word = AutWord(n, ring, word_gens)
    return _certify(word, w, d, "chain_realize", sigma=list(sigma), tau=list(tau), r=r, steps=steps)


# three-variable chains

def _cycle(*c, n=3):
    """Permutation tuple of a cycle in 1-based cycle notation."""
    out = list(range(1, n + 1))
    for a, b in zip(c, c[1:] + c[:1]):
        out[a - 1] = b
    return tuple(out)


ID3 = (1, 2, 3)


def _conds(d, w, sigma, tau):
    ds = [d[s - 1] for s in sigma]
    wt = [w[t - 1] for t in tau]
    c1 = all(ds[i] >= wt[i] for i in range(3))
    c2 = (
        _in_span(ds[0], [wt[1], wt[2]])
        and _in_span(ds[1], [ds[0], wt[2]])
        and _in_span(ds[2], [ds[0], ds[1]])
    )
    c3 = ds[0] >= wt[0] and ds[1] >= wt[1] and ds[2] == wt[2]
    c4 = _in_span(ds[0], [wt[1], wt[2]]) and _in_span(ds[1], [ds[0], wt[2]])
    return c1 and c2, c3 and c4


def thm72_conditions(d, w):
    """Which of (a)-(d) hold."""
    d1, d2, d3 = _gammas(d)
    w1, w2, w3 = as_weight(w)
    return {
        "a": d1 <= d2,
        "b": d2 >= w2,
        "c": d2 == w3,
        "d": _in_span(d1, [w3]) or _in_span(d1, [w2, d2]),
    }


def _thm72_orderings(d, w):
    """(sigma, tau) pairs in the order the case analysis proposes them."""
    d1, d2, d3 = d
    w1, w2, w3 = w
    conds = thm72_conditions(d, w)
    out = []
    if conds["a"]:
        out.append((ID3, ID3))
        for rho in (ID3, _cycle(2, 3)):
            out.append((_cycle(1, 2), rho))
            out.append((_cycle(1, 2, 3), rho))
    else:
        out.append((ID3, ID3))
        out.append((_cycle(2, 3), ID3))
        out.append((ID3, _cycle(1, 2)))
        out.append((_cycle(1, 2), _cycle(2, 3)))
    return out


def realize_thm72(d, w, condition=None, ring: Ring = QQ) -> Certificate:
    w = as_weight(w)
    d = _gammas(d)
    if len(w) != 3 or len(d) != 3:
        raise PreconditionFailed("realize_thm72 is for n = 3")
    if not w.all_pos:
        raise PreconditionFailed("weight must be strictly positive")
    d1, d2, d3 = d
    w1, w2, w3 = w
    if not _in_span(d1, [w2, w3]):
        raise PreconditionFailed("membership d_1 ∈ Z≥0 w_2 + Z≥0 w_3 fails")
    if not _in_span(d2, [d1, w3]):
        raise PreconditionFailed("membership d_2 ∈ Z≥0 d_1 + Z≥0 w_3 fails")
    if not _in_span(d3, [d1, d2]):
        raise PreconditionFailed("membership d_3 ∈ Z≥0 d_1 + Z≥0 d_2 fails")
    conds = thm72_conditions(d, w)
    if condition is not None:
        if not conds[condition]:
            raise PreconditionFailed(f"condition ({condition}) does not hold")
    elif not any(conds.values()):
        raise PreconditionFailed("none of (a)-(d) holds")
    if sorted(d) == sorted(w):
        sigma = tuple(next(k + 1 for k in range(3) if w[k] == x and k + 1 not in used) for used in [set()] for x in d)
        return _perm_certificate(d, w, ring)
    tried = []
    for sigma, tau in _thm72_orderings(d, w) + [(s, t) for s in permutations(ID3) for t in permutations(ID3)]:
        if (sigma, tau) in tried:
            continue
        tried.append((sigma, tau))
        c12, c34 = _conds(d, w, sigma, tau)
        for ok, r in ((c12, 3), (c34, 2)):
            if ok:
                cert = chain_realize(None, sigma, tau, r, d, w.entries, w, ring)
                cert.kind = "realize_thm72"
                cert.info["conditions"] = conds
                return cert
    raise PreconditionFailed("no (σ, τ) satisfies (1)&(2) or (3)&(4); the target needs the small-degree route")


def _perm_certificate(d, w, ring):
    """Permutation word when d is a rearrangement of w."""
    n = len(w)
    used = set()
    src = []
    for x in d:
        k = next(k for k in range(1, n + 1) if w[k - 1] == x and k not in used)
        used.add(k)
        src.append(k)
    word = AutWord(n, ring, _perm_to(n, ring, src))
    return _certify(word, w, d, "permutation")


# degrees sharing a common divisor

def lem73_conditions(d, w, dparam, l, m):
    d, w = _gammas(d), as_weight(w)
    n = len(w)
    dparam = Gamma.of(dparam)
    e = [multiple_of(x, dparam) for x in d]
    a = all(x for x in e)
    if dparam == w[l - 1]:
        b = True
    else:
        b = dparam > w[l - 1] and _in_span(dparam, [w[j] for j in range(n) if j != l - 1])
    c = _in_span(d[m - 1], [d[j] for j in range(m - 1)])
    dd = True
    if l < m:
        dd = all(d[i - 1] >= w[i] for i in range(l, m))
    return {"a": a, "b": b, "c": c, "d": dd}


def realize_lem73(d, w, dparam, l, m, ring: Ring = QQ) -> Certificate:
    w = as_weight(w)
    d = _gammas(d)
    n = len(w)
    dparam = Gamma.of(dparam)
    if n < 2 or len(d) != n:
        raise PreconditionFailed("need n >= 2 degrees")
    if not w.all_pos or not all(x.is_pos() for x in d) or not dparam.is_pos():
        raise PreconditionFailed("weights and degrees must be strictly positive")
    if list(w) != sorted(w) or list(d) != sorted(d):
        raise PreconditionFailed("weights and degrees must be ascending")
    if not (1 <= l <= n and 2 <= m <= n):
        raise PreconditionFailed("index out of range")
    if any(d[i] < w[i] for i in range(n)):
        raise PreconditionFailed("d_i < w_i for some i, impossible for an automorphism")
    conds = lem73_conditions(d, w, dparam, l, m)
    for k, ok in conds.items():
        if not ok:
            raise PreconditionFailed(f"condition ({k}) fails")
    e = [multiple_of(x, dparam) for x in d]
    # g = x_l or x_l + prod x_j^{a_j}
    if dparam == w[l - 1]:
        M = Polynomial.zero(n, ring)
    else:
        idx = [j for j in range(1, n + 1) if j != l]
        coeffs = semigroup_member(dparam, [w[j - 1] for j in idx])
        M = _mono(n, ring, dict(zip(idx, coeffs)))
    gens = []
    if not M.is_zero():
        gens.append(_elem(l, M))
    # φ = E_g ∘ P_π ∘ Z with π the index shift and Z_i(x_i) = x_i + flag·x_m^{e_i}
    src = []
    flags = {}
    for i in range(1, n + 1):
        if i == m:
            src.append(l)
            continue
        if i < min(l, m) or i > max(l, m):
            k = i
        elif m < i <= l:
            k = i - 1
        else:
            k = i + 1
        src.append(k)
        flags[i] = int(d[i - 1] > w[k - 1])
    gens += _perm_to(n, ring, src)
    xm = _x(m, n, ring)
    for i in range(1, n + 1):
        if i != m and flags[i]:
            gens.append(_elem(i, xm ** e[i - 1]))
    cs = semigroup_member(d[m - 1], [d[j] for j in range(m - 1)])
    delta = int(d[m - 1] > dparam)
    if delta:
        gens.append(_elem(m, _mono(n, ring, {j + 1: c for j, c in enumerate(cs)})))
    word = AutWord(n, ring, gens)
    return _certify(word, w, d, "realize_lem73", l=l, m=m, d=dparam, e=e, flags=flags, delta=delta)


def realize_final3(d, w, ring: Ring = QQ) -> Certificate:
    """n = 3 refinement: find d with (A)/(B), then pick (l, m) and build the word."""
    w = as_weight(w)
    d = _gammas(d)
    if len(w) != 3 or list(w) != sorted(w) or list(d) != sorted(d):
        raise PreconditionFailed("need ascending w and d with n = 3")
    d1, d2, d3 = d
    w1, w2, w3 = w
    if not (multiple_of(d2, d1) or _in_span(d3, [d1, d2])):
        raise PreconditionFailed("neither d_2 ∈ N d_1 nor d_3 ∈ Z≥0 d_1 + Z≥0 d_2")
    if d1 < w2:
        if d1 != w1:
            raise PreconditionFailed("d_1 < w_2 forces d_1 = w_1 for an automorphism")
        e = [multiple_of(x, d1) for x in d]
        if not all(e):
            raise PreconditionFailed("(A) fails for d = w_1")
        gens = [_elem(i, _x(1, 3, ring) ** e[i - 1]) for i in (2, 3) if d[i - 1] > w[i - 1]]
        return _certify(AutWord(3, ring, gens), w, d, "realize_final3", route="d1<w2")
    last = None
    for dparam in _common_divisors(d):
        for l in range(1, 4):
            for m in range(2, 4):
                if all(lem73_conditions(d, w, dparam, l, m).values()):
                    try:
                        cert = realize_lem73(d, w, dparam, l, m, ring)
                    except PreconditionFailed as exc:
                        last = exc
                        continue
                    cert.kind = "realize_final3"
                    return cert
    raise PreconditionFailed(f"no (d, l, m) satisfies the conditions{': ' + str(last) if last else ''}")


def _common_divisors(d):
    """Candidates d' with every d_i ∈ N d', largest first."""
    g = d[0]
    k = next(i for i, a in enumerate(g) if a)
    out = []
    for q in range(1, abs(g[k]) + 1):
        if all(a % q == 0 for a in g):
            cand = Gamma(a // q for a in g)
            if all(multiple_of(x, cand) for x in d):
                out.append(cand)
    return out


# n = 3 with x_3 fixed

def realize_sc(target, w, ring: Ring = QQ, case=None) -> Certificate:
    """Word with third component exactly x_3 and the given multidegree."""
    w = as_weight(w)
    d = _gammas(target)
    if len(w) != 3 or len(d) != 3:
        raise PreconditionFailed("realize_sc is for n = 3")
    if not w.all_nonneg:
        raise PreconditionFailed("weights must be nonnegative")
    if d[2] != w[2]:
        raise PreconditionFailed("third entry must equal w_3 since g_3 = x_3")
    cert = _sc_routes(d, w, ring, case or {})
    info = dict(cert.info)
    info.setdefault("route", "perm" if cert.kind == "permutation" else "vdk")
    return _certify(cert.word, w, d, "realize_sc", fixed=(3,), **info)


def _sc_routes(d, w, ring, case):
    route = case.get("route")
    if route in (None, "perm") and sorted(d[:2]) == sorted(w[:2]):
        return _perm_certificate(d, w, ring)
    if route in (None, "vdk"):
        cert = _realize_pair(d[:2], w, ring, 3, case=case.get("pair"), kind="realize_sc")
        if cert is not None:
            return cert
    if route in (None, "nested"):
        cert = _sc_nested(d, w, ring)
        if cert is not None:
            return cert
    if route in (None, "split"):
        cert = _sc_split(d, w, ring, Gamma.of(case["dh1"]) if "dh1" in case else None)
        if cert is not None:
            return cert
    raise PreconditionFailed("no route realizes the target with g_3 = x_3")


def _sc_nested(d, w, ring):
    """G = (x_r + α(x_s + β x_r^a x_3^b)^{l2} x_3^{l3}, x_s + β x_r^a x_3^b, x_3), up to swapping 1, 2."""
    w3 = w[2]
    for i in (1, 2):
        o = 3 - i
        di, do = d[i - 1], d[o - 1]
        ls = semigroup_member(di, [do, w3])
        if ls is None:
            continue
        l2, l3 = ls
        for s in (1, 2):
            r = 3 - s
            ab = semigroup_member(do, [w[r - 1], w3])
            if ab is None or di < w[r - 1] or do < w[s - 1]:
                continue
            a, b = ab
            alpha = int(di > w[r - 1])
            beta = int(do > w[s - 1])
            gens = []
            if beta:
                gens.append(_elem(s, _mono(3, ring, {r: a, 3: b})))
            if alpha:
                gens.append(_elem(r, _mono(3, ring, {s: l2, 3: l3})))
            src = {i: r, o: s, 3: 3}
            gens += _perm_to(3, ring, [src[k] for k in (1, 2, 3)])
            cert = _certify(AutWord(3, ring, gens), w, d, "realize_sc", fixed=(3,), strict=False,
                            route="nested", i=i, r=r, s=s, l2=l2, l3=l3, a=a, b=b, alpha=alpha, beta=beta)
            if cert.ok:
                return cert
    return None


def _split_candidates(dc, do, w):
    """Degrees deg h_1 < d_o for which (d_c, deg h_1) can come from a two-variable pair."""
    out = [w[0], w[1]]
    if dc.is_pos():
        u = 1
        while dc * u < do:
            out.append(dc * u)
            u += 1
    k = next((i for i, x in enumerate(dc) if x), None)
    if k is not None:
        for q in range(2, abs(dc[k]) + 1):
            if all(x % q == 0 for x in dc):
                out.append(Gamma(x // q for x in dc))
    seen = []
    for x in out:
        if x < do and x not in seen:
            seen.append(x)
    return seen


def _sc_split(d, w, ring, dh1=None):
    """(g_c, g_o + g_c^{l1} x_3^{l3}, x_3) from a pair (g_c, g_o) of degrees (d_c, deg h_1).

    Component c is the one lying in k[x_1, x_2]; o is the other of the first two.
    Without case data every admissible deg h_1 is tried.
    """
    for c in (1, 2):
        o = 3 - c
        dc, do = d[c - 1], d[o - 1]
        ls = semigroup_member(do, [dc, w[2]])
        if ls is None:
            continue
        l1, l3 = ls
        for h in ([dh1] if dh1 is not None else _split_candidates(dc, do, w)):
            if not do > h:
                continue
            pair = (dc, h) if c == 1 else (h, dc)
            inner = _realize_pair(pair, w, ring, 3, kind="realize_sc")
            if inner is None:
                continue
            # x_o -> x_o + x_c^{l1} x_3^{l3}, applied after the pair
            gens = list(inner.word.generators) + [_elem(o, _mono(3, ring, {c: l1, 3: l3}))]
            cert = _certify(AutWord(3, ring, gens), w, d, "realize_sc", fixed=(3,), strict=False,
                            route="split", c=c, dh1=h, l1=l1, l3=l3)
            if cert.ok:
                return cert
    return None


# small-degree dispatcher (at least two entries at most max w)

def realize_small(target, w, ring: Ring = QQ) -> Certificate:
    """Search the constructions above under all relabelings of variables and components."""
    w = as_weight(w)
    d = _gammas(target)
    n = len(w)
    if n != 3:
        raise PreconditionFailed("realize_small is for n = 3")
    if sorted(d) == sorted(w):
        return _perm_certificate(d, w, ring)
    for rho in permutations((1, 2, 3)):
        wr = w.permuted(rho)
        for tau in permutations((1, 2, 3)):
            dt = tuple(d[t - 1] for t in tau)
            inner = _small_sorted(dt, wr, ring)
            if inner is None:
                continue
            # inner realizes dt for weights wr; relabel back as in the factorization
            gens = _perm_to(3, ring, rho) + list(inner.word.generators) + _perm_to(3, ring, _invert_perm(tau))
            cert = _certify(AutWord(3, ring, gens), w, d, "realize_small", strict=False, inner=inner.kind)
            if cert.ok:
                return cert
    raise PreconditionFailed("no construction found for this multidegree")


def _small_sorted(d, w, ring):
    if d[2] == w[2]:
        try:
            return realize_sc(d, w, ring)
        except PreconditionFailed:
            pass
    # (g_1, g_2) on x_1, x_2 and g_3 = x_3 + monomial in x_1, x_2
    if d[2] > w[2]:
        mono = semigroup_member(d[2], [w[0], w[1]])
        if mono is not None:
            pair = _realize_pair(d[:2], w, ring, 3)
            if pair is not None:
                gens = [_elem(3, _mono(3, ring, {1: mono[0], 2: mono[1]}))] + list(pair.word.generators)
                cert = _certify(AutWord(3, ring, gens), w, d, "pair_plus_tail", strict=False)
                if cert.ok:
                    return cert
    for tau in permutations((1, 2, 3)):
        for r in (2, 3):
            try:
                cert = chain_realize(None, tau, (1, 2, 3), r, d, w.entries, w, ring)
            except PreconditionFailed:
                continue
            return cert
    return None


def small_degree_window(d, w) -> bool:
    """Degree-window predicate: at least two entries are at most max(w)."""
    top = max(as_weight(w))
    return sum(1 for x in _gammas(d) if x <= top) >= 2


def realize_ascending(d, ring: Ring = QQ) -> Certificate:
    """Ascending d with some d_i in the span of earlier entries, w = (1, ..., 1)."""
    d = _gammas(d)
    n = len(d)
    w = Weight([1] * n)
    if list(d) != sorted(d) or not all(x.is_pos() for x in d):
        raise PreconditionFailed("degrees must be positive and ascending")
    idx = next((i for i in range(2, n + 1) if _in_span(d[i - 1], d[: i - 1])), None)
    if idx is None:
        raise PreconditionFailed("no d_i lies in the span of the earlier entries")
    sigma = tuple(k for k in range(1, n + 1) if k != idx) + (idx,)
    cert = chain_realize(None, sigma, tuple(range(1, n + 1)), n, d, w.entries, w, ring)
    cert.kind = "realize_ascending"
    return cert


def realize(target, w, ring: Ring = QQ, fix_last=False, case=None, method=None) -> Certificate:
    """Pick a construction by arity and shape, or run the one named by ``method``."""
    w = as_weight(w)
    n = len(w)
    d = _gammas(target)
    if len(d) != n:
        raise PreconditionFailed("target length must match the weight")
    methods = {
        "2var": lambda: realize_2var(d, w, ring, case=case),
        "vdk3": lambda: realize_vdk3(w, d, ring, case=case),
        "sc": lambda: realize_sc(d, w, ring, case=case),
        "thm72": lambda: realize_thm72(d, w, (case or {}).get("condition"), ring),
        "final3": lambda: realize_final3(d, w, ring),
        "small": lambda: realize_small(d, w, ring),
        "ascending": lambda: realize_ascending(d, ring),
    }
    if method is not None:
        if method not in methods:
            raise PreconditionFailed(f"unknown method {method!r}; choose from {sorted(methods)}")
        order = [method]
    elif n == 2:
        order = ["2var"]
    elif fix_last:
        order = ["sc"] if n == 3 else ["vdk3"]
    elif n == 3:
        order = ["thm72", "final3", "small"]
    else:
        order = ["vdk3", "ascending"]
    last = None
    for name in order:
        try:
            cert = methods[name]()
        except PreconditionFailed as exc:
            last = exc
            continue
        if cert is not None:
            return cert
    if last is not None:
        raise last
    raise PreconditionFailed("no construction applies to this target")
