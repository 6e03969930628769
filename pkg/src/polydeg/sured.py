"""Reduction machinery for n = 3.

Subalgebra membership for initial forms, the elementary-reduction search, the
Shestakov-Umirbaev condition checker together with the properties its
conditions imply, and the inequality bounding deg_w of a polynomial expression
in two algebraically independent polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .autmap import as_tuple
from .errors import (
    BadWitness,
    MissingWitness,
    NotAField,
    NotIndependent,
    PreconditionFailed,
    TheoremViolated,
    UnboundedSemigroup,
    Unsupported,
)
from .linalg import solve_linear
from .poly import Polynomial
from .tamecert import proportional_power
from .wapprox import Infeasible, strict_positive_vector
from .worder import NEG_INF, Gamma, as_weight, deg_w, gsum, initial_form, is_homogeneous, mdeg_w, multiple_of, wedge_deg

DEFAULT_BUDGET = 64


def _gdot(g, phi):
    return sum(a * b for a, b in zip(g, phi))


def _char0(ring, what):
    if not ring.is_field or ring.characteristic != 0:
        raise Unsupported(f"{what} needs a field of characteristic zero, got {ring}")


# membership in k[g1^w, g2^w]

@dataclass
class MembershipResult:
    inside: bool
    combination: dict = None

    def to_json(self):
        comb = None
        if self.combination is not None:
            comb = [{"a": a, "b": b, "c": str(c)} for (a, b), c in sorted(self.combination.items())]
        return {"inside": self.inside, "combination": comb}


def exponent_pairs(D, D1, D2):
    """All (a, b) >= 0 with a*D1 + b*D2 = D, for D1, D2 strictly positive."""
    if not (D1.is_pos() and D2.is_pos()):
        raise UnboundedSemigroup("generator degrees must be strictly positive")
    phi = strict_positive_vector([D1, D2])
    if phi is Infeasible:
        raise UnboundedSemigroup("no positive functional on the generator degrees")
    top = _gdot(D, phi)
    if top < 0:
        return []
    out = []
    for a in range(top // _gdot(D1, phi) + 1):
        b = multiple_of(Gamma(D) - D1 * a, D2)
        if b is not None:
            out.append((a, b))
    return out


def homog_membership(h: Polynomial, g1: Polynomial, g2: Polynomial, w) -> MembershipResult:
    """Decide h ∈ k[g1^w, g2^w] for w-homogeneous h; the combination is exact."""
    w = as_weight(w)
    ring = h.ring
    if not ring.is_field:
        raise NotAField(f"membership needs a field, got {ring}")
    if not is_homogeneous(h, w):
        raise PreconditionFailed("h must be w-homogeneous")
    if h.is_zero():
        return MembershipResult(True, {})
    D1, D2, D = deg_w(g1, w), deg_w(g2, w), deg_w(h, w)
    if D1 is NEG_INF or D2 is NEG_INF:
        raise UnboundedSemigroup("generator degrees must be strictly positive")
    pairs = exponent_pairs(D, D1, D2)
    if not pairs:
        return MembershipResult(False)
    i1, i2 = initial_form(g1, w), initial_form(g2, w)
    prods = [i1**a * i2**b for a, b in pairs]
    sol = solve_linear(ring, [p.terms for p in prods], h.terms)
    if sol is None:
        return MembershipResult(False)
    comb = {ab: c for ab, c in zip(pairs, sol) if c != 0}
    return MembershipResult(True, comb)


def lift(combination, f1, f2):
    """Σ c_ab f1^a f2^b."""
    out = Polynomial.zero(f1.nvars, f1.ring)
    for (a, b), c in combination.items():
        out = out + (f1**a * f2**b).scalar_mul(c)
    return out


# elementary reductions

@dataclass
class ReductionResult:
    status: str  # "found", "none" or "budget"
    index: int = None
    h: Polynomial = None
    q: Polynomial = None
    new: tuple = None
    degrees: tuple = None
    stage: str = None

    @property
    def found(self):
        return self.status == "found"

    def to_json(self):
        out = {"status": self.status}
        if self.found:
            out.update({
                "index": self.index,
                "h": str(self.h),
                "q": str(self.q),
                "stage": self.stage,
                "new": [str(f) for f in self.new],
                "degrees": {"before": list(self.degrees[0]), "after": None if self.degrees[1] is NEG_INF else list(self.degrees[1])},
            })
        return out


def _two_var_poly(combination, nvars, ring, j, l):
    """The polynomial Σ c_ab x_j^a x_l^b in k[x]."""
    terms = {}
    for (a, b), c in combination.items():
        e = [0] * nvars
        e[j - 1] += a
        e[l - 1] += b
        terms[tuple(e)] = c
    return Polynomial(nvars, ring, terms)


def elementary_reduction_search(F, w, budget=DEFAULT_BUDGET) -> ReductionResult:
    """Find i and q ∈ k[f_j, f_l] with deg_w(f_i - q) < deg_w f_i.

    The first stage cancels top forms greedily through membership in
    k[f_j^w, f_l^w].  The second solves a linear system over a box of products
    f_j^a f_l^b (at most ``budget`` of them) killing every term of degree at
    least deg_w f_i; this catches reductions whose partner has cancelling
    top forms.
    """
    T = as_tuple(F)
    w = as_weight(w)
    n = len(T)
    ring = T[0].ring
    if not ring.is_field:
        raise NotAField(f"reduction search needs a field, got {ring}")
    if not w.all_pos:
        raise PreconditionFailed("weight must be strictly positive")
    md = mdeg_w(T, w)
    for i in range(1, n + 1):
        others = [k for k in range(1, n + 1) if k != i]
        for j, l in [(a, b) for a in others for b in others if a < b]:
            res = _greedy(T, w, i, j, l, budget)
            if res is not None:
                return res
    for i in range(1, n + 1):
        others = [k for k in range(1, n + 1) if k != i]
        for j, l in [(a, b) for a in others for b in others if a < b]:
            res = _box(T, w, i, j, l, budget)
            if res is not None:
                return res
    if md.total == w.total():
        return ReductionResult("none")
    return ReductionResult("budget")


def _result(T, w, i, q_poly, h, stage):
    new = list(T)
    new[i - 1] = T[i - 1] - h
    before, after = deg_w(T[i - 1], w), deg_w(new[i - 1], w)
    if not after < before:
        raise TheoremViolated("reduction step did not lower the degree")
    return ReductionResult("found", i, h, q_poly, tuple(new), (before, after), stage)


def _greedy(T, w, i, j, l, budget):
    fi, fj, fl = T[i - 1], T[j - 1], T[l - 1]
    n, ring = fi.nvars, fi.ring
    cur = fi
    total = {}
    steps = 0
    while not cur.is_zero() and steps < budget:
        mem = homog_membership(initial_form(cur, w), fj, fl, w)
        if not mem.inside:
            break
        for ab, c in mem.combination.items():
            total[ab] = ring.add(total.get(ab, 0), c)
        cur = cur - lift(mem.combination, fj, fl)
        steps += 1
    if not steps:
        return None
    total = {ab: c for ab, c in total.items() if c != 0}
    return _result(T, w, i, _two_var_poly(total, n, ring, j, l), lift(total, fj, fl), "greedy")


def _box(T, w, i, j, l, budget):
    fi, fj, fl = T[i - 1], T[j - 1], T[l - 1]
    n, ring = fi.nvars, fi.ring
    D = deg_w(fi, w)
    pairs = []
    k = 0
    while len(pairs) < budget:
        new = [(a, k - a) for a in range(k + 1)]
        if len(pairs) + len(new) > budget:
            break
        pairs.extend(new)
        k += 1
    if not pairs:
        return None
    prods = [fj**a * fl**b for a, b in pairs]

    def high(p):
        return {e: c for e, c in p.terms.items() if w.dot(e) >= D}

    sol = solve_linear(ring, [high(p) for p in prods], high(fi))
    if sol is None:
        return None
    comb = {ab: c for ab, c in zip(pairs, sol) if c != 0}
    return _result(T, w, i, _two_var_poly(comb, n, ring, j, l), lift(comb, fj, fl), "box")


# the Shestakov-Umirbaev condition

@dataclass
class SUWitness:
    F: tuple
    G: tuple
    Q: Polynomial = None
    a: object = None
    b: object = None
    c: object = None

    def __post_init__(self):
        self.F = as_tuple(self.F)
        self.G = as_tuple(self.G)
        if len(self.F) != 3 or len(self.G) != 3:
            raise PreconditionFailed("the condition is defined for n = 3")


@dataclass
class SUReport:
    conditions: dict
    properties: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def all_su(self):
        return len(self.conditions) == 6 and all(self.conditions.values())

    @property
    def failed(self):
        return [k for k, v in self.conditions.items() if not v]

    def to_json(self):
        return {
            "conditions": self.conditions,
            "properties": self.properties,
            "details": {k: _enc(v) for k, v in self.details.items()},
        }


def _enc(v):
    if v is NEG_INF:
        return None
    if isinstance(v, Gamma):
        return list(v)
    if isinstance(v, Polynomial):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    return v if isinstance(v, (int, bool, str, type(None))) else str(v)


def _lt(a, b):
    return a is NEG_INF and b is not NEG_INF or (a is not NEG_INF and b is not NEG_INF and a < b)


def _le(a, b):
    return a == b or _lt(a, b)


def _scalar_multiple(p, q):
    """λ with p = λ q, or None (q nonzero)."""
    ring = q.ring
    if p.is_zero():
        return 0
    e, c = q.items()[0]
    lam = ring.div(p.coeff(e), c)
    return lam if q.scalar_mul(lam) == p else None


def _su1(wit: SUWitness, w, budget):
    f1, f2, f3 = wit.F
    g1, g2, g3 = wit.G
    ring = f1.ring
    info = {}
    b = wit.b if wit.b is not None else _scalar_multiple(g2 - f2, f3)
    if b is None or g2 != f2 + f3.scalar_mul(b):
        return False, info
    if wit.a is not None and wit.c is not None:
        a, c = wit.a, wit.c
    else:
        sol = solve_linear(ring, [(f3 * f3).terms, f3.terms], (g1 - f1).terms)
        if sol is None:
            return False, info
        a, c = sol
    if g1 != f1 + (f3 * f3).scalar_mul(a) + f3.scalar_mul(c):
        return False, info
    info.update(a=a, b=b, c=c)
    r = g3 - f3
    if wit.Q is not None:
        Q = wit.Q
        if Q.nvars != 2:
            raise PreconditionFailed("the SU1 witness must be a polynomial in two variables")
        ok = Q.substitute([g1, g2]) == r
        info["Q"] = Q
        return ok, info
    # fallback: iterated top-form reduction, valid when k[g1,g2]^w = k[g1^w, g2^w]
    comb = {}
    for _ in range(budget):
        if r.is_zero():
            Q = Polynomial(2, ring, {ab: c for ab, c in comb.items()})
            info["Q"] = Q
            return True, info
        mem = homog_membership(initial_form(r, w), g1, g2, w)
        if not mem.inside:
            break
        for ab, c in mem.combination.items():
            comb[ab] = ring.add(comb.get(ab, 0), c)
        r = r - lift(mem.combination, g1, g2)
    raise MissingWitness("g_3 - f_3 ∈ k[g_1, g_2] could not be decided without a witness")


def _sub(a, b):
    if a is NEG_INF:
        return NEG_INF
    return a - b


SHORT_ORDER = ("SU5", "SU2", "SU1", "SU3", "SU6", "SU4")


def su_check(wit: SUWitness, w, full=True, budget=DEFAULT_BUDGET) -> SUReport:
    """Evaluate SU1-SU6 for (F, G) and, when all hold, the implied properties.

    With ``full=False`` evaluation stops at the first failing condition, in the
    order cheapest-first.
    """
    w = as_weight(w)
    if len(w) != 3 or not w.all_pos:
        raise PreconditionFailed("need w ∈ (Γ_+)^3")
    _char0(wit.F[0].ring, "the SU condition")
    f1, f2, f3 = wit.F
    g1, g2, g3 = wit.G
    dF = [deg_w(f, w) for f in wit.F]
    dG = [deg_w(g, w) for g in wit.G]
    details = {"mdeg_F": dF, "mdeg_G": dG}
    g1w, g2w = initial_form(g1, w), initial_form(g2, w)
    cache = {}

    def wedge():
        if "wedge" not in cache:
            cache["wedge"] = wedge_deg([g1, g2], w)
            details["wedge_g1_g2"] = cache["wedge"]
        return cache["wedge"]

    def su3():
        s = multiple_of(dG[0] * 2, dG[1]) if dG[1] is not NEG_INF and dG[0] is not NEG_INF else None
        details["s"] = s
        if not s or s < 3 or s % 2 == 0:
            return False
        return proportional_power(g1w * g1w, g2w, w) == s

    def su1():
        ok, info = _su1(wit, w, budget)
        details.update({k: v for k, v in info.items()})
        return ok

    def su4():
        if not _le(dF[2], dG[0]):
            return False
        mem = homog_membership(initial_form(f3, w), g1, g2, w)
        return not mem.inside

    checks = {
        "SU1": su1,
        "SU2": lambda: _le(dF[0], dG[0]) and dF[1] == dG[1],
        "SU3": su3,
        "SU4": su4,
        "SU5": lambda: _lt(dG[2], dF[2]),
        "SU6": lambda: wedge() is not NEG_INF and _lt(dG[2], _sub(dG[0], dG[1]) + wedge()),
    }
    conds = {}
    order = ("SU1", "SU2", "SU3", "SU4", "SU5", "SU6") if full else SHORT_ORDER
    for name in order:
        conds[name] = bool(checks[name]())
        if not full and not conds[name]:
            return SUReport(conds, {}, details)
    report = SUReport({k: conds[k] for k in sorted(conds)}, {}, details)
    if report.all_su:
        report.properties = _properties(wit, w, dF, dG, wedge(), details["s"])
        bad = [k for k, v in report.properties.items() if not v]
        if bad:
            raise TheoremViolated(f"SU1-SU6 hold but {bad} fail")
    return report


def _properties(wit, w, dF, dG, wedge, s):
    """P1, P5, P6, P7 with all halves cleared: D2 = deg g2 = 2δ."""
    f1, f2, f3 = wit.F
    g1 = wit.G[0]
    D2 = dG[1]
    props = {}
    props["P1"] = all(x % 2 == 0 for x in D2) and proportional_power(initial_form(g1, w) ** 2, initial_form(wit.G[1], w), w) == s
    if dF[0] < dG[0]:
        g1w, f3w = initial_form(g1, w), initial_form(f3, w)
        props["P5"] = (
            s == 3
            and _scalar_multiple(g1w, f3w * f3w) is not None
            and dF[2] * 4 == D2 * 3
            and dF[0] * 4 >= D2 * 5 + wedge * 4
        )
    else:
        props["P5"] = True
    props["P6"] = gsum(dG, w.rank) < gsum(dF, w.rank)
    props["P7"] = (
        dF[1] < dF[0]
        and dF[2] <= dF[0]
        and all(D2 < d * 2 <= D2 * s for d in dF)
    )
    return props


# S(w, k) and the refutation of SU reductions inside it

@dataclass(frozen=True)
class Refuted:
    condition: str
    report: SUReport

    def to_json(self):
        return {"verdict": "refuted", "condition": self.condition, "report": self.report.to_json()}


def s_shape(F, w):
    """(alpha, p) when F has the S(w, k) shape, else None."""
    T = as_tuple(F)
    w = as_weight(w)
    if len(T) != 3:
        return None
    if not mdeg_w(T, w).total > w.total():
        return None
    f3 = T[2]
    alpha = f3.coeff((0, 0, 1))
    if alpha == 0:
        return None
    p = f3 - Polynomial.var(3, 3, f3.ring).scalar_mul(alpha)
    if p.involves(3):
        return None
    if not p.is_zero() and deg_w(p, w) > w[2]:
        return None
    return alpha, p


def no_sured_in_S(F, G, sigma, w, Q=None, a=None, b=None, c=None) -> Refuted:
    """Name an SU condition failing for (F_σ, G_σ); F must have the S(w, k) shape."""
    w = as_weight(w)
    T, U = as_tuple(F), as_tuple(G)
    if s_shape(T, w) is None:
        raise PreconditionFailed("F does not have the S(w, k) shape")
    sigma = tuple(sigma)
    Fs = tuple(T[k - 1] for k in sigma)
    Gs = tuple(U[k - 1] for k in sigma)
    report = su_check(SUWitness(Fs, Gs, Q, a, b, c), w, full=False)
    if report.failed:
        return Refuted(report.failed[0], report)
    raise TheoremViolated("an element of S(w, k) passed every SU condition")


# expressions in two polynomials

@dataclass
class ExprWitness:
    p: Polynomial
    f: Polynomial
    g: Polynomial
    coeffs: dict

    def reconstruct(self):
        out = Polynomial.zero(self.p.nvars, self.p.ring)
        for (i, j), c in self.coeffs.items():
            out = out + (self.f**i * self.g**j).scalar_mul(c)
        return out


def degS(wit: ExprWitness, w):
    """max deg_w f^i g^j over the nonzero coefficients of the witness."""
    w = as_weight(w)
    if wit.reconstruct() != wit.p:
        raise BadWitness("coefficients do not reconstruct p")
    df, dg = deg_w(wit.f, w), deg_w(wit.g, w)
    best = NEG_INF
    for (i, j), c in wit.coeffs.items():
        if c == 0:
            continue
        d = df * i + dg * j
        if best is NEG_INF or d > best:
            best = d
    return best


@dataclass(frozen=True)
class VacuouslyTrue:
    degS: Gamma

    def to_json(self):
        return {"verdict": "vacuous", "degS": _enc(self.degS)}


@dataclass(frozen=True)
class InequalityHolds:
    l: int
    m: int
    deg_p: Gamma
    bound: Gamma
    degS: Gamma

    def to_json(self):
        return {"verdict": "holds", "l": self.l, "m": self.m, "deg_p": _enc(self.deg_p), "bound": _enc(self.bound), "degS": _enc(self.degS)}


def coprime_ratio(Df, Dg):
    """Coprime (l, m) >= 1 with l*Dg = m*Df, or None."""
    if not (Df.is_pos() and Dg.is_pos()):
        return None
    k = next(i for i, x in enumerate(Df) if x)
    num, den = Dg[k], Df[k]
    g = gcd(num, den)
    m, l = num // g, den // g
    if l <= 0 or m <= 0 or Dg * l != Df * m:
        return None
    return l, m


def powers_proportional(p, q, l, m):
    """p^l ≈ q^m."""
    return _scalar_multiple(p**l, q**m) is not None


def su_inequality_check(wit: ExprWitness, w):
    w = as_weight(w)
    _char0(wit.p.ring, "the inequality")
    if wedge_deg([wit.f, wit.g], w) is NEG_INF:
        raise NotIndependent("f and g are algebraically dependent (Jacobian vanishes)")
    ds = degS(wit, w)
    dp = deg_w(wit.p, w)
    if ds is NEG_INF or not _lt(dp, ds):
        return VacuouslyTrue(ds)
    Df, Dg = deg_w(wit.f, w), deg_w(wit.g, w)
    lm = coprime_ratio(Df, Dg)
    if lm is None or not powers_proportional(initial_form(wit.g, w), initial_form(wit.f, w), *lm):
        raise TheoremViolated("deg^S p > deg p but no coprime (l, m) makes the initial forms proportional")
    l, m = lm
    bound = Df * m - Df - Dg + wedge_deg([wit.f, wit.g], w)
    if dp is NEG_INF or dp < bound:
        raise TheoremViolated(f"deg_w p = {dp} is below the bound {bound}")
    return InequalityHolds(l, m, dp, bound, ds)


def plane_proportionality(F, w):
    """For n = 2: u with f1^w ≈ (f2^w)^u or f2^w ≈ (f1^w)^u, as (index, u), or None."""
    T = as_tuple(F)
    w = as_weight(w)
    if len(T) != 2:
        raise PreconditionFailed("the proportionality check is for n = 2")
    a, b = initial_form(T[0], w), initial_form(T[1], w)
    u = proportional_power(a, b, w)
    if u is not None:
        return 1, u
    u = proportional_power(b, a, w)
    if u is not None:
        return 2, u
    return None
