"""Text formats: polynomials, weights and integer vectors.

Polynomial grammar (whitespace insignificant, no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := NUM | VAR | "(" expr ")"
    NUM    := INT ("/" INT)?
    VAR    := "x" INT          (1-based)
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .coeff import QQ, Ring
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>x\d+)|(?P<op>[-+*^()]))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text, nvars, ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        used = [int(v[1:]) for kind, v, _ in self.tokens if kind == "var"]
        for kind, v, p in self.tokens:
            if kind == "var" and int(v[1:]) == 0:
                raise ParseError("variables are numbered from x1", p)
        need = max(used, default=0)
        if nvars is None:
            nvars = max(need, 1)
        elif need > nvars:
            pos = next(p for kind, v, p in self.tokens if kind == "var" and int(v[1:]) > nvars)
            raise ParseError(f"variable beyond x{nvars}", pos)
        self.n = nvars

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what):
        kind, val, pos = self.peek()
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"expected {what}, found {found}", pos)

    # each level returns a raw dict {exponent: Fraction}

    def expr(self):
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            sign = 1 if op == "+" else -1
            acc = _add(acc, rhs, sign)
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0:2] == ("op", "*"):
            self.take()
            acc = _mul(acc, self.unary(), self.n)
        return acc

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in ("+", "-"):
            self.take()
            inner = self.unary()
            return inner if val == "+" else {e: -c for e, c in inner.items()}
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.peek()
            if kind != "num" or "/" in val:
                self.fail("a nonnegative integer exponent")
            self.take()
            k = int(val)
            result = {(0,) * self.n: Fraction(1)}
            for _ in range(k):
                result = _mul(result, base, self.n)
            return result
        return base

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            c = Fraction(val)
            if c.denominator == 0:
                raise ParseError("zero denominator", pos)
            return {(0,) * self.n: c} if c else {}
        if kind == "var":
            self.take()
            e = [0] * self.n
            e[int(val[1:]) - 1] = 1
            return {tuple(e): Fraction(1)}
        if kind == "op" and val == "(":
            self.take()
            inner = self.expr()
            if self.peek()[0:2] != ("op", ")"):
                self.fail("')'")
            self.take()
            return inner
        self.fail("a number, variable or '('")


def _add(a, b, sign):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(a, b, n):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(ea[k] + eb[k] for k in range(n))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def parse_polynomial(text: str, nvars=None, ring: Ring = QQ):
    """Parse ``text`` into a Polynomial; raises ParseError with an offset."""
    from .poly import Polynomial

    p = _Parser(text, nvars, ring)
    if p.peek()[0] == "end":
        raise ParseError("empty expression", 0)
    raw = p.expr()
    if p.peek()[0] != "end":
        p.fail("an operator or end of input")
    return Polynomial(p.n, ring, raw)


def _fmt_coeff(c):
    return str(c)


def format_polynomial(f) -> str:
    """Canonical text: terms in descending lexicographic exponent order."""
    items = f.items()
    if not items:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(items):
        neg = c < 0 if f.ring.kind == "Q" else False
        a = -c if neg else c
        mono = "*".join(
            f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
        )
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if idx == 0:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


# weights and vectors


def parse_weight(text: str, rank=None):
    """Parse ``2,3,5`` (rank 1) or ``[(0,1),(1,0)]`` (rank r) into a Weight."""
    from .worder import Weight

    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"bad weight {text!r}", getattr(exc, "offset", 0) or 0) from exc
    if isinstance(value, int):
        value = (value,)
    if not isinstance(value, (tuple, list)) or not value:
        raise ParseError(f"bad weight {text!r}", 0)
    w = Weight(value)
    if rank is not None and w.rank != rank:
        raise ParseError(f"weight has rank {w.rank}, expected {rank}", 0)
    return w


def parse_gamma(text: str, rank=None):
    """Parse a single Γ element: ``6`` or ``(1,2)``."""
    from .worder import Gamma

    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"bad degree {text!r}", 0) from exc
    g = Gamma.of(value)
    if rank is not None and len(g) != rank:
        raise ParseError(f"degree has rank {len(g)}, expected {rank}", 0)
    return g


def parse_gamma_list(text: str, rank=None):
    """Parse ``2,3`` or ``[(0,1),(1,0)]`` into a tuple of Γ elements."""
    return tuple(parse_weight(text, rank).entries)


def parse_vectors(text: str):
    """Parse ``[(1,0),(0,1)]`` into a list of integer tuples."""
    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        raise ParseError(f"bad vector list {text!r}", 0) from exc
    return [tuple(int(x) for x in v) for v in value]
