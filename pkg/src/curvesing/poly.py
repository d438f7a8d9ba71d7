"""Sparse multivariate polynomials with exact rational coefficients.

Terms are stored as a dict mapping exponent tuples to nonzero rational
coefficients.  All arithmetic is exact; floating point never enters.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence, Union

try:  # gmpy2.mpq is a drop-in, much faster rational
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

Rat = Union[int, type(QQ(0))]


def rat(value) -> QQ:
    """Coerce ints, strings like '3/2' and rationals to the coefficient type."""
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed")
    if isinstance(value, str):
        return QQ(value)
    return QQ(value)


class Polynomial:
    """Immutable sparse polynomial over an ordered tuple of named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Rat] | None = None):
        self.vars = tuple(variables)
        nv = len(self.vars)
        clean: dict[tuple, QQ] = {}
        if terms:
            for exp, c in terms.items():
                c = rat(c)
                if c == 0:
                    continue
                exp = tuple(exp)
                if len(exp) != nv or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp} for variables {self.vars}")
                clean[exp] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, c, variables: Sequence[str]) -> "Polynomial":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): rat(c)})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "Polynomial":
        return cls.constant(1, variables)

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        v = tuple(variables)
        i = v.index(name)
        exp = tuple(1 if j == i else 0 for j in range(len(v)))
        return cls(v, {exp: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {tuple(exp): rat(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exp) for exp in self.terms)

    def constant_term(self) -> QQ:
        return self.terms.get((0,) * len(self.vars), QQ(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(exp[i] for exp in self.terms)

    def involves(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(exp[i] > 0 for exp in self.terms)

    def quasi_degree(self, weights: Mapping[str, int]) -> int | None:
        """Degree under the given positive weights, or None if not quasi-homogeneous."""
        if not self.terms:
            return None
        w = [weights[v] for v in self.vars]
        degs = {sum(wi * e for wi, e in zip(w, exp)) for exp in self.terms}
        if len(degs) > 1:
            return None
        return degs.pop()

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        """Maximum weighted degree over terms (-1 for zero)."""
        if not self.terms:
            return -1
        w = [weights[v] for v in self.vars]
        return max(sum(wi * e for wi, e in zip(w, exp)) for exp in self.terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int,)) or type(other) is type(QQ(0)):
            other = Polynomial.constant(other, self.vars)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, 0) + c
            if s == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = s
        out = Polynomial.__new__(Polynomial)
        out.vars = self.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.vars = self.vars
        out.terms = {exp: -c for exp, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, int) or type(other) is type(QQ(0)):
            other = Polynomial.constant(other, self.vars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) or type(other) is type(QQ(0)):
            if other == 0:
                return Polynomial.zero(self.vars)
            out = Polynomial.__new__(Polynomial)
            out.vars = self.vars
            out.terms = {exp: c * other for exp, c in self.terms.items()}
            return out
        self._check(other)
        terms: dict[tuple, QQ] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, 0) + c1 * c2
                if s == 0:
                    terms.pop(exp, None)
                else:
                    terms[exp] = s
        out = Polynomial.__new__(Polynomial)
        out.vars = self.vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int) or type(other) is type(QQ(0)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- calculus / substitution -------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        i = self.vars.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            nexp = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
            terms[nexp] = terms.get(nexp, 0) + c * exp[i]
        return Polynomial(self.vars, terms)

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Exact composition: replace each variable by the given polynomial.

        Variables without an image map to themselves; all images must share
        one variable list, which becomes the result's variable list.
        """
        target = None
        for img in images.values():
            target = img.vars
            break
        if target is None:
            return self
        imgs = []
        for v in self.vars:
            if v in images:
                imgs.append(images[v])
            else:
                imgs.append(Polynomial.variable(v, target))
        result = Polynomial.zero(target)
        power_cache: dict[tuple[int, int], Polynomial] = {}
        for exp, c in self.terms.items():
            term = Polynomial.constant(c, target)
            for i, e in enumerate(exp):
                if e:
                    key = (i, e)
                    if key not in power_cache:
                        power_cache[key] = imgs[i] ** e
                    term = term * power_cache[key]
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Rat]) -> QQ:
        out = QQ(0)
        vals = [rat(values[v]) for v in self.vars]
        for exp, c in self.terms.items():
            t = c
            for val, e in zip(vals, exp):
                if e:
                    t = t * val ** e
            out += t
        return out

    def extend(self, variables: Sequence[str]) -> "Polynomial":
        """Reinterpret over a larger variable list (must contain self.vars)."""
        target = tuple(variables)
        pos = [target.index(v) for v in self.vars]
        nz = len(target)
        terms = {}
        for exp, c in self.terms.items():
            nexp = [0] * nz
            for p, e in zip(pos, exp):
                nexp[p] = e
            terms[tuple(nexp)] = c
        return Polynomial(target, terms)

    def restrict(self, variables: Sequence[str]) -> "Polynomial":
        """Project onto a smaller variable list; dropped variables must not occur."""
        target = tuple(variables)
        keep = [self.vars.index(v) for v in target]
        dropped = [i for i, v in enumerate(self.vars) if v not in target]
        terms = {}
        for exp, c in self.terms.items():
            if any(exp[i] for i in dropped):
                raise ValueError("polynomial involves a dropped variable")
            terms[tuple(exp[i] for i in keep)] = c
        return Polynomial(target, terms)

    # -- text format ------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        parts = []
        for exp, c in items:
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = str(c) + "*" + "*".join(factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*|\d+|\^|\*|\+|-|/|\.)")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse `3/2*x^2*y - z` style input against a declared variable list.

    Whitespace-insensitive.  Floating-point literals are rejected.
    """
    variables = tuple(variables)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"unexpected character at {text[pos:]!r}")
        tok = m.group(1)
        if tok == ".":
            raise ValueError("floating-point literals are not allowed")
        tokens.append(tok)
        pos = m.end()

    result = Polynomial.zero(variables)
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        saw_sign = False
        while i < n and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if i >= n:
            if saw_sign:
                raise ValueError("dangling sign")
            break
        if not first and not saw_sign:
            raise ValueError("missing operator between terms")
        first = False
        coeff = QQ(sign)
        exp = [0] * len(variables)
        expect_factor = True
        while i < n:
            tok = tokens[i]
            if tok in "+-":
                break
            if tok == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ValueError(f"missing '*' before {tok!r}")
            if tok.isdigit():
                num = int(tok)
                i += 1
                if i < n and tokens[i] == "/":
                    i += 1
                    if i >= n or not tokens[i].isdigit():
                        raise ValueError("malformed rational")
                    coeff = coeff * QQ(num, int(tokens[i]))
                    i += 1
                else:
                    coeff = coeff * num
            else:
                if tok not in variables:
                    raise ValueError(f"unknown variable {tok!r}")
                j = variables.index(tok)
                i += 1
                power = 1
                if i < n and tokens[i] == "^":
                    i += 1
                    if i >= n or not tokens[i].isdigit():
                        raise ValueError("malformed exponent")
                    power = int(tokens[i])
                    i += 1
                exp[j] += power
            expect_factor = False
        if expect_factor:
            raise ValueError("dangling operator")
        result = result + Polynomial.monomial(exp, coeff, variables)
    return result
