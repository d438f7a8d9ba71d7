"""Critical-value (Lyashko-Looijenga) mapping of function-on-curve families.

The LL map sends a deformation parameter point to the unordered set of
critical values of the deformed function on the deformed curve, encoded as a
monic polynomial of degree tau.  For quasi-homogeneous families its covering
degree is the ratio of products of target and source weights; this module
computes the weight data from the staircase of the tangent space and provides
the explicit univariate machinery for the C_{p,q,r} family, where the curve
admits a rational parametrisation y -> (x(y), y, z(y)) and the deformed
function restricts to a rational function F(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import sympy

from .catalog import CatalogEntry, printed_miniversal
from .curves import tangent_space
from .local_algebra import standard_basis, standard_monomials
from .poly import Polynomial, QQ, rat
from .seeds import stable_rng

Y = sympy.Symbol("y")
T = sympy.Symbol("t")


def _to_sympy_rat(c) -> sympy.Rational:
    return sympy.Rational(int(c.numerator), int(c.denominator))


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


# -- weight profiles and the covering degree ---------------------------------

class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class WeightProfile:
    """Quasi-homogeneity data of a monomial miniversal deformation.

    `parameter_weights` are the weights of the truncated deformation
    parameters (the constant-function direction, of weight `degree`, is
    excluded); the cylindrical target coordinate of index k has weight k*d.
    """

    tau: int
    degree: int
    variable_weights: dict
    parameter_weights: tuple[int, ...]


def _slot_degrees(entry: CatalogEntry) -> list[int]:
    """Quasi-degree of each module slot (matrix entries row-major, f last).

    Matrix slot (i, j) carries degree r_i + c_j where the row/column weights
    are pinned by the nonzero entries (r_1 = 0 normalisation); the function
    slot carries the function's quasi-degree.
    """
    m = entry.pair.matrix
    w = entry.variable_weights
    n = m.n
    qd = [[None if p.is_zero() else p.quasi_degree(w) for p in row] for row in m.entries]
    for i, row in enumerate(m.entries):
        for j, p in enumerate(row):
            if not p.is_zero() and qd[i][j] is None:
                raise ProfileError(f"matrix entry ({i},{j}) is not quasi-homogeneous")
    rows: list = [None] * n
    cols: list = [None] * (n + 1)
    rows[0] = 0
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n + 1):
                if qd[i][j] is None:
                    continue
                if rows[i] is not None and cols[j] is None:
                    cols[j] = qd[i][j] - rows[i]
                    changed = True
                elif cols[j] is not None and rows[i] is None:
                    rows[i] = qd[i][j] - cols[j]
                    changed = True
                elif rows[i] is not None and cols[j] is not None:
                    if rows[i] + cols[j] != qd[i][j]:
                        raise ProfileError("inconsistent matrix grading")
    if any(r is None for r in rows) or any(c is None for c in cols):
        raise ProfileError("matrix grading is not determined by the nonzero entries")
    slots = [rows[i] + cols[j] for i in range(n) for j in range(n + 1)]
    slots.append(entry.function_degree)
    return slots


def weight_profile(entry: CatalogEntry) -> WeightProfile:
    """Weight data of the monomial miniversal deformation of a catalog entry.

    Each staircase direction (monomial in a module slot) becomes a parameter
    of weight slot-degree minus monomial quasi-degree; the constant function
    direction is identified and excluded from the truncated list.
    """
    if not entry.is_quasi_homogeneous:
        raise ProfileError(f"{entry.name} carries a modulus and has no weight profile")
    w = entry.variable_weights
    d = entry.function_degree
    slots = _slot_degrees(entry)
    sb = standard_basis(tangent_space(entry.pair))
    stairs = standard_monomials(sb)
    names = entry.pair.vars
    f_slot = entry.pair.module_rank - 1
    weights = []
    constant_seen = 0
    for comp, exp in stairs:
        if comp == f_slot and all(e == 0 for e in exp):
            constant_seen += 1
            continue
        qdeg = sum(w[v] * e for v, e in zip(names, exp))
        weights.append(slots[comp] - qdeg)
    if constant_seen != 1:
        raise ProfileError("staircase does not contain exactly one constant-function direction")
    if any(wt <= 0 for wt in weights):
        raise ProfileError(f"non-positive parameter weight in {entry.name}: {weights}")
    weights.sort()
    return WeightProfile(entry.expected_tau, d, dict(w), tuple(weights))


def ll_degree(wp: WeightProfile) -> int:
    """Covering degree of the cylindrical critical-value map: the ratio of
    the product of target weights (k*d, k = 2..tau) to the product of the
    source parameter weights.  Must come out a positive integer."""
    num = Fraction(1)
    for k in range(2, wp.tau + 1):
        num *= k * wp.degree
    for wt in wp.parameter_weights:
        num /= wt
    if num.denominator != 1 or num <= 0:
        raise ProfileError(f"non-integral covering degree {num}")
    return int(num)


# -- univariate restriction for C_{p,q,r} ------------------------------------

@dataclass(frozen=True)
class RationalFunction1V:
    """Reduced fraction of univariate polynomials over the rationals."""

    num: sympy.Poly
    den: sympy.Poly

    @classmethod
    def make(cls, num, den) -> "RationalFunction1V":
        num = sympy.Poly(num, Y, domain="QQ")
        den = sympy.Poly(den, Y, domain="QQ")
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_one:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return cls(num, den)

    def derivative(self) -> "RationalFunction1V":
        return RationalFunction1V.make(
            self.num.diff(Y) * self.den - self.num * self.den.diff(Y),
            self.den * self.den)

    def __call__(self, value):
        v = sympy.Rational(value)
        d = self.den.eval(v)
        if d == 0:
            raise ZeroDivisionError(f"pole at {value}")
        return self.num.eval(v) / d

    def __str__(self):
        return f"({self.num.as_expr()}) / ({self.den.as_expr()})"


def _check_pqr(p, q, r):
    if not p >= q >= r >= 1:
        raise ValueError("indices must satisfy p >= q >= r >= 1")


def _pqr_values(p, q, r, values: dict) -> dict:
    """Complete a parameter assignment for the printed C_{p,q,r} deformation:
    unlisted parameters default to zero, alpha/beta/gamma must be nonzero."""
    pd = printed_miniversal(p, q, r)
    out = {}
    for name in pd.parameters:
        out[name] = sympy.Rational(values.get(name, 0))
    unknown = set(values) - set(pd.parameters)
    if unknown:
        raise ValueError(f"unknown parameters {sorted(unknown)}")
    if out["alpha"] == 0 or out["beta"] == 0 or out["gamma"] == 0:
        raise ValueError("alpha, beta, gamma must be nonzero")
    return out


@lru_cache(maxsize=None)
def _symbolic_restriction(p: int, q: int, r: int):
    """F(y) of the printed C_{p,q,r} deformation with symbolic parameters,
    returned as (numerator, denominator) over y^r (y+gamma)^p, together with
    the ordered parameter symbol list."""
    pd = printed_miniversal(p, q, r)
    syms = {name: sympy.Symbol(name) for name in pd.parameters}
    al, be, ga = syms["alpha"], syms["beta"], syms["gamma"]
    # on the deformed curve: x = beta*y/(y+gamma), z = alpha*(y+gamma)/y
    num = sympy.Integer(0)
    blocks = (("x", p, 1, lambda i: be ** (p - i) * Y ** (p - i + r) * (Y + ga) ** i),
              ("y", q, 2, lambda i: Y ** (q - i + r) * (Y + ga) ** p),
              ("z", r, 3, lambda i: al ** (r - i) * Y ** i * (Y + ga) ** (p + r - i)))
    for _, power, block, shape in blocks:
        num += shape(0)
        for i in range(1, power):
            num += syms[f"L{block}_{i}"] * shape(i)
    num += syms["L0"] * Y ** r * (Y + ga) ** p
    den = Y ** r * (Y + ga) ** p
    return sympy.expand(num), den, tuple(syms[name] for name in pd.parameters)


def restricted_function_Cpqr(p, q, r, values: dict) -> RationalFunction1V:
    """The deformed C_{p,q,r} function restricted to its deformed curve.

    Substitutes x = beta*y/(y+gamma), z = alpha*(y+gamma)/y into the printed
    miniversal family at the given rational parameter values and clears
    denominators; poles sit exactly at y in {0, -gamma}.
    """
    _check_pqr(p, q, r)
    vals = _pqr_values(p, q, r, values)
    num, den, syms = _symbolic_restriction(p, q, r)
    sub = {s: vals[str(s)] for s in syms}
    return RationalFunction1V.make(num.subs(sub), den.subs(sub))


# -- critical values ----------------------------------------------------------

@dataclass(frozen=True)
class CriticalData:
    """Critical points and values of a univariate rational function.

    `points_poly` is the squarefree polynomial whose roots are the critical
    points (numerator of the derivative, poles removed); `values_poly` is the
    monic polynomial whose roots are the critical values with the same
    multiplicity pattern, prod (t - F(y_i)).
    """

    points_poly: sympy.Poly
    values_poly: sympy.Poly
    degenerate: bool

    @property
    def point_count(self) -> int:
        return self.points_poly.degree()

    @property
    def distinct_values(self) -> int:
        sqf = self.values_poly.exquo(self.values_poly.gcd(self.values_poly.diff(T)))
        return sqf.degree()

    def value_enclosures(self) -> list:
        """Certified algebraic enclosures of the distinct critical values."""
        return sympy.Poly(self.values_poly, T).all_roots()


def _values_charpoly(F: RationalFunction1V, N: sympy.Poly) -> sympy.Poly:
    """prod over roots y_i of N of (t - F(y_i)), exactly, via the
    characteristic polynomial of multiplication by F on QQ[y]/(N)."""
    n = N.degree()
    den_inv = sympy.invert(F.den, N)
    f_red = (F.num * den_inv).rem(N)
    cols = []
    for i in range(n):
        e = (f_red * sympy.Poly(Y ** i, Y, domain="QQ")).rem(N)
        c = e.all_coeffs()[::-1]
        cols.append(c + [0] * (n - len(c)))
    mat = sympy.Matrix(n, n, lambda i, j: cols[j][i])
    return sympy.Poly(mat.charpoly(T).as_expr(), T, domain="QQ")


def critical_values(F: RationalFunction1V) -> CriticalData:
    """Critical points (roots of the derivative's numerator off the poles)
    and the monic polynomial of critical values."""
    dF = F.derivative()
    N = dF.num
    if N.is_zero or N.degree() < 1:
        raise ValueError("function has no critical points")
    g = N.gcd(F.den)
    if not g.is_one:
        N = N.exquo(g)
    sqf = N.exquo(N.gcd(N.diff(Y)))
    degenerate = sqf.degree() != N.degree()
    values = _values_charpoly(F, sqf.monic())
    return CriticalData(sqf.monic(), values, degenerate)


# -- LL points ----------------------------------------------------------------

@dataclass(frozen=True)
class LLPoint:
    """Monic polynomial encoding the multiset of critical values; the
    truncated variant is shifted so the root sum vanishes."""

    coefficients: tuple  # (c_{tau-1}, ..., c_0) of t^tau + c_{tau-1} t^{tau-1} + ...
    truncated: bool

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def poly(self) -> sympy.Poly:
        return sympy.Poly([1] + [sympy.Rational(c) for c in self.coefficients], T)

    @property
    def has_multiple_root(self) -> bool:
        pol = self.poly()
        return not pol.gcd(pol.diff(T)).is_one


def _ll_from_values_poly(values: sympy.Poly, truncated: bool) -> LLPoint:
    pol = values.monic()
    if truncated:
        tau = pol.degree()
        mean = -sympy.Rational(pol.all_coeffs()[1], tau)
        pol = sympy.Poly(pol.as_expr().subs(T, T + mean), T, domain="QQ")
    coeffs = tuple(Fraction(c.p, c.q) for c in pol.all_coeffs()[1:])
    return LLPoint(coeffs, truncated)


def ll_point_univariate(F_poly: sympy.Poly, truncated: bool = False) -> LLPoint:
    """LL point of a polynomial function of one variable (the A-series
    reduction: the deformed function on the smooth branch)."""
    F_poly = sympy.Poly(F_poly.as_expr().subs(F_poly.gen, Y), Y, domain="QQ")
    F = RationalFunction1V.make(F_poly, sympy.Poly(1, Y))
    cd = critical_values(F)
    return _ll_from_values_poly(cd.values_poly, truncated)


def ll_point_Cpqr(p, q, r, values: dict, truncated: bool = False) -> LLPoint:
    """LL point of a parameter point of the printed C_{p,q,r} family."""
    F = restricted_function_Cpqr(p, q, r, values)
    cd = critical_values(F)
    if cd.point_count != p + q + r + 1:
        raise ValueError("parameter point is degenerate: "
                         f"{cd.point_count} critical points instead of {p + q + r + 1}")
    return _ll_from_values_poly(cd.values_poly, truncated)


# -- covering (local diffeomorphism) checks -----------------------------------

def ll_jacobian_check(p, q, r, values: dict) -> dict:
    """Nonsingularity of the critical-value evaluation matrix at a parameter
    point of the printed C_{p,q,r} family.

    Builds the tau x tau matrix of derivatives of F(y) with respect to all
    tau parameters, evaluated at the tau critical points, and decides its
    nonsingularity exactly: with N the squarefree critical-point polynomial,
    the evaluation matrix factors as (coefficient matrix of the derivative
    functions reduced mod N) times a nonsingular Vandermonde matrix, so its
    rank is decided over the rationals.  Points with degenerate critical
    points or coincident critical values are reported singular by design.
    """
    _check_pqr(p, q, r)
    vals = _pqr_values(p, q, r, values)
    num, den, syms = _symbolic_restriction(p, q, r)
    sub = {s: vals[str(s)] for s in syms}
    F = RationalFunction1V.make(num.subs(sub), den.subs(sub))
    tau = p + q + r + 1
    dF = F.derivative()
    N = dF.num
    g = N.gcd(F.den)
    if not g.is_one:
        N = N.exquo(g)
    report = {"tau": tau, "nonsingular": False, "distinct_points": False,
              "distinct_values": False}
    sqf = N.exquo(N.gcd(N.diff(Y)))
    if sqf.degree() != tau or not N.gcd(F.den).is_one:
        report["reason"] = "degenerate critical points"
        return report
    report["distinct_points"] = True
    N = sqf.monic()
    values_poly = _values_charpoly(F, N)
    report["distinct_values"] = values_poly.gcd(values_poly.diff(T)).is_one
    rows = []
    expr = num / den
    for s in syms:
        d = sympy.together(sympy.diff(expr, s).subs(sub))
        dn, dd = sympy.fraction(d)
        dn = sympy.Poly(dn, Y, domain="QQ")
        dd = sympy.Poly(dd, Y, domain="QQ")
        h = (dn * sympy.invert(dd, N)).rem(N)
        c = h.all_coeffs()[::-1]
        rows.append(c + [0] * (tau - len(c)))
    det = sympy.Matrix(rows).det()
    report["nonsingular"] = bool(det != 0 and report["distinct_values"])
    report["matrix_rank_full"] = bool(det != 0)
    return report


def degenerate_draws(p, q, r, n: int, seed: int = 0) -> list[dict]:
    """Rational parameter points of the printed C_{p,q,r} family whose
    restricted function has a degenerate critical point.

    A location y0 and all nonlinear parameters are drawn at random; two
    parameters that enter the function linearly (and survive in F') then
    solve F'(y0) = F''(y0) = 0 as an exact 2x2 linear system.
    """
    _check_pqr(p, q, r)
    num, den, syms = _symbolic_restriction(p, q, r)
    expr = num / den
    linear = [s for s in syms
              if str(s) != "L0" and sympy.degree(sympy.Poly(num, s)) == 1]
    if len(linear) < 2:
        raise ValueError("need two linearly entering parameters")
    s1, s2 = linear[0], linear[1]
    Fp = sympy.together(sympy.diff(expr, Y))
    Fpp = sympy.together(sympy.diff(expr, Y, 2))
    rng = stable_rng(seed, "degenerate", p, q, r)
    out = []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 40 * n:
            raise RuntimeError("degenerate draws kept failing")
        vals = {}
        for s in syms:
            name = str(s)
            if s in (s1, s2):
                continue
            if name in ("alpha", "beta", "gamma"):
                vals[s] = sympy.Rational(rng.choice((1, -1)) * rng.randint(1, 6),
                                         rng.randint(1, 3))
            else:
                vals[s] = sympy.Rational(rng.randint(-6, 6), rng.randint(1, 3))
        y0 = sympy.Rational(rng.choice((1, -1)) * rng.randint(1, 9), rng.randint(1, 3))
        ga = vals.get(sympy.Symbol("gamma"))
        if ga is not None and (y0 == 0 or y0 + ga == 0):
            continue
        eq1 = sympy.fraction(sympy.together(Fp.subs(vals).subs(Y, y0)))[0]
        eq2 = sympy.fraction(sympy.together(Fpp.subs(vals).subs(Y, y0)))[0]
        sol = sympy.solve([eq1, eq2], [s1, s2], dict=True)
        if len(sol) != 1:
            continue
        point = dict(vals)
        point.update(sol[0])
        named = {str(s): sympy.Rational(v) for s, v in point.items()}
        named.setdefault("L0", sympy.Rational(0))
        if named["alpha"] == 0 or named["beta"] == 0 or named["gamma"] == 0:
            continue
        named = {k: Fraction(int(v.p), int(v.q)) for k, v in named.items()}
        out.append(named)
    return out


def _transformed_system(p, q, r, al, be, ga):
    """The row-reduced, denominator-cleared evaluation system for the
    C_{p,q,r} covering argument: y^(r+1)(y+gamma)^k for k = 1..p,
    y^m(y+gamma)^(p+1) for m = 1..q+r, and the combined row
    A y^(r+1) + B (y+gamma)^(p+1) with A = p beta^p (-gamma)^p and
    B = r alpha^r gamma^r."""
    A = p * be ** p * (-ga) ** p
    B = r * al ** r * ga ** r
    rows = [sympy.Poly(Y ** (r + 1) * (Y + ga) ** k, Y, domain="QQ")
            for k in range(1, p + 1)]
    rows += [sympy.Poly(Y ** m * (Y + ga) ** (p + 1), Y, domain="QQ")
             for m in range(q + r, 0, -1)]
    rows.append(sympy.Poly(A * Y ** (r + 1) + B * (Y + ga) ** (p + 1), Y, domain="QQ"))
    return rows, A, B


def extended_matrix_relation(p, q, r, seed: int = 0, draws: int = 5) -> dict:
    """Determinant bookkeeping for appending the function y^(r+1) and the
    evaluation point y = 0 to the covering argument's evaluation system.

    Expanding the extended (tau+1)-determinant along the y = 0 column hits
    only the combined row (value B gamma^(p+1)), so the exact identity is

        det_{tau+1} = -B * gamma^(p+1) * det(M'),

    with M' the tau x tau matrix in which the combined row is replaced by the
    appended y^(r+1).  This check verifies that identity exactly at random
    rational draws, confirms both determinants are nonzero (so the system is
    linearly independent at arbitrary distinct points off the poles), and
    also reports whether det_{tau+1} is proportional to det_tau itself by a
    single constant times gamma^(p+1) — it is not; the factor relation only
    holds with the minor M'.
    """
    _check_pqr(p, q, r)
    rng = stable_rng(seed, "extmat", p, q, r)
    tau = p + q + r + 1
    report = {"tau": tau, "cofactor_identity": True, "base_nonsingular": True,
              "extended_nonsingular": True, "draws": draws,
              "literal_ratio_values": []}
    for _ in range(draws):
        al, be = (sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 6),
                                 rng.randint(1, 3)) for _ in range(2))
        ga = sympy.Rational(rng.randint(1, 6), rng.randint(1, 3))
        pts = set()
        while len(pts) < tau:
            v = sympy.Rational(rng.randint(-12, 12), rng.randint(1, 4))
            if v != 0 and v != -ga:
                pts.add(v)
        pts = sorted(pts)
        rows, A, B = _transformed_system(p, q, r, al, be, ga)
        extra = sympy.Poly(Y ** (r + 1), Y, domain="QQ")
        base = sympy.Matrix([[f.eval(x) for x in pts] for f in rows])
        det_tau = base.det()
        ext = sympy.Matrix([[f.eval(x) for x in pts + [sympy.Integer(0)]]
                            for f in rows + [extra]])
        det_ext = ext.det()
        minor = sympy.Matrix([[f.eval(x) for x in pts] for f in rows[:-1] + [extra]])
        det_minor = minor.det()
        if det_ext != -B * ga ** (p + 1) * det_minor:
            report["cofactor_identity"] = False
        if det_tau == 0:
            report["base_nonsingular"] = False
        else:
            report["literal_ratio_values"].append(
                sympy.Rational(det_ext, det_tau) / ga ** (p + 1))
        if det_ext == 0:
            report["extended_nonsingular"] = False
    vals = report["literal_ratio_values"]
    report["literal_proportionality"] = bool(vals and all(v == vals[0] for v in vals))
    return report


# -- origin-fiber check --------------------------------------------------------

def _fiber_numerators(p, q, r, vals: dict):
    """Numerators (as Fraction coefficient lists, low degree first) of F and
    of F' over y^r (y+gamma)^p and y^(r+1) (y+gamma)^(p+1) respectively."""
    al, be, ga = (Fraction(vals["alpha"]), Fraction(vals["beta"]), Fraction(vals["gamma"]))

    def mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, z in enumerate(b):
                out[i + j] += x * z
        return out

    def add(a, b):
        out = [Fraction(0)] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i] += x
        return out

    def ypow(k):
        return [Fraction(0)] * k + [Fraction(1)]

    def ygpow(k):  # (y + gamma)^k
        out = [Fraction(1)]
        for _ in range(k):
            out = add([ga * c for c in out], [Fraction(0)] + out)
        return out

    def scale(a, c):
        return [c * x for x in a]

    num = [Fraction(0)]
    coeffs = {(1, 0): Fraction(1), (2, 0): Fraction(1), (3, 0): Fraction(1)}
    for block, power in ((1, p), (2, q), (3, r)):
        for i in range(1, power):
            coeffs[(block, i)] = Fraction(vals.get(f"L{block}_{i}", 0))
    for i in range(p):
        num = add(num, scale(mul(ypow(p - i + r), ygpow(i)), coeffs[(1, i)] * be ** (p - i)))
    for i in range(q):
        num = add(num, scale(mul(ypow(q - i + r), ygpow(p)), coeffs[(2, i)]))
    for i in range(r):
        num = add(num, scale(mul(ypow(i), ygpow(p + r - i)), coeffs[(3, i)] * al ** (r - i)))
    num = add(num, scale(mul(ypow(r), ygpow(p)), Fraction(vals.get("L0", 0))))

    dnum = [c * (i + 1) for i, c in enumerate(num[1:])]
    # F' = [num' * y(y+gamma) - num * ((p+r) y + r gamma)] / (y^(r+1) (y+gamma)^(p+1))
    crit = add(mul(dnum, [Fraction(0), ga, Fraction(1)]),
               scale(mul(num, [r * ga, Fraction(p + r)]), Fraction(-1)))
    while num and num[-1] == 0:
        num.pop()
    while crit and crit[-1] == 0:
        crit.pop()
    return num, crit


def _poly_rem(a, b):
    """Remainder of Fraction coefficient lists (low degree first)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        f = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_rem(a, b)
    return a


def ll_fiber_origin_check(p, q, r, draws: int = 10000, seed: int = 0) -> dict:
    """The only parameter point whose every critical value is zero is zero.

    Confirms the degree obstruction: the numerator of F - a has degree
    exactly p+q+r (less than the tau = p+q+r+1 critical points a full zero
    fiber would need), and over `draws` random nonzero rational parameter
    points verifies that the critical values never all vanish (the function
    numerator is never divisible by the squarefree critical-point polynomial).
    """
    _check_pqr(p, q, r)
    rng = stable_rng(seed, "fiber", p, q, r)
    pd = printed_miniversal(p, q, r)

    generic = {"alpha": 1, "beta": 1, "gamma": 1}
    num, _ = _fiber_numerators(p, q, r, generic)
    degree_ok = (len(num) - 1 == p + q + r)

    hits = []
    tested = 0
    while tested < draws:
        vals = {}
        for name in pd.parameters:
            vals[name] = Fraction(rng.randint(-9, 9), rng.choice((1, 1, 2, 3)))
        if vals["alpha"] == 0 or vals["beta"] == 0 or vals["gamma"] == 0:
            continue
        tested += 1
        numF, crit = _fiber_numerators(p, q, r, vals)
        if not crit:
            hits.append(dict(vals))
            continue
        sqf_den = _poly_gcd(crit, [c * (i + 1) for i, c in enumerate(crit[1:])])
        sqf = crit if len(sqf_den) <= 1 else _poly_div_exact(crit, sqf_den)
        if not _poly_rem(numF, sqf):
            hits.append(dict(vals))
    return {"degree_bound": p + q + r, "degree_ok": degree_ok,
            "draws": tested, "zero_fiber_hits": hits}


def _poly_div_exact(a, b):
    """Exact quotient of Fraction coefficient lists (low degree first)."""
    a = list(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db:
        f = a[-1] / lb
        shift = len(a) - 1 - db
        out[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return out
