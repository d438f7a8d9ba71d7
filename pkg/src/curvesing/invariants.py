"""Tjurina and Milnor numbers of functions on space curves.

The Tjurina number is the codimension of the extended tangent space of a
(matrix, function) pair; the Milnor number counts the Morse critical points
a generic small perturbation of the function has on a generic smoothing of
the curve.  Milnor numbers are computed only where the problem reduces to
one or two variables: plane-curve entries via exact bivariate elimination,
and the C_{p,q,r} family via its rational restriction F(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import sympy

from .catalog import CatalogEntry, printed_miniversal
from .curves import CurveFunctionPair, tangent_space
from .llmap import RationalFunction1V, Y, critical_values, restricted_function_Cpqr
from .local_algebra import (
    INFINITE,
    ModuleElement,
    standard_basis,
    standard_monomials,
)
from .poly import Polynomial
from .seeds import stable_rng

X = sympy.Symbol("x")


class NotFinitelyDetermined(ArithmeticError):
    """The tangent space has infinite codimension."""


class PersistentDegeneracy(RuntimeError):
    """Random draws kept hitting degenerate configurations."""


def tjurina(pair: CurveFunctionPair) -> int:
    """Codimension of the extended tangent space of the pair."""
    sb = standard_basis(tangent_space(pair))
    try:
        return len(standard_monomials(sb))
    except Exception as e:
        raise NotFinitelyDetermined(
            "the pair is not finitely determined (infinite quotient)") from e


@dataclass(frozen=True)
class Deformation:
    """Monomial miniversal deformation data: directions projecting to a
    basis of the quotient by the tangent space.  The truncated variant drops
    the constant-function direction."""

    base_dimension: int
    directions: tuple[ModuleElement, ...]
    truncated: bool


def miniversal_basis(pair: CurveFunctionPair, truncated: bool = False) -> Deformation:
    """Monomial deformation directions read off the tangent-space staircase."""
    sb = standard_basis(tangent_space(pair))
    try:
        stairs = standard_monomials(sb)
    except Exception as e:
        raise NotFinitelyDetermined("infinite quotient") from e
    stairs.sort()
    variables = pair.vars
    rank = pair.module_rank
    f_slot = rank - 1
    const = (f_slot, (0,) * len(variables))
    if truncated:
        if const not in stairs:
            raise ValueError("no constant-function direction to truncate")
        stairs.remove(const)
    zero = Polynomial.zero(variables)
    dirs = []
    for comp, exp in stairs:
        mono = Polynomial.monomial(exp, 1, variables)
        dirs.append(ModuleElement(tuple(mono if i == comp else zero for i in range(rank))))
    return Deformation(len(dirs), tuple(dirs), truncated)


@dataclass(frozen=True)
class GenericityConfig:
    """Controls the random draws standing in for 'generic'."""

    seed: int = 0
    coeff_bound: int = 9
    retries: int = 3

    def __post_init__(self):
        if self.retries < 3:
            raise ValueError("retries must be at least 3")


DEFAULT_CONFIG = GenericityConfig()


# -- Milnor number for plane data ---------------------------------------------

def _plane_weights(g, f):
    """Smallest positive coprime weights making both inputs quasi-homogeneous."""
    for total in range(2, 64):
        for wx in range(1, total):
            wy = total - wx
            if gcd(wx, wy) != 1:
                continue
            w = {"x": wx, "y": wy}
            if g.quasi_degree(w) is not None and f.quasi_degree(w) is not None:
                return w
    return None


def _poly_to_sympy(p, syms):
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for s, e in zip(syms, exp):
            if e:
                term *= s ** e
        expr += term
    return expr


def _nonzero_rational(rng, bound):
    while True:
        v = sympy.Rational(rng.randint(-bound, bound), rng.randint(1, 3))
        if v != 0:
            return v


def _count_plane_critical_points(g_eq, jac, ft, rng):
    """Distinct-solution count of {g_eq, jac} with Morse and distinct-value
    certification; None signals a degenerate draw (caller redraws)."""
    for shear_attempt in range(4):
        # shearing y separates solutions that share a y-coordinate
        c = 0 if shear_attempt == 0 else sympy.Rational(rng.randint(1, 5), rng.randint(1, 3))
        sub = {Y: Y - c * X}
        sys_g = sympy.expand(g_eq.subs(sub))
        sys_j = sympy.expand(jac.subs(sub))
        sys_f = sympy.expand(ft.subs(sub))
        try:
            grb = sympy.groebner([sys_g, sys_j], X, Y, order="lex")
        except sympy.polys.polyerrors.ComputationFailed:
            continue
        polys = list(grb.exprs)
        if polys == [sympy.Integer(1)]:
            return None  # no critical points at all: degenerate draw
        if len(polys) != 2:
            continue  # not in shape position under this shear
        p1 = sympy.Poly(polys[0], X, Y)
        ry = sympy.Poly(polys[1], Y, domain="QQ")
        if p1.degree(X) != 1 or sympy.Poly(polys[1], X, Y).degree(X) != 0:
            continue
        c1 = sympy.Poly(p1.as_expr().coeff(X, 1), Y, domain="QQ")
        c0 = sympy.Poly(p1.as_expr().coeff(X, 0), Y, domain="QQ")
        sqf = ry.exquo(ry.gcd(ry.diff(Y)))
        if sqf.degree() != ry.degree():
            return None  # multiple solution: non-Morse draw
        if not c1.gcd(sqf).is_one:
            continue  # x not expressible on some root: try another shear
        # critical values: f with x = -c0/c1 substituted, as element of QQ[y]/(r)
        val = sympy.together(sys_f.subs(X, -c0.as_expr() / c1.as_expr()))
        vn, vd = sympy.fraction(val)
        val_rf = RationalFunction1V.make(sympy.Poly(vn, Y, domain="QQ"),
                                         sympy.Poly(vd, Y, domain="QQ"))
        from .llmap import _values_charpoly
        values = _values_charpoly(val_rf, sqf.monic())
        tsym = values.gen
        if not values.gcd(values.diff(tsym)).is_one:
            return None  # coincident critical values
        return sqf.degree()
    return None


def milnor_plane(g: Polynomial, f: Polynomial, cfg: GenericityConfig = DEFAULT_CONFIG) -> int:
    """Morse critical points of a perturbed f on a smoothing g = eps.

    The perturbation adds random rational multiples of the linear monomials
    whose quasi-degree falls strictly below that of f, keeping the perturbed
    family a positive-weight deformation so every critical point stays local.
    Counting is exact: a lexicographic elimination puts the critical system
    in shape position (shearing coordinates when needed), the count is the
    degree of the squarefree eliminant, and Morse-ness plus distinct critical
    values are certified before a draw is accepted.  All agreeing draws are
    required; persistent degeneracy raises.
    """
    two = ("x", "y")
    g = g.restrict(two) if g.vars != two else g
    f = f.restrict(two) if f.vars != two else f
    if g.constant_term() != 0:
        raise ValueError("curve must pass through the origin")
    w = _plane_weights(g, f)
    if w is None:
        raise PersistentDegeneracy("no quasi-homogeneous weights found for the input")
    d = f.quasi_degree(w)
    use_x = w["x"] < d
    use_y = w["y"] < d
    gs = _poly_to_sympy(g, (X, Y))
    fs = _poly_to_sympy(f, (X, Y))
    rng = stable_rng(cfg.seed, "milnor_plane", str(g), str(f))
    counts = []
    attempts = 0
    while len(counts) < cfg.retries:
        attempts += 1
        if attempts > 12 * cfg.retries:
            raise PersistentDegeneracy("plane Milnor draws kept degenerating")
        eps = _nonzero_rational(rng, cfg.coeff_bound)
        ft = fs
        if use_x:
            ft = ft + _nonzero_rational(rng, cfg.coeff_bound) * X
        if use_y:
            ft = ft + _nonzero_rational(rng, cfg.coeff_bound) * Y
        # the smoothed curve must be nonsingular everywhere
        smooth = sympy.groebner([gs - eps, gs.diff(X), gs.diff(Y)], X, Y, order="lex")
        if list(smooth.exprs) != [sympy.Integer(1)]:
            continue
        jac = sympy.expand(ft.diff(X) * gs.diff(Y) - ft.diff(Y) * gs.diff(X))
        n = _count_plane_critical_points(gs - eps, jac, ft, rng)
        if n is None:
            continue
        counts.append(n)
    if len(set(counts)) != 1:
        raise PersistentDegeneracy(f"draws disagree: {counts}")
    return counts[0]


# -- Milnor number for the C_{p,q,r} family ------------------------------------

def milnor_C_space(p: int, q: int, r: int, cfg: GenericityConfig = DEFAULT_CONFIG) -> int:
    """Morse critical points of the restricted function F(y) at generic
    nonzero alpha, beta, gamma and random lower-order coefficients."""
    if not p >= q >= r >= 1:
        raise ValueError("indices must satisfy p >= q >= r >= 1")
    pd = printed_miniversal(p, q, r)
    rng = stable_rng(cfg.seed, "milnor_C", p, q, r)
    counts = []
    attempts = 0
    while len(counts) < cfg.retries:
        attempts += 1
        if attempts > 12 * cfg.retries:
            raise PersistentDegeneracy("C_{p,q,r} Milnor draws kept degenerating")
        values = {}
        for name in pd.parameters:
            if name in ("alpha", "beta", "gamma"):
                values[name] = _nonzero_rational(rng, cfg.coeff_bound)
            elif name != "L0":
                values[name] = sympy.Rational(rng.randint(-cfg.coeff_bound, cfg.coeff_bound),
                                              rng.randint(1, 3))
        F = restricted_function_Cpqr(p, q, r, values)
        cd = critical_values(F)
        if cd.degenerate or cd.distinct_values != cd.point_count:
            continue
        counts.append(cd.point_count)
    if len(set(counts)) != 1:
        raise PersistentDegeneracy(f"draws disagree: {counts}")
    return counts[0]


# -- conjecture harness ---------------------------------------------------------

PLANE_FAMILIES = ("A", "B", "C_plane", "F", "X9star", "J10star")


def conjecture_check(entry: CatalogEntry, cfg: GenericityConfig = DEFAULT_CONFIG) -> dict:
    """Compare tau with mu where a Milnor route exists.

    Plane entries and the C_{p,q,r} family have univariate/bivariate
    reductions; the corank-2 Fd and E-check families do not, and report
    an explicit 'mu not computed' status instead of a guess.
    """
    tau = tjurina(entry.pair)
    report = {"name": entry.name, "tau": tau}
    if entry.family in PLANE_FAMILIES:
        g = entry.pair.matrix.entries[0][0].restrict(("x", "y"))
        f = entry.pair.function.restrict(("x", "y"))
        mu = milnor_plane(g, f, cfg)
    elif entry.family == "C_space":
        mu = milnor_C_space(*entry.indices, cfg)
    else:
        report.update(mu=None, status="mu not computed", equal=None)
        return report
    report.update(mu=mu, status="equal" if mu == tau else "mismatch", equal=mu == tau)
    return report
