"""Vector fields tangent to discriminants and bifurcation diagrams.

For a quasi-homogeneous parametric family (M, F) the versality decompositions

  F * d(M,F)/d(lambda_i)   =  (A M + M B, G) + sum_r h_ir d(M,F)/dx_r
                              + sum_j v_ij(lambda) d(M,F)/d(lambda_j)

(and the truncated variant with multiplier F^i and a constant-function
absorber w_i0) are solved exactly degree by degree: the grading forces the
quasi-degree of every unknown, each unknown gets an ansatz of all monomials
of exactly that degree, and the identity becomes one finite linear system
over the rationals per row.  The matrices (v_ij) and (w_ij) present the
discriminant and the bifurcation diagram as free divisors: their
determinants are defining equations.

The bilinear matrix term is used in its linearised tangent-space form
A M + M B (the product rule image of conjugation), which is what a module
decomposition can match.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import PrintedDeformation, printed_miniversal
from .curves import MatrixGerm, maximal_minors
from .poly import Polynomial, QQ, rat
from .seeds import stable_rng

SPACE = ("x", "y", "z")


class DecompositionError(RuntimeError):
    """The graded linear system for a decomposition row is inconsistent."""


@dataclass(frozen=True)
class DeformationFamily:
    """A parametric (matrix, function) family, quasi-homogeneous under
    `weights` (which covers space variables and parameters alike)."""

    matrix: MatrixGerm
    function: Polynomial
    parameters: tuple[str, ...]
    weights: dict
    degree: int
    constant_param: str | None

    @property
    def vars(self) -> tuple[str, ...]:
        return self.function.vars

    @property
    def tau_like(self) -> int:
        return len(self.parameters)

    @classmethod
    def from_printed(cls, pd: PrintedDeformation) -> "DeformationFamily":
        weights = dict(pd.parameter_weights)
        weights.update(pd.variable_weights)
        return cls(pd.matrix, pd.function, pd.parameters, weights, pd.degree,
                   None if pd.truncated else "L0")

    @classmethod
    def a_series(cls, k: int) -> "DeformationFamily":
        """The classical unfolding x^(k+1) + sum L_i x^i on the smooth
        branch y = z = 0 (matrix [y, z], undeformed)."""
        if k < 1:
            raise ValueError("k must be at least 1")
        params = tuple(f"L{i}" for i in range(k))
        allvars = SPACE + params
        weights = {"x": 1, "y": 1, "z": 1}
        weights.update({f"L{i}": k + 1 - i for i in range(k)})
        x = Polynomial.variable("x", allvars)
        f = x ** (k + 1)
        for i in range(k):
            f = f + Polynomial.variable(f"L{i}", allvars) * x ** i
        matrix = MatrixGerm.parse("y, z", allvars)
        return cls(matrix, f, params, weights, k + 1, "L0")

    def truncated(self) -> "DeformationFamily":
        """Drop the constant-function parameter."""
        if self.constant_param is None:
            raise ValueError("family has no constant parameter")
        cp = self.constant_param
        keep = tuple(p for p in self.parameters if p != cp)
        allvars = tuple(v for v in self.vars if v != cp)
        images = {cp: Polynomial.constant(0, self.vars)}
        f = self.function.substitute(images).restrict(allvars)
        m = self.matrix.map(lambda e: e.substitute(images).restrict(allvars))
        w = {v: self.weights[v] for v in allvars}
        w.update({v: self.weights[v] for v in SPACE})
        return DeformationFamily(m, f, keep, w, self.degree, None)

    def grading(self) -> tuple[list[int], list[int]]:
        """Row and column degrees of the matrix (first row normalised to 0)."""
        m = self.matrix
        n = m.n
        qd = [[None if p.is_zero() else p.quasi_degree(self.weights) for p in row]
              for row in m.entries]
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
        if any(v is None for v in rows + cols):
            raise DecompositionError("matrix grading undetermined")
        return rows, cols


def _weighted_monomials(variables, weights, degree, skip=None):
    """Exponent tuples over `variables` of exact quasi-degree `degree`."""
    wlist = [weights[v] for v in variables]
    out = []

    def rec(pos, remaining, acc):
        if pos == len(wlist):
            if remaining == 0:
                exp = tuple(acc)
                if skip is None or not skip(exp):
                    out.append(exp)
            return
        w = wlist[pos]
        for e in range(remaining // w + 1):
            rec(pos + 1, remaining - e * w, acc + [e])

    if degree >= 0:
        rec(0, degree, [])
    return out


def _nullspace(columns, n_unknowns):
    """Basis of the exact rational nullspace of sum_k c_k columns[k] = 0."""
    keys = set()
    for col in columns:
        keys.update(col)
    keys = sorted(keys)
    key_index = {k: i for i, k in enumerate(keys)}
    rows = [[QQ(0)] * n_unknowns for _ in keys]
    for k, col in enumerate(columns):
        for label, c in col.items():
            rows[key_index[label]][k] = c
    m, n = len(rows), n_unknowns
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [QQ(0)] * n
        vec[fc] = QQ(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(vec)
    return basis


def _solve_linear(columns, rhs, n_unknowns):
    """Solve sum_k c_k columns[k] = rhs exactly (columns, rhs sparse dicts
    keyed by equation label).  Returns coefficient list with free unknowns
    set to zero, or None when inconsistent."""
    keys = set(rhs)
    for col in columns:
        keys.update(col)
    keys = sorted(keys)
    key_index = {k: i for i, k in enumerate(keys)}
    rows = [[QQ(0)] * (n_unknowns + 1) for _ in keys]
    for k, col in enumerate(columns):
        for label, c in col.items():
            rows[key_index[label]][k] = c
    for label, c in rhs.items():
        rows[key_index[label]][n_unknowns] = c
    m, n = len(rows), n_unknowns
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [v / inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    sol = [QQ(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = rows[i][n]
    return sol


@dataclass(frozen=True)
class GradedDecomposition:
    """One solved decomposition row, with every witness retained."""

    family: DeformationFamily
    param: str
    multiplier: Polynomial
    A: tuple[tuple[Polynomial, ...], ...]
    B: tuple[tuple[Polynomial, ...], ...]
    h: dict
    g: tuple[Polynomial, ...]
    vrow: dict            # param name -> Polynomial in the parameters only
    w0: Polynomial | None

    def verify(self) -> bool:
        """Re-expand the identity exactly; True iff every slot cancels."""
        fam = self.family
        allvars = fam.vars
        m = fam.matrix
        n = m.n
        slots = list(m.flat()) + [fam.function]
        base = [s.derivative(self.param) for s in slots]
        lhs = [self.multiplier * b for b in base]
        rhs = [Polynomial.zero(allvars) for _ in slots]
        for i in range(n):                      # A M
            for j in range(n):
                for c in range(n + 1):
                    rhs[i * (n + 1) + c] = rhs[i * (n + 1) + c] + self.A[i][j] * m.entries[j][c]
        for k in range(n + 1):                  # M B
            for l in range(n + 1):
                for r_ in range(n):
                    rhs[r_ * (n + 1) + l] = rhs[r_ * (n + 1) + l] + m.entries[r_][k] * self.B[k][l]
        for s, minor in enumerate(maximal_minors(m)):   # G in the minor ideal
            rhs[-1] = rhs[-1] + self.g[s] * minor
        for v in SPACE:
            hv = self.h[v]
            for idx, slot in enumerate(slots):
                rhs[idx] = rhs[idx] + hv * slot.derivative(v)
        for pname, coeff in self.vrow.items():
            cc = coeff.extend(allvars)
            for idx, slot in enumerate(slots):
                rhs[idx] = rhs[idx] + cc * slot.derivative(pname)
        if self.w0 is not None:
            rhs[-1] = rhs[-1] + self.w0.extend(allvars)
        return all((l - r).is_zero() for l, r in zip(lhs, rhs))


def solve_decomposition(fam: DeformationFamily, param: str, mode: str = "delta",
                        power: int = 1,
                        tangent_to: Polynomial | None = None) -> GradedDecomposition:
    """Solve one versality decomposition row exactly.

    mode "delta": multiplier F, with the constant parameter peeled off —
    F = (F - L0) + L0, the L0 part contributing L0 to v_ii directly and the
    rest solved with pure powers of L0 excluded from the v-ansatz, so that
    the assembled matrix restricts to L0 * identity on the L0-axis.
    mode "sigma": multiplier F^power on the truncated family, with the
    constant-function absorber w_i0(lambda') added to the f-component.
    Beware: the solution space of this identity is not unique and need not
    contain any field tangent to the bifurcation diagram (see
    bifurcation_matrix for the construction that does).

    When `tangent_to` is a parameter polynomial S, the solution is further
    constrained so the row field is logarithmic for S (row applied to S lies
    in the ideal (S), imposed as extra linear equations with an unknown
    cofactor); the solver reports inconsistency when no such solution exists.
    """
    allvars = fam.vars
    weights = fam.weights
    m = fam.matrix
    n = m.n
    rowdeg, coldeg = fam.grading()
    slots = list(m.flat()) + [fam.function]
    slotdeg = [rowdeg[i] + coldeg[j] for i in range(n) for j in range(n + 1)]
    slotdeg.append(fam.degree)
    u = {p: weights[p] for p in fam.parameters}
    u_i = u[param]
    cp = fam.constant_param

    if mode == "delta":
        peel = cp is not None
        mult = fam.function
        if peel:
            mult = mult - Polynomial.variable(cp, allvars)
        mdeg = fam.degree
    elif mode == "sigma":
        if cp is not None:
            raise ValueError("sigma mode requires the truncated family")
        peel = False
        mult = fam.function ** power
        mdeg = fam.degree * power
    else:
        raise ValueError("mode must be 'delta' or 'sigma'")

    base = [s.derivative(param) for s in slots]
    lhs = [mult * b for b in base]

    columns = []
    unknown_meta = []

    def add_unknown(meta, contribution):
        """contribution: list of (slot index, Polynomial)."""
        col = {}
        for slot, poly in contribution:
            for exp, c in poly.terms.items():
                label = (slot, exp)
                col[label] = col.get(label, QQ(0)) + c
        if col:
            columns.append(col)
            unknown_meta.append(meta)
            return True
        return False

    def mono(exp):
        return Polynomial.monomial(exp, 1, allvars)

    for i in range(n):          # A entries
        for j in range(n):
            deg = mdeg - u_i + rowdeg[i] - rowdeg[j]
            for exp in _weighted_monomials(allvars, weights, deg):
                contrib = [(i * (n + 1) + c, mono(exp) * m.entries[j][c])
                           for c in range(n + 1)]
                add_unknown(("A", i, j, exp), contrib)
    for k in range(n + 1):      # B entries
        for l in range(n + 1):
            deg = mdeg - u_i + coldeg[l] - coldeg[k]
            for exp in _weighted_monomials(allvars, weights, deg):
                contrib = [(r_ * (n + 1) + l, m.entries[r_][k] * mono(exp))
                           for r_ in range(n)]
                add_unknown(("B", k, l, exp), contrib)
    minors = maximal_minors(m)
    totdeg = sum(rowdeg) + sum(coldeg)
    f_slot = len(slots) - 1
    for s, minor in enumerate(minors):   # minor-ideal coefficients
        deg = fam.degree + mdeg - u_i - (totdeg - coldeg[s])
        for exp in _weighted_monomials(allvars, weights, deg):
            add_unknown(("g", s, exp), [(f_slot, mono(exp) * minor)])
    for v in SPACE:             # coordinate fields
        deg = mdeg - u_i + weights[v]
        for exp in _weighted_monomials(allvars, weights, deg):
            contrib = [(idx, mono(exp) * slot.derivative(v))
                       for idx, slot in enumerate(slots)]
            add_unknown(("h", v, exp), contrib)
    cp_pindex = fam.parameters.index(cp) if cp is not None else None

    def pure_constant(exp):
        return (exp[cp_pindex] > 0
                and all(e == 0 for k_, e in enumerate(exp) if k_ != cp_pindex))

    pweights = {p: weights[p] for p in fam.parameters}
    v_skip = pure_constant if peel else None
    for pname in fam.parameters:   # v / w row entries, parameters only
        deg = mdeg - u_i + u[pname]
        for pexp in _weighted_monomials(fam.parameters, pweights, deg, skip=v_skip):
            exp = tuple(pexp[fam.parameters.index(v)] if v in fam.parameters else 0
                        for v in allvars)
            contrib = [(idx, mono(exp) * slot.derivative(pname))
                       for idx, slot in enumerate(slots)]
            add_unknown(("v", pname, pexp), contrib)
    if mode == "sigma":            # constant-function absorber
        deg = mdeg - u_i + fam.degree
        for pexp in _weighted_monomials(fam.parameters, pweights, deg):
            exp = tuple(pexp[fam.parameters.index(v)] if v in fam.parameters else 0
                        for v in allvars)
            add_unknown(("w0", pexp), [(f_slot, mono(exp))])
    tang_slot = len(slots)
    if tangent_to is not None:
        S = tangent_to
        if S.vars != fam.parameters:
            S = S.restrict(fam.parameters) if set(S.vars) >= set(fam.parameters) \
                else S.extend(fam.parameters)
        # retrofit the tangency contribution of every row unknown
        for k_, meta in enumerate(unknown_meta):
            if meta[0] != "v":
                continue
            _, pname, pexp = meta
            contrib = Polynomial.monomial(pexp, 1, fam.parameters) * S.derivative(pname)
            for exp, c in contrib.terms.items():
                label = (tang_slot, exp)
                columns[k_][label] = columns[k_].get(label, QQ(0)) + c
        # unknown cofactor q with row(S) = q*S
        for pexp in _weighted_monomials(fam.parameters, pweights, mdeg - u_i):
            contrib = -(Polynomial.monomial(pexp, 1, fam.parameters) * S)
            col = {}
            for exp, c in contrib.terms.items():
                col[(tang_slot, exp)] = c
            if col:
                columns.append(col)
                unknown_meta.append(("q", pexp))

    rhs = {}
    for idx, poly in enumerate(lhs):
        for exp, c in poly.terms.items():
            rhs[(idx, exp)] = c
    sol = _solve_linear(columns, rhs, len(columns))
    if sol is None:
        raise DecompositionError(
            f"graded system inconsistent for parameter {param} (mode {mode})")

    zero = Polynomial.zero(allvars)
    A = [[zero] * n for _ in range(n)]
    B = [[zero] * (n + 1) for _ in range(n + 1)]
    g = [zero] * (n + 1)
    h = {v: zero for v in SPACE}
    vrow = {p: Polynomial.zero(fam.parameters) for p in fam.parameters}
    w0 = Polynomial.zero(fam.parameters) if mode == "sigma" else None
    for meta, c in zip(unknown_meta, sol):
        if c == 0:
            continue
        kind = meta[0]
        if kind == "A":
            _, i, j, exp = meta
            A[i][j] = A[i][j] + Polynomial.monomial(exp, c, allvars)
        elif kind == "B":
            _, k, l, exp = meta
            B[k][l] = B[k][l] + Polynomial.monomial(exp, c, allvars)
        elif kind == "g":
            _, s, exp = meta
            g[s] = g[s] + Polynomial.monomial(exp, c, allvars)
        elif kind == "h":
            _, v, exp = meta
            h[v] = h[v] + Polynomial.monomial(exp, c, allvars)
        elif kind == "v":
            _, pname, pexp = meta
            vrow[pname] = vrow[pname] + Polynomial.monomial(pexp, c, fam.parameters)
        elif kind == "w0":
            _, pexp = meta
            w0 = w0 + Polynomial.monomial(pexp, c, fam.parameters)
    if peel:
        vrow[param] = vrow[param] + Polynomial.variable(cp, fam.parameters)
        mult = fam.function
    dec = GradedDecomposition(fam, param, mult, tuple(map(tuple, A)),
                              tuple(map(tuple, B)), h, tuple(g), vrow, w0)
    if not dec.verify():
        raise DecompositionError("solved decomposition fails exact re-expansion")
    return dec


# -- assembled matrices --------------------------------------------------------

@dataclass(frozen=True)
class VectorFieldMatrix:
    """Square matrix of parameter polynomials whose rows are vector fields
    tangent to the divisor; the determinant is a defining equation."""

    parameters: tuple[str, ...]
    entries: tuple[tuple[Polynomial, ...], ...]
    row_degrees: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def det(self) -> Polynomial:
        return _poly_det([list(row) for row in self.entries])

    def evaluate(self, values: dict):
        """Exact rational value of the determinant at a parameter point."""
        return self.det().evaluate(values)


def _poly_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out = Polynomial.zero(rows[0][0].vars)
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * _poly_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def normalize_leading(p: Polynomial) -> Polynomial:
    """Scale so the degree-then-lex leading coefficient is one."""
    if p.is_zero():
        return p
    lead = max(p.terms, key=lambda e: (sum(e), e))
    return p * (1 / p.terms[lead])


def discriminant_matrix(fam: DeformationFamily) -> VectorFieldMatrix:
    """The tau x tau matrix (v_ij) of discriminant-tangent fields.

    Thanks to the constant-parameter peeling in solve_decomposition, its
    restriction to the constant-parameter axis is L0 times the identity, so
    the determinant restricts to L0^tau exactly.
    """
    if fam.constant_param is None:
        raise ValueError("discriminant matrix needs the full (untruncated) family")
    rows = []
    for p in fam.parameters:
        dec = solve_decomposition(fam, p, "delta")
        rows.append(tuple(dec.vrow[q] for q in fam.parameters))
    # every diagonal entry has quasi-degree equal to the function degree
    degs = tuple(fam.degree for _ in fam.parameters)
    return VectorFieldMatrix(fam.parameters, tuple(rows), degs)


def _poly_to_sympy_expr(p: Polynomial, symbols: dict):
    import sympy
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        term = sympy.Rational(int(c.numerator), int(c.denominator))
        for v, e in zip(p.vars, exp):
            if e:
                term *= symbols[v] ** e
        expr += term
    return expr


def _sympy_to_poly(expr, variables) -> Polynomial:
    import sympy
    syms = sympy.symbols(variables)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    out = Polynomial.zero(tuple(variables))
    for exp, c in poly.terms():
        c = sympy.Rational(c)
        out = out + Polynomial.monomial(exp, QQ(int(c.p), int(c.q)), tuple(variables))
    return out


def sigma_equation(fam: DeformationFamily,
                   vmatrix: VectorFieldMatrix | None = None) -> Polynomial:
    """Reduced equation of the bifurcation diagram, over the truncated
    parameters: the squarefree part of the discriminant of det(V) with
    respect to the constant parameter.

    det(V) cuts out the discriminant, whose fibres over the truncated base
    are the tau shifted critical values; the branch locus of that projection
    is exactly where the curve degenerates, a critical point degenerates, or
    two critical values collide.
    """
    import sympy
    if fam.constant_param is None:
        raise ValueError("sigma equation needs the full (untruncated) family")
    if vmatrix is None:
        vmatrix = discriminant_matrix(fam)
    D = vmatrix.det()
    symbols = {v: sympy.Symbol(v) for v in D.vars}
    expr = _poly_to_sympy_expr(D, symbols)
    disc = sympy.discriminant(sympy.Poly(expr, symbols[fam.constant_param]))
    reduced = sympy.sqf_part(sympy.expand(disc))
    keep = [p for p in fam.parameters if p != fam.constant_param]
    return normalize_leading(_sympy_to_poly(reduced, keep))


def bifurcation_matrix(fam: DeformationFamily) -> VectorFieldMatrix:
    """The (tau-1) x (tau-1) matrix (w_ij) of fields logarithmic for the
    bifurcation diagram, built by constant-parameter reduction of the
    discriminant fields.

    The bifurcation diagram is the branch locus of the discriminant over
    the truncated base.  A field tangent to the discriminant whose
    truncated-parameter coefficients do not involve the constant parameter
    commutes with that projection, so its projection is tangent to the
    branch locus.  Rows are found degree by degree as exact rational
    combinations sum_i c_i(lambda) * (row i of V) with the constant
    parameter eliminated from all truncated coefficients, keeping one new
    generator per degree until tau-1 independent rows are collected
    (degree 1 always yields the Euler field).
    """
    if fam.constant_param is None:
        raise ValueError("bifurcation matrix needs the full family; the "
                         "truncation happens internally")
    V = discriminant_matrix(fam)
    cp = fam.constant_param
    params = fam.parameters
    keep = tuple(p for p in params if p != cp)
    u = {p: fam.weights[p] for p in params}
    pweights = u
    d = fam.degree
    cp_idx = params.index(cp)
    target = len(keep)
    chosen: list[tuple[Polynomial, ...]] = []
    chosen_t: list[int] = []

    def in_span(omega, t):
        """Is omega an O-combination of already chosen rows (degree t)?"""
        columns = []
        for row, tk in zip(chosen, chosen_t):
            for mexp in _weighted_monomials(keep, pweights, t - tk):
                col = {}
                mon = Polynomial.monomial(mexp, 1, keep)
                for j, e in enumerate(row):
                    for exp, c in (mon * e).terms.items():
                        col[(j, exp)] = col.get((j, exp), QQ(0)) + c
                columns.append(col)
        rhs = {}
        for j, e in enumerate(omega):
            for exp, c in e.terms.items():
                rhs[(j, exp)] = c
        return _solve_linear(columns, rhs, len(columns)) is not None

    for t in range(0, sum(u[p] for p in keep) + d + 1):
        if len(chosen) == target:
            break
        columns = []
        metas = []
        for i, p_i in enumerate(params):
            cdeg = t - (d - u[p_i])
            for mexp in _weighted_monomials(params, pweights, cdeg):
                mon = Polynomial.monomial(mexp, 1, params)
                col = {}
                for j in range(len(params)):
                    contrib = mon * V.entries[i][j]
                    if params[j] == cp:
                        continue   # the constant-parameter slot is dropped
                    for exp, c in contrib.terms.items():
                        if exp[cp_idx] > 0:   # must be eliminated
                            col[(j, exp)] = col.get((j, exp), QQ(0)) + c
                columns.append(col)
                metas.append((i, mexp))
        for vec in _nullspace(columns, len(columns)):
            coeffs = [Polynomial.zero(params) for _ in params]
            for (i, mexp), c in zip(metas, vec):
                if c != 0:
                    coeffs[i] = coeffs[i] + Polynomial.monomial(mexp, c, params)
            omega = []
            for j, p_j in enumerate(params):
                if p_j == cp:
                    continue
                e = Polynomial.zero(params)
                for i in range(len(params)):
                    e = e + coeffs[i] * V.entries[i][j]
                omega.append(e.restrict(keep))
            omega = tuple(omega)
            if all(e.is_zero() for e in omega):
                continue
            if in_span(omega, t):
                continue
            chosen.append(omega)
            chosen_t.append(t)
            if len(chosen) == target:
                break
    if len(chosen) < target:
        raise DecompositionError(
            "constant-parameter reduction found too few bifurcation fields")
    degs = tuple(t + u[p] for t, p in zip(chosen_t, keep))
    return VectorFieldMatrix(keep, tuple(chosen), degs)


def euler_row_check(vfm: VectorFieldMatrix, weights: dict) -> bool:
    """Is the Euler field sum w_j lambda_j d_j a constant combination of the
    rows?  Checked by exact linear algebra on the entry coefficients."""
    params = vfm.parameters
    euler = [Polynomial.variable(p, params) * weights[p] for p in params]
    columns = []
    for row in vfm.entries:
        col = {}
        for j, e in enumerate(row):
            for exp, c in e.terms.items():
                col[(j, exp)] = c
        columns.append(col)
    rhs = {}
    for j, e in enumerate(euler):
        for exp, c in e.terms.items():
            rhs[(j, exp)] = c
    return _solve_linear(columns, rhs, len(columns)) is not None


# -- sampling the divisors -------------------------------------------------------

def sample_discriminant(fam_name: str, indices, n: int, seed: int = 0) -> list[dict]:
    """Rationally constructed points of the discriminant.

    Each point places a critical point of the deformed function on the zero
    level of a smooth deformed curve: the critical location and all but two
    parameters are drawn at random, then one parameter solves the critical
    equation linearly and the constant term moves the critical value to 0.
    Supported: the A series and C_{p,q,r} with q = r = 1.
    """
    rng = stable_rng(seed, "discriminant", fam_name, tuple(indices))
    out = []
    if fam_name == "A":
        (k,) = indices
        if k == 1:
            # F = x^2 + L0: the only critical point is x = 0, so the
            # discriminant is the single point L0 = 0
            return [{"L0": QQ(0)} for _ in range(n)]
        while len(out) < n:
            x0 = QQ(rng.randint(-9, 9), rng.randint(1, 3))
            higher = {f"L{i}": QQ(rng.randint(-9, 9)) for i in range(2, k)}
            # F'(x0) = 0 is linear in L1
            s = (k + 1) * x0 ** k + sum(i * higher[f"L{i}"] * x0 ** (i - 1)
                                        for i in range(2, k))
            point = dict(higher)
            point["L1"] = -s
            val = x0 ** (k + 1) + sum(point[f"L{i}"] * x0 ** i for i in range(1, k))
            point["L0"] = -val
            out.append(point)
        return out
    if fam_name == "C_space":
        p, q, r = indices
        if q != 1 or r != 1:
            raise ValueError("rational discriminant sampling implemented for C_{p,1,1}")
        pd = printed_miniversal(p, q, r)
        while len(out) < n:
            ga = QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1))
            be = QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1))
            lam1 = {f"L1_{i}": QQ(rng.randint(-6, 6)) for i in range(1, p)}
            y0 = QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1))
            if y0 == 0 or y0 == -ga:
                continue
            X0 = be * y0 / (y0 + ga)
            dX = be * ga / (y0 + ga) ** 2
            # F = Xblock(x(y)) + y + alpha (y+gamma)/y + L0
            xb = X0 ** p + sum(lam1[f"L1_{i}"] * X0 ** (p - i) for i in range(1, p))
            dxb = (p * X0 ** (p - 1)
                   + sum((p - i) * lam1[f"L1_{i}"] * X0 ** (p - i - 1) for i in range(1, p))) * dX
            # F'(y0) = dxb + 1 - alpha*gamma/y0^2 = 0
            al = (dxb + 1) * y0 ** 2 / ga
            if al == 0:
                continue
            l0 = -(xb + y0 + al * (y0 + ga) / y0)
            point = {"alpha": al, "beta": be, "gamma": ga, "L0": l0}
            point.update(lam1)
            out.append(point)
        return out
    raise ValueError(f"no rational discriminant sampler for family {fam_name}")


def level_collapse_certificate() -> bool:
    """Exact certificate that the same-level locus of the truncated
    C_{1,1,1} family collapses onto the degenerate locus.

    Prescribing two critical points y1 != y2 determines alpha and beta
    linearly; the numerator of the resulting critical-value difference
    factors identically as -g^2 (g+y1)(g+y2)(y1-y2)^3, so two DISTINCT
    critical points never share their value away from the excluded loci.
    Two critical points on one level therefore occur only as a coincident
    (multiplicity-two) pair, i.e. exactly on the degenerate component.
    """
    import sympy
    g, y1, y2 = sympy.symbols("g y1 y2")
    M = sympy.Matrix([[g / y1 ** 2, -g / (y1 + g) ** 2],
                      [g / y2 ** 2, -g / (y2 + g) ** 2]])
    ab = M.solve(sympy.Matrix([1, 1]))
    al, be = sympy.together(ab[0]), sympy.together(ab[1])
    value = lambda yv: be * yv / (yv + g) + yv + al * (yv + g) / yv
    num, _ = sympy.fraction(sympy.together(value(y1) - value(y2)))
    target = -g ** 2 * (g + y1) * (g + y2) * (y1 - y2) ** 3
    return sympy.expand(num - target) == 0


def sample_sigma(n: int, seed: int = 0, component: str = "degenerate") -> list[dict]:
    """Points of the components of the C_{1,1,1} bifurcation diagram.

    nonsmooth: the three coordinate planes alpha=0, beta=0, gamma=0 (the
    deformed curve degenerates to a line plus a conic there); degenerate:
    rational points where F has a doubly-critical point, solved linearly
    from a chosen location; level: points carrying two critical points on
    one level — by the exact level_collapse_certificate these are exactly
    the coincident (multiplicity-two) pairs, so the sampler draws them as
    degenerate points from an independent random stream and tags them.
    """
    rng = stable_rng(seed, "sigma", component)
    out = []
    if component == "nonsmooth":
        axes = ("alpha", "beta", "gamma")
        while len(out) < n:
            zero_axis = axes[len(out) % 3]
            pt = {a: (QQ(0) if a == zero_axis else
                      QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1)))
                  for a in axes}
            out.append(pt)
        return out
    if component in ("degenerate", "level"):
        if component == "level" and not level_collapse_certificate():
            raise RuntimeError("level-collapse certificate failed; distinct "
                               "same-level critical pairs would need a solver")
        while len(out) < n:
            y0 = QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1))
            ga = QQ(rng.randint(1, 9), rng.randint(1, 3)) * rng.choice((1, -1))
            if y0 == 0 or ga == 0 or y0 + ga == 0:
                continue
            pt = {"alpha": -(y0 ** 3) / ga ** 2,
                  "beta": -((y0 + ga) ** 3) / ga ** 2,
                  "gamma": ga}
            if component == "level":
                pt["coincident_pair"] = True
            out.append(pt)
        return out
    raise ValueError("component must be nonsmooth, degenerate or level")
