"""Determinantal curve-germs, functions on them, and their tangent spaces.

A space curve-germ is the zero set of the maximal minors of an n x (n+1)
polynomial matrix; a function on it is a (matrix, function) pair.  Pairs
live in the free module O^(n(n+1)+1) with the fixed component ordering:
matrix entries row-major first, function component last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .local_algebra import (
    LocalOrder,
    ModuleElement,
    StandardBasis,
    normal_form,
    standard_basis,
)
from .poly import Polynomial, parse_polynomial

SPACE_VARS = ("x", "y", "z")


@dataclass(frozen=True)
class MatrixGerm:
    """n x (n+1) polynomial matrix defining a space curve via maximal minors."""

    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n + 1 for row in self.entries):
            raise ValueError("matrix must be n x (n+1)")
        vs = self.entries[0][0].vars
        for row in self.entries:
            for p in row:
                if p.vars != vs:
                    raise ValueError("matrix entries disagree on variables")

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.entries[0][0].vars

    @classmethod
    def parse(cls, text: str, variables: Sequence[str] = SPACE_VARS) -> "MatrixGerm":
        """Rows separated by ';', entries by ',', polynomial syntax per poly.py."""
        rows = []
        for row in text.split(";"):
            rows.append(tuple(parse_polynomial(e, variables) for e in row.split(",")))
        return cls(tuple(rows))

    def __str__(self):
        return "; ".join(", ".join(str(e) for e in row) for row in self.entries)

    def flat(self) -> tuple[Polynomial, ...]:
        return tuple(p for row in self.entries for p in row)

    def map(self, fn) -> "MatrixGerm":
        return MatrixGerm(tuple(tuple(fn(p) for p in row) for row in self.entries))

    def constant_matrix(self) -> list[list]:
        return [[p.constant_term() for p in row] for row in self.entries]


def _det(rows: list[list[Polynomial]]) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    variables = rows[0][0].vars
    out = Polynomial.zero(variables)
    for j in range(n):
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * _det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def maximal_minors(m: MatrixGerm) -> list[Polynomial]:
    """The n+1 order-n minors, one per deleted column, with the cofactor sign
    of the deleted column; ordered by deleted-column index."""
    n = m.n
    out = []
    for s in range(n + 1):
        rows = [[m.entries[i][j] for j in range(n + 1) if j != s] for i in range(n)]
        d = _det(rows)
        if s % 2 == 1:
            d = -d
        out.append(d)
    return out


def _rat_rank(mat: list[list]) -> int:
    """Rank of a matrix of rationals by exact Gaussian elimination."""
    mat = [row[:] for row in mat]
    rank = 0
    rows, cols = len(mat), len(mat[0]) if mat else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, rows):
            if mat[i][c] != 0:
                f = mat[i][c] / mat[r][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == rows:
            break
    return r


def corank(m: MatrixGerm) -> int:
    """n minus the rank of the matrix evaluated at the origin."""
    return m.n - _rat_rank(m.constant_matrix())


@dataclass(frozen=True)
class CurveFunctionPair:
    matrix: MatrixGerm
    function: Polynomial

    def __post_init__(self):
        if self.matrix.vars != self.function.vars:
            raise ValueError("matrix and function disagree on variables")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.function.vars

    @property
    def module_rank(self) -> int:
        n = self.matrix.n
        return n * (n + 1) + 1

    def to_module_element(self) -> ModuleElement:
        return ModuleElement(self.matrix.flat() + (self.function,))

    def __str__(self):
        return f"({self.matrix} ; f = {self.function})"


def embed_plane_curve(g: Polynomial, f: Polynomial) -> CurveFunctionPair:
    """Place plane data (curve g(x,y)=0, function f(x,y)) into the space
    format as the 1x2 matrix [g, z] with minors {g, z}."""
    for p, name in ((g, "curve"), (f, "function")):
        if "z" in p.vars and p.involves("z"):
            raise ValueError(f"plane {name} must not involve z")
    g3 = g.extend(SPACE_VARS) if g.vars != SPACE_VARS else g
    f3 = f.extend(SPACE_VARS) if f.vars != SPACE_VARS else f
    z = Polynomial.variable("z", SPACE_VARS)
    return CurveFunctionPair(MatrixGerm(((g3, z),)), f3)


def _unit_matrix_elem(pair: CurveFunctionPair, i: int, j: int, side: str) -> ModuleElement:
    """(E_ij M, 0) for side='left', (M E_ij, 0) for side='right'."""
    m = pair.matrix
    n = m.n
    variables = pair.vars
    zero = Polynomial.zero(variables)
    rows = [[zero] * (n + 1) for _ in range(n)]
    if side == "left":
        # E_ij is n x n: row i gets row j of M
        for c in range(n + 1):
            rows[i][c] = m.entries[j][c]
    else:
        # E_ij is (n+1) x (n+1): column j gets column i of M
        for r in range(n):
            rows[r][j] = m.entries[r][i]
    flat = tuple(p for row in rows for p in row)
    return ModuleElement(flat + (zero,))


def tangent_space(pair: CurveFunctionPair) -> list[ModuleElement]:
    """Generators of the extended tangent space T(M, f) in O^(n(n+1)+1):

    (i)   (E_ij M, 0),           i, j = 1..n
    (ii)  (M E_kl, 0),           k, l = 1..n+1
    (iii) (0, m_s) for each maximal minor m_s
    (iv)  the coupled derivative vectors (dM/dx_r, df/dx_r), r = 1..3
    """
    n = pair.matrix.n
    variables = pair.vars
    zero = Polynomial.zero(variables)
    n_mat = n * (n + 1)
    gens = []
    for i in range(n):
        for j in range(n):
            gens.append(_unit_matrix_elem(pair, i, j, "left"))
    for k in range(n + 1):
        for l in range(n + 1):
            gens.append(_unit_matrix_elem(pair, k, l, "right"))
    for minor in maximal_minors(pair.matrix):
        gens.append(ModuleElement((zero,) * n_mat + (minor,)))
    for v in variables:
        comps = tuple(p.derivative(v) for p in pair.matrix.flat())
        gens.append(ModuleElement(comps + (pair.function.derivative(v),)))
    return gens


@dataclass(frozen=True)
class EquivalenceWitness:
    """Data of an R_c-equivalence: (A M B, f + g) composed with h."""

    A: tuple[tuple[Polynomial, ...], ...]      # n x n, invertible at 0
    B: tuple[tuple[Polynomial, ...], ...]      # (n+1) x (n+1), invertible at 0
    h: dict[str, Polynomial]                   # coordinate substitution, h(0)=0
    g: Polynomial                              # element of the minor ideal

    def validate(self, pair: CurveFunctionPair):
        n = pair.matrix.n
        if len(self.A) != n or any(len(r) != n for r in self.A):
            raise ValueError("A has wrong shape")
        if len(self.B) != n + 1 or any(len(r) != n + 1 for r in self.B):
            raise ValueError("B has wrong shape")
        for mat, name in ((self.A, "A"), (self.B, "B")):
            const = [[p.constant_term() for p in row] for row in mat]
            if _rat_rank(const) != len(mat):
                raise ValueError(f"{name}(0) is not invertible")
        variables = pair.vars
        lin = []
        for v in variables:
            hv = self.h.get(v, Polynomial.variable(v, variables))
            if hv.constant_term() != 0:
                raise ValueError("substitution does not fix the origin")
            lin.append([hv.terms.get(tuple(1 if j == k else 0 for j in range(len(variables))), 0)
                        for k in range(len(variables))])
        if _rat_rank(lin) != len(variables):
            raise ValueError("linear part of the substitution is not invertible")
        # minor-ideal membership of g, certified by normal-form reduction
        minors = maximal_minors(pair.matrix)
        sb = standard_basis([ModuleElement((m,)) for m in minors])
        if not normal_form(ModuleElement((self.g,)), sb).is_zero():
            raise ValueError("g is not in the maximal-minor ideal")


def identity_witness(pair: CurveFunctionPair) -> EquivalenceWitness:
    n = pair.matrix.n
    variables = pair.vars
    zero = Polynomial.zero(variables)
    one = Polynomial.one(variables)

    def eye(k):
        return tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k))

    return EquivalenceWitness(eye(n), eye(n + 1), {}, zero)


def apply_equivalence(pair: CurveFunctionPair, w: EquivalenceWitness) -> CurveFunctionPair:
    """Return (A M B, f + g) pre-composed with the substitution h."""
    w.validate(pair)
    n = pair.matrix.n
    variables = pair.vars

    def matmul(a, b):
        return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))),
                               Polynomial.zero(variables))
                           for j in range(len(b[0]))) for i in range(len(a)))

    amb = matmul(matmul(w.A, pair.matrix.entries), w.B)
    f = pair.function + w.g
    if w.h:
        amb = tuple(tuple(p.substitute(w.h) for p in row) for row in amb)
        f = f.substitute(w.h)
    return CurveFunctionPair(MatrixGerm(amb), f)
