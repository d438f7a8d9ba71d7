"""The classified families of function singularities on space curves.

Encodes the normal forms of the simple function-on-curve pairs, their
expected Tjurina numbers, quasi-homogeneous weight data, adjacency arrows,
and the explicitly printed miniversal deformations of the C_{p,q,r} family.

Families and normal forms (plane data is embedded as the 1x2 matrix [g, z]):

  A_k        g = y,           f = x^(k+1)            tau = k
  B_k        g = x^2 + y^k,   f = y                  tau = k   (k >= 3)
  C_{p,q}    g = x*y,         f = x^p + y^q          tau = p+q (p >= q >= 1)
  F_r        g = x^2 + y^3,   f = y^k (r = 2k+1) or x*y^k (r = 2k+4)
  C_{p,q,r}  M = [x,y,0; 0,y,z],  f = x^p + y^q + z^r   tau = p+q+r+1
  Fd_r       M = [x,y,0; y^2,x,z], f = z + y^k (r = 2k+3) or z + x*y^k (r = 2k+6)
  E_6/7/8    M = [x,y,z; z^2|y*z|z^3, x,y],  f = z
  X9*, J10*  one-parameter (modulus) families bounding the simple range:
             g = x^2 + y^4, f = x + a*y^2  /  g = x^3 + y^3, f = x + a*y

The Fd subscripts follow tau (tau equals the subscript); the series starts
at Fd_5 = (that matrix, z + y) and has no member of index 4.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .curves import (
    SPACE_VARS,
    CurveFunctionPair,
    MatrixGerm,
    embed_plane_curve,
)
from .poly import Polynomial, QQ, parse_polynomial, rat

FAMILIES = ("A", "B", "C_plane", "F", "C_space", "Fdot", "Echeck", "X9star", "J10star")


class RestrictionError(ValueError):
    """Raised when indices violate a family's defining restrictions."""


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    indices: tuple[int, ...]
    pair: CurveFunctionPair
    expected_tau: int
    modulus: object = None                 # rational, X9*/J10* only
    variable_weights: dict | None = None   # {"x": wx, "y": wy, "z": wz}
    function_degree: int | None = None     # quasi-degree d of f

    @property
    def name(self) -> str:
        if self.family == "A":
            return f"A{self.indices[0]}"
        if self.family == "B":
            return f"B{self.indices[0]}"
        if self.family == "C_plane":
            return "C" + ",".join(map(str, self.indices))
        if self.family == "F":
            return f"F{self.indices[0]}"
        if self.family == "C_space":
            return "C" + ",".join(map(str, self.indices))
        if self.family == "Fdot":
            return f"Fd{self.indices[0]}"
        if self.family == "Echeck":
            return f"E{self.indices[0]}"
        return "X9*" if self.family == "X9star" else "J10*"

    @property
    def is_quasi_homogeneous(self) -> bool:
        return self.variable_weights is not None

    def describe(self) -> dict:
        out = {
            "name": self.name,
            "family": self.family,
            "indices": list(self.indices),
            "tau": self.expected_tau,
            "matrix": str(self.pair.matrix),
            "function": str(self.pair.function),
        }
        if self.modulus is not None:
            out["modulus"] = str(self.modulus)
        return out


def _p(text: str) -> Polynomial:
    return parse_polynomial(text, SPACE_VARS)


def _plane(g: str, f: str) -> CurveFunctionPair:
    two = ("x", "y")
    return embed_plane_curve(parse_polynomial(g, two), parse_polynomial(f, two))


def instantiate(family: str, indices=(), modulus=None) -> CatalogEntry:
    """Build the normal-form catalog entry for a family at given indices."""
    indices = tuple(int(i) for i in indices)
    if family == "A":
        (k,) = indices
        if k < 1:
            raise RestrictionError("A_k requires k >= 1")
        return CatalogEntry("A", indices, _plane("y", f"x^{k + 1}"), k,
                            variable_weights={"x": 1, "y": 1, "z": 1},
                            function_degree=k + 1)
    if family == "B":
        (k,) = indices
        if k < 3:
            raise RestrictionError("B_k requires k >= 3 (B_2 coincides with C_{1,1})")
        return CatalogEntry("B", indices, _plane(f"x^2 + y^{k}", "y"), k,
                            variable_weights={"x": k, "y": 2, "z": 1},
                            function_degree=2)
    if family == "C_plane":
        p, q = indices
        if not p >= q >= 1:
            raise RestrictionError("C_{p,q} requires p >= q >= 1")
        d = lcm(p, q)
        return CatalogEntry("C_plane", indices, _plane("x*y", f"x^{p} + y^{q}"), p + q,
                            variable_weights={"x": d // p, "y": d // q, "z": 1},
                            function_degree=d)
    if family == "F":
        (r,) = indices
        if r < 4:
            raise RestrictionError("F_r requires r >= 4 (F_3 coincides with B_3)")
        if r % 2 == 1:
            k = (r - 1) // 2
            f, d = f"y^{k}", 2 * k
        else:
            k = (r - 4) // 2
            f, d = (f"x*y^{k}" if k else "x"), 3 + 2 * k
        return CatalogEntry("F", indices, _plane("x^2 + y^3", f), r,
                            variable_weights={"x": 3, "y": 2, "z": 1},
                            function_degree=d)
    if family == "C_space":
        p, q, r = indices
        if not p >= q >= r >= 1:
            raise RestrictionError("C_{p,q,r} requires p >= q >= r >= 1")
        d = lcm(p, q, r)
        pair = CurveFunctionPair(MatrixGerm.parse("x, y, 0; 0, y, z"),
                                 _p(f"x^{p} + y^{q} + z^{r}"))
        return CatalogEntry("C_space", indices, pair, p + q + r + 1,
                            variable_weights={"x": d // p, "y": d // q, "z": d // r},
                            function_degree=d)
    if family == "Fdot":
        (r,) = indices
        if r < 5:
            raise RestrictionError("Fd_r requires r >= 5 (the series has no index-4 member)")
        if r % 2 == 1:
            k = (r - 3) // 2
            f, wz = f"z + y^{k}", 2 * k
        else:
            k = (r - 6) // 2
            f, wz = (f"z + x*y^{k}" if k else "z + x"), 3 + 2 * k
        pair = CurveFunctionPair(MatrixGerm.parse("x, y, 0; y^2, x, z"), _p(f))
        return CatalogEntry("Fdot", indices, pair, r,
                            variable_weights={"x": 3, "y": 2, "z": wz},
                            function_degree=wz)
    if family == "Echeck":
        (r,) = indices
        corner = {6: ("z^2", (5, 4, 3)), 7: ("y*z", (4, 3, 2)), 8: ("z^3", (7, 5, 3))}
        if r not in corner:
            raise RestrictionError("E-check entries exist for indices 6, 7, 8 only")
        low, (wx, wy, wz) = corner[r]
        pair = CurveFunctionPair(MatrixGerm.parse(f"x, y, z; {low}, x, y"), _p("z"))
        return CatalogEntry("Echeck", indices, pair, r,
                            variable_weights={"x": wx, "y": wy, "z": wz},
                            function_degree=wz)
    if family in ("X9star", "J10star"):
        if modulus is None:
            raise RestrictionError(f"{family} requires a modulus value")
        a = rat(modulus)
        if a == 0:
            raise RestrictionError("modulus must be nonzero")
        two = ("x", "y")
        y2 = parse_polynomial("y^2", two)
        y1 = parse_polynomial("y", two)
        x1 = parse_polynomial("x", two)
        if family == "X9star":
            g = parse_polynomial("x^2 + y^4", two)
            f = x1 + y2 * a
        else:
            g = parse_polynomial("x^3 + y^3", two)
            f = x1 + y1 * a
        return CatalogEntry(family, (), embed_plane_curve(g, f), 6, modulus=a)
    raise RestrictionError(f"unknown family {family!r}")


# -- descriptors ------------------------------------------------------------

_DESC = re.compile(r"^(A|B|C|F|Fd|E|X9\*?|J10\*?)\s*:?\s*([0-9,\s]*)$")


def parse_descriptor(text: str) -> tuple[str, tuple[int, ...]]:
    """Parse entry names like 'A3', 'C:2,1,1', 'Fd7', 'E6', 'X9*'.

    A 'C' descriptor with two indices is the plane series, with three the
    space series.  Returns (family, indices); moduli are supplied separately.
    """
    m = _DESC.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse entry descriptor {text!r}")
    head, rest = m.group(1), m.group(2).strip()
    indices = tuple(int(t) for t in rest.replace(" ", "").split(",") if t)
    if head.startswith("X9"):
        return "X9star", ()
    if head.startswith("J10"):
        return "J10star", ()
    if head == "C":
        if len(indices) == 2:
            return "C_plane", indices
        if len(indices) == 3:
            return "C_space", indices
        raise ValueError("C entries take 2 (plane) or 3 (space) indices")
    fam = {"A": "A", "B": "B", "F": "F", "Fd": "Fdot", "E": "Echeck"}[head]
    if len(indices) != 1:
        raise ValueError(f"{head} entries take exactly one index")
    return fam, indices


# -- adjacencies -------------------------------------------------------------

def adjacencies(entry: CatalogEntry) -> list[str]:
    """Descriptor names of the entries this one is adjacent to (deforms to).

    Index reductions within each series plus the cross-series arrows:
    F_{p+q+1} -> C_{p,q} -> A_{p+q-1}, C_{p,q,r} -> C_{p,q}, Fd_r -> F_{r-1},
    Fd_{p+q+3} -> C_{p,q,1}, E6 -> Fd5, and the bounding arrows from X9*/J10*.
    The identifications B_2 = C_{1,1} and F_3 = B_3 route those reductions.
    """
    fam, idx = entry.family, entry.indices
    out: list[str] = []

    def cplane(p, q):
        p, q = max(p, q), min(p, q)
        if q >= 1:
            out.append(f"C{p},{q}")

    if fam == "A":
        if idx[0] >= 2:
            out.append(f"A{idx[0] - 1}")
    elif fam == "B":
        out.append(f"B{idx[0] - 1}" if idx[0] >= 4 else "C1,1")
    elif fam == "C_plane":
        p, q = idx
        cplane(p - 1, q)
        if q != p:
            cplane(p, q - 1)
        out.append(f"A{p + q - 1}")
    elif fam == "F":
        r = idx[0]
        out.append(f"F{r - 1}" if r >= 5 else "B3")
        for p in range(r - 2, (r - 1) // 2 - 1, -1):
            q = r - 1 - p
            if p >= q >= 1:
                out.append(f"C{p},{q}")
    elif fam == "C_space":
        p, q, r = idx
        seen = set()
        for drop in ((p - 1, q, r), (p, q - 1, r), (p, q, r - 1)):
            s = tuple(sorted(drop, reverse=True))
            if s[-1] >= 1 and s not in seen:
                seen.add(s)
                out.append("C" + ",".join(map(str, s)))
        out.append(f"C{p},{q}")
    elif fam == "Fdot":
        r = idx[0]
        if r >= 6:
            out.append(f"Fd{r - 1}")
        out.append(f"F{r - 1}")
        for p in range(r - 4, (r - 3) // 2 - 1, -1):
            q = r - 3 - p
            if p >= q >= 1:
                out.append(f"C{p},{q},1")
    elif fam == "Echeck":
        r = idx[0]
        out.append("Fd5" if r == 6 else f"E{r - 1}")
    elif fam == "X9star":
        out.extend(["B4", "F4", "C3,1"])
    elif fam == "J10star":
        out.extend(["B4", "F4"])
    return out


# -- desk-scale default range -------------------------------------------------

DEFAULT_MODULI = (QQ(2), QQ(3), QQ(5, 2))


def default_entries(max_tau: int | None = None) -> list[CatalogEntry]:
    """All catalog entries in the default desk-scale index range, in a fixed
    deterministic order; optionally capped by Tjurina number."""
    out: list[CatalogEntry] = []
    for k in range(1, 11):
        out.append(instantiate("A", (k,)))
    for k in range(3, 9):
        out.append(instantiate("B", (k,)))
    for p in range(1, 12):
        for q in range(1, p + 1):
            if p + q <= 12:
                out.append(instantiate("C_plane", (p, q)))
    for r in range(4, 13):
        out.append(instantiate("F", (r,)))
    for p in range(1, 5):
        for q in range(1, p + 1):
            for r in range(1, q + 1):
                out.append(instantiate("C_space", (p, q, r)))
    for r in range(5, 12):
        out.append(instantiate("Fdot", (r,)))
    for r in (6, 7, 8):
        out.append(instantiate("Echeck", (r,)))
    for fam in ("X9star", "J10star"):
        for a in DEFAULT_MODULI:
            out.append(instantiate(fam, (), modulus=a))
    if max_tau is not None:
        out = [e for e in out if e.expected_tau <= max_tau]
    return out


# -- printed miniversal deformation of C_{p,q,r} ------------------------------

@dataclass(frozen=True)
class PrintedDeformation:
    """Parametric pair over variables (x, y, z) + deformation parameters.

    The matrix is [[x, y, alpha], [beta, y+gamma, z]] and the function is the
    full lower-order unfolding of x^p + y^q + z^r (plus the constant L0 when
    not truncated).  Parameter weights make the whole family quasi-homogeneous
    of degree `degree` in the f-slot.
    """

    matrix: MatrixGerm
    function: Polynomial
    parameters: tuple[str, ...]
    parameter_weights: dict[str, int]
    variable_weights: dict[str, int]
    degree: int
    truncated: bool

    @property
    def vars(self) -> tuple[str, ...]:
        return self.function.vars

    def pair(self) -> CurveFunctionPair:
        return CurveFunctionPair(self.matrix, self.function)

    def specialize(self, values: dict) -> CurveFunctionPair:
        """Substitute rational values for all parameters."""
        images = {p: Polynomial.constant(rat(values[p]), SPACE_VARS)
                  for p in self.parameters}
        for v in SPACE_VARS:
            images[v] = Polynomial.variable(v, SPACE_VARS)
        return CurveFunctionPair(self.matrix.map(lambda e: e.substitute(images)),
                                 self.function.substitute(images))


def printed_miniversal(p: int, q: int, r: int, truncated: bool = False) -> PrintedDeformation:
    """The explicitly printed miniversal deformation of C_{p,q,r}.

    Matrix [[x, y, alpha], [beta, y+gamma, z]]; function x^p + y^q + z^r with
    all intermediate powers of each variable unfolded and a free constant L0
    (dropped in the truncated variant).  Parameter count is tau = p+q+r+1
    (tau-1 truncated).  Truncated C_{1,1,1} is the three-parameter family with
    f = x + y + z over (alpha, beta, gamma).
    """
    if not p >= q >= r >= 1:
        raise RestrictionError("C_{p,q,r} requires p >= q >= r >= 1")
    d = lcm(p, q, r)
    params = ["alpha", "beta", "gamma"]
    weights = {"x": d // p, "y": d // q, "z": d // r,
               "alpha": d // r, "beta": d // p, "gamma": d // q}
    fparts = []
    for var, power, w in (("x", p, d // p), ("y", q, d // q), ("z", r, d // r)):
        fparts.append(f"{var}^{power}")
        block = {"x": 1, "y": 2, "z": 3}[var]
        for i in range(1, power):
            name = f"L{block}_{i}"
            params.append(name)
            weights[name] = i * w
            fparts.append(f"{name}*{var}^{power - i}")
    if not truncated:
        params.append("L0")
        weights["L0"] = d
        fparts.append("L0")
    allvars = SPACE_VARS + tuple(params)
    matrix = MatrixGerm.parse("x, y, alpha; beta, y + gamma, z", allvars)
    function = parse_polynomial(" + ".join(fparts), allvars)
    return PrintedDeformation(matrix, function, tuple(params), weights,
                              {"x": d // p, "y": d // q, "z": d // r}, d, truncated)
