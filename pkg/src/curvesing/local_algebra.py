"""Local monomial orderings, Mora reduction and standard bases.

The engine works over free modules O^r where O is the local ring of germs
at the origin.  Monomials are compared by a negative-degree order (lower
total degree is larger), so the constant monomial 1 is the unique maximum
and staircase counts equal local quotient dimensions.  Reduction follows
Mora's ecart discipline, which terminates for polynomial input under such
orders where naive division would loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poly import Polynomial, QQ


class RankMismatch(ValueError):
    pass


class VariableMismatch(ValueError):
    pass


class InfiniteDimension(ArithmeticError):
    """Raised when a local quotient is not finite-dimensional."""


@dataclass(frozen=True)
class LocalOrder:
    """Negative-degree lexicographic order with a tie-breaking permutation.

    Lower total degree is LARGER; degree ties are broken lexicographically
    on the exponents permuted by `permutation` (indices into the variable
    list, first index most significant).
    """

    permutation: tuple[int, ...] = ()

    def key(self, exp: tuple) -> tuple:
        perm = self.permutation if self.permutation else range(len(exp))
        return (-sum(exp), tuple(exp[p] for p in perm))

    def module_key(self, term: tuple) -> tuple:
        # position-over-term: lower component index wins
        comp, exp = term
        return (-comp, self.key(exp))


@dataclass(frozen=True)
class ModuleElement:
    """Element of a free module O^rank, one polynomial per component."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.components:
            raise RankMismatch("empty module element")
        vs = self.components[0].vars
        for c in self.components:
            if c.vars != vs:
                raise VariableMismatch("components disagree on variables")

    @property
    def rank(self) -> int:
        return len(self.components)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.components[0].vars

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.rank != other.rank:
            raise RankMismatch("rank mismatch")
        return ModuleElement(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        if self.rank != other.rank:
            raise RankMismatch("rank mismatch")
        return ModuleElement(tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, p: Polynomial) -> "ModuleElement":
        return ModuleElement(tuple(p * c for c in self.components))

    def __str__(self):
        return "(" + " | ".join(str(c) for c in self.components) + ")"


# Internal vector form: dict {(component, exponent-tuple): coefficient}.

def _to_vec(e: ModuleElement) -> dict:
    vec = {}
    for i, c in enumerate(e.components):
        for exp, coeff in c.terms.items():
            vec[(i, exp)] = coeff
    return vec

def _from_vec(vec: dict, rank: int, variables: Sequence[str]) -> ModuleElement:
    comps = [dict() for _ in range(rank)]
    for (i, exp), coeff in vec.items():
        comps[i][exp] = coeff
    return ModuleElement(tuple(Polynomial(variables, t) for t in comps))


def _leading(vec: dict, order: LocalOrder) -> tuple:
    return max(vec, key=order.module_key)


def _divides(lt_g: tuple, lt_h: tuple) -> bool:
    if lt_g[0] != lt_h[0]:
        return False
    return all(a <= b for a, b in zip(lt_g[1], lt_h[1]))


def _ecart(vec: dict, lt: tuple) -> int:
    d = sum(lt[1])
    return max(sum(exp) for (_c, exp) in vec) - d


def _reduce_once(h: dict, lt_h: tuple, g: dict, lt_g: tuple) -> dict:
    """h - (lt_h/lt_g) * g, cancelling the leading term of h."""
    q_exp = tuple(a - b for a, b in zip(lt_h[1], lt_g[1]))
    q_coeff = h[lt_h] / g[lt_g]
    out = dict(h)
    for (c, exp), coeff in g.items():
        key = (c, tuple(a + b for a, b in zip(exp, q_exp)))
        s = out.get(key, 0) - q_coeff * coeff
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return out


def _mora_head_nf(h: dict, gens: list, order: LocalOrder) -> dict:
    """Weak Mora normal form: returns h' whose leading term is not divisible
    by any generator's leading term; u*h = (combination) + h' for a unit u."""
    T = [(g, _leading(g, order)) for g in gens if g]
    while h:
        lt_h = _leading(h, order)
        best = None
        best_ecart = None
        for g, lt_g in T:
            if _divides(lt_g, lt_h):
                e = _ecart(g, lt_g)
                if best is None or e < best_ecart:
                    best, best_ecart = (g, lt_g), e
        if best is None:
            return h
        if best_ecart > _ecart(h, lt_h):
            T.append((dict(h), lt_h))
        h = _reduce_once(h, lt_h, best[0], best[1])
    return h


def _mora_reduced_nf(h: dict, gens: list, order: LocalOrder, max_terms: int = 100000) -> dict:
    """Normal form with no remaining term divisible by a leading term."""
    result = {}
    while h:
        h = _mora_head_nf(h, gens, order)
        if not h:
            break
        lt = _leading(h, order)
        result[lt] = h.pop(lt)
        if len(result) > max_terms:
            raise InfiniteDimension("reduced normal form does not stabilise")
    return result


def _spoly(f: dict, lt_f: tuple, g: dict, lt_g: tuple) -> dict:
    comp = lt_f[0]
    assert comp == lt_g[0]
    lcm = tuple(max(a, b) for a, b in zip(lt_f[1], lt_g[1]))
    mf = tuple(l - a for l, a in zip(lcm, lt_f[1]))
    mg = tuple(l - a for l, a in zip(lcm, lt_g[1]))
    cf = f[lt_f]
    cg = g[lt_g]
    out = {}
    for (c, exp), coeff in f.items():
        key = (c, tuple(a + b for a, b in zip(exp, mf)))
        out[key] = out.get(key, 0) + coeff / cf
    for (c, exp), coeff in g.items():
        key = (c, tuple(a + b for a, b in zip(exp, mg)))
        s = out.get(key, 0) - coeff / cg
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return {k: v for k, v in out.items() if v != 0}


def _monic(vec: dict, order: LocalOrder) -> dict:
    lc = vec[_leading(vec, order)]
    if lc == 1:
        return vec
    return {k: v / lc for k, v in vec.items()}


@dataclass(frozen=True)
class StandardBasis:
    generators: tuple[ModuleElement, ...]
    order: LocalOrder
    rank: int

    @property
    def vars(self) -> tuple[str, ...]:
        return self.generators[0].vars

    def leading_terms(self) -> list[tuple]:
        return [_leading(_to_vec(g), self.order) for g in self.generators]


def standard_basis(gens: Iterable[ModuleElement], order: LocalOrder | None = None) -> StandardBasis:
    """Mora/Buchberger standard basis of the submodule generated by `gens`."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("no nonzero generators")
    rank = gens[0].rank
    variables = gens[0].vars
    for g in gens:
        if g.rank != rank:
            raise RankMismatch("mixed ranks among generators")
        if g.vars != variables:
            raise VariableMismatch("mixed variable lists among generators")
    if order is None:
        order = LocalOrder(tuple(range(len(variables))))

    G: list[dict] = []
    lts: list[tuple] = []
    pairs: list[tuple[int, int]] = []

    def add(vec: dict):
        vec = _monic(vec, order)
        lt = _leading(vec, order)
        idx = len(G)
        G.append(vec)
        lts.append(lt)
        for j in range(idx):
            if lts[j][0] == lt[0]:
                pairs.append((j, idx))

    for g in gens:
        v = _to_vec(g)
        r = _mora_head_nf(v, G, order)
        if r:
            add(r)

    while pairs:
        # pick the pair with the largest lcm in the local order (normal strategy)
        def pair_key(p):
            i, j = p
            lcm = tuple(max(a, b) for a, b in zip(lts[i][1], lts[j][1]))
            return order.module_key((lts[i][0], lcm))
        pairs.sort(key=pair_key)
        i, j = pairs.pop()
        s = _spoly(G[i], lts[i], G[j], lts[j])
        if not s:
            continue
        r = _mora_head_nf(s, G, order)
        if r:
            add(r)

    # minimalise: drop generators whose leading term another's divides
    keep = []
    for i, lt in enumerate(lts):
        if any(k != i and _divides(lts[k], lt) and (not _divides(lt, lts[k]) or k < i)
               for k in range(len(lts))):
            continue
        keep.append(i)
    basis = tuple(_from_vec(G[i], rank, variables) for i in keep)
    return StandardBasis(basis, order, rank)


def normal_form(e: ModuleElement, basis: StandardBasis, reduced: bool = True) -> ModuleElement:
    """Mora normal form of e against a standard basis.

    The result has no term divisible by a leading term of the basis in the
    matching component; it equals e modulo the module (up to the local-ring
    unit Mora reduction introduces).  In particular it vanishes exactly on
    module members.
    """
    if e.rank != basis.rank:
        raise RankMismatch(f"rank {e.rank} vs basis rank {basis.rank}")
    if e.vars != basis.vars:
        raise VariableMismatch(f"variables {e.vars} vs basis {basis.vars}")
    gens = [_to_vec(g) for g in basis.generators]
    vec = _to_vec(e)
    if reduced:
        out = _mora_reduced_nf(vec, gens, basis.order)
    else:
        out = _mora_head_nf(vec, gens, basis.order)
    return _from_vec(out, basis.rank, basis.vars)


INFINITE = "infinite"


def standard_monomials(basis: StandardBasis) -> list[tuple[int, tuple]]:
    """Monomial x unit-vector pairs outside the leading-term staircase.

    Raises InfiniteDimension when the staircase has an unbounded ray, i.e.
    some variable never appears alone in any leading term of a component.
    """
    nv = len(basis.vars)
    lead: dict[int, list[tuple]] = {c: [] for c in range(basis.rank)}
    for comp, exp in basis.leading_terms():
        lead[comp].append(exp)
    out = []
    for comp in range(basis.rank):
        exps = lead[comp]
        # bound per variable: minimal pure power of that variable among leads
        bounds = []
        for i in range(nv):
            pure = [e[i] for e in exps if all(e[j] == 0 for j in range(nv) if j != i) and e[i] > 0]
            if any(all(x == 0 for x in e) for e in exps):
                bounds = [0] * nv
                break
            if not pure:
                raise InfiniteDimension(
                    f"component {comp}: no pure power of {basis.vars[i]} in the leading module")
            bounds.append(min(pure))
        # enumerate the box and filter out staircase members
        stack = [()]
        for i in range(nv):
            stack = [s + (k,) for s in stack for k in range(bounds[i])] if bounds else []
        for exp in stack:
            if not any(all(a >= b for a, b in zip(exp, l)) for l in exps):
                out.append((comp, exp))
    return out


def quotient_dimension(gens: Iterable[ModuleElement], order: LocalOrder | None = None):
    """Dimension of O^rank / <gens> as a vector space; INFINITE if unbounded."""
    basis = standard_basis(gens, order)
    try:
        return len(standard_monomials(basis))
    except InfiniteDimension:
        return INFINITE
