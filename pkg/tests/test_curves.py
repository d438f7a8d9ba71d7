import pytest

from curvesing.curves import (
    SPACE_VARS,
    CurveFunctionPair,
    EquivalenceWitness,
    MatrixGerm,
    apply_equivalence,
    corank,
    embed_plane_curve,
    identity_witness,
    maximal_minors,
    tangent_space,
)
from curvesing.local_algebra import ModuleElement, normal_form, quotient_dimension, standard_basis
from curvesing.poly import Polynomial, parse_polynomial


def P(s, variables=SPACE_VARS):
    return parse_polynomial(s, variables)


def minors_as_set(m):
    return {str(p) for p in maximal_minors(m)}


def test_minors_1x2_are_entries():
    m = MatrixGerm.parse("y, z")
    assert [str(p) for p in maximal_minors(m)] == ["z", "-y"]


def test_minors_2x3_triple_product():
    m = MatrixGerm.parse("x, y, 0; 0, y, z")
    assert minors_as_set(m) == {"y*z", "-x*z", "x*y"}


def test_minors_2x3_cusp_component():
    m = MatrixGerm.parse("x, y, 0; y^2, x, z")
    assert minors_as_set(m) == {"y*z", "-x*z", "x^2 - y^3"}


def test_corank():
    assert corank(MatrixGerm.parse("1, x")) == 0
    assert corank(MatrixGerm.parse("y, z")) == 1
    assert corank(MatrixGerm.parse("x, y, 0; 0, y, z")) == 2


def test_embed_plane_curve():
    two = ("x", "y")
    pair = embed_plane_curve(P("y", two), P("x^3", two))
    assert str(pair.matrix) == "y, z"
    assert pair.function == P("x^3")
    with pytest.raises(ValueError):
        embed_plane_curve(P("z"), P("x"))


def test_tangent_space_family_counts():
    pair = CurveFunctionPair(MatrixGerm.parse("x, y, 0; 0, y, z"), P("x + y + z"))
    gens = tangent_space(pair)
    n = 2
    assert len(gens) == n * n + (n + 1) ** 2 + (n + 1) + 3
    assert all(g.rank == n * (n + 1) + 1 for g in gens)


def test_tangent_space_node_quotient():
    # function x^2 on the smooth branch y = z = 0
    pair = embed_plane_curve(P("y", ("x", "y")), P("x^2", ("x", "y")))
    assert quotient_dimension(tangent_space(pair)) == 1


def test_minor_ideal_invariant_under_row_column_action():
    pair = CurveFunctionPair(MatrixGerm.parse("x, y, 0; 0, y, z"), P("x + y + z"))
    w = EquivalenceWitness(
        A=((P("1"), P("x")), (P("0"), P("1 + y"))),
        B=tuple(tuple(P("1") if i == j else (P("z") if (i, j) == (0, 2) else P("0"))
                      for j in range(3)) for i in range(3)),
        h={},
        g=P("0"),
    )
    moved = apply_equivalence(pair, w)
    old = maximal_minors(pair.matrix)
    new = maximal_minors(moved.matrix)
    sb_old = standard_basis([ModuleElement((m,)) for m in old])
    sb_new = standard_basis([ModuleElement((m,)) for m in new])
    for m in new:
        assert normal_form(ModuleElement((m,)), sb_old).is_zero()
    for m in old:
        assert normal_form(ModuleElement((m,)), sb_new).is_zero()


def test_identity_witness_fixes_pair():
    pair = CurveFunctionPair(MatrixGerm.parse("x, y, 0; 0, y, z"), P("x + y + z"))
    assert apply_equivalence(pair, identity_witness(pair)) == pair


def test_witness_validation_rejects_bad_data():
    pair = embed_plane_curve(P("y", ("x", "y")), P("x^3", ("x", "y")))
    w = identity_witness(pair)
    bad_sub = EquivalenceWitness(w.A, w.B, {"x": P("x + 1")}, w.g)
    with pytest.raises(ValueError):
        bad_sub.validate(pair)
    bad_g = EquivalenceWitness(w.A, w.B, {}, P("x"))
    with pytest.raises(ValueError):
        bad_g.validate(pair)


def test_tau_invariant_under_equivalence():
    pair = embed_plane_curve(P("y", ("x", "y")), P("x^3", ("x", "y")))
    tau = quotient_dimension(tangent_space(pair))
    assert tau == 2
    w = EquivalenceWitness(
        A=((P("2"),),),
        B=((P("1"), P("x")), (P("0"), P("3"))),
        h={"x": P("x + z"), "y": P("y - x^2"), "z": P("z")},
        g=P("y") * P("x"),  # multiple of the minor y
    )
    moved = apply_equivalence(pair, w)
    assert quotient_dimension(tangent_space(moved)) == tau
