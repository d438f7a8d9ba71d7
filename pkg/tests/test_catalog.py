import pytest

from curvesing.catalog import (
    CatalogEntry,
    RestrictionError,
    adjacencies,
    default_entries,
    instantiate,
    parse_descriptor,
    printed_miniversal,
)
from curvesing.curves import tangent_space
from curvesing.local_algebra import quotient_dimension


def _modulus_for(family):
    return 2 if family in ("X9star", "J10star") else None


def test_default_range_tau_calibration():
    # the module's master calibration: every entry's computed Tjurina number
    # equals its expected value
    for e in default_entries():
        assert quotient_dimension(tangent_space(e.pair)) == e.expected_tau, e.name


def test_specific_normal_forms():
    c111 = instantiate("C_space", (1, 1, 1))
    assert str(c111.pair.matrix) == "x, y, 0; 0, y, z"
    assert str(c111.pair.function) == "z + y + x"
    assert c111.expected_tau == 4
    e6 = instantiate("Echeck", (6,))
    assert str(e6.pair.matrix) == "x, y, z; z^2, x, y"
    assert str(e6.pair.function) == "z"
    x9 = instantiate("X9star", (), modulus=2)
    assert str(x9.pair.function) == "x + 2*y^2"
    assert x9.expected_tau == 6


def test_restrictions():
    with pytest.raises(RestrictionError):
        instantiate("C_space", (1, 2, 1))  # not sorted
    with pytest.raises(RestrictionError):
        instantiate("B", (2,))
    with pytest.raises(RestrictionError):
        instantiate("Fdot", (4,))
    with pytest.raises(RestrictionError):
        instantiate("X9star", ())  # modulus required
    with pytest.raises(RestrictionError):
        instantiate("Echeck", (9,))


def test_entries_are_quasi_homogeneous():
    for e in default_entries():
        if not e.is_quasi_homogeneous:
            continue
        w = e.variable_weights
        assert e.pair.function.quasi_degree(w) == e.function_degree, e.name
        for p in e.pair.matrix.flat():
            if not p.is_zero():
                assert p.quasi_degree(w) is not None, e.name


def test_descriptor_roundtrip():
    for e in default_entries():
        fam, idx = parse_descriptor(e.name)
        again = instantiate(fam, idx, modulus=_modulus_for(fam))
        assert again.pair == e.pair or fam in ("X9star", "J10star")
    assert parse_descriptor("C:1,1,1") == ("C_space", (1, 1, 1))
    assert parse_descriptor("C2,1") == ("C_plane", (2, 1))
    assert parse_descriptor("Fd7") == ("Fdot", (7,))
    with pytest.raises(ValueError):
        parse_descriptor("Q5")


def test_adjacencies_resolve_and_decrease_tau():
    for e in default_entries():
        for a in adjacencies(e):
            fam, idx = parse_descriptor(a)
            t = instantiate(fam, idx, modulus=_modulus_for(fam))
            assert t.expected_tau < e.expected_tau, (e.name, a)


def test_printed_adjacency_arrows():
    f6 = adjacencies(instantiate("F", (6,)))
    assert "C4,1" in f6 and "C3,2" in f6
    assert adjacencies(instantiate("Echeck", (6,))) == ["Fd5"]
    c211 = adjacencies(instantiate("C_space", (2, 1, 1)))
    assert "C1,1,1" in c211 and "C2,1" in c211
    assert "C3,1" in adjacencies(instantiate("X9star", (), modulus=2))


def test_printed_miniversal_parameter_counts():
    full = printed_miniversal(1, 1, 1)
    assert full.parameters == ("alpha", "beta", "gamma", "L0")
    trunc = printed_miniversal(1, 1, 1, truncated=True)
    assert trunc.parameters == ("alpha", "beta", "gamma")
    assert str(trunc.function) == "z + y + x"
    c211 = printed_miniversal(2, 1, 1)
    assert len(c211.parameters) == 5  # equals tau


def test_printed_miniversal_is_quasi_homogeneous():
    for pqr in ((1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 1)):
        pd = printed_miniversal(*pqr)
        w = dict(pd.parameter_weights)
        w.update(pd.variable_weights)
        assert pd.function.quasi_degree(w) == pd.degree
        assert all(v > 0 for v in pd.parameter_weights.values())


def test_printed_miniversal_specialize():
    pd = printed_miniversal(1, 1, 1)
    pair = pd.specialize({"alpha": 0, "beta": 0, "gamma": 0, "L0": 0})
    base = instantiate("C_space", (1, 1, 1)).pair
    assert pair == base


def test_printed_miniversal_directions_span_quotient():
    # the parameter directions of the printed deformation project onto a
    # spanning set of the quotient by the tangent space
    from curvesing.local_algebra import ModuleElement, normal_form, standard_basis, standard_monomials
    from curvesing.poly import Polynomial
    from curvesing.curves import SPACE_VARS

    pd = printed_miniversal(2, 1, 1)
    entry = instantiate("C_space", (2, 1, 1))
    sb = standard_basis(tangent_space(entry.pair))
    zero_vals = {p: 0 for p in pd.parameters}

    def direction(param):
        comps = []
        for p in list(pd.matrix.flat()) + [pd.function]:
            d = p.derivative(param)
            images = {q: Polynomial.constant(0, SPACE_VARS) for q in pd.parameters}
            images.update({v: Polynomial.variable(v, SPACE_VARS) for v in SPACE_VARS})
            comps.append(d.substitute(images))
        return ModuleElement(tuple(comps))

    dirs = [direction(p) for p in pd.parameters]
    # spanning: adding the directions to the tangent space makes the quotient trivial
    assert quotient_dimension(tangent_space(entry.pair) + dirs) == 0
    # linear independence in the quotient: count matches tau
    assert len(dirs) == entry.expected_tau
