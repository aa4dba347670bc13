from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singlab.poly import (HyperplaneSpec, Polynomial, PolySyntaxError, TPoly, differentiate,
                          multiplicity, parse_poly, restrict_to_axes, specialize,
                          substitute_hyperplane, support, to_text)

from conftest import ALTMAN, XYZ, x13y20_family, x10_family

XY = ["x", "y"]


def P(text, vars=XY, param=None):
    return parse_poly(text, vars, param)


def test_parse_merges_and_reads_terms():
    p = P("x^2 + 2*x*y + y^2")
    assert p.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert len(P("x^5 + y^6 + z^5 + y^3*z^2", XYZ)) == 4


def test_parse_parametric_merges_equal_monomials():
    p = P("t^3*x^4*y^5 + t^5*x^4*y^5", XY, "t")
    assert list(p.terms) == [(4, 5)]
    assert p.coeff((4, 5)) == TPoly([0, 0, 0, 1, 0, 1])


@pytest.mark.parametrize("text, coeff", [
    ("-x + 3/4*y", {(1, 0): -1, (0, 1): Fraction(3, 4)}),
    ("  x*x*y ", {(2, 1): 1}),
    ("x - x", {}),
    ("5", {(0, 0): 5}),
])
def test_parse_forms(text, coeff):
    assert P(text).terms == coeff


@pytest.mark.parametrize("text, fragment", [
    ("x^-2", "negative exponent"),
    ("x + w", "unknown identifier"),
    ("x + * y", "expected"),
    ("x $ y", "unexpected character"),
    ("", "empty"),
    ("x^", "expected num"),
    ("1/0*x", "zero denominator"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PolySyntaxError, match=fragment):
        P(text)


def test_parse_error_reports_position():
    with pytest.raises(PolySyntaxError) as info:
        P("x + w")
    assert info.value.pos == 4


def test_parameter_outside_declaration_is_unknown():
    with pytest.raises(PolySyntaxError):
        P("t*x")


def test_support():
    assert support(P("x^2 + y^2")) == {(2, 0), (0, 2)}
    assert support(P("x - x")) == frozenset()
    assert support(P("t*x + x", ["x"], "t")) == {(1,)}


def test_differentiate():
    assert differentiate(P("x^2 + y^2"), 0) == P("2*x")
    f = P("x^5 + y^6 + z^5 + y^3*z^2", XYZ)
    assert differentiate(f, 1) == P("6*y^5 + 3*y^2*z^2", XYZ)
    assert not differentiate(P("y^3"), 0)
    with pytest.raises(IndexError):
        differentiate(P("x"), 2)


def test_specialize():
    fam = P(ALTMAN, XYZ, "t")
    assert specialize(fam, 0) == P("x^5 + y^6 + z^5 + y^3*z^2", XYZ)
    assert specialize(fam, 1) == P("x^5 + y^6 + z^5 + y^3*z^2 + 2*x^2*y^2*z + x^4*y", XYZ)
    ex2 = specialize(P(x10_family(6), XYZ, "t"), 1)
    assert ex2.coeff((4, 5, 0)) == 2
    plain = P("x + y")
    assert specialize(plain, 3) is plain


def test_restrict_to_axes():
    assert restrict_to_axes(P("x^2 + y^2 + x*y"), [0]) == P("x^2", ["x"])
    f = specialize(P(x13y20_family(7), XYZ, "t"), 1)
    assert restrict_to_axes(f, [2]) == P("z^7", ["z"])
    assert not restrict_to_axes(P("x*y"), [0])


def test_substitute_hyperplane():
    f0 = specialize(P(x13y20_family(7), XYZ, "t"), 0)
    assert substitute_hyperplane(f0, HyperplaneSpec(2)) == P("x^13 + y^20")
    xz = P("x^2 + z^2", ["x", "z"])
    assert substitute_hyperplane(xz, HyperplaneSpec(1, {0: 1})) == P("2*x^2", ["x"])
    assert substitute_hyperplane(P("x + y + z", XYZ), HyperplaneSpec(2, {0: 1, 1: -1})) == P("2*x")


def test_multiplicity():
    assert multiplicity(P("x^2 + y^2")) == 2
    assert multiplicity(P(x13y20_family(7), XYZ, "t"), t0=1) == 7
    assert multiplicity(P("x^5 + y*z^7 + y^15 + t*x*z^6", XYZ, "t"), t0=1) == 5
    with pytest.raises(ValueError):
        multiplicity(P("x - x"))


def test_canonical_text_is_graded_lex_descending():
    assert to_text(P("y + x^2 - 1/2*x*y")) == "x^2 - 1/2*x*y + y"
    assert to_text(P("x - x")) == "0"
    assert to_text(P(ALTMAN, XYZ, "t")) == (
        "y^6 + x^5 + t^2*x^4*y + 2*t*x^2*y^2*z + y^3*z^2 + z^5")


# -- properties ---------------------------------------------------------------

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw, param=False):
    terms = draw(st.dictionaries(exps, coeffs, max_size=5))
    if param:
        tcoeffs = {e: TPoly([c, draw(coeffs)]) for e, c in terms.items()}
        return Polynomial(XY, tcoeffs, "t")
    return Polynomial(XY, terms)


@given(polys())
def test_print_parse_roundtrip(p):
    assert P(to_text(p)) == p
    assert to_text(P(to_text(p))) == to_text(p)


@given(polys(param=True))
def test_print_parse_roundtrip_parametric(p):
    assert P(to_text(p), XY, "t") == p


@given(polys(), polys(), st.integers(0, 1))
def test_leibniz(p, q, i):
    assert differentiate(p * q, i) == differentiate(p, i) * q + p * differentiate(q, i)


@given(polys(param=True), polys(param=True), coeffs)
def test_specialize_is_a_ring_map(p, q, t0):
    assert specialize(p + q, t0) == specialize(p, t0) + specialize(q, t0)
    assert specialize(p * q, t0) == specialize(p, t0) * specialize(q, t0)
    assert support(specialize(p, t0)) <= support(p)


@settings(max_examples=50)
@given(polys(), polys())
def test_multiplicity_is_additive(p, q):
    if p and q:
        assert multiplicity(p * q) == multiplicity(p) + multiplicity(q)
