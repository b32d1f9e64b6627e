from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from blowade.errors import (
    ExponentOverflow,
    InsufficientPrecision,
    NonzeroConstantTerm,
    ParseError,
    ZeroPolynomial,
)
from blowade.poly import (
    Polynomial,
    TruncatedSeries,
    X_VARS,
    critical_section,
    homogeneous_decompose,
    is_convenient,
    parse_polynomial,
    series_inverse,
    series_sqrt,
    substitute,
    translate,
)

P = parse_polynomial


def X(text):
    return parse_polynomial(text, X_VARS)


coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7).filter(lambda c: c != 0)
exps = st.tuples(*[st.integers(0, 4)] * 3)
polys = st.dictionaries(exps, coeffs, max_size=6).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero)


def test_parse_basic():
    f = P("z1*z2*z3 + z1^4")
    assert f.terms == {(1, 1, 1): 1, (4, 0, 0): 1}
    g = P("z2^2 - 1/4*z1^2")
    assert g.terms == {(0, 2, 0): 1, (2, 0, 0): Fraction(-1, 4)}


def test_parse_variants():
    assert P("3 z1 z2") == P("3*z1*z2")
    assert P("z1**2") == P("z1^2")
    assert P("(z1 + z2)^2") == P("z1^2 + 2*z1*z2 + z2^2")
    assert P("x1*x2") == P("z1*z2")


def test_parse_exponent_overflow():
    with pytest.raises(ExponentOverflow):
        P("z1^70000")


@pytest.mark.parametrize("text,pos", [("z1 +", 4), ("z4", 0), ("z1 $ z2", 3), ("1/0*z1", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as err:
        P(text)
    assert err.value.position == pos


def test_rational_coefficients_reduced():
    f = P("2/4*z1")
    c = f.coefficient((1, 0, 0))
    assert (c.numerator, c.denominator) == (1, 2)


def test_canonical_print():
    # ascending lex order on exponent vectors: (0,2,0) < (2,0,0)
    assert P("z2^2 - 1/4*z1^2").to_string() == "z2^2 - 1/4*z1^2"


@given(polys)
def test_print_parse_roundtrip(p):
    assert parse_polynomial(p.to_string()) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero()


@given(nonzero_polys, nonzero_polys)
def test_order_is_additive(a, b):
    assert (a * b).order == a.order + b.order


@given(nonzero_polys.filter(lambda p: not p.constant_term()))
def test_decomposition_reconstructs(p):
    dec = homogeneous_decompose(p)
    assert dec.reconstruct() == p
    assert dec.order == p.order
    assert all(q.is_homogeneous() and (q.degree == k) for k, q in dec.parts.items())


def test_decompose_examples():
    dec = homogeneous_decompose(P("z1*z2*z3 + z1^4 + z2^5"))
    assert dec.order == 3
    assert dec.parts == {3: P("z1*z2*z3"), 4: P("z1^4"), 5: P("z2^5")}
    dec = homogeneous_decompose(P("z1^2 + z2^2 + z3^2"))
    assert list(dec.parts) == [2]
    with pytest.raises(ZeroPolynomial):
        homogeneous_decompose(Polynomial.zero())
    with pytest.raises(NonzeroConstantTerm):
        homogeneous_decompose(P("1 + z1"))


def test_is_convenient():
    assert is_convenient(P("z1^3 + z2^3 + z3^3"))
    assert not is_convenient(P("z1*z2*z3"))
    assert is_convenient(P("z1^3 + z2^3 + z3^3 + z1*z2*z3"))


def test_substitute_examples():
    x1, x2, x3 = (Polynomial.variable(i) for i in range(3))
    out = substitute(X("x2^2"), [x1, x2 - x1.scale(Fraction(1, 2)), x3], 10)
    assert out.poly == X("x2^2 - x1*x2 + 1/4*x1^2")
    f = X("x2^2 + x3^2 + x1*x2")
    assert substitute(f, [x1, x2, x3], 10).poly == f
    out = substitute(f, [x1, x2 - x1.scale(Fraction(1, 2)), x3], 10)
    assert out.poly == X("x2^2 + x3^2 - 1/4*x1^2")


def test_substitute_precision_guard():
    s = TruncatedSeries(X("x1^2"), 5)
    x = [Polynomial.variable(i) for i in range(3)]
    with pytest.raises(InsufficientPrecision):
        substitute(s, x, 8)
    with pytest.raises(InsufficientPrecision):
        substitute(s, [x[0] + 1, x[1], x[2]])


@settings(max_examples=40)
@given(polys, coeffs, st.integers(1, 3))
def test_triangular_change_inverts(p, a, k):
    n = 12
    x1, x2, x3 = (Polynomial.variable(i) for i in range(3))
    shift = Polynomial.monomial((k, 0, 0), a)
    fwd = substitute(TruncatedSeries(p, n), [x1, x2 + shift, x3], n)
    back = substitute(fwd, [x1, x2 - shift, x3], n)
    assert back.poly == p.truncate(n)


def test_truncated_series_keeps_min_order():
    a = TruncatedSeries(X("x1 + x2^3"), 4)
    b = TruncatedSeries(X("x1^2"), 6)
    c = a * b
    assert c.order == 4
    assert c.poly == X("x1^3")


def test_translate_exact():
    f = P("z1^2*z2")
    assert translate(f, (1, -1, 0)) == P("(z1 + 1)^2*(z2 - 1)")


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)), coeffs, max_size=4))
def test_series_inverse_and_sqrt(terms):
    terms.pop((0, 0, 0), None)
    u = TruncatedSeries(Polynomial(terms) + 1, 7)
    assert (u * series_inverse(u)).poly == Polynomial.constant(1)
    r = series_sqrt(u)
    assert (r * r).poly == u.poly.truncate(7)


def test_critical_section_solves_derivative():
    g = TruncatedSeries(X("x2^2 + x1*x2*x3 + x3^3 + x1^3*x2"), 20)
    phi = critical_section(g, 1)
    assert phi.poly.degree_in(1) <= 0
    x1, x2, x3 = (Polynomial.variable(i) for i in range(3))
    dg = TruncatedSeries(g.poly.diff(1), 19)
    assert substitute(dg, [x1, phi.poly, x3], phi.order).is_zero
