import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from blowade.blowup import (
    Chart,
    extract_principal_part,
    germ_at,
    normalize_node,
    pullback,
    split_quadratic,
)
from blowade.curves import ADEType, ProjectivePoint, classify_ade
from blowade.errors import BlowOrderExceeded, NotBlowADEShape
from blowade.newton import newton_principal_part
from blowade.poly import Polynomial, TruncatedSeries, X_VARS, from_sympy, parse_polynomial, to_sympy

from forms import shifted_node

P = parse_polynomial


def X(text):
    return parse_polynomial(text, X_VARS)


def Y(text):
    return parse_polynomial(text, ("y1", "y2", "y3"))


def test_pullback_chart1():
    pb = pullback(P("z1*z2*z3 + z1^4"), Chart(1))
    assert pb.total == Y("y1^3*y2*y3 + y1^4")
    assert pb.strict == Y("y2*y3 + y1")


def test_pullback_chart3():
    # z3 = y1, z1 = y1*y2, z2 = y1*y3
    pb = pullback(P("z2^2*z3 - z1^3 + z3^4"), Chart(3))
    assert pb.strict == Y("y3^2 - y2^3 + y1")


def test_pullback_homogeneous_is_dehomogenization():
    f = P("z1^3 + z2^3 + z3^3 - 3*z1*z2*z3")
    pb = pullback(f, Chart(1))
    assert pb.strict.degree_in(0) <= 0
    assert pb.strict == Y("1 + y2^3 + y3^3 - 3*y2*y3")


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.tuples(*[st.integers(0, 4)] * 3), st.integers(-5, 5).filter(bool), min_size=1, max_size=6),
       st.sampled_from([1, 2, 3]))
def test_pullback_is_substitution(terms, idx):
    terms.pop((0, 0, 0), None)
    if not terms:
        return
    f = Polynomial(terms)
    chart = Chart(idx)
    pb = pullback(f, chart)
    z = sympy.symbols("z1 z2 z3")
    y1, y2, y3 = sympy.symbols("y1 y2 y3")
    pattern = {1: (y1, y1 * y2, y1 * y3), 2: (y1 * y2, y1, y1 * y3), 3: (y1 * y2, y1 * y3, y1)}[idx]
    expr = sympy.expand(to_sympy(f, z).subs(dict(zip(z, pattern)), simultaneous=True))
    direct = from_sympy(expr, (y1, y2, y3))
    assert pb.total == direct
    assert pb.strict * Polynomial.monomial((f.order, 0, 0)) == direct


def test_normalize_node_examples():
    pp = normalize_node(X("x2^2 + x3^2 + 5*x1^3 + x1^4*x2"))
    assert (pp.c, pp.m, pp.rounds) == (5, 3, 0)
    assert pp.h == parse_polynomial("x2^2 + x3^2", ("x2", "x3"))
    pp = normalize_node(X("x2^2 + x3^2 + x1*x2"))
    assert (pp.c, pp.m) == (Fraction(-1, 4), 2)
    assert pp.change.is_admissible()


def test_normalize_node_engineered_cancellation():
    x1, x2, x3 = (Polynomial.variable(i) for i in range(3))
    target = X("x2^2 + x3^2 + 3*x1^4 + x1^3*x2*x3 + x1^5*x3")
    g = TruncatedSeries(target, 40)
    from blowade.poly import substitute

    g = substitute(g, [x1, x2 - x1.scale(Fraction(1, 2)), x3 - x1.scale(Fraction(1, 2))], 40)
    assert g.poly.coefficient((1, 1, 0)) and g.poly.coefficient((1, 0, 1))
    pp = normalize_node(g)
    assert (pp.m, pp.c) == (4, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_normalize_node_undoes_shifts(seed):
    g, m, c = shifted_node(random.Random(seed))
    pp = normalize_node(g)
    assert (pp.m, pp.c) == (m, c)
    assert pp.change.is_admissible()
    assert newton_principal_part(pp.principal_part + pp.residual) == pp.principal_part


def test_normalize_node_non_isolated():
    with pytest.raises(BlowOrderExceeded) as err:
        normalize_node(TruncatedSeries(X("x2^2 + x3^2 + x1*x2^3"), 30))
    assert err.value.details["likely_non_isolated"]


def test_normalize_node_beyond_max_order():
    with pytest.raises(BlowOrderExceeded) as err:
        normalize_node(X("x2^2 + x3^2 + x1^9"), max_order=5)
    assert not err.value.details["likely_non_isolated"]


def test_split_quadratic_examples():
    assert split_quadratic(X("x2^2 + x1*x2 + x3^3")).poly == X("x2^2 - 1/4*x1^2 + x3^3")
    assert split_quadratic(X("x2^2 + x3^5")).poly == X("x2^2 + x3^5")
    assert split_quadratic(X("x2^2 + x1*x2*x3 + x3^3")).poly == X("x2^2 - 1/4*x1^2*x3^2 + x3^3")


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_split_quadratic_shape(seed):
    rng = random.Random(seed)
    terms = {(0, 2, 0): 1, (0, 0, 3): 1}
    for _ in range(4):
        e = (rng.randint(0, 3), rng.randint(1, 3), rng.randint(0, 3))
        if sum(e) >= 2 and e != (0, 2, 0):
            terms[e] = rng.randint(-3, 3) or 1
    out = split_quadratic(TruncatedSeries(Polynomial(terms), 16)).poly
    assert all(e[1] == 0 for e in out.support if e != (0, 2, 0))
    assert out.coefficient((0, 2, 0)) == 1


def test_extract_a2_and_e6():
    pp = extract_principal_part(X("x2^2 + x3^3 + 7*x1^2"), ADEType("A", 2))
    assert (pp.c, pp.m) == (7, 2)
    assert pp.h == parse_polynomial("x2^2 + x3^3", ("x2", "x3"))
    pp = extract_principal_part(X("x2^3 + x3^4 - 2*x1"), ADEType("E", 6))
    assert (pp.c, pp.m) == (-2, 1)


def test_extract_mixed_face_term_fails():
    # after x3' = x3 - x1 the pure term appears but b*x1*x3' stays on the boundary
    with pytest.raises(NotBlowADEShape) as err:
        extract_principal_part(X("x2^2 + x3^3 + 3*x1*x3"), ADEType("A", 2))
    assert err.value.details["terms"]


def test_germ_at_point_off_chart1():
    f = P("z2^2*z3 - z1^3 + z3^4")
    germ, change = germ_at(f, ProjectivePoint((0, 0, 1)))
    assert change.chart.index == 3
    assert germ.poly == X("x3^2 - x2^3 + x1")


def test_extract_from_cuspidal_cubic():
    f = P("z2^2*z3 - z1^3 + z3^5")
    pt = ProjectivePoint((0, 0, 1))
    germ, change = germ_at(f, pt)
    cls = classify_ade(germ.poly.partial_evaluate({0: 0}).project((1, 2)))
    assert cls.type == ADEType("A", 2)
    pp = extract_principal_part(germ, cls.type, cls, d=3, change=change)
    assert (pp.m, pp.c) == (2, 1)
    assert pp.change.chart.index == 3
