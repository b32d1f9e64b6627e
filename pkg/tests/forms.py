"""Shared generators: ADE normal forms, random rational linear changes, perturbations."""

import random
from fractions import Fraction

from blowade.curves import ADEType, normal_form
from blowade.poly import Polynomial, substitute

ADE_FORMS = [ADEType("A", n) for n in range(1, 5)] + [ADEType("D", 4), ADEType("D", 5)] + [
    ADEType("E", n) for n in (6, 7, 8)
]

# weights (w2, w3) making the normal form quasi-homogeneous of degree 1
WEIGHTS = {
    "A": lambda n: (Fraction(1, 2), Fraction(1, n + 1)),
    "D": lambda n: (Fraction(n - 2, 2 * (n - 1)), Fraction(1, n - 1)),
    "E": lambda n: {6: (Fraction(1, 3), Fraction(1, 4)), 7: (Fraction(1, 3), Fraction(2, 9)),
                    8: (Fraction(1, 3), Fraction(1, 5))}[n],
}


def rand_rational(rng, lo=-5, hi=5, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_linear_change(rng):
    while True:
        a, b, c, d = (rand_rational(rng) for _ in range(4))
        if a * d - b * c:
            break
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    return [x.scale(a) + y.scale(b), x.scale(c) + y.scale(d)]


def above_boundary_terms(t, rng, count=3, max_deg=9):
    """Random monomials of weighted degree strictly greater than 1 for the form of type t."""
    w2, w3 = WEIGHTS[t.family](t.index)
    terms = {}
    while len(terms) < count:
        i, j = rng.randint(0, max_deg), rng.randint(0, max_deg)
        if i + j >= 2 and i * w2 + j * w3 > 1:
            terms[(i, j)] = rand_rational(rng) or Fraction(1)
    return Polynomial(terms, 2)


def disguised(t, rng, order=40):
    g = normal_form(t) + above_boundary_terms(t, rng)
    return substitute(g, random_linear_change(rng), order)


def shifted_node(rng, order=40):
    """x2^2 + x3^2 + c x1^m disguised by shifts x2 <- x2 + a x1^k, x3 <- x3 + b x1^k; returns (germ, m, c)."""
    from blowade.poly import TruncatedSeries

    m = rng.randint(1, 6)
    c = rand_rational(rng) or Fraction(1)
    g = Polynomial({(0, 2, 0): 1, (0, 0, 2): 1, (m, 0, 0): c})
    x1, x2, x3 = (Polynomial.variable(i) for i in range(3))
    s = TruncatedSeries(g, order)
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(1, 4)
        a, b = rand_rational(rng), rand_rational(rng)
        xk = Polynomial.monomial((k, 0, 0))
        s = substitute(s, [x1, x2 + xk.scale(a), x3 + xk.scale(b)], order)
    return s, m, c
