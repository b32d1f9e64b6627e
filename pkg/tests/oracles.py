"""Independent reference computations used by the tests.

None of these call into the package's geometry: volumes come from scipy's
Qhull, Brieskorn zetas from the Milnor-Orlik divisor calculus, singular
points from sympy's polynomial system solver.
"""

from fractions import Fraction
from itertools import combinations, product
from math import factorial, gcd

import numpy as np
import sympy
from scipy.spatial import ConvexHull


def _gamma_minus_volume(points, dim):
    """Euclidean volume of the region between the coordinate planes and the
    Newton boundary of a convenient point set in R^dim."""
    if dim == 1:
        return min(p[0] for p in points)
    box = max(max(p) for p in points) + 1
    cloud = set()
    for p in points:
        for mask in product((0, 1), repeat=dim):
            cloud.add(tuple(box if m else c for c, m in zip(p, mask)))
    hull = ConvexHull(np.array(sorted(cloud), dtype=float))
    return box**dim - hull.volume


def newton_number_oracle(support, n=3):
    """Kouchnirenko's alternating sum for a convenient support (float hull volumes, rounded)."""
    total = 0
    for k in range(n + 1):
        for I in combinations(range(n), k):
            if not I:
                total += (-1) ** n
                continue
            pts = [tuple(p[i] for i in I) for p in support if all(p[j] == 0 for j in range(n) if j not in I)]
            vol = _gamma_minus_volume(pts, len(I))
            term = factorial(len(I)) * vol
            total += (-1) ** (n - len(I)) * int(round(term))
    return total


def _lcm(a, b):
    return a * b // gcd(a, b)


def brieskorn_zeta_oracle(exponents):
    """Zeta of z1^a1 + z2^a2 + z3^a3 as {d: nu}, from the divisor of prod (Lambda_ai - 1).

    Lambda_a Lambda_b = gcd(a, b) Lambda_lcm(a, b); the reduced divisor plus
    Lambda_1 (the degree-0 homology) gives the zeta with exponent -1 in three
    variables.
    """
    div = {1: 1}
    for a in exponents:
        new = {}
        for k, c in div.items():
            l = _lcm(k, a)
            new[l] = new.get(l, 0) + c * gcd(k, a)
            new[k] = new.get(k, 0) - c
        div = new
    div[1] = div.get(1, 0) + 1
    return {d: -c for d, c in div.items() if c}


def singular_points_oracle(expr_text):
    """Rational singular points of the projective curve given by a homogeneous sympy expression."""
    z1, z2, z3 = sympy.symbols("z1 z2 z3")
    f = sympy.sympify(expr_text.replace("^", "**"), locals={"z1": z1, "z2": z2, "z3": z3})
    grads = [sympy.diff(f, v) for v in (z1, z2, z3)]
    pts = set()
    for fixed, free in ((z1, (z2, z3)), (z2, (z1, z3)), (z3, (z1, z2))):
        eqs = [g.subs(fixed, 1) for g in grads]
        sols = sympy.solve(eqs, free, dict=True)
        for s in sols:
            vals = {fixed: sympy.Integer(1), free[0]: s.get(free[0], free[0]), free[1]: s.get(free[1], free[1])}
            if any(not v.is_number for v in vals.values()):
                continue
            if not all(v.is_rational for v in vals.values()):
                continue
            coords = [Fraction(int(sympy.Rational(vals[v]).p), int(sympy.Rational(vals[v]).q)) for v in (z1, z2, z3)]
            lead = next(c for c in coords if c)
            pts.add(tuple(c / lead for c in coords))
    return pts


def node_zeta_closed_form(d, l):
    return {d + l: -1}


def single_face_degree(d, n):
    return -n * (d + 2)


def two_face_degree(d, n, q):
    return -(d + 2) * (q - 1) - ((d + 1) * (n + 1) - q * d)
