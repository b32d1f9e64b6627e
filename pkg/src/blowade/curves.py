"""Singular points of the projective tangent cone and ADE recognition of
plane-curve germs."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import reduce
from typing import Optional, Sequence

import sympy

from .errors import (
    IndeterminateType,
    NonRationalSingularLocus,
    NonReducedTangentCone,
    NotSingular,
)
from .newton import newton_principal_part
from .poly import (
    Polynomial,
    Series,
    TruncatedSeries,
    as_series,
    critical_section,
    from_sympy,
    identity_change,
    poly_of,
    shift_variable,
    substitute,
    to_sympy,
    translate,
)

DEFAULT_JET_ORDER = 40


# ---------------------------------------------------------------------------
# points


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    coords: tuple

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coords)
        if len(cs) != 3 or not any(cs):
            raise ValueError("a projective point needs three coordinates, not all zero")
        lead = next(c for c in cs if c)
        object.__setattr__(self, "coords", tuple(c / lead for c in cs))

    @classmethod
    def parse(cls, text: str) -> "ProjectivePoint":
        parts = [p.strip() for p in text.split(":")]
        if len(parts) != 3:
            raise ValueError(f"expected 'a:b:c', got {text!r}")
        return cls(tuple(Fraction(p) for p in parts))

    @property
    def chart(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c) + 1

    @property
    def affine(self) -> tuple:
        """Coordinates of the point in its chart, other indices in increasing order."""
        i = self.chart - 1
        return tuple(c for j, c in enumerate(self.coords) if j != i)

    def __str__(self):
        return ":".join(str(c) for c in self.coords)


def chart_variables(chart: int) -> tuple:
    """Indices (0-based) of the homogeneous coordinates playing x2, x3 in the chart."""
    return tuple(j for j in range(3) if j != chart - 1)


def dehomogenize(f: Polynomial, chart: int) -> Polynomial:
    """f with z_chart = 1, as a polynomial in the two remaining variables."""
    i = chart - 1
    keep = chart_variables(chart)
    out = {}
    for e, c in f.items():
        ne = (e[keep[0]], e[keep[1]])
        out[ne] = out.get(ne, 0) + c
    del i
    return Polynomial(out, 2)


def local_equation(f_d: Polynomial, point: ProjectivePoint, order: int = DEFAULT_JET_ORDER) -> TruncatedSeries:
    g = translate(dehomogenize(f_d, point.chart), point.affine)
    return TruncatedSeries(g, order)


# ---------------------------------------------------------------------------
# ADE types


@dataclass(frozen=True)
class ADEType:
    family: str  # "A", "D", "E", "NotADE", "Indeterminate"
    index: Optional[int] = None

    def __post_init__(self):
        if self.family == "A" and not (self.index and self.index >= 1):
            raise ValueError("A_n needs n >= 1")
        if self.family == "D" and not (self.index and self.index >= 4):
            raise ValueError("D_n needs n >= 4")
        if self.family == "E" and self.index not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")

    @property
    def is_ade(self):
        return self.family in ("A", "D", "E")

    @property
    def milnor(self) -> Optional[int]:
        return self.index if self.is_ade else None

    def __str__(self):
        return f"{self.family}{self.index}" if self.is_ade else self.family

    def to_dict(self):
        return {"family": self.family, "index": self.index}


def normal_form(t: ADEType) -> Polynomial:
    """The listed normal form in (x2, x3)."""
    n = t.index
    if t.family == "A":
        return Polynomial({(2, 0): 1, (0, n + 1): 1}, 2)
    if t.family == "D":
        return Polynomial({(2, 1): 1, (0, n - 1): 1}, 2)
    if t.family == "E":
        return {
            6: Polynomial({(3, 0): 1, (0, 4): 1}, 2),
            7: Polynomial({(3, 0): 1, (1, 3): 1}, 2),
            8: Polynomial({(3, 0): 1, (0, 5): 1}, 2),
        }[n]
    raise ValueError(f"{t} has no normal form")


@dataclass(frozen=True)
class ADEClassification:
    """Type plus the (x2, x3) coordinate change reaching the principal part ``h``.

    ``stages`` are applied in order; each stage lists, for x2 and x3, the old
    variable as a series in the new ones.
    """

    type: ADEType
    stages: tuple = ()
    h: Optional[Polynomial] = None
    change_rational: bool = True
    jet_order: int = DEFAULT_JET_ORDER

    def apply(self, g: Series, order: int = None) -> TruncatedSeries:
        """Apply the change to a germ in (x2, x3) or, keeping x1, in (x1, x2, x3)."""
        n = poly_of(g).nvars
        s = as_series(g, order or (g.order if isinstance(g, TruncatedSeries) else self.jet_order))
        for stage in self.stages:
            if n == 2:
                change = list(stage)
            else:
                change = [Polynomial.variable(0, 3)] + [
                    _lift(c) for c in stage
                ]
            s = substitute(s, change, s.order)
        return s

    def to_dict(self):
        return {
            "type": self.type.to_dict(),
            "h": self.h.to_string(("x2", "x3")) if self.h is not None else None,
            "change_rational": self.change_rational,
            "stages": len(self.stages),
        }


def _lift(c):
    p = poly_of(c).embed((1, 2), 3)
    if isinstance(c, TruncatedSeries):
        return TruncatedSeries(p, c.order)
    return p


def _linear_stage(matrix):
    """Old (x2, x3) = matrix @ new (u, v)."""
    return tuple(Polynomial({(1, 0): matrix[i][0], (0, 1): matrix[i][1]}, 2) for i in range(2))


def _shift_stage(var, by: Polynomial):
    stage = list(identity_change(2))
    stage[var] = stage[var] + by
    return tuple(stage)


def _apply_stage(g: TruncatedSeries, stage) -> TruncatedSeries:
    return substitute(g, list(stage), g.order)


def _binary_symbols():
    return sympy.symbols("x2 x3")


def _complement(alpha, beta):
    """Matrix M with old = M @ new, new u = alpha*x + beta*y."""
    if alpha:
        # x = (u - beta v)/alpha, y = v
        return [[1 / alpha, -beta / alpha], [0, 1]]
    return [[0, 1], [1 / beta, 0]]


def _linear_factors(form: Polynomial):
    """Factor a binary form over Q: list of ((alpha, beta), multiplicity, is_linear)."""
    x, y = _binary_symbols()
    _, factors = sympy.factor_list(to_sympy(form, (x, y)), x, y)
    out = []
    for fac, mult in factors:
        p = sympy.Poly(fac, x, y)
        if p.total_degree() == 1:
            a = Fraction(str(p.coeff_monomial(x)))
            b = Fraction(str(p.coeff_monomial(y)))
            out.append(((a, b), mult, True))
        else:
            out.append((p, mult, False))
    return out


def classify_ade(g: Series, order: int = DEFAULT_JET_ORDER) -> ADEClassification:
    """Recognize the simple singularity type of a plane-curve germ at the origin."""
    s = as_series(g, order)
    if s.nvars != 2:
        raise ValueError("classify_ade expects a germ in two variables")
    p = s.poly
    if p.constant_term():
        raise NotSingular("germ does not pass through the origin")
    if p.homogeneous_part(1):
        raise NotSingular("germ is smooth at the origin (nonzero linear part)")
    if p.is_zero:
        return ADEClassification(ADEType("Indeterminate"), jet_order=s.order)
    a, b, c = p.coefficient((2, 0)), p.coefficient((1, 1)), p.coefficient((0, 2))
    disc = b * b - 4 * a * c
    if disc:
        return _classify_a1(s, a, b, c)
    if a or b or c:
        return _classify_an(s, a, b, c)
    return _classify_corank2(s)


def _classify_a1(s, a, b, c):
    # rational diagonalization of the quadratic form
    if a:
        m = [[1, -b / (2 * a)], [0, 1]]
    elif c:
        m = [[1, 0], [-b / (2 * c), 1]]
    else:
        m = [[1, 1], [1, -1]]
    stage = _linear_stage(m)
    g = _apply_stage(s, stage)
    h = g.poly.homogeneous_part(2)
    return ADEClassification(ADEType("A", 1), (stage,), h, True, s.order)


def _classify_an(s, a, b, c):
    # rank one: q = a (x + b/(2a) y)^2 or c y^2
    if a:
        m = _complement(Fraction(1), b / (2 * a))
    else:
        m = _complement(Fraction(0), Fraction(1))
    stages = [_linear_stage(m)]
    g = _apply_stage(s, stages[0])
    lam = g.poly.coefficient((2, 0))
    phi = critical_section(g, 0)
    stages.append(_shift_stage(0, phi.poly))
    # only the restriction psi(v) = g(phi(v), v) is needed, not the whole shifted germ
    psi = substitute(g, [phi, Polynomial.variable(1, 2)], phi.order).poly
    if psi.is_zero:
        return ADEClassification(ADEType("Indeterminate"), tuple(stages), None, True, phi.order)
    n = psi.order - 1
    h = Polynomial({(2, 0): lam, (0, n + 1): psi.coefficient((0, n + 1))}, 2)
    return ADEClassification(ADEType("A", n), tuple(stages), h, True, g.order)


def _classify_corank2(s):
    cubic = s.poly.homogeneous_part(3)
    if cubic.is_zero:
        return ADEClassification(ADEType("NotADE"), (), None, True, s.order)
    a, b, c, d = (cubic.coefficient(e) for e in ((3, 0), (2, 1), (1, 2), (0, 3)))
    disc = b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d
    if disc:
        return _classify_d4(s, cubic)
    factors = _linear_factors(cubic)
    linear = [(ab, m) for ab, m, ok in factors if ok]
    triple = [ab for ab, m in linear if m == 3]
    if triple:
        return _classify_e(s, triple[0])
    double = next(ab for ab, m in linear if m == 2)
    simple = next(ab for ab, m in linear if m == 1)
    return _classify_dn(s, double, simple)


def _classify_d4(s, cubic):
    # move to coordinates where both pure cubes appear; then the cubic is the principal part
    stages = []
    g = s
    for k in range(0, 8):
        for m in ([[1, 0], [k, 1]], [[1, k], [0, 1]]):
            trial = _apply_stage(TruncatedSeries(cubic, 4), _linear_stage(m)).poly
            if trial.coefficient((3, 0)) and trial.coefficient((0, 3)):
                stages.append(_linear_stage(m))
                g = _apply_stage(s, stages[0])
                break
        if stages:
            break
    h = g.poly.homogeneous_part(3)
    # the listed normal form x2^2 x3 + x3^3 is reached only over an extension in general
    return ADEClassification(ADEType("D", 4), tuple(stages), h, False, s.order)


def _classify_dn(s, double, simple):
    # u = double-root form, v = simple-root form
    (a1, b1), (a2, b2) = double, simple
    det = a1 * b2 - a2 * b1
    inv = [[b2 / det, -b1 / det], [-a2 / det, a1 / det]]
    stages = [_linear_stage(inv)]
    g = _apply_stage(s, stages[0])
    kappa = g.poly.coefficient((2, 1))
    N = g.order
    for _ in range(4 * N):
        lin = sorted(e for e in g.poly if e[0] == 1)
        if lin:
            e = lin[0]
            alpha = g.poly.coefficient(e) / (2 * kappa)
            by = Polynomial({(0, e[1] - 1): -alpha}, 2)
            stages.append(_shift_stage(0, by))
            g = _apply_stage(g, stages[-1])
            continue
        pure_u = sorted(e for e in g.poly if e[1] == 0)
        if pure_u:
            e = pure_u[0]
            beta = g.poly.coefficient(e) / kappa
            by = Polynomial({(e[0] - 2, 0): -beta}, 2)
            stages.append(_shift_stage(1, by))
            g = _apply_stage(g, stages[-1])
            continue
        break
    psi = g.poly.filter(lambda e: e[0] == 0)
    if psi.is_zero:
        return ADEClassification(ADEType("Indeterminate"), tuple(stages), None, True, g.order)
    n = psi.order + 1
    h = Polynomial({(2, 1): kappa, (0, n - 1): psi.coefficient((0, n - 1))}, 2)
    return ADEClassification(ADEType("D", n), tuple(stages), h, True, g.order)


def _classify_e(s, line):
    alpha, beta = line
    stages = [_linear_stage(_complement(alpha, beta))]
    g = _apply_stage(s, stages[0])
    p = g.poly
    lam = p.coefficient((3, 0))
    if p.coefficient((0, 4)):
        h = Polynomial({(3, 0): lam, (0, 4): p.coefficient((0, 4))}, 2)
        return ADEClassification(ADEType("E", 6), tuple(stages), h, True, g.order)
    kappa = p.coefficient((1, 3))
    if kappa:
        # pure powers v^k, k >= 5, already lie above the face of u^3 + u v^3
        h = Polynomial({(3, 0): lam, (1, 3): kappa}, 2)
        return ADEClassification(ADEType("E", 7), tuple(stages), h, True, g.order)
    if p.coefficient((0, 5)):
        h = Polynomial({(3, 0): lam, (0, 5): p.coefficient((0, 5))}, 2)
        return ADEClassification(ADEType("E", 8), tuple(stages), h, True, g.order)
    return ADEClassification(ADEType("NotADE"), tuple(stages), None, True, g.order)


# ---------------------------------------------------------------------------
# singular locus of C(f_d)


@dataclass(frozen=True)
class SingularPointReport:
    point: ProjectivePoint
    local_equation: TruncatedSeries
    type: Optional[ADEType] = None
    classification: Optional[ADEClassification] = None

    @property
    def chart(self) -> int:
        return self.point.chart

    @property
    def milnor(self) -> Optional[int]:
        return self.type.milnor if self.type else None

    @property
    def normalizing_change(self):
        return self.classification

    def classified(self, order: int = DEFAULT_JET_ORDER) -> "SingularPointReport":
        cls = classify_ade(self.local_equation, order)
        return replace(self, type=cls.type, classification=cls)

    def to_dict(self):
        return {
            "coords": str(self.point),
            "chart": self.chart,
            "type": self.type.to_dict() if self.type else None,
            "milnor": self.milnor,
            "h": (
                self.classification.h.to_string(("x2", "x3"))
                if self.classification and self.classification.h is not None
                else None
            ),
            "change_rational": self.classification.change_rational if self.classification else None,
        }


def check_reduced(f_d: Polynomial):
    z = sympy.symbols("z1 z2 z3")
    _, factors = sympy.factor_list(to_sympy(f_d, z), *z)
    repeated = [(str(fac), m) for fac, m in factors if m > 1]
    if repeated:
        raise NonReducedTangentCone(
            f"tangent cone has the repeated factor ({repeated[0][0]})^{int(repeated[0][1])}",
            factor=repeated[0][0],
            multiplicity=int(repeated[0][1]),
        )


def is_singular_point(f_d: Polynomial, point: ProjectivePoint) -> bool:
    return all(f_d.diff(i).evaluate(point.coords) == 0 for i in range(3))


def _rational_roots(poly, var):
    roots, others = [], []
    if poly.is_zero:
        return None, []
    for fac, _ in sympy.factor_list(poly.as_expr(), var)[1]:
        fp = sympy.Poly(fac, var)
        if fp.degree() == 1:
            r = -fp.nth(0) / fp.nth(1)
            roots.append(Fraction(int(r.p), int(r.q)))
        elif fp.degree() > 1:
            others.append(fp)
    return roots, others


def _gcd_all(polys):
    polys = [q for q in polys if not q.is_zero]
    if not polys:
        return None
    return reduce(sympy.gcd, polys)


def singular_points(f_d: Polynomial, points: Sequence[ProjectivePoint] = None,
                    order: int = DEFAULT_JET_ORDER) -> list:
    """Singular points of C(f_d) with rational coordinates (unclassified reports)."""
    if f_d.is_zero or not f_d.is_homogeneous():
        raise ValueError("f_d must be a nonzero homogeneous polynomial")
    check_reduced(f_d)
    if points is not None:
        found = set()
        for pt in points:
            if not is_singular_point(f_d, pt):
                raise ValueError(f"supplied point {pt} is not singular on C(f_d)")
            found.add(pt)
    else:
        found = _solve_singular_locus(f_d)
    return [SingularPointReport(pt, local_equation(f_d, pt, order)) for pt in sorted(found)]


def _solve_singular_locus(f_d: Polynomial) -> set:
    z1, z2, z3 = zs = sympy.symbols("z1 z2 z3")
    parts = [to_sympy(f_d.diff(i), zs) for i in range(3)]
    found = set()
    # affine chart z1 = 1
    A, B, C = (sympy.Poly(q.subs(z1, 1), z2, z3) for q in parts)
    res = []
    for p, q in ((A, B), (A, C), (B, C)):
        if p.is_zero or q.is_zero:
            continue
        r = sympy.resultant(p.as_expr(), q.as_expr(), z3)
        res.append(sympy.Poly(r, z2))
    elim = _gcd_all(res)
    if elim is None:
        gb = sympy.groebner([A.as_expr(), B.as_expr(), C.as_expr()], z3, z2, order="lex")
        uni = [g for g in gb.exprs if not g.has(z3)]
        elim = sympy.Poly(uni[0], z2) if uni else None
    if elim is not None and elim.degree() > 0:
        roots, others = _rational_roots(elim, z2)
        for fp in others:
            gb = sympy.groebner([A.as_expr(), B.as_expr(), C.as_expr(), fp.as_expr()], z3, z2, order="lex")
            if not (len(gb.exprs) == 1 and gb.exprs[0] == 1):
                raise NonRationalSingularLocus(
                    "singular locus has irrational points; supply them with --point",
                    factor=str(fp.as_expr()),
                )
        for r in roots:
            sub = [sympy.Poly(q.as_expr().subs(z2, sympy.Rational(r.numerator, r.denominator)), z3)
                   for q in (A, B, C)]
            h = _gcd_all(sub)
            if h is None:
                raise NonReducedTangentCone("a whole line is singular")
            ys, irr = _rational_roots(h, z3)
            if irr:
                raise NonRationalSingularLocus(
                    "singular locus has irrational points; supply them with --point",
                    factor=str(irr[0].as_expr()),
                )
            for y in ys:
                found.add(ProjectivePoint((1, r, y)))
    # line z1 = 0: points (0 : 1 : t) and (0 : 0 : 1)
    sub = [sympy.Poly(q.subs({z1: 0, z2: 1}), z3) for q in parts]
    h = _gcd_all(sub)
    if h is None:
        raise NonReducedTangentCone("a whole line is singular")
    ts, irr = _rational_roots(h, z3)
    if irr:
        raise NonRationalSingularLocus(
            "singular locus has irrational points; supply them with --point", factor=str(irr[0].as_expr())
        )
    for t in ts:
        found.add(ProjectivePoint((0, 1, t)))
    if all(q.subs({z1: 0, z2: 0, z3: 1}) == 0 for q in parts):
        found.add(ProjectivePoint((0, 0, 1)))
    return found


def classify_points(reports: Sequence[SingularPointReport], order: int = DEFAULT_JET_ORDER) -> list:
    return [r.classified(order) for r in reports]


def total_milnor(reports: Sequence[SingularPointReport]) -> int:
    total = 0
    for r in reports:
        if r.type is None or not r.type.is_ade:
            if r.type is not None and r.type.family == "NotADE":
                raise IndeterminateType(f"point {r.point} is not of ADE type; Milnor number not computed",
                                        point=str(r.point))
            raise IndeterminateType(f"type at {r.point} is undetermined", point=str(r.point))
        total += r.milnor
    return total
