"""Point blow-up in affine charts and the search for blow-ADE principal parts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .curves import ADEClassification, ADEType, ProjectivePoint, chart_variables
from .errors import BlowOrderExceeded, InsufficientPrecision, NotBlowADEShape, TruncationExhausted
from .newton import newton_principal_part
from .poly import (
    DEFAULT_TRUNCATION,
    Polynomial,
    Series,
    TruncatedSeries,
    as_series,
    critical_section,
    identity_change,
    poly_of,
    shift_variable,
    substitute,
    translate,
)

X_NAMES = ("x1", "x2", "x3")
Y_NAMES = ("y1", "y2", "y3")


@dataclass(frozen=True)
class Chart:
    index: int

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError("chart index must be 1, 2 or 3")

    @property
    def substitution(self) -> tuple:
        """z_1, z_2, z_3 as monomials in y: z_index = y1, the others y1*y2, y1*y3 in order."""
        out = [None] * 3
        out[self.index - 1] = Polynomial.variable(0)
        for slot, j in zip((1, 2), chart_variables(self.index)):
            out[j] = Polynomial.monomial(tuple(1 if k in (0, slot) else 0 for k in range(3)))
        return tuple(out)

    def describe(self) -> str:
        names = ("z1", "z2", "z3")
        return ", ".join(f"{names[i]}={s.to_string(Y_NAMES)}" for i, s in enumerate(self.substitution))

    def to_dict(self):
        return {"index": self.index, "substitution": self.describe()}


@dataclass(frozen=True)
class Pullback:
    chart: Chart
    order: int
    total: Polynomial  # pi^* f
    strict: Polynomial  # pi^* f / y1^d
    truncation: int = DEFAULT_TRUNCATION

    @property
    def series(self) -> TruncatedSeries:
        return TruncatedSeries(self.total, self.truncation)

    @property
    def strict_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.strict, self.truncation)


def pullback(f: Polynomial, chart: Chart, truncation: int = DEFAULT_TRUNCATION) -> Pullback:
    """Exact pull-back of f along the chart, together with the strict transform."""
    if f.is_zero:
        raise ValueError("f must be nonzero")
    if f.constant_term():
        raise ValueError("f must vanish at the origin")
    d = f.order
    i = chart.index - 1
    j, k = chart_variables(chart.index)
    total, strict = {}, {}
    for e, c in f.items():
        total[(sum(e), e[j], e[k])] = c
        strict[(sum(e) - d, e[j], e[k])] = c
    return Pullback(chart, d, Polynomial(total), Polynomial(strict), truncation)


@dataclass(frozen=True)
class AdmissibleChange:
    """Chart, translation of P to the origin, then substitutions fixing x1.

    Each stage gives the previous coordinates as series in the new ones.
    ``unit`` records a final rescaling x2_new = x2 * sqrt(unit) when a square
    was completed (the germ is then reported with x2^2 replaced by x2_new^2).
    """

    chart: Chart
    shift: tuple
    stages: tuple = ()
    unit: Optional[TruncatedSeries] = None
    rational: bool = True

    def jacobian(self):
        """(x2, x3)-Jacobian at the origin of the composite change."""
        m = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        for stage in self.stages:
            lin = [[poly_of(stage[r]).coefficient(tuple(1 if q == c else 0 for q in range(3)))
                    for c in (1, 2)] for r in (1, 2)]
            m = [[sum(m[r][t] * lin[t][c] for t in range(2)) for c in range(2)] for r in range(2)]
        return m

    def is_admissible(self) -> bool:
        first = all(poly_of(s[0]) == Polynomial.variable(0) for s in self.stages)
        j = self.jacobian()
        return first and (j[0][0] * j[1][1] - j[0][1] * j[1][0]) != 0

    def to_dict(self):
        return {
            "chart": self.chart.to_dict(),
            "shift": [str(c) for c in self.shift],
            "stages": [[poly_of(c).to_string(X_NAMES) for c in stage] for stage in self.stages],
            "square_completed": self.unit is not None,
            "rational": self.rational,
        }


@dataclass(frozen=True)
class PrincipalPartData:
    h: Polynomial  # in (x2, x3)
    c: Fraction
    m: int
    change: AdmissibleChange
    residual: Polynomial  # in (x1, x2, x3)
    rounds: int = 0

    @property
    def principal_part(self) -> Polynomial:
        return self.h.embed((1, 2), 3) + Polynomial.monomial((self.m, 0, 0), self.c)

    def local_germ(self, d: int) -> Polynomial:
        """x1^d (h + c x1^m), whose Newton boundary gives the local zeta."""
        return self.principal_part * Polynomial.monomial((d, 0, 0))

    def to_dict(self):
        return {
            "h": self.h.to_string(("x2", "x3")),
            "c": str(self.c),
            "m": self.m,
            "change": self.change.to_dict(),
            "rounds": self.rounds,
        }


def germ_at(f: Polynomial, point: ProjectivePoint, truncation: int = DEFAULT_TRUNCATION):
    """Strict transform in the chart of ``point``, translated so that P is the origin."""
    chart = Chart(point.chart)
    pb = pullback(f, chart, truncation)
    shift = (Fraction(0),) + tuple(point.affine)
    germ = TruncatedSeries(translate(pb.strict, shift), truncation)
    return germ, AdmissibleChange(chart, tuple(point.affine))


def _quadratic_matrix(q: Polynomial):
    """Symmetric M with q(x2, x3) = [x2 x3] M [x2 x3]^T, reading q from 3-variable exponents."""
    a = q.coefficient((0, 2, 0))
    b = q.coefficient((0, 1, 1))
    c = q.coefficient((0, 0, 2))
    return [[a, b / 2], [b / 2, c]]


def _x1_levels(p: Polynomial):
    """Pure x1 terms and terms x1^j * (linear in x2, x3), keyed by j."""
    pure, lin = {}, {}
    for e, c in p.items():
        if e[1] == e[2] == 0:
            pure[e[0]] = c
        elif e[1] + e[2] == 1:
            lin.setdefault(e[0], [Fraction(0), Fraction(0)])[0 if e[1] else 1] = c
    return pure, lin


def _check_precision(order, m, index):
    if order <= max(m, index + 1):
        raise InsufficientPrecision(
            f"truncation {order} is too low to certify a principal part with m={m}; raise --truncation",
            truncation=order,
        )


def normalize_node(germ: Series, d: int = 0, max_order: int = None,
                   change: AdmissibleChange = None) -> PrincipalPartData:
    """Bring x1-linear terms of a node germ into the pure x1 power by shifts of (x2, x3)."""
    g = as_series(germ)
    if max_order is None:
        max_order = g.order - d
    q = g.poly.filter(lambda e: e[0] == 0 and e[1] + e[2] == 2)
    M = _quadratic_matrix(q)
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if not det:
        raise ValueError("normalize_node needs a rank-2 quadratic part in (x2, x3)")
    inv = [[M[1][1] / det, -M[0][1] / det], [-M[1][0] / det, M[0][0] / det]]
    change = change or AdmissibleChange(Chart(1), (Fraction(0), Fraction(0)))
    stages = list(change.stages)
    rounds = 0
    while True:
        pure, lin = _x1_levels(g.poly)
        jp = min(pure) if pure else None
        j0 = min(lin) if lin else None
        if jp is not None and (j0 is None or jp < 2 * j0):
            if jp > max_order:
                break
            m, c = jp, pure[jp]
            _check_precision(g.order, m, 1)
            h = q.project((1, 2))
            pp = h.embed((1, 2), 3) + Polynomial.monomial((m, 0, 0), c)
            if newton_principal_part(g.poly) != pp:
                raise NotBlowADEShape("node germ has extra boundary terms", terms=str(newton_principal_part(g.poly) - pp))
            return PrincipalPartData(
                h, c, m,
                AdmissibleChange(change.chart, change.shift, tuple(stages), change.unit, change.rational),
                g.poly - pp, rounds,
            )
        if j0 is None:
            raise BlowOrderExceeded(
                "no pure power of x1 and no x1-linear terms up to the truncation; "
                "the singular locus likely contains the line x2=x3=0",
                likely_non_isolated=True, truncation=g.order,
                proven=rounds == 0 and g.poly.degree < g.order,
            )
        if j0 > max_order or 2 * j0 >= g.order:
            break
        a, b = lin[j0]
        w2 = -(inv[0][0] * a + inv[0][1] * b) / 2
        w3 = -(inv[1][0] * a + inv[1][1] * b) / 2
        x1j = Polynomial.monomial((j0, 0, 0))
        stage = (
            Polynomial.variable(0),
            Polynomial.variable(1) + x1j.scale(w2),
            Polynomial.variable(2) + x1j.scale(w3),
        )
        stages.append(stage)
        g = substitute(g, list(stage), g.order)
        rounds += 1
    raise BlowOrderExceeded(
        f"no pure x1 power found up to order {max_order}; raise --max-blow-order or --truncation",
        likely_non_isolated=False, max_order=max_order, truncation=g.order,
    )


@dataclass(frozen=True)
class SplitResult:
    germ: TruncatedSeries  # lambda x2'^2 + psi(x1, x3)
    shift: TruncatedSeries  # phi(x1, x3): x2 = x2'' + phi
    unit: TruncatedSeries  # x2'' = x2' / sqrt(unit)


def split_quadratic(germ: Series, var: int = 1) -> TruncatedSeries:
    return split_quadratic_data(germ, var).germ


def split_quadratic_data(germ: Series, var: int = 1) -> SplitResult:
    """Remove every term divisible by x2 except the square, keeping x1 and x3."""
    g = as_series(germ)
    phi = critical_section(g, var)
    shifted = shift_variable(g, var, phi)
    sq = [0] * g.nvars
    sq[var] = 2
    lam = shifted.poly.coefficient(tuple(sq))
    psi = shifted.poly.filter(lambda e: e[var] == 0)
    rest = shifted.poly - psi
    if any(e[var] == 1 for e in rest):
        raise TruncationExhausted("square completion did not stabilize within the truncation", truncation=g.order)
    unit = rest.divide_by_monomial(tuple(sq)).scale(1 / lam)
    out = psi + Polynomial.monomial(tuple(sq), lam)
    return SplitResult(TruncatedSeries(out, shifted.order), phi, TruncatedSeries(unit, shifted.order - 2))


def _lift(c):
    return poly_of(c).embed((1, 2), 3)


def _boundary_terms(p: Polynomial):
    return [{"exponent": list(e), "coefficient": str(c)} for e, c in p.sorted_terms()]


def extract_principal_part(germ: Series, type: ADEType, classification: ADEClassification = None,
                           d: int = 0, max_order: int = None,
                           change: AdmissibleChange = None) -> PrincipalPartData:
    """Search for coordinates in which the Newton principal part is h(x2, x3) + c x1^m."""
    g = as_series(germ)
    if max_order is None:
        max_order = g.order - d
    change = change or AdmissibleChange(Chart(1), (Fraction(0), Fraction(0)))
    if not type.is_ade:
        raise NotBlowADEShape(f"point type {type} is not ADE", proven=True)
    if type.family == "A" and type.index == 1:
        return normalize_node(g, d, max_order, change)
    stages = list(change.stages)
    rational = change.rational
    unit = None
    if classification is not None:
        for stage in classification.stages:
            lifted = (Polynomial.variable(0), _lift(stage[0]), _lift(stage[1]))
            stages.append(lifted)
            g = substitute(g, list(lifted), g.order)
        rational = rational and classification.change_rational
    if type.family == "A":
        split = split_quadratic_data(g, 1)
        stages.append((Polynomial.variable(0), Polynomial.variable(1) + poly_of(split.shift), Polynomial.variable(2)))
        unit = split.unit
        g = split.germ
    p = g.poly
    pure = sorted(e[0] for e in p if e[1] == e[2] == 0)
    slice0 = newton_principal_part(p.filter(lambda e: e[0] == 0))
    npp = newton_principal_part(p)
    if not pure:
        if all(e[0] == 0 for e in p):
            raise BlowOrderExceeded(
                "germ does not depend on x1 up to the truncation; the singular locus likely contains a line",
                likely_non_isolated=True, truncation=g.order,
                proven=len(stages) == len(change.stages) and p.degree < g.order,
            )
        raise NotBlowADEShape(
            "no pure power of x1 on the Newton boundary",
            terms=_boundary_terms(npp.filter(lambda e: e[0] > 0)), proven=False,
        )
    m = pure[0]
    c = p.coefficient((m, 0, 0))
    if m > max_order:
        raise BlowOrderExceeded(f"lowest pure x1 power {m} exceeds {max_order}", likely_non_isolated=False)
    _check_precision(g.order, m, type.index)
    pp = slice0 + Polynomial.monomial((m, 0, 0), c)
    if npp != pp:
        extra = (npp - pp).filter(lambda e: True)
        raise NotBlowADEShape(
            "Newton principal part is not of the form h(x2,x3) + c*x1^m",
            terms=_boundary_terms(extra), m=m, proven=False,
        )
    h = slice0.project((1, 2))
    return PrincipalPartData(
        h, c, m, AdmissibleChange(change.chart, change.shift, tuple(stages), unit, rational), p - pp, 0
    )
