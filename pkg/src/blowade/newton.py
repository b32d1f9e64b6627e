"""Newton boundaries in at most three variables: compact faces, principal
parts, Newton numbers and the non-degeneracy test."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

import sympy

from .errors import UnboundedNewtonRegion
from .poly import Polynomial, Series, poly_of


@dataclass(frozen=True)
class Face:
    vertices: tuple  # sorted exponent vectors
    dimension: int
    normal: tuple  # primitive, strictly positive
    level: int
    points: tuple = ()  # every support point lying on the face

    def to_dict(self):
        return {
            "vertices": [list(v) for v in self.vertices],
            "dimension": self.dimension,
            "normal": list(self.normal),
            "level": self.level,
        }


@dataclass(frozen=True)
class NewtonBoundary:
    support: frozenset
    faces: tuple
    variable_count: int

    def faces_of_dimension(self, k):
        return [f for f in self.faces if f.dimension == k]

    @property
    def top_faces(self):
        return self.faces_of_dimension(self.variable_count - 1)

    def on_boundary(self, exp) -> bool:
        return any(_dot(f.normal, exp) == f.level for f in self.faces)



# ---------------------------------------------------------------------------
# integer helpers


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive(v):
    g = reduce(gcd, (abs(x) for x in v), 0)
    return tuple(x // g for x in v) if g else tuple(v)


def _rank(vectors, n):
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col] / rows[rank][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    a, b, c = rows
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _orthogonal(vectors, n):
    """Generalized cross product of n-1 vectors in Z^n."""
    if n == 1:
        return (1,)
    if n == 2:
        (a, b), = vectors
        return (-b, a)
    (a1, a2, a3), (b1, b2, b3) = vectors
    return (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)


def _minimal(support):
    """Drop points dominating another support point; they never lie on compact faces."""
    pts = sorted(set(support))
    keep = []
    for p in pts:
        if not any(q != p and all(qi <= pi for qi, pi in zip(q, p)) for q in pts):
            keep.append(p)
    return keep


def _facets(points, n):
    """Facets of conv(points) + R^n_+ as {normal: level}."""
    units = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    candidates = set()
    if n == 1:
        candidates.add((1,))
    else:
        vecs = [tuple(q - p for p, q in zip(a, b)) for a, b in combinations(points, 2)]
        pool = vecs + units
        for combo in combinations(pool, n - 1):
            w = _orthogonal(combo, n)
            if all(x <= 0 for x in w):
                w = tuple(-x for x in w)
            if any(x < 0 for x in w) or not any(w):
                continue
            candidates.add(_primitive(w))
    facets = {}
    for w in candidates:
        vals = [_dot(w, p) for p in points]
        level = min(vals)
        on = [p for p, v in zip(points, vals) if v == level]
        span = [tuple(a - b for a, b in zip(p, on[0])) for p in on[1:]]
        span += [units[i] for i in range(n) if w[i] == 0]
        if _rank(span, n) == n - 1:
            facets[w] = (level, frozenset(on))
    return facets


def _compact_faces(support, n) -> list:
    pts = _minimal(support)
    if not pts:
        return []
    facets = _facets(pts, n)
    fsets = list(facets.items())
    found = {s for _, (_, s) in fsets}
    frontier = list(found)
    while frontier:
        nxt = []
        for t in frontier:
            for _, (_, s) in fsets:
                u = t & s
                if u and u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    faces = []
    for t in found:
        containing = [w for w, (_, s) in fsets if t <= s]
        total = [sum(w[i] for w in containing) for i in range(n)]
        if not all(x > 0 for x in total):
            continue
        normal = _primitive(total)
        tl = sorted(t)
        dim = _rank([tuple(a - b for a, b in zip(p, tl[0])) for p in tl[1:]], n)
        faces.append((t, normal, dim))
    vertices = {next(iter(t)) for t, _, dim in faces if dim == 0}
    out = []
    for t, normal, dim in faces:
        verts = tuple(sorted(p for p in t if p in vertices))
        out.append(Face(verts, dim, normal, _dot(normal, verts[0]), tuple(sorted(t))))
    out.sort(key=lambda f: (-f.dimension, f.vertices))
    return out


def newton_boundary(f: Series) -> NewtonBoundary:
    """Compact faces of the Newton polyhedron of ``f``."""
    p = poly_of(f)
    if p.is_zero:
        raise ValueError("Newton boundary of the zero polynomial is undefined")
    support = frozenset(p.terms)
    faces = _compact_faces(support, p.nvars)
    # attach every support point (not only minimal ones) lying on each face
    full = []
    for face in faces:
        pts = tuple(sorted(e for e in support if _dot(face.normal, e) == face.level))
        full.append(Face(face.vertices, face.dimension, face.normal, face.level, pts))
    return NewtonBoundary(support, tuple(full), p.nvars)


def newton_principal_part(f: Series) -> Polynomial:
    p = poly_of(f)
    nb = newton_boundary(p)
    on = set()
    for face in nb.faces:
        on.update(face.points)
    return p.filter(lambda e: e in on)


def face_polynomial(f: Series, face: Face) -> Polynomial:
    p = poly_of(f)
    return p.filter(lambda e: _dot(face.normal, e) == face.level)


def lies_above(boundary: NewtonBoundary, exp) -> bool:
    """``exp`` is in the Newton polyhedron of the boundary and not on a compact face."""
    facets = _facets(_minimal(boundary.support), boundary.variable_count)
    for w, (level, _) in facets.items():
        if _dot(w, exp) < level:
            return False
    return not boundary.on_boundary(exp)


# ---------------------------------------------------------------------------
# volumes and Newton numbers


def _polygon_order(vertices, normal):
    """Cyclic order of a planar convex polygon in R^3 (exact monotone chain)."""
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]
    pts = sorted(set(vertices), key=lambda v: (v[keep[0]], v[keep[1]]))

    def cross(o, a, b):
        return (a[keep[0]] - o[keep[0]]) * (b[keep[1]] - o[keep[1]]) - (a[keep[1]] - o[keep[1]]) * (
            b[keep[0]] - o[keep[0]]
        )

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def cone_volume_times_factorial(face: Face, strategy: str = "lex") -> int:
    """k! * Vol_k(cone over the face with apex 0), for a (k-1)-face in R^k."""
    k = len(face.normal)
    if face.dimension != k - 1:
        raise ValueError("face is not top-dimensional")
    if k == 1:
        return abs(face.vertices[0][0])
    if k == 2:
        a, b = face.vertices
        return abs(_det([a, b]))
    ring = _polygon_order(face.vertices, face.normal)
    if strategy == "lex":
        start = ring.index(min(ring))
    elif strategy == "centroid":
        n = len(ring)
        cx = [Fraction(sum(v[i] for v in ring), n) for i in range(3)]
        start = min(range(n), key=lambda j: (sum((ring[j][i] - cx[i]) ** 2 for i in range(3)), ring[j]))
    else:
        raise ValueError(f"unknown triangulation strategy {strategy!r}")
    ring = ring[start:] + ring[:start]
    apex = ring[0]
    return sum(abs(_det([apex, ring[i], ring[i + 1]])) for i in range(1, len(ring) - 1))


def coordinate_subsets(n):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def restricted_boundary(p: Polynomial, subset) -> Optional[NewtonBoundary]:
    restricted = p.project(subset)
    if restricted.is_zero:
        return None
    return newton_boundary(restricted)


@dataclass(frozen=True)
class NewtonNumber:
    value: int
    volume_terms: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "value": self.value,
            "volume_terms": {",".join(str(i + 1) for i in k) or "empty": v for k, v in self.volume_terms.items()},
        }


def newton_number(f: Series, strategy: str = "lex") -> NewtonNumber:
    """Alternating sum of factorial-scaled volumes of the cones under the
    Newton boundaries of all coordinate restrictions."""
    p = poly_of(f)
    n = p.nvars
    terms = {}
    for subset in coordinate_subsets(n):
        if not subset:
            terms[subset] = 1
            continue
        nb = restricted_boundary(p, subset)
        if nb is None:
            terms[subset] = 0
            continue
        top = nb.top_faces
        if not top:
            raise UnboundedNewtonRegion(
                f"restriction to coordinates {[i + 1 for i in subset]} has no compact top-dimensional face",
                coordinates=[i + 1 for i in subset],
            )
        terms[subset] = sum(cone_volume_times_factorial(face, strategy) for face in top)
    value = sum((-1) ** (n - len(s)) * v for s, v in terms.items())
    return NewtonNumber(value, terms)


# ---------------------------------------------------------------------------
# non-degeneracy


class Nondegeneracy(str, enum.Enum):
    NONDEGENERATE = "nondegenerate"
    DEGENERATE = "degenerate"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class NondegeneracyResult:
    status: Nondegeneracy
    face: Optional[Face] = None
    method: str = ""

    def __bool__(self):
        return self.status is Nondegeneracy.NONDEGENERATE

    def to_dict(self):
        return {
            "status": self.status.value,
            "face": self.face.to_dict() if self.face else None,
            "method": self.method,
        }


def _lattice_basis(vectors):
    """Z-basis (rows) of the lattice generated by integer vectors."""
    rows = [list(v) for v in vectors if any(v)]
    basis = []
    if not rows:
        return basis
    n = len(rows[0])
    col = 0
    while rows and col < n:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        # Euclid on column col
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    new.append(r2)
                elif any(r2):
                    rows.append(r2)
            nz = new
            rows = [r for r in rows if not r[col]] + nz
        piv = nz[0]
        basis.append(tuple(piv))
        rows = [r for r in rows if not r[col] and any(r)]
        col += 1
    return basis


def _coords_in_basis(vec, basis):
    """Integer coordinates of vec in the given lattice basis (exact elimination)."""
    k, n = len(basis), len(vec)
    # augmented rows: one equation per ambient coordinate
    rows = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(vec[i])] for i in range(n)]
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, n) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][col] for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][col]:
                rows[i] = [a - rows[i][col] * b for a, b in zip(rows[i], rows[r])]
        r += 1
    if r < k or any(row[k] for row in rows[r:]):
        raise ArithmeticError("vector not in the span of the basis")
    coords = [rows[j][k] for j in range(k)]
    if any(c.denominator != 1 for c in coords):
        raise ArithmeticError("vector not in lattice")
    return [int(c) for c in coords]


def _face_exponents(face: Face):
    """Face points in lattice coordinates of the face, shifted to be non-negative."""
    pts = face.points
    p0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts]
    basis = _lattice_basis(diffs[1:])
    k = len(basis)
    coords = {p: (_coords_in_basis(d, basis) if k else []) for p, d in zip(pts, diffs)}
    mins = [min(coords[p][j] for p in pts) for j in range(k)]
    return k, {p: tuple(c - m for c, m in zip(coords[p], mins)) for p in pts}


def _face_laurent(poly: Polynomial, face: Face):
    """Reduce the face polynomial to a polynomial in dim(face) torus variables."""
    k, exps = _face_exponents(face)
    t = sympy.symbols(f"t1:{k + 1}") if k else ()
    expr = 0
    for p, e in exps.items():
        c = poly.coefficient(p)
        mono = sympy.Integer(1)
        for j in range(k):
            mono *= t[j] ** e[j]
        expr += sympy.Rational(c.numerator, c.denominator) * mono
    return sympy.expand(expr), list(t)


def _dense_gcd(a, b):
    """Monic gcd of two dense Fraction coefficient lists (lowest degree first)."""
    def trim(p):
        while p and not p[-1]:
            p = p[:-1]
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = a[:]
        while len(r) >= len(b):
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= q * c
            r = trim(r)
        a, b = b, r
    return [c / a[-1] for c in a] if a else a


def _univariate_has_multiple_torus_root(coeffs):
    """True iff the polynomial sum coeffs[i] t^i has a repeated root t != 0."""
    while coeffs and not coeffs[0]:
        coeffs = coeffs[1:]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    g = _dense_gcd(coeffs, deriv)
    while len(g) > 1 and not g[0]:
        g = g[1:]
    return len(g) > 1


def _strip_zero_root(g, var):
    g = sympy.Poly(g, var)
    while g.degree() > 0 and g.eval(0) == 0:
        g = sympy.Poly(sympy.quo(g.as_expr(), var), var)
    return g


def _groebner_has_torus_zero(polys, t):
    u = sympy.Symbol("u_aux")
    prod = 1
    for v in t:
        prod *= v
    gb = sympy.groebner(list(polys) + [1 - u * prod], u, *t, order="lex", domain="QQ")
    return not (len(gb.exprs) == 1 and gb.exprs[0] == 1)


def _torus_critical_2d(G, t, allow_groebner):
    t1, t2 = t
    G1, G2 = sympy.diff(G, t1), sympy.diff(G, t2)
    polys = [G, G1, G2]
    R1 = sympy.resultant(G, G1, t2)
    R2 = sympy.resultant(G, G2, t2)
    if R1 != 0 and R2 != 0:
        g = _strip_zero_root(sympy.gcd(R1, R2), t1)
        if g.degree() <= 0:
            return False, "resultant"
        unresolved = False
        for factor, _ in sympy.factor_list(g.as_expr(), t1)[1]:
            fp = sympy.Poly(factor, t1)
            if fp.degree() == 1:
                r = -fp.nth(0) / fp.nth(1)
                sub = [sympy.Poly(q.subs(t1, r), t2) for q in polys]
                h = reduce(sympy.gcd, sub)
                if h.is_zero:
                    return True, "resultant"
                if _strip_zero_root(h.as_expr(), t2).degree() > 0:
                    return True, "resultant"
            else:
                unresolved = True
        if not unresolved:
            return False, "resultant"
    if not allow_groebner:
        return None, "resultant"
    return _groebner_has_torus_zero(polys, t), "groebner"


def is_nondegenerate(f: Series, allow_groebner: bool = True) -> NondegeneracyResult:
    """Newton non-degeneracy over all compact faces; degenerate results carry the face."""
    p = poly_of(f)
    nb = newton_boundary(p)
    indeterminate = None
    methods = set()
    for face in sorted(nb.faces, key=lambda fc: (fc.dimension, fc.vertices)):
        if face.dimension == 0:
            continue
        if face.dimension == 1:
            _, exps = _face_exponents(face)
            dense = [Fraction(0)] * (max(e[0] for e in exps.values()) + 1)
            for pt, e in exps.items():
                dense[e[0]] = p.coefficient(pt)
            bad = _univariate_has_multiple_torus_root(dense)
            methods.add("gcd")
            if bad:
                return NondegeneracyResult(Nondegeneracy.DEGENERATE, face, "+".join(sorted(methods)))
            continue
        G, t = _face_laurent(p, face)
        if len(t) == 2:
            bad, how = _torus_critical_2d(G, t, allow_groebner)
            methods.add(how)
        else:
            raise ValueError("faces of dimension > 2 are not supported")
        if bad is None:
            indeterminate = indeterminate or face
        elif bad:
            return NondegeneracyResult(Nondegeneracy.DEGENERATE, face, "+".join(sorted(methods)))
    if indeterminate is not None:
        return NondegeneracyResult(Nondegeneracy.INDETERMINATE, indeterminate, "+".join(sorted(methods)))
    return NondegeneracyResult(Nondegeneracy.NONDEGENERATE, None, "+".join(sorted(methods)))
