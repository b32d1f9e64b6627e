"""End-to-end blow-ADE certification, subtypes, Lê-Yomdin test and type comparison."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .blowup import PrincipalPartData, extract_principal_part, germ_at
from .curves import (
    DEFAULT_JET_ORDER,
    ProjectivePoint,
    SingularPointReport,
    classify_points,
    singular_points,
)
from .errors import (
    BlowAdeError,
    BlowOrderExceeded,
    NonIsolatedSingularity,
    NotSingular,
    UncertifiedReport,
)
from .poly import DEFAULT_TRUNCATION, Polynomial, homogeneous_decompose
from .zeta import ZetaFunction, global_zeta, varchenko_zeta


@dataclass(frozen=True)
class AnalyzeOptions:
    truncation: int = DEFAULT_TRUNCATION
    max_blow_order: Optional[int] = None
    points: Optional[tuple] = None
    jet_order: int = DEFAULT_JET_ORDER

    def to_dict(self):
        return {
            "truncation": self.truncation,
            "max_blow_order": self.max_blow_order,
            "points": [str(p) for p in self.points] if self.points is not None else None,
            "jet_order": self.jet_order,
        }


@dataclass(frozen=True)
class PointResult:
    report: SingularPointReport
    principal: Optional[PrincipalPartData] = None
    local_zeta: Optional[ZetaFunction] = None
    failure: Optional[dict] = None

    def to_dict(self):
        out = self.report.to_dict()
        out["m"] = self.principal.m if self.principal else None
        out["c"] = str(self.principal.c) if self.principal else None
        out["principal_part"] = self.principal.to_dict() if self.principal else None
        out["local_zeta"] = self.local_zeta.to_json() if self.local_zeta is not None else None
        if self.failure:
            out["failure"] = self.failure
        return out


@dataclass(frozen=True)
class TypeSignature:
    types: tuple  # sorted (family, index) pairs
    m: int

    @classmethod
    def of(cls, report: "BlowAdeReport") -> "TypeSignature":
        if not report.is_blow_ade:
            raise UncertifiedReport("type signature needs a certified report")
        types = sorted((p.report.type.family, p.report.type.index) for p in report.points)
        return cls(tuple(types), report.m)

    def to_dict(self):
        return {"types": [{"family": f, "index": i} for f, i in self.types], "m": self.m}


@dataclass(frozen=True)
class Subtype:
    pure_blow_A1: bool = False
    blow_A: bool = False
    even_blow_A: bool = False
    general_ADE: bool = False

    def to_dict(self):
        return {k: getattr(self, k) for k in ("pure_blow_A1", "blow_A", "even_blow_A", "general_ADE")}


@dataclass(frozen=True)
class BlowAdeReport:
    d: int
    is_blow_ade: bool
    m: Optional[int]
    points: tuple
    subtype: Subtype
    le_yomdin: Optional[bool]
    global_zeta: Optional[ZetaFunction]
    mu_tot: Optional[int]
    k0: int
    failures: tuple = ()

    @property
    def signature(self) -> TypeSignature:
        return TypeSignature.of(self)

    def to_dict(self):
        return {
            "d": self.d,
            "is_blow_ade": self.is_blow_ade,
            "m": self.m,
            "k0": self.k0,
            "mu_tot": self.mu_tot,
            "subtype": self.subtype.to_dict(),
            "le_yomdin": self.le_yomdin,
            "zeta": self.global_zeta.to_json() if self.global_zeta is not None else None,
            "zeta_string": str(self.global_zeta) if self.global_zeta is not None else None,
            "points": [p.to_dict() for p in self.points],
            "failures": list(self.failures),
        }


def subtype_of(types: Sequence) -> Subtype:
    if not types:
        return Subtype()
    a = all(t.family == "A" for t in types)
    return Subtype(
        pure_blow_A1=all(t.family == "A" and t.index == 1 for t in types),
        blow_A=a,
        even_blow_A=a and all(t.index >= 2 and t.index % 2 == 0 for t in types),
        general_ADE=all(t.is_ade for t in types),
    )


def _failure(point, kind, message, proven, **extra):
    out = {"point": str(point), "kind": kind, "message": message, "proven": proven}
    out.update(extra)
    return out


def _analyze_point(f, d, rep: SingularPointReport, options: AnalyzeOptions) -> PointResult:
    t = rep.type
    if not t.is_ade:
        return PointResult(rep, failure=_failure(
            rep.point, "not_ade", f"singular point of type {t} is not a simple singularity", t.family == "NotADE"))
    germ, change = germ_at(f, rep.point, options.truncation)
    max_order = options.max_blow_order
    try:
        pp = extract_principal_part(germ, t, rep.classification, d, max_order, change)
    except BlowOrderExceeded as e:
        if e.details.get("likely_non_isolated") and e.details.get("proven"):
            raise NonIsolatedSingularity(
                f"the strict transform is singular along the line x2=x3=0 over {rep.point}; "
                "f does not have an isolated singularity",
                point=str(rep.point),
            ) from e
        return PointResult(rep, failure=_failure(rep.point, e.kind, str(e), False, **e.details))
    except BlowAdeError as e:
        details = dict(e.details)
        proven = bool(details.pop("proven", False))
        return PointResult(rep, failure=_failure(rep.point, e.kind, str(e), proven, **details))
    try:
        z = varchenko_zeta(pp.local_germ(d))
    except BlowAdeError as e:
        return PointResult(rep, pp, failure=_failure(rep.point, e.kind, str(e), False, **e.details))
    return PointResult(rep, pp, z)


def analyze(f: Polynomial, options: AnalyzeOptions = None) -> BlowAdeReport:
    """Certify (constructively) that f has a blow-ADE singularity and assemble its data."""
    options = options or AnalyzeOptions()
    dec = homogeneous_decompose(f)
    d = dec.order
    if d < 2:
        raise NotSingular("f has a nonzero linear part; the origin is a smooth point")
    f_d = dec.leading
    reps = classify_points(singular_points(f_d, options.points, options.jet_order), options.jet_order)
    results = tuple(_analyze_point(f, d, r, options) for r in reps)
    failures = [r.failure for r in results if r.failure]
    types = [r.report.type for r in results]
    k0 = len(results)
    mu_tot = sum(t.milnor for t in types) if all(t.is_ade for t in types) else None
    ms = sorted({r.principal.m for r in results if r.principal is not None})
    if not failures and len(ms) > 1:
        failures.append({"kind": "unequal_blow_orders", "message": f"points have blow-orders {ms}",
                         "proven": False, "orders": ms})
    if k0 == 0:
        failures.append({"kind": "no_singular_points", "message": "the tangent cone is a smooth curve",
                         "proven": True})
    certified = not failures
    m = ms[0] if certified else None
    zeta = None
    if mu_tot is not None and all(r.local_zeta is not None for r in results):
        zeta = global_zeta(d, mu_tot, [r.local_zeta for r in results])
    le = is_le_yomdin(f, m, [r.report.point for r in results]) if certified else None
    return BlowAdeReport(
        d=d, is_blow_ade=certified, m=m, points=results,
        subtype=subtype_of(types) if certified else Subtype(),
        le_yomdin=le, global_zeta=zeta, mu_tot=mu_tot, k0=k0, failures=tuple(failures),
    )


def is_le_yomdin(f: Polynomial, m: int, points: Sequence[ProjectivePoint] = None) -> bool:
    """f = f_d + f_{d+m} + higher with f_{d+m} nonzero at every singular point of C(f_d)."""
    dec = homogeneous_decompose(f)
    d = dec.order
    if m is None or m < 1:
        return False
    if any(not dec.part(k).is_zero for k in range(d + 1, d + m)):
        return False
    top = dec.part(d + m)
    if top.is_zero:
        return False
    if points is None:
        points = [r.point for r in singular_points(dec.leading)]
    return all(top.evaluate(p.coords) != 0 for p in points)


def same_type(r: BlowAdeReport, r2: BlowAdeReport):
    """(verdict, matching): matching pairs point indices of r with points of r2 of equal type."""
    s1, s2 = TypeSignature.of(r), TypeSignature.of(r2)
    if r.k0 != r2.k0 or s1 != s2:
        return False, []
    pool = {}
    for j, p in enumerate(r2.points):
        pool.setdefault((p.report.type.family, p.report.type.index), []).append(j)
    matching = []
    for i, p in enumerate(r.points):
        matching.append((i, pool[(p.report.type.family, p.report.type.index)].pop(0)))
    return True, matching
