"""Sampling checks of stability along one-parameter families, and mu* triples."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .certify import AnalyzeOptions, BlowAdeReport, TypeSignature, analyze, same_type
from .errors import BlowAdeError, DegenerateForMuStar, NonReducedTangentCone
from .newton import Nondegeneracy, is_nondegenerate, newton_number
from .poly import Polynomial, homogeneous_decompose, parse_polynomial, substitute

DEFAULT_SAMPLES = (Fraction(0), Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1))
FAMILY_VARS = ("z1", "z2", "z3", "s")
FLAGS = ("reduced", "mu_tot", "k0", "signature", "zeta", "mu_star")


@dataclass(frozen=True)
class DeformationFamily:
    generic_member: Polynomial  # in (z1, z2, z3, s)
    sample_points: tuple = DEFAULT_SAMPLES

    @classmethod
    def parse(cls, text: str, samples: Sequence = None) -> "DeformationFamily":
        p = parse_polynomial(text, FAMILY_VARS)
        pts = tuple(Fraction(s) for s in samples) if samples is not None else DEFAULT_SAMPLES
        return cls(p, pts)

    def at(self, s) -> Polynomial:
        return self.generic_member.partial_evaluate({3: Fraction(s)}).project((0, 1, 2))


@dataclass(frozen=True)
class MuStarTriple:
    mu3: int
    mu2: int
    mu1: int
    heuristic: bool = True
    trials_used: int = 0

    def as_tuple(self):
        return (self.mu3, self.mu2, self.mu1)

    def to_dict(self):
        return {"mu3": self.mu3, "mu2": self.mu2, "mu1": self.mu1,
                "mu2_method": "heuristic-generic", "trials_used": self.trials_used}


def _axis_convenient(p: Polynomial) -> bool:
    n = p.nvars
    return all(any(e[i] > 0 and sum(e) == e[i] for e in p) for i in range(n))


def _random_rational(rng):
    num = rng.choice([k for k in range(-9, 10) if k])
    return Fraction(num, rng.randint(1, 5))


def mu_star(f: Polynomial, trials: int = 8, seed: int = 0) -> MuStarTriple:
    """(mu of f, mu of a generic plane section, multiplicity - 1).

    The middle entry is the minimum, over random rational planes z_k = a z_i + b z_j
    (each k in turn), of the Newton number of the restriction; planes whose
    restriction is degenerate or not convenient are skipped.
    """
    d = homogeneous_decompose(f).order
    if not _axis_convenient(f):
        raise DegenerateForMuStar("f is not convenient; the Newton-number route is unavailable")
    nd = is_nondegenerate(f)
    if nd.status is not Nondegeneracy.NONDEGENERATE:
        raise DegenerateForMuStar(f"f is Newton {nd.status.value}", face=nd.face.to_dict() if nd.face else None)
    mu3 = newton_number(f).value
    rng = random.Random(seed)
    best, used = None, 0
    u, v = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    for _ in range(trials):
        a1, a2 = _random_rational(rng), _random_rational(rng)
        for k in range(3):
            change = [None] * 3
            i, j = (q for q in range(3) if q != k)
            change[i], change[j], change[k] = u, v, u.scale(a1) + v.scale(a2)
            g = substitute(f, change, f.degree + 1).poly
            if g.is_zero or not _axis_convenient(g):
                continue
            if is_nondegenerate(g).status is not Nondegeneracy.NONDEGENERATE:
                continue
            used += 1
            val = newton_number(g).value
            best = val if best is None else min(best, val)
    if best is None:
        raise DegenerateForMuStar("no sampled plane section was convenient and non-degenerate", trials=trials)
    return MuStarTriple(mu3, best, d - 1, True, used)


@dataclass(frozen=True)
class SampleResult:
    s: Fraction
    report: Optional[BlowAdeReport]
    reduced: bool
    mu_star: Optional[MuStarTriple]
    error: Optional[dict] = None
    mu_star_error: Optional[dict] = None

    def values(self):
        r = self.report
        sig = None
        if r is not None and r.is_blow_ade:
            sig = TypeSignature.of(r)
        return {
            "reduced": self.reduced,
            "mu_tot": r.mu_tot if r else None,
            "k0": r.k0 if r else None,
            "signature": sig,
            "zeta": r.global_zeta if r else None,
            "mu_star": self.mu_star.as_tuple() if self.mu_star else None,
        }

    def to_dict(self):
        return {
            "s": str(self.s),
            "reduced": self.reduced,
            "report": self.report.to_dict() if self.report else None,
            "mu_star": self.mu_star.to_dict() if self.mu_star else None,
            "error": self.error,
            "mu_star_error": self.mu_star_error,
        }


@dataclass(frozen=True)
class StabilityVerdict:
    samples: tuple
    constant_flags: dict
    first_violation: Optional[tuple]
    same_type_all: Optional[bool]
    seed: int

    @property
    def consistent(self) -> bool:
        return self.first_violation is None

    def to_dict(self):
        return {
            "verdict": "consistent on samples" if self.consistent
            else f"violated at s={self.first_violation[0]} ({self.first_violation[1]})",
            "constant_flags": self.constant_flags,
            "first_violation": (
                {"s": str(self.first_violation[0]), "flag": self.first_violation[1]}
                if self.first_violation else None
            ),
            "same_type_all": self.same_type_all,
            "seed": self.seed,
            "samples": [s.to_dict() for s in self.samples],
        }


def _run_sample(fam, s, options, trials, seed) -> SampleResult:
    f = fam.at(s)
    report, error, reduced = None, None, True
    try:
        report = analyze(f, options)
    except NonReducedTangentCone as e:
        reduced, error = False, e.to_dict()
    except BlowAdeError as e:
        error = e.to_dict()
    ms, ms_err = None, None
    try:
        ms = mu_star(f, trials, seed)
    except BlowAdeError as e:
        ms_err = e.to_dict()
    return SampleResult(Fraction(s), report, reduced, ms, error, ms_err)


def check_family(fam: DeformationFamily, options: AnalyzeOptions = None,
                 trials: int = 8, seed: int = 0) -> StabilityVerdict:
    options = options or AnalyzeOptions()
    pts = sorted(set(fam.sample_points))
    results = [_run_sample(fam, s, options, trials, seed) for s in pts]
    base = next((r for r in results if r.s == 0), results[0])
    bv = base.values()
    flags = {k: True for k in FLAGS}
    first = None
    for r in results:
        v = r.values()
        for k in FLAGS:
            if k == "mu_star" and (v[k] is None or bv[k] is None):
                continue
            if v[k] != bv[k]:
                flags[k] = False
                if first is None:
                    first = (r.s, k)
    if any(r.mu_star is None for r in results):
        flags["mu_star"] = "skipped"
    same = None
    certified = [r.report for r in results if r.report is not None and r.report.is_blow_ade]
    if len(certified) == len(results):
        same = all(same_type(a, b)[0] for a in certified for b in certified)
    elif certified:
        same = False
    return StabilityVerdict(tuple(results), flags, first, same, seed)
