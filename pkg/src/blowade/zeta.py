"""Monodromy zeta-functions kept in factored form prod (1 - t^d)^nu."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DegenerateGerm, FactorLevelError, IndeterminateNondegeneracy
from .newton import (
    Nondegeneracy,
    cone_volume_times_factorial,
    coordinate_subsets,
    is_nondegenerate,
    restricted_boundary,
)
from .poly import Series, poly_of


class ZetaFunction:
    """Finite product of cyclotomic-type factors as a sorted ``{d: nu}`` map."""

    __slots__ = ("_factors",)

    def __init__(self, factors: Mapping[int, int] = None):
        clean = {}
        for d, nu in (factors or {}).items():
            d, nu = int(d), int(nu)
            if d <= 0:
                raise ValueError("exponents d must be positive")
            if nu:
                clean[d] = clean.get(d, 0) + nu
        self._factors = dict(sorted((d, nu) for d, nu in clean.items() if nu))

    @property
    def factors(self):
        return dict(self._factors)

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        merged = Counter(self._factors)
        merged.update(other._factors)
        return ZetaFunction(merged)

    def __pow__(self, k: int) -> "ZetaFunction":
        return ZetaFunction({d: nu * k for d, nu in self._factors.items()})

    def __eq__(self, other):
        return isinstance(other, ZetaFunction) and self._factors == other._factors

    def __hash__(self):
        return hash(tuple(self._factors.items()))

    def __len__(self):
        return len(self._factors)

    def __repr__(self):
        return f"ZetaFunction({self._factors})"

    def __str__(self):
        if not self._factors:
            return "1"
        return "".join(f"(1-t^{d})^{nu}" for d, nu in self._factors.items())

    @property
    def degree(self) -> int:
        return zeta_degree(self)

    def to_json(self):
        return [{"d": d, "nu": nu} for d, nu in self._factors.items()]

    @classmethod
    def from_json(cls, items: Iterable[Mapping]):
        return cls({item["d"]: item["nu"] for item in items})

    @classmethod
    def product(cls, zetas: Iterable["ZetaFunction"]) -> "ZetaFunction":
        out = cls()
        for z in zetas:
            out = out * z
        return out


@dataclass(frozen=True)
class ZetaFactor:
    level: int
    d: int
    nu: int

    def to_dict(self):
        return {"level": self.level, "d": self.d, "nu": self.nu}


def zeta_degree(z: ZetaFunction) -> int:
    return sum(d * nu for d, nu in z.factors.items())


def varchenko_zeta(f: Series, check: bool = True) -> ZetaFunction:
    """Face formula: every compact top face of every coordinate restriction
    contributes (1 - t^m)^((-1)^|I| |I|! Vol(cone)/m), m its level.

    Only compact faces contribute, so germs that are not convenient (for
    instance divisible by x1^d, or the E7 form) need no special treatment: a
    restriction without a compact top-dimensional face contributes 1.
    """
    p = poly_of(f)
    if check:
        nd = is_nondegenerate(p)
        if nd.status is Nondegeneracy.DEGENERATE:
            raise DegenerateGerm("germ is Newton degenerate", face=nd.face.to_dict())
        if nd.status is Nondegeneracy.INDETERMINATE:
            raise IndeterminateNondegeneracy("non-degeneracy undecided", face=nd.face.to_dict())
    factors = Counter()
    for subset in coordinate_subsets(p.nvars):
        if not subset:
            continue
        nb = restricted_boundary(p, subset)
        if nb is None:
            continue
        top = nb.top_faces
        sign = -1 if len(subset) % 2 else 1
        for face in top:
            vol = cone_volume_times_factorial(face)
            nu, rem = divmod(vol, face.level)
            if rem:
                raise ArithmeticError(f"non-integral face multiplicity {vol}/{face.level}")
            factors[face.level] += sign * nu
    return ZetaFunction(factors)


def global_zeta(d: int, mu_tot: int, locals_: Iterable[ZetaFunction]) -> ZetaFunction:
    """(1 - t^d)^(-d^2 + 3d - 3 + mu_tot) times the local zetas at the cone's singular points."""
    if d < 2:
        raise ValueError("order d must be at least 2")
    if mu_tot < 0:
        raise ValueError("total Milnor number must be non-negative")
    return ZetaFunction({d: -d * d + 3 * d - 3 + mu_tot}) * ZetaFunction.product(locals_)


def multiplicity_factor(z: ZetaFunction, level: int) -> ZetaFactor:
    """The factor carrying the ``level``-th smallest exponent."""
    keys = list(z.factors)
    if level < 1 or level > len(keys):
        raise FactorLevelError(f"zeta-function has {len(keys)} factors, level {level} requested", level=level)
    d = keys[level - 1]
    return ZetaFactor(level, d, z.factors[d])
