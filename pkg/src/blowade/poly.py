"""Exact sparse polynomials over Q in a handful of variables, truncated series,
the text grammar, homogeneous decomposition and coordinate substitution."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    ExponentOverflow,
    InsufficientPrecision,
    NonzeroConstantTerm,
    ParseError,
    ZeroPolynomial,
)

EXPONENT_LIMIT = 1 << 16
DEFAULT_TRUNCATION = 64

Z_VARS = ("z1", "z2", "z3")
X_VARS = ("x1", "x2", "x3")


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(c)


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial: ``{exponent tuple: Fraction}``."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Mapping = None, nvars: int = 3):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if any(e >= EXPONENT_LIMIT for e in exp):
                raise ExponentOverflow(f"exponent {max(exp)} exceeds 2^16 - 1", exponent=max(exp))
            c = _frac(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, nvars: int) -> "Polynomial":
        # trusted constructor: terms already clean
        p = object.__new__(cls)
        p._terms = terms
        p.nvars = nvars
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars=3):
        return cls._raw({}, nvars)

    @classmethod
    def constant(cls, c, nvars=3):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, i, nvars=3):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw({tuple(exp): Fraction(1)}, nvars)

    @classmethod
    def monomial(cls, exp, c=1):
        return cls({tuple(exp): c}, len(exp))

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> Mapping:
        return self._terms

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def support(self):
        return frozenset(self._terms)

    def coefficient(self, exp) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    @property
    def order(self) -> int:
        """Lowest total degree present; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return min(sum(e) for e in self._terms)

    def degree_in(self, i) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other: "Polynomial", below: int = None) -> "Polynomial":
        """Product, optionally dropping every term of total degree >= ``below``."""
        other = self._coerce(other)
        out = {}
        if below is None:
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    e = _add_exp(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
        else:
            b = sorted(((sum(e), e, c) for e, c in other._terms.items()), key=lambda t: t[0])
            for e1, c1 in self._terms.items():
                d1 = sum(e1)
                if d1 >= below:
                    continue
                for d2, e2, c2 in b:
                    if d1 + d2 >= below:
                        break
                    e = _add_exp(e1, e2)
                    out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw({e: v * c for e, v in self._terms.items()}, self.nvars)

    def __truediv__(self, c):
        return self.scale(1 / _frac(c))

    def __pow__(self, k: int):
        return self.power(k)

    def power(self, k: int, below: int = None) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, below)
            k >>= 1
            if k:
                base = base.mul(base, below)
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    # -- structural operations --------------------------------------------
    def truncate(self, below: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) < below}, self.nvars)

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) == k}, self.nvars)

    def filter(self, pred) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if pred(e)}, self.nvars)

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = c * e[i]
        return Polynomial._raw(out, self.nvars)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        pt = [_frac(p) for p in point]
        for e, c in self._terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x**k
            total += v
        return total

    def partial_evaluate(self, assignment: Mapping[int, object]) -> "Polynomial":
        """Substitute constants for some variables, keeping the variable count."""
        out = {}
        for e, c in self._terms.items():
            ne = list(e)
            v = c
            for i, x in assignment.items():
                if ne[i]:
                    v *= _frac(x) ** ne[i]
                    ne[i] = 0
            if v:
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + v
        return Polynomial._raw({e: c for e, c in out.items() if c}, self.nvars)

    def divide_by_monomial(self, exp) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            ne = tuple(a - b for a, b in zip(e, exp))
            if any(x < 0 for x in ne):
                raise ValueError(f"not divisible by monomial {exp}")
            out[ne] = c
        return Polynomial._raw(out, self.nvars)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """New variable j is old variable perm[j]."""
        return Polynomial._raw({tuple(e[p] for p in perm): c for e, c in self._terms.items()}, self.nvars)

    def embed(self, positions: Sequence[int], nvars: int) -> "Polynomial":
        """Map old variable i to new variable ``positions[i]``."""
        out = {}
        for e, c in self._terms.items():
            ne = [0] * nvars
            for i, k in enumerate(e):
                ne[positions[i]] += k
            out[tuple(ne)] = c
        return Polynomial._raw(out, nvars)

    def project(self, keep: Sequence[int]) -> "Polynomial":
        """Restrict to the coordinate subspace spanned by ``keep`` (others set to 0)."""
        drop = [i for i in range(self.nvars) if i not in keep]
        out = {}
        for e, c in self._terms.items():
            if all(e[i] == 0 for i in drop):
                out[tuple(e[i] for i in keep)] = c
        return Polynomial._raw(out, len(keep))

    def sorted_terms(self):
        return sorted(self._terms.items())

    # -- printing ---------------------------------------------------------
    def to_string(self, names: Sequence[str] = None) -> str:
        names = names or default_names(self.nvars)
        if not self._terms:
            return "0"
        parts = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def default_names(nvars: int):
    if nvars == 3:
        return Z_VARS
    return tuple(f"v{i + 1}" for i in range(nvars))


# ---------------------------------------------------------------------------
# Truncated series


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known modulo terms of total degree >= ``order``."""

    poly: Polynomial
    order: int = DEFAULT_TRUNCATION

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("truncation order must be positive")
        if self.poly.degree >= self.order:
            object.__setattr__(self, "poly", self.poly.truncate(self.order))

    @property
    def nvars(self):
        return self.poly.nvars

    def _other(self, other):
        if isinstance(other, TruncatedSeries):
            return other.poly, min(self.order, other.order)
        if isinstance(other, Polynomial):
            return other, self.order
        return Polynomial.constant(other, self.nvars), self.order

    def __add__(self, other):
        p, n = self._other(other)
        return TruncatedSeries((self.poly + p).truncate(n), n)

    __radd__ = __add__

    def __sub__(self, other):
        p, n = self._other(other)
        return TruncatedSeries((self.poly - p).truncate(n), n)

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.order)

    def __mul__(self, other):
        p, n = self._other(other)
        return TruncatedSeries(self.poly.mul(p, n), n)

    __rmul__ = __mul__

    def scale(self, c):
        return TruncatedSeries(self.poly.scale(c), self.order)

    def power(self, k):
        return TruncatedSeries(self.poly.power(k, self.order), self.order)

    def diff(self, i):
        # derivative is known one degree lower
        return TruncatedSeries(self.poly.diff(i), max(self.order - 1, 1))

    def is_zero(self):
        return self.poly.is_zero

    def __str__(self):
        return f"{self.poly} + O({self.order})"


Series = Union[Polynomial, TruncatedSeries]


def as_series(f: Series, order: int = DEFAULT_TRUNCATION) -> TruncatedSeries:
    if isinstance(f, TruncatedSeries):
        return f if f.order <= order else TruncatedSeries(f.poly, order)
    return TruncatedSeries(f, order)


def poly_of(f: Series) -> Polynomial:
    return f.poly if isinstance(f, TruncatedSeries) else f


def order_of(f: Series):
    """Truncation order, ``None`` for exact polynomials."""
    return f.order if isinstance(f, TruncatedSeries) else None


def series_inverse(u: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a unit series."""
    c0 = u.poly.constant_term()
    if not c0:
        raise ZeroDivisionError("series is not a unit")
    one = Polynomial.constant(1, u.nvars)
    rest = (u.poly.scale(1 / c0) - one)  # order >= 1
    result = one
    term = one
    for _ in range(u.order):
        term = term.mul(-rest, u.order)
        if term.is_zero:
            break
        result = result + term
    return TruncatedSeries(result.scale(1 / c0), u.order)


def series_sqrt(u: TruncatedSeries) -> TruncatedSeries:
    """Square root of a series with constant term 1 (binomial series)."""
    if u.poly.constant_term() != 1:
        raise ValueError("sqrt needs constant term 1")
    one = Polynomial.constant(1, u.nvars)
    rest = u.poly - one
    result = one
    term = one
    coeff = Fraction(1)
    k = 0
    while True:
        term = term.mul(rest, u.order)
        if term.is_zero:
            break
        coeff = coeff * (Fraction(1, 2) - k) / (k + 1)
        k += 1
        result = result + term.scale(coeff)
    return TruncatedSeries(result, u.order)


# ---------------------------------------------------------------------------
# Parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[stripped]!r}", stripped)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, names, aliases):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        for alias, target in aliases.items():
            self.index.setdefault(alias, self.index[target])
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])

    def parse(self):
        tok = self.peek()
        if tok[0] == "end":
            raise ParseError("empty expression", tok[2])
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return result

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        result = self.term().scale(sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                t = self.term()
                result = result + t if tok[1] == "+" else result - t
            else:
                return result

    def term(self):
        result = None
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            c = Fraction(tok[1])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    raise ParseError("expected denominator", den[2])
                if den[1] == 0:
                    raise ParseError("zero denominator", den[2])
                c /= den[1]
            result = Polynomial.constant(c, self.nvars)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                if result is None:
                    raise ParseError("unexpected '*'", tok[2])
                self.take()
                nxt = self.peek()
                if not (nxt[0] == "name" or (nxt[0] == "op" and nxt[1] == "(")):
                    raise ParseError("expected a factor after '*'", nxt[2])
                continue
            if tok[0] == "name" or (tok[0] == "op" and tok[1] == "("):
                f = self.factor()
                result = f if result is None else result * f
                continue
            break
        if result is None:
            raise ParseError("expected a term", tok[2])
        return result

    def factor(self):
        tok = self.take()
        if tok[0] == "name":
            if tok[1] not in self.index:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
            base = Polynomial.variable(self.index[tok[1]], self.nvars)
        else:
            base = self.expr()
            self.expect_op(")")
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] == "^":
            self.take()
            k = self.take()
            if k[0] != "int":
                raise ParseError("expected natural exponent", k[2])
            if k[1] >= EXPONENT_LIMIT:
                raise ExponentOverflow(f"exponent {k[1]} exceeds 2^16 - 1", exponent=k[1], position=k[2])
            if tok[0] == "name":
                exp = [0] * self.nvars
                exp[self.index[tok[1]]] = k[1]
                return Polynomial.monomial(exp)
            return base.power(k[1])
        return base


def parse_polynomial(text: str, names: Sequence[str] = Z_VARS, aliases: Mapping[str, str] = None) -> Polynomial:
    """Parse polynomial text.

    >>> parse_polynomial("z2^2 - 1/4*z1^2").to_string()
    '-1/4*z1^2 + z2^2'
    """
    if aliases is None:
        aliases = {}
        if tuple(names) == Z_VARS:
            aliases = dict(zip(X_VARS, Z_VARS))
        elif tuple(names[:3]) == Z_VARS:
            aliases = dict(zip(X_VARS, Z_VARS))
    return _Parser(text, tuple(names), aliases).parse()


# ---------------------------------------------------------------------------
# Homogeneous decomposition


@dataclass(frozen=True)
class HomogeneousDecomposition:
    order: int
    parts: dict

    def part(self, k: int) -> Polynomial:
        return self.parts.get(k, Polynomial.zero(self.leading.nvars))

    @property
    def leading(self) -> Polynomial:
        return self.parts[self.order]

    def reconstruct(self) -> Polynomial:
        total = Polynomial.zero(self.leading.nvars)
        for p in self.parts.values():
            total = total + p
        return total


def homogeneous_decompose(f: Polynomial) -> HomogeneousDecomposition:
    if f.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    if f.constant_term():
        raise NonzeroConstantTerm("f(0) must vanish", constant=f.constant_term())
    parts = {}
    for e, c in f.items():
        parts.setdefault(sum(e), {})[e] = c
    parts = {k: Polynomial._raw(v, f.nvars) for k, v in sorted(parts.items())}
    return HomogeneousDecomposition(min(parts), parts)


def is_convenient(f: Polynomial) -> bool:
    """Every axis carries a pure power of the homogeneous degree."""
    if f.is_zero:
        return False
    d = f.degree
    for i in range(f.nvars):
        exp = [0] * f.nvars
        exp[i] = d
        if not f.coefficient(exp):
            return False
    return True


# ---------------------------------------------------------------------------
# Substitution


def substitute(f: Series, change: Sequence[Series], order: int = None) -> TruncatedSeries:
    """Compose ``f`` with ``change`` (one series per variable of ``f``).

    The effective truncation order is the minimum of the operands' orders and
    the requested one; asking for more precision than the inputs carry raises
    InsufficientPrecision.  Exact inputs stay exact up to the requested order.
    """
    if len(change) != f.nvars:
        raise ValueError("change must supply one series per variable")
    target = poly_of(change[0]).nvars
    available = [o for o in [order_of(f)] + [order_of(s) for s in change] if o is not None]
    limit = min(available) if available else None
    if order is None:
        order = limit if limit is not None else DEFAULT_TRUNCATION
    elif limit is not None and order > limit:
        raise InsufficientPrecision(
            f"requested order {order} exceeds available precision {limit}", requested=order, available=limit
        )
    if order_of(f) is not None and any(poly_of(s).constant_term() for s in change):
        raise InsufficientPrecision("cannot translate a truncated series; supply an exact polynomial")
    polys = [poly_of(s) for s in change]
    cache = [dict() for _ in polys]

    def pw(i, k):
        if k not in cache[i]:
            if k == 0:
                cache[i][0] = Polynomial.constant(1, target)
            elif k == 1:
                cache[i][1] = polys[i].truncate(order)
            else:
                half = pw(i, k // 2)
                val = half.mul(half, order)
                if k % 2:
                    val = val.mul(pw(i, 1), order)
                cache[i][k] = val
        return cache[i][k]

    acc = {}
    for e, c in poly_of(f).items():
        term = Polynomial.constant(c, target)
        for i, k in enumerate(e):
            if k:
                term = term.mul(pw(i, k), order)
                if term.is_zero:
                    break
        for te, tc in term.items():
            acc[te] = acc.get(te, 0) + tc
    return TruncatedSeries(Polynomial._raw({e: c for e, c in acc.items() if c}, target), order)


def translate(f: Polynomial, shift: Sequence) -> Polynomial:
    """Exact f(x + shift)."""
    n = f.nvars
    change = [Polynomial.variable(i, n) + Polynomial.constant(shift[i], n) for i in range(n)]
    out = Polynomial.zero(n)
    cache = {}
    for e, c in f.items():
        term = Polynomial.constant(c, n)
        for i, k in enumerate(e):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = change[i].power(k)
                term = term * cache[key]
        out = out + term
    return out


def linear_change(f: Series, matrix: Sequence[Sequence], order: int = None) -> TruncatedSeries:
    """Substitute x_i <- sum_j matrix[i][j] * x_j."""
    n = f.nvars
    rows = [
        Polynomial({tuple(1 if k == j else 0 for k in range(n)): matrix[i][j] for j in range(n)}, n)
        for i in range(n)
    ]
    return substitute(f, rows, order)


def identity_change(nvars: int):
    return [Polynomial.variable(i, nvars) for i in range(nvars)]


def variables(nvars: int = 3):
    return tuple(Polynomial.variable(i, nvars) for i in range(nvars))


def from_coefficients(items: Iterable, nvars: int = 3) -> Polynomial:
    return Polynomial(dict(items), nvars)


def critical_section(g: Series, var: int, order: int = None) -> TruncatedSeries:
    """Solve d g / d x_var = 0 for x_var as a series in the other variables.

    Needs a nonzero x_var^2 coefficient; the solution has no x_var dependence.
    Newton iteration, doubling the working precision each round.
    """
    s = as_series(g, order or order_of(g) or DEFAULT_TRUNCATION)
    n = s.nvars
    sq = [0] * n
    sq[var] = 2
    if not s.poly.coefficient(sq):
        raise ValueError(f"no square term in variable {var + 1}")
    d = s.poly.diff(var)
    dd = d.diff(var)
    prec = s.order - 1
    phi = Polynomial.zero(n)
    change = list(identity_change(n))
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        change[var] = phi
        G = substitute(TruncatedSeries(d.truncate(k), k), change, k)
        Gu = substitute(TruncatedSeries(dd.truncate(k), k), change, k)
        phi = (phi - (G * series_inverse(Gu)).poly).truncate(k)
    return TruncatedSeries(phi, prec)


def shift_variable(g: Series, var: int, by: Series, order: int = None) -> TruncatedSeries:
    """Substitute x_var <- x_var + by."""
    n = poly_of(g).nvars
    change = list(identity_change(n))
    change[var] = change[var] + poly_of(by)
    if isinstance(by, TruncatedSeries):
        change[var] = TruncatedSeries(change[var], by.order)
    return substitute(g, change, order)


def to_sympy(p: Polynomial, symbols):
    import sympy

    expr = sympy.Integer(0)
    for e, c in p.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, e):
            term *= s**k
        expr += term
    return expr


def from_sympy(expr, symbols) -> Polynomial:
    import sympy

    poly = sympy.Poly(sympy.expand(expr), *symbols)
    terms = {}
    for monom, c in poly.terms():
        c = sympy.Rational(c)
        terms[tuple(monom)] = Fraction(int(c.p), int(c.q))
    return Polynomial(terms, len(symbols))
