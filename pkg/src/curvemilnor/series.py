"""Exact scalars, truncated power series in one variable, and polynomials in
the curve generators.

Scalars are plain Python values: :class:`fractions.Fraction` over the
rationals and ``int`` residues in ``[0, p)`` over a prime field.  A
:class:`FieldSpec` carries the arithmetic, so series and polynomials only
store raw values next to the field they belong to.

A :class:`TruncatedSeries` is sparse and normalized (no stored zeros).  Its
``precision`` is ``None`` for an exact element (every coefficient that is not
listed is zero) or an integer ``T`` meaning that only coefficients below
``T`` are known.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ArityMismatch,
    DivideByExactZero,
    FieldMismatch,
    MalformedScalar,
    NotDivisible,
    ZeroDenominator,
)

INF = math.inf

_SCALAR_RE = re.compile(r"^\s*([+-]?)\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, order=True)
class FieldSpec:
    """The coefficient field: the rationals (``p is None``) or F_p, p odd prime."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise ValueError(f"prime field modulus must be prime, got {self.p!r}")
            if self.p == 2:
                raise ValueError("characteristic 2 is not supported")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def from_text(cls, text: str) -> "FieldSpec":
        """Parse ``rational`` / ``Q`` / ``prime:p``."""
        t = text.strip().lower()
        if t in ("rational", "rationals", "q"):
            return cls(None)
        if t.startswith("prime:"):
            try:
                return cls(int(t[6:]))
            except ValueError as exc:
                raise ValueError(f"unrecognised field {text!r}") from exc
        raise ValueError(f"unrecognised field {text!r}")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "rational" if self.p is None else f"prime:{self.p}"

    # raw value arithmetic
    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def coerce(self, value):
        """Map an int or Fraction into this field."""
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDenominator(f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def format(self, a) -> str:
        return str(a)


RATIONALS = FieldSpec(None)


def parse_scalar(text: str, field: FieldSpec):
    """Parse ``"a"``, ``"-a"`` or ``"a/b"`` into an exact element of *field*.

    >>> parse_scalar("-3/6", RATIONALS)
    Fraction(-1, 2)
    >>> parse_scalar("10", FieldSpec(7))
    3
    """
    if not isinstance(text, str):
        raise MalformedScalar(f"scalar must be a string, got {type(text).__name__}")
    m = _SCALAR_RE.match(text)
    if not m:
        raise MalformedScalar(f"cannot parse scalar {text!r}")
    sign, num, den = m.groups()
    n = int(num) * (-1 if sign == "-" else 1)
    d = int(den) if den is not None else 1
    if d == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    if field.p is None:
        return Fraction(n, d)
    if d % field.p == 0:
        raise ZeroDenominator(f"denominator of {text!r} vanishes mod {field.p}")
    return n * pow(d, -1, field.p) % field.p


@dataclass(frozen=True)
class Order:
    """Order of a series: finite ``value``, ``inf`` for exact zero, or a lower
    bound ``value`` with ``certain=False`` when the known part is all zero."""

    value: float
    certain: bool = True

    @property
    def is_finite(self) -> bool:
        return self.certain and self.value != INF

    @property
    def is_exact_zero(self) -> bool:
        return self.certain and self.value == INF

    @property
    def is_unknown(self) -> bool:
        return not self.certain

    def __str__(self) -> str:
        if not self.certain:
            return f">={self.value}"
        return "inf" if self.value == INF else str(int(self.value))


def _check_field(a, b):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


@dataclass(frozen=True)
class TruncatedSeries:
    """Sparse univariate power series with explicit precision."""

    field: FieldSpec
    terms: tuple  # ((exponent, value), ...) sorted by exponent, no zero values
    precision: int | None = None

    @classmethod
    def from_dict(cls, field: FieldSpec, coeffs: Mapping[int, object] | Iterable, precision=None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, object] = {}
        for e, v in items:
            if e < 0:
                raise ValueError("negative exponent")
            if precision is not None and e >= precision:
                continue
            v = field.coerce(v)
            acc[e] = field.add(acc[e], v) if e in acc else v
        terms = tuple(sorted((e, v) for e, v in acc.items() if v))
        return cls(field, terms, precision)

    @classmethod
    def zero(cls, field: FieldSpec, precision=None):
        return cls(field, (), precision)

    @classmethod
    def constant(cls, field: FieldSpec, value=1):
        return cls.from_dict(field, {0: value})

    @classmethod
    def monomial(cls, field: FieldSpec, exponent: int, value=1):
        return cls.from_dict(field, {exponent: value})

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def coeff(self, e: int):
        for k, v in self.terms:
            if k == e:
                return v
            if k > e:
                break
        if self.precision is not None and e >= self.precision:
            raise ValueError(f"coefficient t^{e} beyond precision {self.precision}")
        return self.field.zero()

    def as_dict(self) -> dict:
        return dict(self.terms)

    def order(self) -> Order:
        return series_order(self)

    def order_lower_bound(self) -> float:
        """Finite order, or the precision for an unknown series, or inf."""
        if self.terms:
            return self.terms[0][0]
        return INF if self.precision is None else self.precision

    def truncate(self, precision: int) -> "TruncatedSeries":
        if self.precision is not None and self.precision < precision:
            raise ValueError("cannot raise precision by truncating")
        return TruncatedSeries(self.field, tuple(t for t in self.terms if t[0] < precision), precision)

    def dense(self, length: int) -> list:
        """Coefficients of t^0..t^(length-1); requires that many known terms."""
        if self.precision is not None and self.precision < length:
            raise ValueError(f"series known to t^{self.precision}, need t^{length}")
        out = [self.field.zero()] * length
        for e, v in self.terms:
            if e >= length:
                break
            out[e] = v
        return out

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, -other)

    def __neg__(self):
        f = self.field
        return TruncatedSeries(f, tuple((e, f.neg(v)) for e, v in self.terms), self.precision)

    def __mul__(self, other):
        return series_mul(self, other)

    def scale(self, c) -> "TruncatedSeries":
        f = self.field
        c = f.coerce(c)
        if not c:
            return TruncatedSeries(f, (), self.precision)
        return TruncatedSeries(f, tuple((e, f.mul(v, c)) for e, v in self.terms), self.precision)

    def __str__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"{v}*t^{e}" if e else f"{v}" for e, v in self.terms)
        return body if self.precision is None else f"{body} + O(t^{self.precision})"


def series_order(s: TruncatedSeries) -> Order:
    """Finite(n), exact zero (``inf``) or unknown beyond the precision."""
    if s.terms:
        return Order(s.terms[0][0])
    if s.precision is None:
        return Order(INF)
    return Order(s.precision, certain=False)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_field(a, b)
    prec = _min_prec(a.precision, b.precision)
    f = a.field
    acc = dict(a.terms)
    for e, v in b.terms:
        acc[e] = f.add(acc[e], v) if e in acc else v
    return TruncatedSeries.from_dict(f, acc, prec)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_field(a, b)
    f = a.field
    if a.precision is None and b.precision is None:
        prec = None
    else:
        pa = INF if a.precision is None else a.precision + b.order_lower_bound()
        pb = INF if b.precision is None else b.precision + a.order_lower_bound()
        p = min(pa, pb)
        prec = None if p == INF else int(p)
    acc: dict[int, object] = {}
    for ea, va in a.terms:
        for eb, vb in b.terms:
            e = ea + eb
            if prec is not None and e >= prec:
                break
            pv = f.mul(va, vb)
            acc[e] = f.add(acc[e], pv) if e in acc else pv
    return TruncatedSeries.from_dict(f, acc, prec)


def _poly_divmod_exact(a: dict, u: list, f: FieldSpec):
    """Divide polynomial *a* by polynomial *u* (dense, u[0] != 0) from the low
    end; return the quotient if the division is exact, else None."""
    if not a:
        return {}
    rem = dict(a)
    deg_u = len(u) - 1
    inv0 = f.inv(u[0])
    q = {}
    top = max(rem)
    e = 0
    while rem and e <= top:
        c = rem.pop(e, None)
        if c:
            qc = f.mul(c, inv0)
            q[e] = qc
            for k in range(1, deg_u + 1):
                if u[k]:
                    key = e + k
                    val = f.sub(rem.get(key, f.zero()), f.mul(qc, u[k]))
                    if val:
                        rem[key] = val
                    else:
                        rem.pop(key, None)
                    if key > top and val:
                        return None
        e += 1
    return q if not rem else None


def series_divide(a: TruncatedSeries, b: TruncatedSeries, precision: int | None = None) -> TruncatedSeries:
    """Quotient ``q`` with ``q * b == a`` to the available precision.

    An inexact dividend is available up to its own precision; an exact one up
    to *precision* (default ``ord(a) + 16``).  When both operands are exact
    polynomials and the division terminates the quotient is exact.  Otherwise
    ``q`` is known below ``avail(a) - ord(b)``, further capped by
    ``prec(b) - ord(b)`` for an inexact divisor.
    """
    _check_field(a, b)
    f = a.field
    ob = b.order()
    if ob.is_exact_zero:
        raise DivideByExactZero("division by exact zero")
    if ob.is_unknown:
        raise NotDivisible(f"divisor order unknown beyond t^{ob.value}")
    k = int(ob.value)
    oa = a.order()
    if oa.is_finite and oa.value < k:
        raise NotDivisible(f"order {int(oa.value)} < divisor order {k}")
    if a.precision is None:
        if not a.terms:
            return TruncatedSeries(f, (), None)
        if b.precision is None:
            u = [f.zero()] * (b.terms[-1][0] - k + 1)
            for e, v in b.terms:
                u[e - k] = v
            q = _poly_divmod_exact({e - k: v for e, v in a.terms}, u, f)
            if q is not None:
                return TruncatedSeries.from_dict(f, q, None)
        avail = precision if precision is not None else int(oa.value) + 16
    else:
        avail = a.precision if precision is None else min(a.precision, precision)
    qprec = avail - k
    if b.precision is not None:
        qprec = min(qprec, b.precision - k)
    if qprec <= 0:
        return TruncatedSeries(f, (), 0)
    u = [f.zero()] * qprec
    for e, v in b.terms:
        if e - k < qprec:
            u[e - k] = v
    rem = [f.zero()] * qprec
    for e, v in a.terms:
        if e - k < qprec:
            rem[e - k] = v
    inv0 = f.inv(u[0])
    nz = [(j, u[j]) for j in range(1, qprec) if u[j]]
    q = {}
    for e in range(qprec):
        c = rem[e]
        if not c:
            continue
        qc = f.mul(c, inv0)
        q[e] = qc
        for j, uj in nz:
            if e + j >= qprec:
                break
            rem[e + j] = f.sub(rem[e + j], f.mul(qc, uj))
    return TruncatedSeries.from_dict(f, q, qprec)


class BranchElement:
    """An element of the normalization: one series per branch."""

    __slots__ = ("components", "_hash")

    def __init__(self, components: Sequence[TruncatedSeries]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a branch element needs at least one component")
        fld = comps[0].field
        for c in comps[1:]:
            if c.field != fld:
                raise FieldMismatch("branch components over different fields")
        self.components = comps
        self._hash = None

    @classmethod
    def constant(cls, field: FieldSpec, r: int, value=1):
        return cls([TruncatedSeries.constant(field, value)] * r)

    @property
    def field(self) -> FieldSpec:
        return self.components[0].field

    @property
    def r(self) -> int:
        return len(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        return isinstance(other, BranchElement) and self.components == other.components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.components)
        return self._hash

    def _zip(self, other):
        if not isinstance(other, BranchElement):
            return NotImplemented
        if self.r != other.r:
            raise ArityMismatch(f"branch counts {self.r} vs {other.r}")
        return zip(self.components, other.components)

    def __add__(self, other):
        return BranchElement([a + b for a, b in self._zip(other)])

    def __sub__(self, other):
        return BranchElement([a - b for a, b in self._zip(other)])

    def __mul__(self, other):
        return BranchElement([a * b for a, b in self._zip(other)])

    def __neg__(self):
        return BranchElement([-a for a in self.components])

    def scale(self, c):
        return BranchElement([a.scale(c) for a in self.components])

    def restrict(self, keep: Sequence[int]) -> "BranchElement":
        return BranchElement([self.components[i] for i in keep])

    def __repr__(self):
        return "BranchElement(" + ", ".join(str(c) for c in self.components) + ")"


def value_vector(e: BranchElement) -> tuple:
    """Per-branch orders; exact zero components give ``inf``, unknown ones keep
    ``certain=False`` instead of being read as ``inf``."""
    return tuple(series_order(c) for c in e.components)


@dataclass(frozen=True)
class PolyExpr:
    """Sparse polynomial in the generator symbols g_1..g_m."""

    field: FieldSpec
    nvars: int
    terms: tuple  # ((exponent tuple, value), ...) sorted, no zero values

    @classmethod
    def from_dict(cls, field: FieldSpec, nvars: int, coeffs: Mapping[tuple, object] | Iterable):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[tuple, object] = {}
        for exps, v in items:
            exps = tuple(int(x) for x in exps)
            if len(exps) != nvars or any(x < 0 for x in exps):
                raise ArityMismatch(f"exponent vector {exps} for {nvars} variables")
            v = field.coerce(v)
            acc[exps] = field.add(acc[exps], v) if exps in acc else v
        return cls(field, nvars, tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value=1):
        return cls.from_dict(field, nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int):
        exps = [0] * nvars
        exps[index] = 1
        return cls.from_dict(field, nvars, {tuple(exps): 1})

    @classmethod
    def linear(cls, field: FieldSpec, coefficients: Sequence[int]):
        n = len(coefficients)
        d = {}
        for i, c in enumerate(coefficients):
            if c:
                exps = [0] * n
                exps[i] = 1
                d[tuple(exps)] = c
        return cls.from_dict(field, n, d)

    def _same(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.nvars != other.nvars:
            raise ArityMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        self._same(other)
        return PolyExpr.from_dict(self.field, self.nvars, list(self.terms) + list(other.terms))

    def __neg__(self):
        f = self.field
        return PolyExpr(f, self.nvars, tuple((k, f.neg(v)) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same(other)
        f = self.field
        out = []
        for ka, va in self.terms:
            for kb, vb in other.terms:
                out.append((tuple(x + y for x, y in zip(ka, kb)), f.mul(va, vb)))
        return PolyExpr.from_dict(f, self.nvars, out)

    def __pow__(self, n: int):
        result = PolyExpr.constant(self.field, self.nvars)
        for _ in range(n):
            result = result * self
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self):
        for k, v in self.terms:
            if not any(k):
                return v
        return self.field.zero()

    def degree(self) -> int:
        return max((sum(k) for k, _ in self.terms), default=-1)

    def to_json(self) -> list:
        return [[list(k), str(v)] for k, v in self.terms]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms:
            mono = "*".join(f"g{i + 1}^{e}" if e > 1 else f"g{i + 1}" for i, e in enumerate(k) if e)
            parts.append(f"{v}*{mono}" if mono else f"{v}")
        return " + ".join(parts)


def poly_evaluate(p: PolyExpr, gens: Sequence[BranchElement]) -> BranchElement:
    """Substitute branch elements for the generator symbols of *p*."""
    if len(gens) != p.nvars:
        raise ArityMismatch(f"polynomial in {p.nvars} symbols, {len(gens)} generators given")
    if not gens:
        raise ArityMismatch("need at least one generator to fix the branch count")
    r = gens[0].r
    for g in gens:
        if g.r != r:
            raise ArityMismatch("generators with different branch counts")
        if g.field != p.field:
            raise FieldMismatch(f"{g.field} vs {p.field}")
    f = p.field
    powers: list[list[BranchElement]] = [[BranchElement.constant(f, r)] for _ in gens]

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * gens[i])
        return cache[e]

    total = BranchElement([TruncatedSeries.zero(f)] * r)
    for exps, coeff in p.terms:
        term = BranchElement.constant(f, r, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * power(i, e)
        total = total + term
    return total
