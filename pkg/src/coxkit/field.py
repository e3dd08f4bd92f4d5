"""Exact arithmetic in Q(theta) with theta = 2*cos(pi/N).

Every entry -cos(pi/m) of the bilinear form of a Coxeter system whose
finite labels m all divide N lives in this field, as do all root
coordinates and matrix entries downstream. Elements are stored as
canonical residue polynomials in theta, so two elements are equal exactly
when their coefficient vectors are equal. Signs of nonzero elements are
decided by interval evaluation over a shrinking rational enclosure of
theta. No floating point enters any computation.

The minimal polynomial of theta is obtained by factoring the relation
D_N(x) + 2 over the integers, where D_N is the degree-N polynomial with
D_N(2*cos t) = 2*cos(N*t): taking the squarefree part and sieving out,
for every proper divisor d of N, the factor belonging to 2*cos(pi/d)
leaves exactly the factor vanishing at 2*cos(pi/N). The enclosure is
initialised by a Sturm-chain bisection that isolates the largest real
root, which is theta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import FieldMismatchError, InvariantViolation

__all__ = ["Field", "FieldElement", "create"]

_FrPoly = list[Fraction]


# ------------------------------------------------------------------ integers

def _totient(n: int) -> int:
    count, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            count -= count // p
        p += 1
    if m > 1:
        count -= count // m
    return count


def _dickson(n: int) -> list[int]:
    """D_n as integer coefficients, low degree first; D_n(2cos t) = 2cos(nt)."""
    prev, cur = [2], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        shifted = [0] + cur
        padded = prev + [0] * (len(shifted) - len(prev))
        prev, cur = cur, [a - b for a, b in zip(shifted, padded)]
    return cur


# ------------------------------------------------- rational polynomial helpers

def _trim(p: _FrPoly) -> _FrPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: _FrPoly, b: _FrPoly) -> tuple[_FrPoly, _FrPoly]:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    q: _FrPoly = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and any(a):
        _trim(a)
        if len(a) - 1 < db:
            break
        c = a[-1] / lead
        q[len(a) - 1 - db] = c
        for i in range(db + 1):
            a[len(a) - 1 - db + i] -= c * b[i]
        a.pop()
    return q, _trim(a)


def _poly_gcd(a: _FrPoly, b: _FrPoly) -> _FrPoly:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return [c / a[-1] for c in a] if a else a


def _poly_deriv(a: Sequence[Fraction]) -> _FrPoly:
    return [i * c for i, c in enumerate(a)][1:]


def _poly_eval(a: Sequence, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _to_int_poly(a: Sequence[Fraction]) -> tuple[int, ...]:
    out = []
    for c in a:
        if c.denominator != 1:
            raise InvariantViolation("expected integer polynomial, got %r" % (a,))
        out.append(c.numerator)
    return tuple(out)


# ----------------------------------------------------------------- Sturm chain

def _sturm_chain(p: _FrPoly) -> list[_FrPoly]:
    chain = [list(p), _poly_deriv(p)]
    while chain[-1]:
        rem = _poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return chain


def _variations(chain: list[_FrPoly], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _poly_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _roots_in(chain: list[_FrPoly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


# --------------------------------------------------------- minimal polynomial

@lru_cache(maxsize=None)
def _theta_min_poly(n: int) -> tuple[int, ...]:
    if n == 1:
        return (2, 1)
    if n == 2:
        return (0, 1)
    rel = _dickson(n)
    rel[0] += 2
    p = [Fraction(c) for c in rel]
    sf = _poly_divmod(p, _poly_gcd(p, _poly_deriv(p)))[0]
    sf = [c / sf[-1] for c in sf]
    for d in range(1, n):
        if n % d:
            continue
        cand = [Fraction(c) for c in _theta_min_poly(d)]
        q, r = _poly_divmod(sf, cand)
        if not r:
            sf = q
    result = _to_int_poly(sf)
    if len(result) - 1 != _totient(2 * n) // 2:
        raise InvariantViolation(f"minimal polynomial for N={n} has wrong degree")
    return result


# ------------------------------------------------------------------- the field

class Field:
    """The real field Q(theta), theta = 2*cos(pi/N), in a canonical basis.

    Instances are cheap views over N: the minimal polynomial, the integer
    reduction table for high powers of theta, and a mutable rational
    enclosure of theta used for sign decisions. Obtain shared instances
    through create(), which caches per N so enclosure refinements
    accumulate.
    """

    __slots__ = ("N", "minpoly", "degree", "_reduction", "_enc", "_zero", "_one", "_theta")

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise ValueError(f"N must be a positive integer, got {n!r}")
        self.N = n
        self.minpoly = _theta_min_poly(n)
        self.degree = len(self.minpoly) - 1
        d = self.degree
        # theta^(d+j) expressed over the power basis; integral because the
        # minimal polynomial is monic with integer coefficients.
        rows: list[tuple[int, ...]] = []
        base = tuple(-c for c in self.minpoly[:-1])
        rows.append(base)
        for _ in range(d - 2):
            prev = rows[-1]
            shifted = (0,) + prev[:-1]
            top = prev[-1]
            rows.append(tuple(s + top * b for s, b in zip(shifted, base)))
        self._reduction = tuple(rows)
        if d == 1:
            r = Fraction(-self.minpoly[0])
            self._enc = [r, r]
        else:
            self._enc = self._isolate_largest_root()
        self._zero = FieldElement(self, (0,) * d, 1)
        self._one = FieldElement(self, (1,) + (0,) * (d - 1), 1)
        self._theta = (
            self.from_rational(Fraction(-self.minpoly[0]))
            if d == 1
            else FieldElement(self, (0, 1) + (0,) * (d - 2), 1)
        )

    # -- construction ------------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def theta(self) -> FieldElement:
        """The generator 2*cos(pi/N)."""
        return self._theta

    def from_rational(self, q) -> FieldElement:
        q = Fraction(q)
        return FieldElement._make(self, [q.numerator] + [0] * (self.degree - 1), q.denominator)

    def from_int_coeffs(self, coeffs: Iterable[int]) -> FieldElement:
        """Element given by an integer polynomial in theta of any degree."""
        work = list(coeffs)
        d = self.degree
        base = self._reduction[0]
        while len(work) > d:
            top = work.pop()
            if top:
                off = len(work) - d
                for i, r in enumerate(base):
                    work[off + i] += top * r
        work += [0] * (d - len(work))
        return FieldElement._make(self, work, 1)

    def element(self, coeffs: Sequence) -> FieldElement:
        """Element from rational coefficients over the power basis."""
        fr = [Fraction(c) for c in coeffs]
        if len(fr) > self.degree:
            raise ValueError("coefficient vector longer than the field degree")
        fr += [Fraction(0)] * (self.degree - len(fr))
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return FieldElement._make(self, [c.numerator * (den // c.denominator) for c in fr], den)

    def two_cos(self, m: int) -> FieldElement:
        """The element 2*cos(pi/m), for any m dividing N."""
        if not isinstance(m, int) or m < 1 or self.N % m:
            raise ValueError(f"2*cos(pi/{m!r}) does not lie in Q(2*cos(pi/{self.N}))")
        return self.from_int_coeffs(_dickson(self.N // m))

    # -- enclosure ---------------------------------------------------------

    def enclosure(self) -> tuple[Fraction, Fraction]:
        return self._enc[0], self._enc[1]

    def refine_enclosure(self, width: Fraction | None = None) -> tuple[Fraction, Fraction]:
        """Shrink the enclosure of theta, below the given width if requested."""
        if self.degree == 1:
            return self.enclosure()
        if width is None:
            self._bisect_once()
        else:
            while self._enc[1] - self._enc[0] >= width:
                self._bisect_once()
        return self.enclosure()

    def _bisect_once(self) -> None:
        lo, hi = self._enc
        mid = (lo + hi) / 2
        v = _poly_eval(self.minpoly, mid)
        if v == 0:
            raise InvariantViolation("rational root of an irreducible minimal polynomial")
        if v > 0:
            self._enc[1] = mid
        else:
            self._enc[0] = mid

    def _isolate_largest_root(self) -> list[Fraction]:
        chain = _sturm_chain([Fraction(c) for c in self.minpoly])
        lo, hi = Fraction(-2), Fraction(2)
        while _roots_in(chain, lo, hi) > 1:
            mid = (lo + hi) / 2
            if _roots_in(chain, mid, hi) >= 1:
                lo = mid
            else:
                hi = mid
        # exactly one root above lo, so the minimal polynomial changes sign here
        if not _poly_eval(self.minpoly, lo) < 0 < _poly_eval(self.minpoly, hi):
            raise InvariantViolation("largest-root isolation lost its sign bracket")
        return [lo, hi]

    # -- misc ---------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Field(N={self.N}, degree={self.degree})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.N == self.N

    def __hash__(self) -> int:
        return hash(("Field", self.N))


@lru_cache(maxsize=None)
def create(n: int) -> Field:
    """Shared Field instance for Q(2*cos(pi/N))."""
    return Field(n)


# ------------------------------------------------------------------- elements

class FieldElement:
    """A canonical residue polynomial in theta.

    Stored as an integer coefficient vector with one positive common
    denominator, reduced so that the gcd of all numerators and the
    denominator is 1. That normal form makes == and hash structural.
    """

    __slots__ = ("field", "num", "den", "_sign")

    def __init__(self, field: Field, num: tuple[int, ...], den: int) -> None:
        self.field = field
        self.num = num
        self.den = den
        self._sign: int | None = None

    @classmethod
    def _make(cls, field: Field, num: Sequence[int], den: int) -> FieldElement:
        if den < 0:
            num, den = [-c for c in num], -den
        g = gcd(den, *num) if any(num) else den
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return cls(field, tuple(num), den)

    # -- views ---------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field.N != self.field.N:
                raise FieldMismatchError(
                    f"operands live in different fields (N={self.field.N} vs N={other.field.N})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return FieldElement._make(self.field, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, field = self.num, o.num, self.field
        d = field.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for j in range(d, 2 * d - 1):
            top = conv[j]
            if top:
                row = field._reduction[j - d]
                for i, r in enumerate(row):
                    out[i] += top * r
        return FieldElement._make(field, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(theta)")
        field = self.field
        if self.is_rational():
            q = 1 / self.as_rational()
            return field.from_rational(q)
        # extended Euclid against the minimal polynomial
        r0 = [Fraction(c) for c in field.minpoly]
        r1 = list(self.coeffs)
        t0: _FrPoly = []
        t1: _FrPoly = [Fraction(1)]
        while _trim(r1):
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            prod = _poly_mul_fr(q, t1)
            t0, t1 = t1, _poly_sub_fr(t0, prod)
        if len(r0) != 1:
            raise InvariantViolation("minimal polynomial is not irreducible")
        c = r0[0]
        inv = [t / c for t in t0]
        inv += [Fraction(0)] * (field.degree - len(inv))
        return field.element(inv[: field.degree])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return (
                self.field.N == other.field.N
                and self.den == other.den
                and self.num == other.num
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def sign(self) -> int:
        """Exact sign: -1, 0, or 1."""
        if self._sign is not None:
            return self._sign
        s = self._compute_sign()
        self._sign = s
        return s

    def _compute_sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.num[0] > 0 else -1
        field = self.field
        while True:
            lo, hi = field._enc
            vlo, vhi = _interval_eval(self.num, lo, hi)
            if vlo > 0:
                return 1
            if vhi < 0:
                return -1
            field._bisect_once()

    # -- formatting -----------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        return "[" + ",".join(str(Fraction(c, self.den)) for c in self.num) + "]"

    def __repr__(self) -> str:
        return f"<{self} in Q(2cos(pi/{self.field.N}))>"


def _poly_mul_fr(a: _FrPoly, b: _FrPoly) -> _FrPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub_fr(a: _FrPoly, b: _FrPoly) -> _FrPoly:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return _trim(a)


def _interval_eval(coeffs: Sequence[int], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Range of the integer polynomial over [lo, hi] by interval Horner."""
    alo = ahi = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        p1, p2, p3, p4 = alo * lo, alo * hi, ahi * lo, ahi * hi
        alo = min(p1, p2, p3, p4) + c
        ahi = max(p1, p2, p3, p4) + c
    return alo, ahi
