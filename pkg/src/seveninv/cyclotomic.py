"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is a vector of rational coordinates in the power
basis 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
polynomial Phi_N.  The vector is stored as integer numerators over a single
positive denominator with all common factors removed, so two equal field
elements always carry identical data and equality is tuple comparison.

Conventions:
  * zeta_N denotes exp(2*pi*i/N); the canonical embedding sends the basis
    vector at index k to exp(2*pi*i*k/N).
  * cos_pi(a, b) and sin_pi(a, b) return cos(pi*a/b) and sin(pi*a/b) as
    exact field elements, with the conductor normalized to the smallest
    even N that carries the angle.

Everything here is immutable; operations are pure functions, so values can
be shared freely across parallel parameter sweeps.  The per-conductor
caches (cyclotomic polynomials, reduction tables) are write-once.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class ConductorMismatchError(ValueError):
    """Combining elements of distinct cyclotomic fields is not supported."""


class NotRationalError(ValueError):
    """A field element with nonzero non-constant coordinates was forced
    into Q.  Carries the offending coefficient vector."""

    def __init__(self, message: str, coeffs: Iterable[Fraction]):
        super().__init__(message)
        self.coeffs = tuple(coeffs)


def rat_normalize(n: int, d: int) -> Fraction:
    """Canonical reduced fraction n/d with positive denominator."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (constant term first)."""
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r != 0:
            raise ArithmeticError("non-exact polynomial division")
        quot[k - dd] = q
        for j in range(dd + 1):
            num[k - dd + j] -= q * den[j]
    if any(num):
        raise ArithmeticError("non-exact polynomial division: nonzero remainder")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first; monic of degree phi(n).

    Computed by exact division of x^n - 1 by Phi_d over the proper
    divisors d of n.
    """
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    poly = [0] * (n + 1)
    poly[0], poly[n] = -1, 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _field_data(n: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """Degree d = phi(n) and reduction rows: rows[k] = x^(d+k) mod Phi_n.

    Rows cover exponents up to max(2d-2, n-1), enough to reduce both raw
    exponent vectors (degree < n) and products of reduced elements.
    """
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    top = max(2 * d - 2, n - 1)
    rows: list[tuple[int, ...]] = []
    row = [-c for c in phi[:d]]
    rows.append(tuple(row))
    base = rows[0]
    for _ in range(d + 1, top + 1):
        lead = row[d - 1]
        new = [0] * d
        new[1:] = row[: d - 1]
        if lead:
            for j in range(d):
                if base[j]:
                    new[j] += lead * base[j]
        rows.append(tuple(new))
        row = new
    return d, tuple(rows)


def reduce_modulo_phi(n: int, vec: Sequence[int]) -> list[int]:
    """Reduce an integer coefficient vector (exponents 0..len-1, already
    taken mod n) into the power basis of Q(zeta_N); stays integral."""
    d, rows = _field_data(n)
    out = list(vec[:d])
    if len(out) < d:
        out += [0] * (d - len(out))
    for k in range(d, len(vec)):
        c = vec[k]
        if c:
            row = rows[k - d]
            for j in range(d):
                if row[j]:
                    out[j] += c * row[j]
    return out


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = math.gcd(den, *num) if num else den
    if g > 1:
        den //= g
        num = [c // g for c in num]
    if not any(num):
        den = 1
        num = [0] * len(num)
    return tuple(num), den


class CyclotomicElement:
    """Exact element of Q(zeta_N) in the canonical power basis mod Phi_N."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: Sequence[int], den: int = 1):
        d, _ = _field_data(n)
        if len(num) != d:
            raise ValueError(f"need {d} = phi({n}) coordinates, got {len(num)}")
        self.n = n
        self.num, self.den = _normalize(list(num), den)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence[Scalar]) -> "CyclotomicElement":
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return cls(n, [int(f * den) for f in fr], den)

    @classmethod
    def from_exponents(cls, n: int, items: Mapping[int, Scalar]) -> "CyclotomicElement":
        """Element sum(c_e * zeta^e); exponents taken mod n, duplicates add."""
        acc: dict[int, Fraction] = {}
        for e, c in items.items():
            e %= n
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        den = math.lcm(*(f.denominator for f in acc.values())) if acc else 1
        raw = [0] * n
        for e, c in acc.items():
            raw[e] = int(c * den)
        return cls(n, reduce_modulo_phi(n, raw), den)

    @classmethod
    def zero(cls, n: int) -> "CyclotomicElement":
        d, _ = _field_data(n)
        return cls(n, [0] * d)

    @classmethod
    def one(cls, n: int) -> "CyclotomicElement":
        return cls.from_rational(n, 1)

    @classmethod
    def from_rational(cls, n: int, value: Scalar) -> "CyclotomicElement":
        f = Fraction(value)
        d, _ = _field_data(n)
        return cls(n, [f.numerator] + [0] * (d - 1), f.denominator)

    # -- inspection --------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self.n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        """Constant coordinate, provided all others vanish."""
        if not self.is_rational():
            raise NotRationalError("not rational", self.coeffs)
        return Fraction(self.num[0], self.den)

    def conjugate(self) -> "CyclotomicElement":
        """Complex conjugation, the field automorphism zeta -> zeta^(-1)."""
        items = {(-k) % self.n: Fraction(c, self.den) for k, c in enumerate(self.num)}
        return CyclotomicElement.from_exponents(self.n, items)

    def is_real(self) -> bool:
        return self == self.conjugate()

    def embed(self) -> complex:
        """Canonical embedding zeta_N -> exp(2*pi*i/N), as a complex float."""
        z = 0j
        for k, c in enumerate(self.num):
            if c:
                z += c * cmath.exp(2j * cmath.pi * k / self.n)
        return z / self.den

    def real_float(self) -> float:
        return self.embed().real

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicElement | None":
        if isinstance(other, CyclotomicElement):
            if other.n != self.n:
                raise ConductorMismatchError(
                    f"conductor mismatch: {self.n} vs {other.n}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement.from_rational(self.n, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db + b * da for a, b in zip(self.num, o.num)]
        return CyclotomicElement(self.n, num, da * db)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        num = [a * db - b * da for a, b in zip(self.num, o.num)]
        return CyclotomicElement(self.n, num, da * db)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CyclotomicElement(self.n, [-c for c in self.num], self.den)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicElement(
                self.n, [c * f.numerator for c in self.num], self.den * f.denominator
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = len(self.num)
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(o.num):
                    if b:
                        conv[i + j] += a * b
        return CyclotomicElement(
            self.n, reduce_modulo_phi(self.n, conv), self.den * o.den
        )

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse via the extended Euclidean algorithm of the
        representative polynomial with Phi_N.

        Runs fraction-free over Z (pseudo-remainders with joint content
        stripping), which keeps intermediate coefficients subresultant-sized
        instead of letting rational complexity explode."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero element")
        phi = list(cyclotomic_polynomial(self.n))
        a = list(self.num)
        while a and a[-1] == 0:
            a.pop()
        # invariant: s_i * (self.num poly) = r_i  (mod Phi_N), up to Q-scaling
        r0, s0 = phi, [0]
        r1, s1 = a, [1]
        while len(r1) > 1:
            r, s = _pseudo_step(r0, s0, r1, s1)
            g = math.gcd(*r, *s)
            if g > 1:
                r = [c // g for c in r]
                s = [c // g for c in s]
            r0, s0, r1, s1 = r1, s1, r, s
        if not r1 or r1[0] == 0:
            raise ZeroDivisionError("division by zero element")
        # s1 * self.num = r1[0] mod Phi, so 1/self = den * s1 / r1[0].
        d, _ = _field_data(self.n)
        num = [c * self.den for c in s1] + [0] * (d - len(s1))
        return CyclotomicElement(self.n, num[:d], r1[0])

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = CyclotomicElement.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.n == other.n and self.den == other.den and self.num == other.num

    def __hash__(self):
        return hash((self.n, self.num, self.den))

    def __repr__(self):
        return f"CyclotomicElement(n={self.n}, coeffs={self.coeffs})"


def _pseudo_step(
    r0: list[int], s0: list[int], r1: list[int], s1: list[int]
) -> tuple[list[int], list[int]]:
    """One pseudo-remainder step: returns (r, s) with r = lc^e * r0 - q * r1
    of degree < deg r1, and s the matching cofactor combination."""
    lc = r1[-1]
    d1 = len(r1) - 1
    r = list(r0)
    s = list(s0) + [0] * max(0, len(s1) + len(r0) - len(r1) - len(s0))
    while len(r) - 1 >= d1 and any(r):
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        k = len(r) - 1
        if k < d1:
            break
        c = r[-1]
        shift = k - d1
        # r <- lc * r - c * x^shift * r1 ; same combination on cofactors
        r = [lc * x for x in r]
        for j in range(d1 + 1):
            r[shift + j] -= c * r1[j]
        s = [lc * x for x in s]
        for j in range(len(s1)):
            if s1[j]:
                if shift + j >= len(s):
                    s.extend([0] * (shift + j + 1 - len(s)))
                s[shift + j] -= c * s1[j]
        r.pop()  # leading term cancels exactly
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    while len(s) > 1 and s[-1] == 0:
        s.pop()
    return r, s


def zeta(n: int, k: int = 1) -> CyclotomicElement:
    """The root of unity zeta_N^k."""
    return CyclotomicElement.from_exponents(n, {k: 1})


def change_conductor(x: CyclotomicElement, m: int) -> CyclotomicElement:
    """Lift x from Q(zeta_n) into Q(zeta_m) for n | m."""
    if m % x.n != 0:
        raise ConductorMismatchError(f"{x.n} does not divide {m}")
    step = m // x.n
    items = {k * step: Fraction(c, x.den) for k, c in enumerate(x.num)}
    return CyclotomicElement.from_exponents(m, items)


def _pi_multiple_to_zeta(a: int, b: int) -> tuple[int, int]:
    """Angle pi*a/b as (N, e) with exp(i*pi*a/b) = zeta_N^e, N even minimal."""
    t = Fraction(a, 2 * b)
    m = t.denominator
    u = t.numerator % m
    if m % 2 == 1:
        return 2 * m, (2 * u) % (2 * m)
    return m, u


def cos_pi(a: int, b: int) -> CyclotomicElement:
    """Exact cos(pi*a/b) = (zeta^e + zeta^(-e))/2 in its normalized field."""
    if b < 1:
        raise ValueError("denominator b must be positive")
    n, e = _pi_multiple_to_zeta(a, b)
    half = Fraction(1, 2)
    acc: dict[int, Fraction] = {e % n: half}
    acc[(-e) % n] = acc.get((-e) % n, Fraction(0)) + half
    return CyclotomicElement.from_exponents(n, acc)


def sin_pi(a: int, b: int) -> CyclotomicElement:
    """Exact sin(pi*a/b), computed as cos(pi*(b - 2a)/(2b))."""
    if b < 1:
        raise ValueError("denominator b must be positive")
    return cos_pi(b - 2 * a, 2 * b)
