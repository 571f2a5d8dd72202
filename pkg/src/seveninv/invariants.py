"""Parameter validation and the invariants of the 7-manifolds M_{a,b}.

A manifold in the family is specified by two integer triples a = (a1,a2,a3)
and b = (b1,b2,b3) with every entry congruent to 1 mod 4, each triple
having coprime entries, and gcd(a1, a2 +- a3) = gcd(b1, b2 +- b3) = 1.

Computed quantities (all exact):

  n      = (1/8) det [[a1^2, b1^2], [a2^2-a3^2, b2^2-b3^2]]   (signed; |n| = order of H^4)
  m      = (1/(8 a1^2 b1^2)) det [[a1^2, b1^2], [a2^2+a3^2+8, b2^2+b3^2+8]]
  s      = -(|n| - a1^2 b1^2 m^2)/(2^5*7*n)
             - D(a1; 4, a3+a2, a3-a2) + D(b1; 4, b3+b2, b3-b2)
  mu     = s mod 1, the Eells-Kuiper invariant of the manifold
  lk     = (1/n)(e1 b1^2 + e0 (b2^2-b3^2)/8) mod 1   on the distinguished
           generator of H^4, where e1 a1^2 + e0 (a2^2-a3^2)/8 = 1
  p1     = +-2 a1^2 m mod |n|, the first Pontryagin class in terms of the
           same generator, defined up to sign; requires gcd(a1, b1) = 1

together with the curvature integrals over the 4-dimensional base,

  euler     = -n/(a1^2 b1^2)
  p1_base   = -(1/(4 a1^2 b1^2)) det [[a1^2, b1^2], [8, 8]]
  p1_bundle = -(1/(4 a1^2 b1^2)) det [[a1^2, b1^2], [a2^2+a3^2, b2^2+b3^2]]

which satisfy p1_base + p1_bundle = -2m and sign(W) = sign(euler).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .defect import DefectArgs, defect_D_exact


class InvalidPairError(ValueError):
    """Parameter triples violating the defining gcd/congruence conditions.

    Carries the complete list of violated conditions."""

    def __init__(self, violations: list[str]):
        super().__init__("invalid parameter pair: " + "; ".join(violations))
        self.violations = tuple(violations)


class DegenerateH4Error(ValueError):
    """Operations requiring finite H^4 rejected a pair with n = 0."""


class ModularInversionError(ValueError):
    """A denominator could not be inverted modulo |n|."""


@dataclass(frozen=True)
class Triple:
    t1: int
    t2: int
    t3: int

    @property
    def entries(self) -> tuple[int, int, int]:
        return (self.t1, self.t2, self.t3)

    def violations(self, label: str) -> list[str]:
        out = []
        for i, t in enumerate(self.entries, start=1):
            if t % 4 != 1:
                out.append(f"{label}{i} = {t} is not 1 mod 4")
        g = math.gcd(*[abs(t) for t in self.entries])
        if g != 1:
            out.append(f"gcd({label}1,{label}2,{label}3) = {g}")
        g_minus = math.gcd(abs(self.t1), abs(self.t2 - self.t3))
        if g_minus != 1:
            out.append(f"gcd({label}1, {label}2-{label}3) = {g_minus}")
        g_plus = math.gcd(abs(self.t1), abs(self.t2 + self.t3))
        if g_plus != 1:
            out.append(f"gcd({label}1, {label}2+{label}3) = {g_plus}")
        return out


@dataclass(frozen=True)
class ParamPair:
    a: Triple
    b: Triple
    validated: bool = True


def _as_triple(t) -> Triple:
    if isinstance(t, Triple):
        return t
    return Triple(*map(int, t))


def pair_violations(a, b) -> list[str]:
    return _as_triple(a).violations("a") + _as_triple(b).violations("b")


def validate_pair(a, b) -> ParamPair:
    """Validated pair, or InvalidPairError listing every failed condition."""
    a, b = _as_triple(a), _as_triple(b)
    problems = pair_violations(a, b)
    if problems:
        raise InvalidPairError(problems)
    return ParamPair(a, b)


def is_valid_pair(a: tuple[int, int, int], b: tuple[int, int, int]) -> bool:
    """Fast boolean validity check for enumeration loops."""
    for t in (a, b):
        t1, t2, t3 = t
        if t1 % 4 != 1 or t2 % 4 != 1 or t3 % 4 != 1:
            return False
        if math.gcd(abs(t1), abs(t2), abs(t3)) != 1:
            return False
        if math.gcd(abs(t1), abs(t2 - t3)) != 1:
            return False
        if math.gcd(abs(t1), abs(t2 + t3)) != 1:
            return False
    return True


# -- elementary invariants ----------------------------------------------------


def h4_order(pair: ParamPair) -> int:
    """Signed n; |n| is the order of H^4, with n = 0 meaning infinite H^4."""
    a, b = pair.a, pair.b
    det = a.t1**2 * (b.t2**2 - b.t3**2) - b.t1**2 * (a.t2**2 - a.t3**2)
    return det // 8


def m_value(pair: ParamPair) -> Fraction:
    a, b = pair.a, pair.b
    det = a.t1**2 * (b.t2**2 + b.t3**2 + 8) - b.t1**2 * (a.t2**2 + a.t3**2 + 8)
    return Fraction(det, 8 * a.t1**2 * b.t1**2)


@dataclass(frozen=True)
class BaseIntegrals:
    euler: Fraction
    p1_base: Fraction
    p1_bundle: Fraction


def base_integrals(pair: ParamPair) -> BaseIntegrals:
    a, b = pair.a, pair.b
    denom = 4 * a.t1**2 * b.t1**2
    euler = Fraction(-h4_order(pair), a.t1**2 * b.t1**2)
    p1_base = Fraction(-(a.t1**2 * 8 - b.t1**2 * 8), denom)
    p1_bundle = Fraction(
        -(a.t1**2 * (b.t2**2 + b.t3**2) - b.t1**2 * (a.t2**2 + a.t3**2)), denom
    )
    return BaseIntegrals(euler, p1_base, p1_bundle)


def sign_w(pair: ParamPair) -> int:
    """Sign of the disc-bundle intersection form, = sign of the Euler integral."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("degenerate Euler number: n = 0 (infinite H^4)")
    return -1 if n > 0 else 1


def p_wedge_q(pair: ParamPair) -> Fraction:
    """(p1_base + p1_bundle)^2 / euler = -4 m^2 a1^2 b1^2 / n."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("degenerate Euler number: n = 0 (infinite H^4)")
    m = m_value(pair)
    return Fraction(-4) * m * m * pair.a.t1**2 * pair.b.t1**2 / n


# -- defect terms and the s-invariant ------------------------------------------


def defect_terms(pair: ParamPair) -> tuple[Fraction, Fraction]:
    """The two defect summands of s: D(a1; 4, a3+a2, a3-a2) and
    D(b1; 4, b3+b2, b3-b2)."""
    a, b = pair.a, pair.b
    d_minus = defect_D_exact(DefectArgs(a.t1, 4, a.t3 + a.t2, a.t3 - a.t2))
    d_plus = defect_D_exact(DefectArgs(b.t1, 4, b.t3 + b.t2, b.t3 - b.t2))
    return d_minus, d_plus


def s_invariant(pair: ParamPair) -> Fraction:
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("s-invariant undefined: n = 0 (infinite H^4)")
    m = m_value(pair)
    a1sq_b1sq = pair.a.t1**2 * pair.b.t1**2
    d_minus, d_plus = defect_terms(pair)
    return -Fraction(abs(n) - a1sq_b1sq * m * m) / (2**5 * 7 * n) - d_minus + d_plus


def eells_kuiper(pair: ParamPair) -> Fraction:
    """s reduced into [0, 1); a smooth-structure invariant of the manifold."""
    s = s_invariant(pair)
    return s - math.floor(s)


# -- linking form and first Pontryagin class -----------------------------------


def _bezout_e1_e0(a: Triple) -> tuple[int, int]:
    """Integers (e1, e0) with e1*a1^2 + e0*(a2^2-a3^2)/8 = 1."""
    x = a.t1**2
    y = (a.t2**2 - a.t3**2) // 8
    g, e1, e0 = _xgcd(x, y)
    if g != 1:
        raise ModularInversionError(
            f"gcd(a1^2, (a2^2-a3^2)/8) = {g} != 1; no Bezout pair"
        )
    return e1, e0


def _xgcd(x: int, y: int) -> tuple[int, int, int]:
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def linking_scaled(pair: ParamPair) -> int:
    """The integer L in [0, |n|) with lk(1,1) = L/|n| mod 1."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("linking form undefined: n = 0 (infinite H^4)")
    e1, e0 = _bezout_e1_e0(pair.a)
    b = pair.b
    raw = e1 * b.t1**2 + e0 * ((b.t2**2 - b.t3**2) // 8)
    if n < 0:
        raw = -raw
    return raw % abs(n)


def linking_value(pair: ParamPair) -> Optional[Fraction]:
    """lk(1,1) as a fraction in [0,1); None marks the trivial form (|n| = 1)."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("linking form undefined: n = 0 (infinite H^4)")
    if abs(n) == 1:
        return None
    return Fraction(linking_scaled(pair), abs(n))


def p1_coefficient(pair: ParamPair) -> Optional[tuple[int, int]]:
    """The residue pair {c, -c} mod |n| with p1 = +-2 a1^2 m on the
    distinguished generator; None when a1, b1 are not coprime (the formula
    does not apply)."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("p1 coefficient undefined: n = 0 (infinite H^4)")
    if math.gcd(abs(pair.a.t1), abs(pair.b.t1)) != 1:
        return None
    na = abs(n)
    if na == 1:
        return (0, 0)
    val = 2 * pair.a.t1**2 * m_value(pair)
    den = val.denominator
    if math.gcd(den, na) != 1:
        raise ModularInversionError(
            f"denominator {den} of 2 a1^2 m is not invertible mod {na}"
        )
    c = val.numerator * pow(den, -1, na) % na
    return tuple(sorted((c, (-c) % na)))


# -- aggregate report -----------------------------------------------------------


@dataclass(frozen=True)
class InvariantReport:
    pair: ParamPair
    n: int
    m: Fraction
    s: Fraction
    mu: Fraction
    lk: Optional[Fraction]
    p1: Optional[tuple[int, int]]
    defect_minus: Fraction
    defect_plus: Fraction
    sign_w: int
    euler_integral: Fraction
    p1_base_integral: Fraction
    p1_bundle_integral: Fraction

    def __post_init__(self):
        a1sq_b1sq = self.pair.a.t1**2 * self.pair.b.t1**2
        assert self.mu == self.s - math.floor(self.s)
        assert self.euler_integral == Fraction(-self.n, a1sq_b1sq)
        assert self.p1_base_integral + self.p1_bundle_integral == -2 * self.m

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.pair.a.entries),
            "b": list(self.pair.b.entries),
            "n": self.n,
            "m": rational_json(self.m),
            "s": rational_json(self.s),
            "mu": rational_json(self.mu),
            "lk": "trivial" if self.lk is None else rational_json(self.lk),
            "p1": None if self.p1 is None else list(self.p1),
            "defect_minus": rational_json(self.defect_minus),
            "defect_plus": rational_json(self.defect_plus),
            "sign_W": self.sign_w,
        }


def rational_json(x: Fraction) -> dict:
    """Exact fraction encoding used by every JSON surface."""
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_str(x: Optional[Fraction]) -> str:
    if x is None:
        return "trivial"
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def invariant_report(pair: ParamPair) -> InvariantReport:
    """All invariants of one manifold; requires finite H^4."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("invariant report undefined: n = 0 (infinite H^4)")
    m = m_value(pair)
    d_minus, d_plus = defect_terms(pair)
    s = -Fraction(abs(n) - pair.a.t1**2 * pair.b.t1**2 * m * m) / (2**5 * 7 * n)
    s = s - d_minus + d_plus
    ints = base_integrals(pair)
    return InvariantReport(
        pair=pair,
        n=n,
        m=m,
        s=s,
        mu=s - math.floor(s),
        lk=linking_value(pair),
        p1=p1_coefficient(pair),
        defect_minus=d_minus,
        defect_plus=d_plus,
        sign_w=sign_w(pair),
        euler_integral=ints.euler,
        p1_base_integral=ints.p1_base,
        p1_bundle_integral=ints.p1_bundle,
    )
