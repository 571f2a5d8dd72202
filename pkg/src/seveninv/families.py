"""Families of parameter pairs, diffeomorphism decisions, and censuses.

The index-i family of a base pair (a, b) is

  a_i = (a1, a2 + a1^2 (b3-b2) i, a3 + a1^2 (b3-b2) i)
  b_i = (b1, b2 + b1^2 (a3-a2) i, b3 + b1^2 (a3-a2) i)

All members share n and the linking form.  The m^2 part of the s-invariant
moves along the family through the integer polynomial

  a1^2 b1^2 m(a_i, b_i) = A + B i + C i^2

with A = a1^2 b1^2 m(a,b) and B, C quarter-determinants of the shift data.
The defect terms generally drift too (linearly in i, see the defect module
notes); at indices divisible by the stride 2^5 * 7 * |n| * a1^2 * b1^2 all
drifts are integral, so the Eells-Kuiper invariant is constant there while
|s| keeps changing, which is what a census certifies.

For odd |n| the invariants (mu, linking form, p1) form a complete set, so a
diffeomorphism decision reduces to an exact unit search in (Z/|n|)*; even
|n| or non-coprime (a1, b1) is reported as undecidable, never guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .invariants import (
    DegenerateH4Error,
    InvalidPairError,
    ParamPair,
    Triple,
    _xgcd,
    eells_kuiper,
    h4_order,
    invariant_report,
    linking_scaled,
    m_value,
    p1_coefficient,
    rational_json,
    s_invariant,
    validate_pair,
)

MILNOR_RESIDUES = frozenset(
    r % 28 for r in (0, 1, -1, 3, -3, 4, -4, 6, -6, 7, -7, 8, -8, 10, -10, 11, -11, 13, -13, 14)
)
NON_MILNOR_RESIDUES = frozenset(r % 28 for r in (2, -2, 5, -5, 9, -9, 12, -12))


class FamilyConstructionError(ValueError):
    """A constructed family member failed validation (out-of-hypothesis base)."""


class CensusError(RuntimeError):
    """A census member failed the pairwise diffeomorphism check."""


def family_member(pair: ParamPair, i: int) -> ParamPair:
    """The index-i member of the family through the base pair."""
    a, b = pair.a, pair.b
    da = a.t1**2 * (b.t3 - b.t2) * i
    db = b.t1**2 * (a.t3 - a.t2) * i
    try:
        return validate_pair(
            (a.t1, a.t2 + da, a.t3 + da), (b.t1, b.t2 + db, b.t3 + db)
        )
    except InvalidPairError as exc:
        raise FamilyConstructionError(
            f"family member i={i} of {a.entries},{b.entries} is invalid: "
            + "; ".join(exc.violations)
        ) from exc


def bezout_pair(tr: Triple) -> tuple[int, int]:
    """Integers (e1, e0) with e1*t1^2 + e0*(t2^2 - t3^2)/8 = 1."""
    x = tr.t1**2
    y = (tr.t2**2 - tr.t3**2) // 8
    g, e1, e0 = _xgcd(x, y)
    if g != 1:
        raise ValueError(f"gcd(t1^2, (t2^2-t3^2)/8) = {g} != 1; no Bezout pair")
    return e1, e0


def shifted_bezout(pair: ParamPair, i: int) -> tuple[int, int]:
    """A Bezout pair (e1_i, e0) valid for the index-i family member,
    obtained by shifting the base solution:
    e1_i = e1 - e0 * (i/4) (b3-b2)(a2-a3)."""
    e1, e0 = bezout_pair(pair.a)
    shift = (pair.b.t3 - pair.b.t2) * (pair.a.t2 - pair.a.t3) * i
    if shift % 4 != 0:
        raise ValueError("family shift is not divisible by 4")
    e1_i = e1 - e0 * (shift // 4)
    member = family_member(pair, i)
    check = e1_i * member.a.t1**2 + e0 * ((member.a.t2**2 - member.a.t3**2) // 8)
    if check != 1:
        raise ArithmeticError("shifted Bezout identity failed (internal error)")
    return e1_i, e0


@dataclass(frozen=True)
class FamilyCoefficients:
    A: int
    B: int
    C: int


def family_coefficients(pair: ParamPair) -> FamilyCoefficients:
    """The integers with a1^2 b1^2 m(a_i, b_i) = A + B i + C i^2."""
    a, b = pair.a, pair.b
    a1sq, b1sq = a.t1**2, b.t1**2
    m = m_value(pair)
    A = a1sq * b1sq * m
    if A.denominator != 1:
        raise ArithmeticError("a1^2 b1^2 m is not an integer (internal error)")
    A = int(A)
    num_b = a1sq * (b1sq * (b.t2 + b.t3) * (a.t3 - a.t2)) - b1sq * (
        a1sq * (a.t2 + a.t3) * (b.t3 - b.t2)
    )
    num_c = a1sq * (b1sq**2 * (a.t3 - a.t2) ** 2) - b1sq * (
        a1sq**2 * (b.t3 - b.t2) ** 2
    )
    if num_b % 4 != 0 or num_c % 4 != 0:
        raise ArithmeticError("coefficient determinant not divisible by 4")
    coeffs = FamilyCoefficients(A, num_b // 4, num_c // 4)
    for i in (-2, -1, 1, 2):
        member = family_member(pair, i)
        lhs = a1sq * b1sq * m_value(member)
        if lhs != coeffs.A + coeffs.B * i + coeffs.C * i * i:
            raise ArithmeticError(
                f"family polynomial mismatch at i={i} (internal error)"
            )
    return coeffs


def m_shift_delta(pair: ParamPair, i: int) -> Fraction:
    """Contribution of the moving m^2 term to s(i) - s(0):
    [(A + B i + C i^2)^2 - A^2] / (2^5 * 7 * n * a1^2 * b1^2)."""
    c = family_coefficients(pair)
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("family shift undefined: n = 0")
    poly = c.A + c.B * i + c.C * i * i
    return Fraction(poly * poly - c.A * c.A, 2**5 * 7 * n * pair.a.t1**2 * pair.b.t1**2)


def paper_stride(pair: ParamPair) -> int:
    """2^5 * 7 * |n| * a1^2 * b1^2, the index stride at which mu repeats."""
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("stride undefined: n = 0")
    return 2**5 * 7 * abs(n) * pair.a.t1**2 * pair.b.t1**2


# -- diffeomorphism decisions ---------------------------------------------------


class VerdictKind(Enum):
    DIFFEOMORPHIC = "diffeomorphic"
    NOT_DIFFEOMORPHIC = "not_diffeomorphic"
    UNDECIDABLE = "undecidable"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness_unit: Optional[int] = None
    witness_sign: Optional[int] = None
    reason: Optional[str] = None

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "witness_unit": self.witness_unit,
            "witness_sign": self.witness_sign,
            "reason": self.reason,
        }


def diffeo_decide(p: ParamPair, q: ParamPair) -> Verdict:
    """Decide diffeomorphism via (mu, linking form, p1) when |n| is odd and
    both p1 coefficients are available; otherwise undecidable.

    The search is over units u of Z/|n| realizing a generator map 1 -> u*1:
    it must send the scaled linking value L to u^2 L and p1 to +-(u c).
    """
    n_p, n_q = h4_order(p), h4_order(q)
    if n_p == 0 or n_q == 0:
        raise DegenerateH4Error("diffeomorphism decision undefined for n = 0")
    if abs(n_p) != abs(n_q):
        return Verdict(
            VerdictKind.NOT_DIFFEOMORPHIC,
            reason=f"H^4 order differs: {abs(n_p)} vs {abs(n_q)}",
        )
    n = abs(n_p)
    if n % 2 == 0:
        return Verdict(
            VerdictKind.UNDECIDABLE,
            reason="even-order H^4: q-invariant not computed",
        )
    c_p, c_q = p1_coefficient(p), p1_coefficient(q)
    if c_p is None or c_q is None:
        return Verdict(
            VerdictKind.UNDECIDABLE,
            reason="p1 coefficient unavailable: a1, b1 not coprime",
        )
    if eells_kuiper(p) != eells_kuiper(q):
        return Verdict(VerdictKind.NOT_DIFFEOMORPHIC, reason="mu differs")
    if n == 1:
        return Verdict(VerdictKind.DIFFEOMORPHIC, witness_unit=1, witness_sign=1)
    lk_p, lk_q = linking_scaled(p), linking_scaled(q)
    for u in range(1, n):
        if math.gcd(u, n) != 1:
            continue
        if (u * u * lk_p - lk_q) % n != 0:
            continue
        for sign in (1, -1):
            if (u * c_p[0] - sign * c_q[0]) % n == 0:
                return Verdict(
                    VerdictKind.DIFFEOMORPHIC, witness_unit=u, witness_sign=sign
                )
    return Verdict(
        VerdictKind.NOT_DIFFEOMORPHIC,
        reason="no unit of Z/|n| matches both the linking form and p1",
    )


# -- censuses -------------------------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    base: ParamPair
    stride: int
    indices: tuple[int, ...]
    s_values: tuple[Fraction, ...]
    distinct_abs_s: tuple[Fraction, ...]
    verdicts: tuple[Verdict, ...]  # member vs base, in index order

    def to_json_dict(self) -> dict:
        return {
            "base": {"a": list(self.base.a.entries), "b": list(self.base.b.entries)},
            "stride": self.stride,
            "indices": list(self.indices),
            "s_values": [rational_json(s) for s in self.s_values],
            "distinct_abs_s": [rational_json(s) for s in self.distinct_abs_s],
            "verdicts": [v.to_json_dict() for v in self.verdicts],
        }


def moduli_census(pair: ParamPair, count: int, stride: Optional[int] = None) -> CensusReport:
    """Evaluate family members at indices 0, stride, ..., (count-1)*stride,
    verify they are pairwise diffeomorphic, and collect the distinct |s|
    values, each certifying a distinct moduli-space component."""
    if count < 1:
        raise ValueError("count must be >= 1")
    n = h4_order(pair)
    if n == 0:
        raise DegenerateH4Error("census undefined: n = 0")
    if abs(n) % 2 == 0:
        raise ValueError("census requires odd |n| (complete invariants)")
    if math.gcd(abs(pair.a.t1), abs(pair.b.t1)) != 1:
        raise ValueError("census requires gcd(a1, b1) = 1 (p1 formula)")
    if stride is None:
        stride = paper_stride(pair)
    indices = tuple(stride * t for t in range(count))
    members = [family_member(pair, i) for i in indices]
    mu0 = eells_kuiper(members[0])
    for i, member in zip(indices, members):
        if eells_kuiper(member) != mu0:
            raise CensusError(f"mu drifted at index {i} (stride not sufficient)")
    verdicts = [diffeo_decide(members[0], member) for member in members]
    for x in range(len(members)):
        for y in range(x + 1, len(members)):
            v = diffeo_decide(members[x], members[y])
            if v.kind is not VerdictKind.DIFFEOMORPHIC:
                raise CensusError(
                    f"members at indices {indices[x]} and {indices[y]} are not "
                    f"diffeomorphic: {v.reason}"
                )
    s_values = tuple(s_invariant(member) for member in members)
    distinct = tuple(sorted(set(abs(s) for s in s_values)))
    return CensusReport(
        base=pair,
        stride=stride,
        indices=indices,
        s_values=s_values,
        distinct_abs_s=distinct,
        verdicts=tuple(verdicts),
    )


def milnor_membership(pair: ParamPair) -> str:
    """Classify a pair as 'milnor', 'non_milnor', or 'not_homotopy_sphere'."""
    n = h4_order(pair)
    if n == 0 or abs(n) != 1:
        return "not_homotopy_sphere"
    mu = eells_kuiper(pair)
    r = 28 * mu
    if r.denominator != 1:
        raise ArithmeticError(
            f"28*mu = {r} is not an integer for a homotopy sphere (internal error)"
        )
    return "non_milnor" if int(r) % 28 in NON_MILNOR_RESIDUES else "milnor"
