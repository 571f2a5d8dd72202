"""Independent re-derivation of the defect contribution to the s-invariant.

The boundary construction realizes each manifold as the boundary of an
orbifold disc bundle W whose singular strata are two families of 2-spheres,
one for each triple.  The side built from a triple t = (t1, t2, t3) has
(|t1|-1)/2 strata indexed by k; the stratum data is

  rotation angles    theta_j = 2 w_j pi k / |t1|,   w = (4, t2-t3, t2+t3)
  line-bundle Chern  c_j     = -w_j / |t1|

where the Chern numbers already include the orientation flip applied when
t1 < 0.  Each stratum contributes the first-order coefficient (the base is
2-dimensional) of

  prod_j (1/2) csch(x_j/2 + i theta_j/2)          (A-hat integrand)
  prod_j coth(x_j + i theta_j/2)                  (L integrand)

with x_j replaced by c_j in the linear term, combined as A + L/(2^5*7).
The evaluation is exact complex arithmetic in Q(zeta_{4|t1|}): sinh/cosh of
the purely imaginary arguments are assembled from roots of unity, the
first-order product rule is applied literally, and the imaginary parts are
checked to cancel rather than assumed to.

Assembled with the prefactors -1/|a1| (minus side) and +1/|b1| (plus side),
the total reproduces, with opposite sign, the closed-form combination

  D(|a1|; 4, a2-a3, a2+a3) - D(|b1|; 4, b2-b3, b2+b3)

of defect sums; oracle_check performs that comparison exactly.  The
csch-argument convention above (half x, half theta, prefactor 1/2) is the
one calibrated against the closed form on ((-3,-3,1),(1,1,1)) and is frozen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cyclotomic import CyclotomicElement, NotRationalError
from .defect import DefectArgs, defect_D_exact
from .invariants import ParamPair, Triple, rational_json


class DegenerateStratumError(ValueError):
    """A rotation angle hit a pole of the csch/coth integrand."""


class OracleInternalError(RuntimeError):
    """Exactness violations that indicate an arithmetic bug: a nonreal
    stratum integral or a non-rational assembled total."""


@dataclass(frozen=True)
class StratumData:
    side: str                                   # "minus" or "plus"
    gamma_index: int                            # k = 1 .. (|t1|-1)/2
    group_order: int                            # |t1|, the isotropy order
    weights: tuple[Fraction, Fraction, Fraction]  # angles as multiples of pi
    chern: tuple[Fraction, Fraction, Fraction]
    sigma: int = 1
    epsilon: int = 1


def strata(pair: ParamPair) -> list[StratumData]:
    """All singular strata of the disc bundle over the pair, both sides."""
    out: list[StratumData] = []
    for side, t in (("minus", pair.a), ("plus", pair.b)):
        q = abs(t.t1)
        w = (4, t.t2 - t.t3, t.t2 + t.t3)
        for k in range(1, (q - 1) // 2 + 1):
            out.append(
                StratumData(
                    side=side,
                    gamma_index=k,
                    group_order=q,
                    weights=tuple(Fraction(2 * wj * k, q) for wj in w),
                    chern=tuple(Fraction(-wj, q) for wj in w),
                )
            )
    return out


def spin_sign(st: StratumData) -> int:
    """The sign multiplying the A-hat integrand: prod_j cos(r theta_j / 2)
    for r the order of the stratum's group element.

    The sign depends on the chosen angle representatives: shifting one
    theta_j by 2 pi flips both it and the csch factor, so their product is
    representative-independent.  For genuine strata (even weights, odd r)
    it always evaluates to +1.
    """
    r = st.group_order // math.gcd(st.gamma_index, st.group_order)
    parity = 0
    for wt in st.weights:
        x = Fraction(r) * wt / 2
        if x.denominator != 1:
            raise DegenerateStratumError(
                f"r*theta = {2 * x}*pi is not a multiple of 2*pi (r = {r})"
            )
        parity += int(x)
    return -1 if parity % 2 else 1


def stratum_integral(st: StratumData) -> CyclotomicElement:
    """Exact value of one stratum's contribution eps * A-hat + L/(2^5*7).

    The value lies in the real subfield of Q(zeta_{4 group_order}); it is
    rational only after summing a full side, so the exact field element is
    returned and the assembly extracts the rational total.
    """
    n = 4 * st.group_order
    exps = []
    for wt in st.weights:
        e = Fraction(n, 4) * wt  # exp(i*theta/2) = zeta_n^e
        if e.denominator != 1:
            raise DegenerateStratumError(
                f"angle {wt}*pi is not carried by conductor {n}"
            )
        exps.append(int(e))

    half = Fraction(1, 2)
    sh = []
    ch = []
    for e in exps:
        sh_e = CyclotomicElement.from_exponents(n, {e: half, -e: -half})
        if sh_e.is_zero():
            raise DegenerateStratumError(
                f"degenerate stratum: angle {2 * Fraction(e, n)}*pi has zero sine"
            )
        sh.append(sh_e)
        ch.append(CyclotomicElement.from_exponents(n, {e: half, -e: half}))
    inv = [x.inverse() for x in sh]

    # factor values and x-derivatives at x = 0
    a_val = [iv * half for iv in inv]                       # (1/2) csch(i theta/2)
    a_der = [ch[j] * inv[j] * inv[j] * Fraction(-1, 4) for j in range(3)]
    l_val = [ch[j] * inv[j] for j in range(3)]              # coth(i theta/2)
    l_der = [inv[j] * inv[j] * Fraction(-1) for j in range(3)]

    a_part = CyclotomicElement.zero(n)
    l_part = CyclotomicElement.zero(n)
    for j in range(3):
        k, l = ((0, 1, 2)[j - 2], (0, 1, 2)[j - 1])
        a_part = a_part + a_der[j] * a_val[k] * a_val[l] * st.chern[j]
        l_part = l_part + l_der[j] * l_val[k] * l_val[l] * st.chern[j]

    total = a_part * spin_sign(st) + l_part * Fraction(1, 2**5 * 7)
    if not total.is_real():
        raise OracleInternalError(
            f"stratum ({st.side}, k={st.gamma_index}) has nonvanishing imaginary part"
        )
    return total


def _assemble(
    pieces: list[tuple[StratumData, CyclotomicElement]]
) -> Fraction:
    """Total (-sigma/|a1|) * sum(minus strata) + (sigma/|b1|) * sum(plus strata)."""
    total = Fraction(0)
    for side, outer in (("minus", -1), ("plus", 1)):
        side_pieces = [(st, v) for st, v in pieces if st.side == side]
        if not side_pieces:
            continue
        q = side_pieces[0][0].group_order
        sigma = side_pieces[0][0].sigma
        acc = CyclotomicElement.zero(4 * q)
        for _, v in side_pieces:
            acc = acc + v
        try:
            total += Fraction(outer * sigma, q) * acc.to_rational()
        except NotRationalError as exc:
            raise OracleInternalError(
                f"{side}-side stratum sum is not rational: {exc.coeffs}"
            ) from exc
    return total


def lambda_s_integral(pair: ParamPair) -> Fraction:
    """Exact rational value of the assembled singular-strata integral:
    (-sigma/|a1|) * sum of minus strata + (+sigma/|b1|) * sum of plus strata."""
    return _assemble([(st, stratum_integral(st)) for st in strata(pair)])


@dataclass(frozen=True)
class OracleCheck:
    pair: ParamPair
    oracle: Fraction
    closed_form: Fraction
    closed_minus: Fraction
    closed_plus: Fraction
    equal: bool
    stratum_values: tuple[tuple[str, int, float], ...]

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.pair.a.entries),
            "b": list(self.pair.b.entries),
            "oracle": rational_json(self.oracle),
            "closed_form": rational_json(self.closed_form),
            "closed_minus": rational_json(self.closed_minus),
            "closed_plus": rational_json(self.closed_plus),
            "equal": self.equal,
            "strata": [
                {"side": s, "k": k, "value": v} for (s, k, v) in self.stratum_values
            ],
        }


def oracle_check(pair: ParamPair) -> OracleCheck:
    """Compare -lambda_s_integral with the closed-form defect combination
    D(a1; 4, a2-a3, a2+a3) - D(b1; 4, b2-b3, b2+b3); exact equality."""
    pieces = [(st, stratum_integral(st)) for st in strata(pair)]
    oracle = -_assemble(pieces)
    a, b = pair.a, pair.b
    d_minus = defect_D_exact(DefectArgs(a.t1, 4, a.t2 - a.t3, a.t2 + a.t3))
    d_plus = defect_D_exact(DefectArgs(b.t1, 4, b.t2 - b.t3, b.t2 + b.t3))
    closed = d_minus - d_plus
    details = tuple(
        (st.side, st.gamma_index, v.real_float()) for st, v in pieces
    )
    return OracleCheck(
        pair=pair,
        oracle=oracle,
        closed_form=closed,
        closed_minus=d_minus,
        closed_plus=d_plus,
        equal=(oracle == closed),
        stratum_values=details,
    )
