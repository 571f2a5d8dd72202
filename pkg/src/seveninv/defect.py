"""The trigonometric defect sums D(q; p1, p2, p3).

    D(q; p1, p2, p3) = 1/(2^5 * 7 * q^2) * sum_{l=1}^{(|q|-1)/2} sum_cyc
        p_i * (14 cos(p_i pi l/q) + cos(p_j pi l/q) cos(p_k pi l/q))
            / (sin^2(p_i pi l/q) sin(p_j pi l/q) sin(p_k pi l/q))

where the cyclic sum runs over (i,j,k) in {(1,2,3),(2,3,1),(3,1,2)}.
D is always rational: the l-terms are Galois conjugates whose sum lies in Q.

Exact path: each l-term is assembled in the group ring Z[x]/(x^{2|q|} - 1)
with x standing for zeta_{2|q|}^{sign(q)}, writing

    2 cos(p pi l/q) = x^{pl} + x^{-pl}        (ctilde)
    2i sin(p pi l/q) = x^{pl} - x^{-pl}       (stilde)

so that the cyclic sum over a common denominator becomes

    term_l = 4 * [sum_cyc p_i (28 ctilde_i + ctilde_j ctilde_k)
                  stilde_j stilde_k] / (stilde_1 stilde_2 stilde_3)^2

with every power of i cancelled.  The terms are accumulated as a single
numerator/denominator pair of ring elements (three cyclic convolutions per
l, done by Kronecker substitution on Python big integers), reduced modulo
Phi_{2|q|} once at the end, and the rational total is read off as the
coordinate ratio numerator/denominator -- verified coordinate-wise, so a
non-rational quotient is detected rather than assumed away.

Float path: direct evaluation of the same double sum in double precision
(math.fsum over the summands), for sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import NotRationalError, reduce_modulo_phi

_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


class DegenerateDefectArgumentError(ValueError):
    """Arguments that would place a zero sine inside a summand."""


@dataclass(frozen=True)
class DefectArgs:
    """Validated arguments of D: q odd and nonzero, each p_j coprime to q,
    and p1 + p2 + p3 even.

    The parity condition is what makes the value rational: the summation
    range l = 1 .. (|q|-1)/2 is closed under Galois conjugation exactly when
    the term for l equals the term for q - l, which requires an even parity
    sum.  Arguments arising from parameter triples always satisfy it
    (4 + (t3+t2) + (t3-t2) = 4 + 2*t3)."""

    q: int
    p1: int
    p2: int
    p3: int

    def __post_init__(self):
        problems = []
        if self.q == 0:
            problems.append("q = 0")
        elif self.q % 2 == 0:
            problems.append(f"q = {self.q} is even")
        for name, p in (("p1", self.p1), ("p2", self.p2), ("p3", self.p3)):
            if self.q != 0 and math.gcd(abs(self.q), abs(p)) != 1:
                problems.append(
                    f"gcd(q, {name}) = {math.gcd(abs(self.q), abs(p))} != 1"
                )
        if (self.p1 + self.p2 + self.p3) % 2 != 0:
            problems.append(
                f"p1 + p2 + p3 = {self.p1 + self.p2 + self.p3} is odd "
                "(the sum would be irrational)"
            )
        if problems:
            raise DegenerateDefectArgumentError(
                "degenerate defect argument: " + "; ".join(problems)
            )

    @property
    def ps(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, self.p3)


# -- exact evaluation --------------------------------------------------------


def _sparse_mul(x: dict[int, int], y: dict[int, int], n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for ex, cx in x.items():
        for ey, cy in y.items():
            e = ex + ey
            if e >= n:
                e -= n
            c = out.get(e, 0) + cx * cy
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def _dense(x: dict[int, int], n: int) -> list[int]:
    out = [0] * n
    for e, c in x.items():
        out[e] = c
    return out


def _pack(vec: list[int], nb: int) -> int:
    pos = bytearray(nb * len(vec))
    neg = bytearray(nb * len(vec))
    for i, c in enumerate(vec):
        if c > 0:
            pos[i * nb : i * nb + nb] = c.to_bytes(nb, "little")
        elif c < 0:
            neg[i * nb : i * nb + nb] = (-c).to_bytes(nb, "little")
    return int.from_bytes(bytes(pos), "little") - int.from_bytes(bytes(neg), "little")


@lru_cache(maxsize=64)
def _offset(count: int, nb: int) -> tuple[int, int]:
    half = 1 << (8 * nb - 1)
    off = int.from_bytes(half.to_bytes(nb, "little") * count, "little")
    return off, half


def _ring_mul(a: list[int], b: list[int], n: int) -> list[int]:
    """Cyclic convolution in Z[x]/(x^n - 1) via Kronecker substitution."""
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if ma == 0 or mb == 0:
        return [0] * n
    bound = n * ma * mb
    nb = (bound.bit_length() + 9) // 8
    prod = _pack(a, nb) * _pack(b, nb)
    count = 2 * n - 1
    off, half = _offset(count, nb)
    raw = (prod + off).to_bytes(nb * count + nb, "little")
    out = [0] * n
    for i in range(count):
        c = int.from_bytes(raw[i * nb : i * nb + nb], "little") - half
        j = i - n if i >= n else i
        out[j] += c
    return out


@lru_cache(maxsize=8192)
def _defect_exact_core(q: int, p1: int, p2: int, p3: int) -> Fraction:
    qa = abs(q)
    if qa == 1:
        return Fraction(0)
    n = 2 * qa
    sgn = 1 if q > 0 else -1
    ps = (p1, p2, p3)

    t_num = [0] * n
    t_den = [0] * n
    t_den[0] = 1
    for l in range(1, (qa - 1) // 2 + 1):
        ct = []
        st = []
        for p in ps:
            e = (p * l * sgn) % n
            me = (-e) % n
            c: dict[int, int] = {e: 1}
            c[me] = c.get(me, 0) + 1
            ct.append(c)
            st.append({e: 1, me: -1})
        num_l: dict[int, int] = {}
        for i, j, k in _CYCLIC:
            inner = _sparse_mul(ct[j], ct[k], n)
            for e, c in ct[i].items():
                inner[e] = inner.get(e, 0) + 28 * c
            inner = _sparse_mul(inner, _sparse_mul(st[j], st[k], n), n)
            for e, c in inner.items():
                num_l[e] = num_l.get(e, 0) + ps[i] * c
        s_all = _sparse_mul(_sparse_mul(st[0], st[1], n), st[2], n)
        den_l = _dense(_sparse_mul(s_all, s_all, n), n)
        a_l = _dense(num_l, n)

        left = _ring_mul(t_num, den_l, n)
        right = _ring_mul(a_l, t_den, n)
        t_num = [x + y for x, y in zip(left, right)]
        t_den = _ring_mul(t_den, den_l, n)
        if l % 8 == 0:
            g = math.gcd(*t_num, *t_den)
            if g > 1:
                t_num = [c // g for c in t_num]
                t_den = [c // g for c in t_den]

    num_vec = reduce_modulo_phi(n, t_num)
    den_vec = reduce_modulo_phi(n, t_den)
    i0 = next((i for i, c in enumerate(den_vec) if c), None)
    if i0 is None:
        raise ZeroDivisionError("defect denominator vanished (internal error)")
    for a, b in zip(num_vec, den_vec):
        if a * den_vec[i0] != b * num_vec[i0]:
            raise NotRationalError(
                "defect sum is not rational (internal error)",
                [Fraction(c) for c in num_vec],
            )
    total = Fraction(num_vec[i0], den_vec[i0])
    return 4 * total / (2**5 * 7 * q * q)


def defect_D_exact(args: DefectArgs) -> Fraction:
    """Exact rational value of D(q; p1, p2, p3)."""
    return _defect_exact_core(args.q, args.p1, args.p2, args.p3)


# -- floating-point fast path -------------------------------------------------


def defect_D_float(args: DefectArgs) -> float:
    """Double-precision evaluation of the same double sum."""
    q = args.q
    qa = abs(q)
    ps = args.ps
    terms = []
    for l in range(1, (qa - 1) // 2 + 1):
        cos = [math.cos(p * math.pi * l / q) for p in ps]
        sin = [math.sin(p * math.pi * l / q) for p in ps]
        for i, j, k in _CYCLIC:
            terms.append(
                ps[i]
                * (14 * cos[i] + cos[j] * cos[k])
                / (sin[i] * sin[i] * sin[j] * sin[k])
            )
    return math.fsum(terms) / (2**5 * 7 * q * q)
