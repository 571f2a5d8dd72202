"""The acceptance battery: eight self-contained criteria with fixed seeds.

Each criterion function returns a CriterionResult; run_all executes the
battery in order.  These are the package's exit checks, exposed both to the
test suite and to the `selftest` CLI command.

Criteria 4 and 5 include two sub-checks (2q-periodicity of the defect sums
in p3, and constancy of the defect terms along families) that the defect
sums do not actually satisfy: the linear p_i prefactor adds an explicit
correction under p3 -> p3 + 2q (see the defect module notes), for example
D(-3; 4, -4, -2) = 1/28 while D(-3; 4, -4, -74) = -11/28.  Those sub-checks
are still run exactly as stated and reported honestly.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicElement, change_conductor, cos_pi, sin_pi
from .defect import DefectArgs, defect_D_exact, defect_D_float
from .families import (
    MILNOR_RESIDUES,
    VerdictKind,
    family_coefficients,
    family_member,
    m_shift_delta,
    moduli_census,
)
from .invariants import (
    defect_terms,
    eells_kuiper,
    h4_order,
    linking_value,
    s_invariant,
    validate_pair,
)
from .oracle import oracle_check
from .sweeps import random_valid_pair, valid_triples

SEED_ORACLE = 0xC3
SEED_DEFECT = 0xC4
SEED_FAMILY = 0xC5
SEED_FIELD = 0xC8
SEED_FLOAT = 0xC8F


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit_seconds: float

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} criterion {self.number} [{self.name}] "
            f"({self.seconds:.2f}s / limit {self.limit_seconds:.0f}s): {self.detail}"
        )


def _mk_pair(k: int):
    return validate_pair((-3, -3, 1), (1, 4 * k + 1, 4 * k + 1))


def criterion_1() -> CriterionResult:
    """Golden s values on the homotopy-sphere family."""
    t0 = time.time()
    bad = []
    for k in range(-5, 17):
        expected = -Fraction(9, 56) * (4 * k**4 + 4 * k**3 + 3 * k**2 + k)
        if s_invariant(_mk_pair(k)) != expected:
            bad.append(k)
    dt = time.time() - t0
    detail = "all k in -5..16 exact" if not bad else f"mismatch at k = {bad}"
    return CriterionResult(1, "golden family s-values", not bad and dt < 1, detail, dt, 1)


def criterion_2() -> CriterionResult:
    """The eight designated members realize every non-Milnor mu class."""
    t0 = time.time()
    got = {int(28 * eells_kuiper(_mk_pair(k))) % 28 for k in (-3, -1, 1, 2, 4, 8, 11, 15)}
    want = {r % 28 for r in (2, -2, 5, -5, 9, -9, 12, -12)}
    dt = time.time() - t0
    ok = got == want and dt < 1
    return CriterionResult(
        2, "non-Milnor coverage", ok, f"28*mu residues {sorted(got)}", dt, 1
    )


def criterion_3() -> CriterionResult:
    """Inertia-strata oracle equals the closed-form defect combination."""
    t0 = time.time()
    checks = [validate_pair((-3, -3, 1), (1, 1, 1))]
    rng = random.Random(SEED_ORACLE)
    while len(checks) < 51:
        checks.append(random_valid_pair(rng, q_min=3, q_max=25, entry_bound=49))
    failures = []
    for pair in checks:
        chk = oracle_check(pair)
        if not chk.equal:
            failures.append((pair.a.entries, pair.b.entries))
    dt = time.time() - t0
    ok = not failures and dt < 60
    detail = f"{len(checks)} pairs exact" if not failures else f"mismatches: {failures[:3]}"
    return CriterionResult(3, "oracle equivalence", ok, detail, dt, 60)


def _random_defect_args(rng: random.Random) -> DefectArgs:
    while True:
        q = rng.choice([x for x in range(-99, 100) if x % 2 != 0])
        ps = [rng.randint(-99, 99) for _ in range(3)]
        if sum(ps) % 2 != 0:
            continue
        if all(p != 0 and math.gcd(abs(q), abs(p)) == 1 for p in ps):
            return DefectArgs(q, *ps)


def criterion_4() -> CriterionResult:
    """Defect-sum property suite on 200 random argument tuples."""
    t0 = time.time()
    rng = random.Random(SEED_DEFECT)
    counts = {"permutation": 0, "q-sign": 0, "oddness": 0, "periodicity": 0}
    first_fail = {}
    for _ in range(200):
        args = _random_defect_args(rng)
        q, (p1, p2, p3) = args.q, args.ps
        base = defect_D_exact(args)
        checks = {
            "permutation": defect_D_exact(DefectArgs(q, p2, p3, p1)) == base,
            "q-sign": defect_D_exact(DefectArgs(-q, p1, p2, p3)) == base,
            "oddness": defect_D_exact(DefectArgs(q, -p1, p2, p3)) == -base,
            "periodicity": defect_D_exact(DefectArgs(q, p1, p2, p3 + 2 * q)) == base,
        }
        for name, ok in checks.items():
            if ok:
                counts[name] += 1
            else:
                first_fail.setdefault(name, (q, p1, p2, p3))
    anchors = (
        defect_D_exact(DefectArgs(3, 4, -2, 4)) == Fraction(-1, 28)
        and defect_D_exact(DefectArgs(1, 4, -2, 4)) == 0
    )
    dt = time.time() - t0
    ok = anchors and all(c == 200 for c in counts.values()) and dt < 60
    detail = ", ".join(f"{k} {v}/200" for k, v in counts.items())
    detail += f", anchors {'ok' if anchors else 'FAIL'}"
    if first_fail:
        detail += f"; first failures: {first_fail}"
    return CriterionResult(4, "defect property suite", ok, detail, dt, 60)


def criterion_5() -> CriterionResult:
    """Family suite: invariance and the pure-m^2 difference law for s."""
    t0 = time.time()
    rng = random.Random(SEED_FAMILY)
    counts = {"n": 0, "lk": 0, "defects": 0, "s-shift": 0, "BC-nonzero": 0}
    first_fail = {}
    total = 25
    for _ in range(total):
        base = random_valid_pair(
            rng, q_min=1, q_max=9, entry_bound=25, require_nonzero_n=True
        )
        n0 = h4_order(base)
        lk0 = linking_value(base)
        d0 = defect_terms(base)
        s0 = s_invariant(base)
        coeffs = family_coefficients(base)
        key = (base.a.entries, base.b.entries)
        ok_n = ok_lk = ok_d = ok_s = True
        for i in range(-3, 4):
            member = family_member(base, i)
            ok_n &= h4_order(member) == n0
            ok_lk &= linking_value(member) == lk0
            ok_d &= defect_terms(member) == d0
            ok_s &= s_invariant(member) - s0 == m_shift_delta(base, i)
        for name, ok in (
            ("n", ok_n),
            ("lk", ok_lk),
            ("defects", ok_d),
            ("s-shift", ok_s),
            ("BC-nonzero", (coeffs.B, coeffs.C) != (0, 0)),
        ):
            if ok:
                counts[name] += 1
            else:
                first_fail.setdefault(name, key)
    dt = time.time() - t0
    ok = all(c == total for c in counts.values()) and dt < 30
    detail = ", ".join(f"{k} {v}/{total}" for k, v in counts.items())
    if first_fail:
        detail += f"; first failures: {first_fail}"
    return CriterionResult(5, "family suite", ok, detail, dt, 30)


def criterion_6() -> CriterionResult:
    """Moduli census: five diffeomorphic members, five distinct |s| values."""
    t0 = time.time()
    base = validate_pair((-3, -3, 1), (1, 1, 1))
    rep = moduli_census(base, 5)
    dt = time.time() - t0
    ok = (
        len(rep.distinct_abs_s) == 5
        and all(v.kind is VerdictKind.DIFFEOMORPHIC for v in rep.verdicts)
        and dt < 10
    )
    detail = (
        f"stride {rep.stride}, {len(rep.distinct_abs_s)} distinct |s|, "
        f"verdicts {[v.kind.value for v in rep.verdicts]}"
    )
    return CriterionResult(6, "moduli census", ok, detail, dt, 10)


def criterion_7() -> CriterionResult:
    """28s integrality over the bound-9 sweep; Milnor classes for a1=b1=1."""
    t0 = time.time()
    triples = valid_triples(9)
    checked = quantized = milnor_checked = milnor_ok = 0
    for a in triples:
        for b in triples:
            pair = validate_pair(a, b)
            if abs(h4_order(pair)) != 1:
                continue
            checked += 1
            s = s_invariant(pair)
            if (28 * s).denominator == 1:
                quantized += 1
            if a[0] == 1 and b[0] == 1:
                milnor_checked += 1
                if int(28 * eells_kuiper(pair)) % 28 in MILNOR_RESIDUES:
                    milnor_ok += 1
    dt = time.time() - t0
    ok = checked > 0 and quantized == checked and milnor_ok == milnor_checked and dt < 120
    detail = (
        f"{quantized}/{checked} homotopy spheres with 28s integral, "
        f"{milnor_ok}/{milnor_checked} a1=b1=1 pairs in the Milnor set"
    )
    return CriterionResult(7, "homotopy-sphere quantization", ok, detail, dt, 120)


def criterion_8() -> CriterionResult:
    """Field axioms, cos^2+sin^2 = 1, and float/exact defect agreement."""
    t0 = time.time()
    rng = random.Random(SEED_FIELD)
    axiom_ok = trig_ok = 0
    for case in range(500):
        if case % 2 == 0:
            n = rng.randint(2, 120)
            d = CyclotomicElement.zero(n).num.__len__()
            def rnd():
                return CyclotomicElement.from_coeffs(
                    n, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d)]
                )
            x, y, z = rnd(), rnd(), rnd()
            good = (x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z
            if not x.is_zero():
                good = good and x * x.inverse() == 1
            axiom_ok += good
        else:
            b = rng.randint(1, 30)
            a = rng.randint(-4 * b, 4 * b)
            c, s = cos_pi(a, b), sin_pi(a, b)
            m = math.lcm(c.n, s.n)
            cl, sl = change_conductor(c, m), change_conductor(s, m)
            trig_ok += (cl * cl + sl * sl) == 1
    frng = random.Random(SEED_FLOAT)
    float_ok = 0
    for _ in range(200):
        args = _random_defect_args(frng)
        exact = defect_D_exact(args)
        approx = defect_D_float(args)
        if abs(approx - float(exact)) <= 1e-9 * max(1.0, abs(float(exact))):
            float_ok += 1
    dt = time.time() - t0
    ok = axiom_ok == 250 and trig_ok == 250 and float_ok == 200 and dt < 60
    detail = (
        f"axioms {axiom_ok}/250, cos^2+sin^2 {trig_ok}/250, float-vs-exact {float_ok}/200"
    )
    return CriterionResult(8, "arithmetic soundness", ok, detail, dt, 60)


ALL_CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
)


def run_all() -> list[CriterionResult]:
    return [fn() for fn in ALL_CRITERIA]
