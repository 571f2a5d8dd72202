import math
import random
from fractions import Fraction

import pytest

from seveninv.cyclotomic import change_conductor, cos_pi, sin_pi
from seveninv.defect import (
    DefectArgs,
    DegenerateDefectArgumentError,
    defect_D_exact,
    defect_D_float,
)

CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def reference_defect(q: int, ps: tuple[int, int, int]) -> Fraction:
    """Slow reference evaluation: literal cyclotomic field arithmetic with
    cos_pi/sin_pi values lifted into one working conductor."""
    qa = abs(q)
    if qa == 1:
        return Fraction(0)
    n = 4 * qa
    total = None
    for l in range(1, (qa - 1) // 2 + 1):
        cos = [change_conductor(cos_pi(p * l * (1 if q > 0 else -1), qa), n) for p in ps]
        sin = [change_conductor(sin_pi(p * l * (1 if q > 0 else -1), qa), n) for p in ps]
        for i, j, k in CYCLIC:
            term = (
                (cos[i] * 14 + cos[j] * cos[k])
                / (sin[i] * sin[i] * sin[j] * sin[k])
                * ps[i]
            )
            total = term if total is None else total + term
    return total.to_rational() / (2**5 * 7 * q * q)


def test_anchor_values():
    assert defect_D_exact(DefectArgs(3, 4, -2, 4)) == Fraction(-1, 28)
    assert defect_D_exact(DefectArgs(-3, 4, -2, 4)) == Fraction(-1, 28)
    assert defect_D_exact(DefectArgs(3, 4, -4, -2)) == Fraction(1, 28)
    assert defect_D_exact(DefectArgs(1, 4, -2, 4)) == 0
    assert defect_D_exact(DefectArgs(1, 4, 2, 6)) == 0
    assert defect_D_float(DefectArgs(1, 4, 2, 6)) == 0.0
    assert abs(defect_D_float(DefectArgs(3, 4, -2, 4)) - (-1 / 28)) < 1e-12


def test_argument_validation():
    with pytest.raises(DegenerateDefectArgumentError):
        DefectArgs(0, 1, 1, 2)
    with pytest.raises(DegenerateDefectArgumentError):
        DefectArgs(4, 1, 1, 2)
    with pytest.raises(DegenerateDefectArgumentError):
        DefectArgs(3, 6, 1, 1)  # gcd(3, 6) = 3
    with pytest.raises(DegenerateDefectArgumentError):
        DefectArgs(5, 1, 1, 1)  # odd parity sum: value would be irrational


def _random_args(rng, q_bound):
    while True:
        q = rng.choice([x for x in range(-q_bound, q_bound + 1) if x % 2 != 0])
        ps = [rng.randint(-60, 60) for _ in range(3)]
        if sum(ps) % 2 != 0:
            continue
        if all(p != 0 and math.gcd(abs(q), abs(p)) == 1 for p in ps):
            return q, tuple(ps)


def test_symmetry_properties_exact():
    rng = random.Random(201)
    for _ in range(25):
        q, ps = _random_args(rng, 49)
        base = defect_D_exact(DefectArgs(q, *ps))
        # full permutation group
        assert defect_D_exact(DefectArgs(q, ps[1], ps[2], ps[0])) == base
        assert defect_D_exact(DefectArgs(q, ps[1], ps[0], ps[2])) == base
        assert defect_D_exact(DefectArgs(-q, *ps)) == base
        for slot in range(3):
            flipped = list(ps)
            flipped[slot] = -flipped[slot]
            assert defect_D_exact(DefectArgs(q, *flipped)) == -base


def test_float_agrees_with_exact():
    rng = random.Random(202)
    for _ in range(25):
        q, ps = _random_args(rng, 99)
        exact = float(defect_D_exact(DefectArgs(q, *ps)))
        approx = defect_D_float(DefectArgs(q, *ps))
        assert abs(approx - exact) <= 1e-9 * max(1.0, abs(exact)), (q, ps)


def test_matches_literal_field_reference():
    rng = random.Random(203)
    cases = [(3, (4, -2, 4)), (5, (4, 4, -2)), (-7, (4, -4, 10)), (9, (4, -8, 2))]
    for _ in range(4):
        cases.append(_random_args(rng, 13))
    for q, ps in cases:
        assert defect_D_exact(DefectArgs(q, *ps)) == reference_defect(q, ps), (q, ps)


def test_shift_by_two_q_drifts_linearly():
    # The linear p_i prefactor makes the sum change under p3 -> p3 + 2q by
    # 2q/(2^5*7*q^2) times the cyclic coefficient of p3; it is not periodic.
    assert defect_D_exact(DefectArgs(-3, 4, -4, -2)) == Fraction(1, 28)
    assert defect_D_exact(DefectArgs(-3, 4, -4, -74)) == Fraction(-11, 28)
    base = defect_D_exact(DefectArgs(-3, 4, -4, -2))
    step = defect_D_exact(DefectArgs(-3, 4, -4, -2 - 6)) - base
    for t in (2, 3, 12):
        shifted = defect_D_exact(DefectArgs(-3, 4, -4, -2 - 6 * t))
        assert shifted - base == t * step, t


def test_values_are_cached_consistently():
    a = defect_D_exact(DefectArgs(11, 4, 2, 6))
    b = defect_D_exact(DefectArgs(11, 4, 2, 6))
    assert a == b
