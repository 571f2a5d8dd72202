import random
from fractions import Fraction

import pytest

from seveninv.families import (
    CensusError,
    VerdictKind,
    bezout_pair,
    diffeo_decide,
    family_coefficients,
    family_member,
    m_shift_delta,
    milnor_membership,
    moduli_census,
    paper_stride,
    shifted_bezout,
)
from seveninv.invariants import (
    Triple,
    defect_terms,
    eells_kuiper,
    h4_order,
    linking_value,
    s_invariant,
    validate_pair,
)
from seveninv.sweeps import random_valid_pair


def base_m():
    return validate_pair((-3, -3, 1), (1, 1, 1))


def test_family_member_examples():
    for k in (0, 1, 3):
        member = family_member(base_m(), k)
        assert member.a.entries == (-3, -3, 1)
        assert member.b.entries == (1, 4 * k + 1, 4 * k + 1)
    base2 = validate_pair((1, 1, 1), (1, 5, 1))
    m1 = family_member(base2, 1)
    assert m1.a.entries == (1, -3, -3) and m1.b.entries == (1, 5, 1)
    assert family_member(base2, 0) == base2


def test_family_members_stay_valid():
    rng = random.Random(501)
    for _ in range(15):
        base = random_valid_pair(rng, q_max=9, entry_bound=21)
        for i in (-4, -1, 2, 7):
            member = family_member(base, i)  # validates internally
            assert member.validated


def test_bezout_examples():
    assert bezout_pair(Triple(-3, -3, 1)) == (0, 1)
    assert bezout_pair(Triple(1, 1, 1)) == (1, 0)
    assert bezout_pair(Triple(1, 5, 1)) == (1, 0)
    e1, e0 = bezout_pair(Triple(9, 5, 9))
    assert e1 * 81 + e0 * ((25 - 81) // 8) == 1


def test_shifted_bezout_identity():
    rng = random.Random(502)
    for _ in range(10):
        base = random_valid_pair(rng, q_max=9, entry_bound=21)
        for i in (-2, 1, 5):
            e1_i, e0 = shifted_bezout(base, i)  # asserts the identity inside
            member = family_member(base, i)
            lhs = e1_i * member.a.t1**2 + e0 * ((member.a.t2**2 - member.a.t3**2) // 8)
            assert lhs == 1


def test_family_coefficients_examples():
    c = family_coefficients(base_m())
    assert (c.A, c.B, c.C) == (9, 18, 36)
    c2 = family_coefficients(validate_pair((1, 1, 1), (1, 5, 1)))
    assert (c2.A, c2.B, c2.C) == (3, 2, -4)


def test_family_polynomial_tracks_m():
    rng = random.Random(503)
    for _ in range(10):
        base = random_valid_pair(rng, q_max=9, entry_bound=21)
        c = family_coefficients(base)
        a1sq_b1sq = base.a.t1**2 * base.b.t1**2
        from seveninv.invariants import m_value

        for i in (-3, 2, 6):
            assert a1sq_b1sq * m_value(family_member(base, i)) == c.A + c.B * i + c.C * i * i


def test_nonconstancy_when_n_nonzero():
    rng = random.Random(504)
    for _ in range(25):
        base = random_valid_pair(rng, q_max=9, entry_bound=21, require_nonzero_n=True)
        c = family_coefficients(base)
        assert (c.B, c.C) != (0, 0)


def test_n_and_lk_invariant_along_families():
    rng = random.Random(505)
    for _ in range(12):
        base = random_valid_pair(rng, q_max=9, entry_bound=21, require_nonzero_n=True)
        n0, lk0 = h4_order(base), linking_value(base)
        for i in (-3, -1, 2, 4):
            member = family_member(base, i)
            assert h4_order(member) == n0
            assert linking_value(member) == lk0


def test_s_difference_matches_m_shift_when_defects_vanish():
    # with |a1| = |b1| = 1 both defect terms are empty sums, so the whole
    # difference comes from the moving m^2 term
    base = validate_pair((1, 1, 1), (1, 5, 1))
    s0 = s_invariant(base)
    for i in range(-3, 4):
        assert s_invariant(family_member(base, i)) - s0 == m_shift_delta(base, i)


def test_defect_terms_drift_along_generic_families():
    # the defect summands are not constant in general: the linear prefactor
    # in the defect sum picks up the index shift (documented engine behavior)
    base = validate_pair((-3, -3, 1), (1, 5, 1))
    d0 = defect_terms(base)
    drifted = defect_terms(family_member(base, 1))
    assert drifted != d0
    s_delta = s_invariant(family_member(base, 1)) - s_invariant(base)
    assert s_delta != m_shift_delta(base, 1)
    assert s_delta == m_shift_delta(base, 1) - drifted[0] + d0[0]


def test_mu_stable_at_paper_stride():
    for base in (base_m(), validate_pair((-3, -3, 1), (1, 5, 1))):
        stride = paper_stride(base)
        mu0 = eells_kuiper(base)
        assert eells_kuiper(family_member(base, stride)) == mu0
        assert eells_kuiper(family_member(base, -stride)) == mu0


def test_paper_stride_value():
    assert paper_stride(base_m()) == 2**5 * 7 * 1 * 9 * 1


def test_diffeo_decide_different_h4():
    v = diffeo_decide(base_m(), validate_pair((1, 1, 1), (1, 5, 1)))
    assert v.kind is VerdictKind.NOT_DIFFEOMORPHIC
    assert "H^4" in v.reason


def test_diffeo_decide_even_order_undecidable():
    pair = validate_pair((-3, -3, 1), (1, 5, 1))  # n = 26
    v = diffeo_decide(pair, pair)
    assert v.kind is VerdictKind.UNDECIDABLE
    assert "even" in v.reason


def test_diffeo_decide_p1_unavailable_undecidable():
    pair = validate_pair((-3, -3, 1), (9, 5, 9))  # gcd(a1, b1) = 3, n odd?
    if abs(h4_order(pair)) % 2 == 1:
        v = diffeo_decide(pair, pair)
        assert v.kind is VerdictKind.UNDECIDABLE


def test_diffeo_decide_family_at_stride():
    base = base_m()
    far = family_member(base, paper_stride(base))
    v = diffeo_decide(base, far)
    assert v.kind is VerdictKind.DIFFEOMORPHIC and v.witness_unit == 1
    assert s_invariant(base) != s_invariant(far)


def test_diffeo_decide_odd_order_with_unit_witness():
    # two manifolds with |n| = 3 and matching invariants up to a generator swap
    p = validate_pair((1, 1, 1), (1, 5, 1))
    v = diffeo_decide(p, p)
    assert v.kind is VerdictKind.DIFFEOMORPHIC
    # the witness must satisfy the congruences it claims
    n = abs(h4_order(p))
    from seveninv.invariants import linking_scaled, p1_coefficient

    u = v.witness_unit
    assert (u * u * linking_scaled(p) - linking_scaled(p)) % n == 0
    c = p1_coefficient(p)[0]
    assert (u * c - v.witness_sign * c) % n == 0


def test_moduli_census():
    rep = moduli_census(base_m(), 5)
    assert rep.stride == 2016
    assert len(rep.indices) == 5
    assert len(rep.distinct_abs_s) == 5
    assert all(v.kind is VerdictKind.DIFFEOMORPHIC for v in rep.verdicts)
    d = rep.to_json_dict()
    assert d["stride"] == 2016 and len(d["s_values"]) == 5


def test_moduli_census_count_one():
    rep = moduli_census(base_m(), 1)
    assert len(rep.distinct_abs_s) == 1


def test_moduli_census_rejects_even_order():
    with pytest.raises(ValueError):
        moduli_census(validate_pair((-3, -3, 1), (1, 5, 1)), 2)


def test_milnor_membership():
    assert milnor_membership(base_m()) == "milnor"  # mu = 0: the round sphere
    assert milnor_membership(validate_pair((-3, -3, 1), (1, 5, 5))) == "non_milnor"
    assert milnor_membership(validate_pair((1, 1, 1), (1, 5, 1))) == "not_homotopy_sphere"
