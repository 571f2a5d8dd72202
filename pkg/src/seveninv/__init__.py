"""Exact-arithmetic diffeomorphism and moduli-space invariants of the
2-connected 7-manifolds built from pairs of integer triples."""

from .cyclotomic import (
    ConductorMismatchError,
    CyclotomicElement,
    NotRationalError,
    change_conductor,
    cos_pi,
    cyclotomic_polynomial,
    euler_phi,
    rat_normalize,
    sin_pi,
    zeta,
)
from .defect import (
    DefectArgs,
    DegenerateDefectArgumentError,
    defect_D_exact,
    defect_D_float,
)
from .families import (
    CensusError,
    CensusReport,
    FamilyCoefficients,
    Verdict,
    VerdictKind,
    bezout_pair,
    diffeo_decide,
    family_coefficients,
    family_member,
    milnor_membership,
    moduli_census,
    paper_stride,
)
from .invariants import (
    DegenerateH4Error,
    InvalidPairError,
    InvariantReport,
    ParamPair,
    Triple,
    base_integrals,
    eells_kuiper,
    h4_order,
    invariant_report,
    linking_value,
    m_value,
    p1_coefficient,
    p_wedge_q,
    s_invariant,
    sign_w,
    validate_pair,
)
from .oracle import (
    DegenerateStratumError,
    OracleCheck,
    StratumData,
    lambda_s_integral,
    oracle_check,
    strata,
    stratum_integral,
)

__version__ = "0.1.0"
