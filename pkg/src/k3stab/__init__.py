"""Exact Bridgeland stability data on Picard-rank-one K3 surfaces."""
from .charge import (
    ExactComplex,
    Ordering,
    StabilityPoint,
    TwistedPolynomial,
    VXResult,
    central_charge,
    central_charge_squared_form,
    compare_gieseker,
    in_V_X,
    in_V_X_brute_force,
    lambda_,
    n_function,
    parse_point,
    phase_less,
    twisted_polynomial,
    twisted_polynomial_via_pairing,
)
from .criteria import (
    Assumption,
    BoundaryDecomposition,
    Certificate,
    Factor,
    Hypothesis,
    ModuliClassification,
    ModuliVerdict,
    Region,
    RegionVerdict,
    Theorem,
    Verdict,
    boundary_decomposition,
    bound_factor,
    certify,
    certify_A4,
    certify_A5,
    certify_A6,
    certify_A10,
    certify_A11,
    chi_positivity_C3,
    classify_moduli_B4,
    region_of,
    region_VL_pos,
)
from .lattice import (
    POINT,
    STRUCTURE_SHEAF,
    MukaiVector,
    SurfaceContext,
    euler_form,
    fine_moduli_gcd,
    is_isotropic,
    is_spherical,
    mukai_pairing,
    parse_context,
    parse_vector,
    self_pairing,
    spherical_reflect,
)
from .oracle import (
    Destabilizer,
    Grid,
    ScanRow,
    SearchBounds,
    Verification,
    VerificationStatus,
    WallCurve,
    WallPoint,
    enumerate_destabilizers,
    scan_region,
    verify_certificate,
    wall_locus,
)
from .rational import format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "Assumption",
    "BoundaryDecomposition",
    "Certificate",
    "Destabilizer",
    "ExactComplex",
    "Factor",
    "Grid",
    "Hypothesis",
    "ModuliClassification",
    "ModuliVerdict",
    "MukaiVector",
    "Ordering",
    "POINT",
    "Region",
    "RegionVerdict",
    "STRUCTURE_SHEAF",
    "ScanRow",
    "SearchBounds",
    "StabilityPoint",
    "SurfaceContext",
    "Theorem",
    "TwistedPolynomial",
    "VXResult",
    "Verdict",
    "Verification",
    "VerificationStatus",
    "WallCurve",
    "WallPoint",
    "bound_factor",
    "boundary_decomposition",
    "central_charge",
    "central_charge_squared_form",
    "certify",
    "certify_A10",
    "certify_A11",
    "certify_A4",
    "certify_A5",
    "certify_A6",
    "chi_positivity_C3",
    "classify_moduli_B4",
    "compare_gieseker",
    "enumerate_destabilizers",
    "euler_form",
    "fine_moduli_gcd",
    "format_rational",
    "in_V_X",
    "in_V_X_brute_force",
    "is_isotropic",
    "is_spherical",
    "lambda_",
    "mukai_pairing",
    "n_function",
    "parse_context",
    "parse_point",
    "parse_rational",
    "parse_vector",
    "phase_less",
    "region_VL_pos",
    "region_of",
    "scan_region",
    "self_pairing",
    "spherical_reflect",
    "twisted_polynomial",
    "twisted_polynomial_via_pairing",
    "verify_certificate",
    "wall_locus",
]
