"""Exact arithmetic for Jacobi forms of rational matrix index."""

from .rational import (
    Rat,
    RationalMatrix,
    SnfResult,
    adjugate,
    bilinear_eval,
    gram_eval,
    is_positive_definite,
    is_positive_semidefinite,
    rat,
    snf,
    unimodular_completion,
    vec,
)
from .cyclotomic import CycScalar, RepMatrix, cyc_inv_sqrt, cyc_sqrt
from .discgroup import (
    DiscGroup,
    IndexSplit,
    LatticeQuotient,
    canonicalize,
    disc_group,
    is_admissible_index,
    qvalue,
    split_index,
)
from .heisenberg import (
    HeisenbergElement,
    OrbitAB,
    PiIsoResult,
    PiRep,
    central_scalar,
    gauss_sum,
    heisenberg_inverse,
    heisenberg_mul,
    orbit_alpha_beta,
    pi_isomorphism,
    pi_matrix,
    rho_M_matrix,
    rho_induced_matrix,
    rho_relations_report,
    signature_mod8,
)
from .theta import (
    FourierExpansion,
    evaluate_expansion,
    modularity_residual,
    theta_component,
    theta_multiplier,
    theta_shifted,
    theta_vector,
    truncation_estimate,
)
from .jacobi import (
    CertifyResult,
    ComponentVector,
    JacobiFormData,
    RhoMType,
    ThetaDecompType,
    TrivialType,
    central_character_check,
    certify_vanishing,
    symmetrize_expansion,
    theta_decompose,
    theta_reconstruct,
    vanishing_bound,
    vv_vanishing_bound,
)
from .lattice import (
    DegenerateReduction,
    ReducedBasis,
    ShortestVectors,
    VoronoiData,
    cvp_minimize,
    degenerate_index_reduce,
    ellipsoid_points,
    enumerate_coset_points,
    md,
    minkowski_reduce,
    rd,
    rd_upper_bound,
    shortest_vectors,
    voronoi_cell,
)
from .cycles import (
    CycleGeneratorSet,
    IndexClassInfo,
    MomentMatrix,
    cycle_generators,
    enumerate_index_classes,
    generator_bound,
)
from . import errors

__all__ = [
    "Rat",
    "RationalMatrix",
    "SnfResult",
    "adjugate",
    "bilinear_eval",
    "gram_eval",
    "is_positive_definite",
    "is_positive_semidefinite",
    "rat",
    "snf",
    "unimodular_completion",
    "vec",
    "CycScalar",
    "RepMatrix",
    "cyc_inv_sqrt",
    "cyc_sqrt",
    "DiscGroup",
    "IndexSplit",
    "LatticeQuotient",
    "canonicalize",
    "disc_group",
    "is_admissible_index",
    "qvalue",
    "split_index",
    "HeisenbergElement",
    "OrbitAB",
    "PiIsoResult",
    "PiRep",
    "central_scalar",
    "gauss_sum",
    "heisenberg_inverse",
    "heisenberg_mul",
    "orbit_alpha_beta",
    "pi_isomorphism",
    "pi_matrix",
    "rho_M_matrix",
    "rho_induced_matrix",
    "rho_relations_report",
    "signature_mod8",
    "FourierExpansion",
    "evaluate_expansion",
    "modularity_residual",
    "theta_component",
    "theta_multiplier",
    "theta_shifted",
    "theta_vector",
    "truncation_estimate",
    "CertifyResult",
    "ComponentVector",
    "JacobiFormData",
    "RhoMType",
    "ThetaDecompType",
    "TrivialType",
    "central_character_check",
    "certify_vanishing",
    "symmetrize_expansion",
    "theta_decompose",
    "theta_reconstruct",
    "vanishing_bound",
    "vv_vanishing_bound",
    "DegenerateReduction",
    "ReducedBasis",
    "ShortestVectors",
    "VoronoiData",
    "cvp_minimize",
    "degenerate_index_reduce",
    "ellipsoid_points",
    "enumerate_coset_points",
    "md",
    "minkowski_reduce",
    "rd",
    "rd_upper_bound",
    "shortest_vectors",
    "voronoi_cell",
    "CycleGeneratorSet",
    "IndexClassInfo",
    "MomentMatrix",
    "cycle_generators",
    "enumerate_index_classes",
    "generator_bound",
    "errors",
]
