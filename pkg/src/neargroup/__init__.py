"""Exact constructions and coherence checks for near-group fusion categories."""

from .associators import (
    EXAMPLE_VARIANTS,
    IndexAlgebra,
    NearGroupData,
    NearGroupPrimitive,
    assemble_mu,
    build_index_algebra,
    construct_from_primitive,
    construct_standard,
    data_from_obj,
    data_to_obj,
    example_data,
)
from .braiding import (
    BraidingData,
    TwistData,
    braiding_record,
    classify,
    enumerate_braidings,
    hexagon_constraints,
    is_balanced,
    is_symmetric,
    reduced_solutions,
    reverse_braiding,
    twist_solutions,
    verify_hexagons,
)
from .coherence import (
    TrivialGroupCandidate,
    TrivialGroupVerdict,
    VerificationReport,
    check_trivial_group_candidate,
    flip_det,
    flip_matrix,
    generic_pentagon_oracle,
    oracle_sweep,
    trivial_group_verdict,
    verify_15,
    verify_16_24,
    verify_all,
    verify_gamma_lambda,
    verify_mu_symmetries,
)
from .cyclotomic import Cyclotomic, cyclotomic_polynomial, lift_to_common_order, root_of_unity
from .fields import SmallField
from .groups import AbelianGroup, abelian_groups_of_order
from .matrix import Matrix
from .monoidal import enumerate_monoidal
from .pi_structures import (
    FieldTable,
    PiStructure,
    affine_group_fusion,
    field_from_pi,
    fields_isomorphic,
    find_all_pi,
    pi_from_field,
)

__all__ = [
    "AbelianGroup",
    "BraidingData",
    "Cyclotomic",
    "EXAMPLE_VARIANTS",
    "FieldTable",
    "IndexAlgebra",
    "Matrix",
    "NearGroupData",
    "NearGroupPrimitive",
    "PiStructure",
    "SmallField",
    "TrivialGroupCandidate",
    "TrivialGroupVerdict",
    "TwistData",
    "VerificationReport",
    "abelian_groups_of_order",
    "affine_group_fusion",
    "assemble_mu",
    "braiding_record",
    "build_index_algebra",
    "check_trivial_group_candidate",
    "classify",
    "construct_from_primitive",
    "construct_standard",
    "cyclotomic_polynomial",
    "data_from_obj",
    "data_to_obj",
    "enumerate_braidings",
    "enumerate_monoidal",
    "example_data",
    "field_from_pi",
    "fields_isomorphic",
    "find_all_pi",
    "flip_det",
    "flip_matrix",
    "generic_pentagon_oracle",
    "hexagon_constraints",
    "is_balanced",
    "is_symmetric",
    "lift_to_common_order",
    "oracle_sweep",
    "pi_from_field",
    "reduced_solutions",
    "reverse_braiding",
    "root_of_unity",
    "trivial_group_verdict",
    "twist_solutions",
    "verify_15",
    "verify_16_24",
    "verify_all",
    "verify_gamma_lambda",
    "verify_hexagons",
    "verify_mu_symmetries",
]
