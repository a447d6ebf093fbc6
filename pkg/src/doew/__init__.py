"""Decomposable optimal entanglement witnesses for two-particle momentum-spin states.

A small numpy library that builds the 16-dimensional two-particle state
family, derives optimal entanglement witnesses in closed form and by SVD,
applies Wigner-rotation kinematics, and quantifies entanglement under the
momentum-sector filtered boost family.  Every closed form is paired with a
brute-force linear-algebra oracle in the test suite.
"""

__version__ = "0.1.0"

from .linalg import (dagger, hermitian_eigensystem, hs_norm, partial_trace,
                     partial_transpose, psd_sqrt, tensor_product, trace_norm_sym)
from .measures import (ConcurrenceReport, EntropyReport, doew_from_edge,
                       entropy_formula, entropy_pure, generalized_concurrence,
                       hs_distance, kappa, reduced_eigenvalue_pair,
                       relativistic_witness_value)
from .ppt import (FeasibleRegionReport, closed_form_momentum_pt, edge_state,
                  edge_weights, feasible_region_check,
                  momentum_label_pt_spectrum, ppt_spectrum)
from .relativity import (WignerRotation, boost_matrix, boost_mixture,
                         boost_pure, effective_angles, effective_boost_mixture,
                         effective_boost_pure, momentum_attenuation,
                         single_particle_boost_unitary, wigner_half_angle,
                         wigner_matrix, wigner_rotation_oracle)
from .states import (BELL_TYPE_ANGLE, MixtureWeights, build_mixture,
                     one_particle_bell, phi_state, two_particle_bell,
                     two_particle_momenta)
from .witness import (TieError, WitnessCoefficients, b_coefficients,
                      coefficient_table, correlation_matrix, detect,
                      kkt_witness, operator_basis, random_product_states,
                      separability_floor_check, witness_operator)

__all__ = [
    "BELL_TYPE_ANGLE", "ConcurrenceReport", "EntropyReport",
    "FeasibleRegionReport", "MixtureWeights", "TieError", "WignerRotation",
    "WitnessCoefficients", "b_coefficients", "boost_matrix", "boost_mixture",
    "boost_pure", "build_mixture", "closed_form_momentum_pt",
    "coefficient_table", "correlation_matrix", "dagger", "detect",
    "doew_from_edge", "edge_state", "edge_weights", "effective_angles",
    "effective_boost_mixture", "effective_boost_pure", "entropy_formula",
    "entropy_pure", "feasible_region_check", "generalized_concurrence",
    "hermitian_eigensystem", "hs_distance", "hs_norm", "kappa", "kkt_witness",
    "momentum_attenuation", "momentum_label_pt_spectrum", "one_particle_bell",
    "operator_basis", "partial_trace", "partial_transpose", "phi_state",
    "ppt_spectrum", "psd_sqrt", "random_product_states",
    "reduced_eigenvalue_pair", "relativistic_witness_value",
    "separability_floor_check", "single_particle_boost_unitary",
    "tensor_product", "trace_norm_sym", "two_particle_bell",
    "two_particle_momenta", "wigner_half_angle", "wigner_matrix",
    "wigner_rotation_oracle", "witness_operator",
]
