"""Sign stability of mutation loops in cluster algebras.

Seeds and loops, tropical cluster transformations, c-, g- and
F-vector recursions, sign-cone polyhedra, stability checks, stretch
factors and entropy estimates.
"""

from ._poly import LPoly, NonExactDivision, TermBudgetExceeded
from .cgf import (CGFState, Snapshot, cgf_along_loop, cgf_along_word, cgf_step,
                  f_polynomials_along_word, verify_cgf_identities)
from .entropy import (EntropyEstimate, degree_growth_slope, entropy_bounds,
                      lyapunov_exponent, lyapunov_max_over_basis)
from .fm import fm_build, fm_invariant_cone, fm_matrix, fm_stability
from .polyhedra import (Cone, contains, cone_dim, extreme_rays, maps_into, point_in,
                        sign_cone, sign_cone_decomposition, sign_cone_normals,
                        stereographic_arcs)
from .seed import (ExchangeMatrix, MutationLoop, SeedError, e_check_matrix, e_matrix,
                   expand_loop_power, mutate_exchange_matrix, signed_mutation_matrices,
                   validate_loop, verify_e_identities)
from .spectral import (char_poly_exact, palindromic_sign, spectral_radius,
                       squarefree_part)
from .stability import (INCONCLUSIVE, NOT_STABLE, SIGN_STABLE, TWO_SIDED,
                        StabilityReport, check, heuristic_check, inductive_check,
                        orbit_sign_stabilization, perron_check, stable_data,
                        two_sided_check)
from .symbolic import (LaurentExpr, a_variables_along_word, cluster_a_mutate,
                       degree_bounds, separation_check, x_degree_lower_bound)
from .tropical import (apply_loop_trop, path_presentation_matrix, path_sign,
                       sign_string, traverse, trop_a_mutate, trop_x_mutate)

__version__ = "0.1.0"
