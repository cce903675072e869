"""Exact construction of the RTT quantum affine superalgebra of gl(M,N)
on concrete modules over Q(q): Perk-Schultz R-matrix and its identities,
evaluation / Kirillov-Reshetikhin / gl(1,1) prime modules, characters,
cyclicity predicates with a closure oracle, and Gauss-decomposition
currents."""

from .field import (QRat, ZERO, ONE, Q, QINV, qint, q_pow, qrat_str,
                    parse_qrat, FactoredRatZ, INF, zeros_poles, ratz_str,
                    parse_ratz, RatZ, ModInt)
from .superlinalg import (GradedSpace, OpMat, SeriesOp, RowBasis,
                          natural_space, tensor_space, op_tensor,
                          op_identity, op_inverse, braiding, supertranspose,
                          coefficient_span, subspace_closure)
from .rmatrix import (PerkSchultz, build_perk_schultz, check_properties,
                      Projectors, hopf_pairing_value, check_rtt)
from .reps import (Rep, natural_finite, evaluate, eval_natural,
                   simple_finite_module, kr_module, gl11_prime, gl11_onedim,
                   dual_module, flip_MN, parity_shift, twist_series,
                   tensor_pair, tensor_reps)
from .chars import Character, character, bkk_character
from .tensorcyc import (TensorRep, tensor, EllWeight, CyclicityVerdict,
                        highest_ell_vectors, ell_weight_of,
                        is_highest_ell_weight, is_lowest_ell_weight,
                        web_predicate, simplicity_gl11, natural_cyclicity,
                        kr_cyclicity_sufficient, restrict_gl11_corner,
                        extreme_vector, closure_is_full, closure_verdicts,
                        specialize_rep, generator_ops)
from .gauss import (TruncSeries, GaussFactors, DrinfeldData, gauss_decompose,
                    quantum_bracket, bracket_left, bracket_right,
                    proportional, check_cartan, check_xx, check_k_commute,
                    zero_node_bracket, h1_bracket, x_minus_11_identity,
                    x_minus_i0_identity, default_order)
