#include "zamobelt/error.hpp"

namespace zamobelt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::not_bipartite: return "NotBipartite";
    case ErrorCode::not_skew_symmetrizable: return "NotSkewSymmetrizable";
    case ErrorCode::not_recurrent: return "NotRecurrent";
    case ErrorCode::not_admissible: return "NotAdmissible";
    case ErrorCode::orbit_adjacency: return "OrbitAdjacency";
    case ErrorCode::search_bound_exceeded: return "SearchBoundExceeded";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::invalid_rank: return "InvalidRank";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::zero_polynomial: return "ZeroPolynomial";
    case ErrorCode::term_guard_exceeded: return "TermGuardExceeded";
    case ErrorCode::step_guard_exceeded: return "StepGuardExceeded";
    case ErrorCode::entry_overflow: return "EntryOverflow";
    case ErrorCode::frozen_vertex: return "FrozenVertex";
    case ErrorCode::not_divisible: return "NotDivisible";
    case ErrorCode::laurent_phenomenon_violation: return "LaurentPhenomenonViolation";
    case ErrorCode::positivity_violation: return "PositivityViolation";
    case ErrorCode::no_permutation_match: return "NoPermutationMatch";
    case ErrorCode::not_automorphism: return "NotAutomorphism";
    case ErrorCode::order_exceeds_two: return "OrderExceedsTwo";
    case ErrorCode::color_parity_mismatch: return "ColorParityMismatch";
    case ErrorCode::sign_coherence_violation: return "SignCoherenceViolation";
    case ErrorCode::not_green_at_step: return "NotGreenAtStep";
    case ErrorCode::not_maximal: return "NotMaximal";
    case ErrorCode::not_permutation: return "NotPermutation";
    case ErrorCode::not_component_preserving: return "NotComponentPreserving";
    case ErrorCode::separation_mismatch: return "SeparationMismatch";
    case ErrorCode::no_isomorphism: return "NoIsomorphism";
    case ErrorCode::mismatch_with_symbolic_sigma: return "MismatchWithSymbolicSigma";
  }
  return "Unknown";
}

bool is_falsification(ErrorCode code) {
  return code >= ErrorCode::laurent_phenomenon_violation;
}

}  // namespace zamobelt
