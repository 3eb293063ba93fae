#pragma once

#include <stdexcept>
#include <string>

namespace zamobelt {

// Every failure carries a code. Codes split into two families: input or
// resource problems (bad arguments, guards) and falsified claims, where the
// engine computed something that contradicts an expected theorem.
enum class ErrorCode {
  // input / guard
  index_out_of_range,
  arity_mismatch,
  not_bipartite,
  not_skew_symmetrizable,
  not_recurrent,
  not_admissible,
  orbit_adjacency,
  search_bound_exceeded,
  unknown_name,
  invalid_rank,
  invalid_input,
  division_by_zero,
  zero_polynomial,
  term_guard_exceeded,
  step_guard_exceeded,
  entry_overflow,
  frozen_vertex,
  not_divisible,
  // falsified claims
  laurent_phenomenon_violation,
  positivity_violation,
  no_permutation_match,
  not_automorphism,
  order_exceeds_two,
  color_parity_mismatch,
  sign_coherence_violation,
  not_green_at_step,
  not_maximal,
  not_permutation,
  not_component_preserving,
  separation_mismatch,
  no_isomorphism,
  mismatch_with_symbolic_sigma,
};

const char* error_code_name(ErrorCode code);

// True for codes that mean "a claim was checked and came out false".
bool is_falsification(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zamobelt
