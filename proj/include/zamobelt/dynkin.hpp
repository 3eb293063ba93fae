#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zamobelt/matrix.hpp"

namespace zamobelt {

// A finite type Dynkin diagram, or `unknown` for anything else.
struct DynkinType {
  char family = '?';  // 'A'..'G', '?' when unrecognized
  int rank = 0;

  bool known() const noexcept { return family != '?'; }
  std::string name() const;

  // Parses "A5", "E8", "G2", ... Throws Error(unknown_name / invalid_rank).
  static DynkinType parse(const std::string& name);

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Coxeter number from the hard-coded table. The table is cross-checked
// against root counts the first time it is consulted.
std::optional<int> coxeter_number(const DynkinType& type);

// Unsigned valued adjacency M of the diagram in standard labeling:
// M(i, j) = -a_ij for the Cartan matrix a_ij = 2(α_i, α_j)/(α_i, α_i).
// So B_n has M(n, n-1) = 2, C_n has M(n-1, n) = 2, F4 has M(2, 3) = 2,
// G2 has M(2, 1) = 3 (1-based).
IntMatrix dynkin_template(const DynkinType& type);

// Recognizes a connected valued graph given by its unsigned matrix.
DynkinType recognize_dynkin(const IntMatrix& unsigned_adjacency);

// All roots (positive and negative) of the root system whose Cartan matrix is
// a = 2I - M, in simple-root coordinates, generated as the orbit of the simple
// roots under simple reflections. Sorted.
std::vector<std::vector<int>> root_system(const IntMatrix& unsigned_adjacency);

// Positive roots only.
std::vector<std::vector<int>> positive_roots(const IntMatrix& unsigned_adjacency);

// Runs the table cross-check explicitly; throws if any entry disagrees with
// (#roots)/rank. Called once lazily by coxeter_number.
void verify_coxeter_table();

}  // namespace zamobelt
