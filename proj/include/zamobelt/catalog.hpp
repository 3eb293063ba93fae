#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zamobelt/bigraph.hpp"

namespace zamobelt {

/// Built-in bigraphs: "A5", "F4" (as Λ⊗A1), "A2xA3", "fig1-A5starD4",
/// "fig2-F4xA2". Throws unknown_name.
Bigraph catalog(const std::string& name);

/// Names used by the default sweeps (rank ≤ 10).
std::vector<std::string> catalog_sweep_names();

/// The two figure instances, used by catalog-list.
std::vector<std::string> catalog_figure_names();

/// Stable hash of the catalog definitions; changes whenever an entry does.
std::uint64_t catalog_version_hash();
std::string catalog_version_string();

/// A folding source paired with its bicolored automorphism.
struct FoldPair {
  std::string source;
  Automorphism f;
  std::string folded_name;  // catalog name of the expected result
};

/// A3 -> C2 along (1 3), D4 -> G2 along the leg rotation (1 3 4).
std::vector<FoldPair> catalog_fold_pairs();

}  // namespace zamobelt
