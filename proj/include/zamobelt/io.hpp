#pragma once

#include <string>

#include <json.hpp>

#include "zamobelt/bigraph.hpp"
#include "zamobelt/green.hpp"

namespace zamobelt {

/// {"n": int, "b": [[int]], "epsilon": ["w"|"b"] (optional)}.
Bigraph bigraph_from_json(const nlohmann::json& doc, std::string name = {});
nlohmann::json bigraph_to_json(const Bigraph& g);
Bigraph load_bigraph_file(const std::string& path);

/// {"sequence", "lengths", "finalCIsMinusPermutation", "permutation"}.
nlohmann::json certificate_to_json(const GreenCertificate& cert, int h_gamma, int h_delta);

}  // namespace zamobelt
