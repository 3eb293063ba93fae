#include "zamobelt/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace zamobelt {

using nlohmann::json;

Bigraph bigraph_from_json(const json& doc, std::string name) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::invalid_input, "bigraph JSON must be an object");
    const auto n = doc.at("n").get<std::size_t>();
    const auto rows = doc.at("b").get<std::vector<std::vector<std::int64_t>>>();
    if (rows.size() != n) throw Error(ErrorCode::arity_mismatch, "b must have n rows");
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorCode::arity_mismatch, "b must be n x n");
    }
    std::optional<Bipartition> coloring;
    if (doc.contains("epsilon")) {
      std::vector<Color> eps;
      for (const auto& e : doc.at("epsilon").get<std::vector<std::string>>()) {
        if (e == "w") eps.push_back(Color::white);
        else if (e == "b") eps.push_back(Color::black);
        else throw Error(ErrorCode::invalid_input, "epsilon entries must be \"w\" or \"b\"");
      }
      if (eps.size() != n) throw Error(ErrorCode::arity_mismatch, "epsilon must have n entries");
      coloring = Bipartition(std::move(eps));
    }
    if (name.empty()) name = doc.value("name", std::string("input"));
    return decompose(ExchangeMatrix(IntMatrix::from_rows(rows)), coloring, std::move(name));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_input, std::string("bigraph JSON: ") + e.what());
  }
}

namespace {

json components_json(const std::vector<Component>& comps) {
  json out = json::array();
  for (const auto& c : comps) {
    std::vector<int> labels;
    for (int v : c.vertices) labels.push_back(v + 1);
    json entry = {{"vertices", labels}, {"type", c.type.name()}};
    entry["coxeter"] = c.coxeter ? json(*c.coxeter) : json(nullptr);
    out.push_back(entry);
  }
  return out;
}

}  // namespace

json bigraph_to_json(const Bigraph& g) {
  std::vector<std::string> eps;
  for (auto c : g.coloring.colors()) eps.push_back(c == Color::white ? "w" : "b");
  std::vector<std::string> sym;
  for (const auto& c : g.base.symmetrizer()) sym.push_back(c.get_str());
  json doc = {
      {"name", g.name},
      {"n", g.size()},
      {"b", g.base.matrix().to_rows()},
      {"epsilon", eps},
      {"symmetrizer", sym},
      {"gamma", g.gamma.to_rows()},
      {"delta", g.delta.to_rows()},
      {"gammaComponents", components_json(g.gamma_components)},
      {"deltaComponents", components_json(g.delta_components)},
  };
  doc["hGamma"] = g.h_gamma() ? json(*g.h_gamma()) : json(nullptr);
  doc["hDelta"] = g.h_delta() ? json(*g.h_delta()) : json(nullptr);
  return doc;
}

Bigraph load_bigraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_input, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_input, path + ": " + e.what());
  }
  return bigraph_from_json(doc, std::filesystem::path(path).stem().string());
}

json certificate_to_json(const GreenCertificate& cert, int h_gamma, int h_delta) {
  std::vector<int> seq;
  for (int v : cert.sequence) seq.push_back(v + 1);
  json doc = {
      {"sequence", seq},
      {"lengths", {h_gamma, h_delta}},
      {"factors", cert.factors},
      {"finalCIsMinusPermutation", cert.permutation.has_value()},
  };
  doc["permutation"] = cert.permutation ? json(cert.permutation->cycles()) : json(nullptr);
  return doc;
}

}  // namespace zamobelt
