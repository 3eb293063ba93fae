#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zamobelt/belt.hpp"
#include "zamobelt/catalog.hpp"
#include "zamobelt/experiment.hpp"
#include "zamobelt/green.hpp"
#include "zamobelt/io.hpp"
#include "zamobelt/tropical.hpp"

namespace py = pybind11;
using namespace zamobelt;

namespace {

// Catalog name, or an inline bigraph JSON document.
Bigraph resolve(const std::string& target) {
  if (!target.empty() && target.front() == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(target);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::invalid_input, e.what());
    }
    return bigraph_from_json(doc);
  }
  return catalog(target);
}

Labeling labeling_from(const std::vector<std::string>& values) {
  Labeling l;
  for (const auto& v : values) {
    mpq_class q;
    if (q.set_str(v, 10) != 0) throw Error(ErrorCode::invalid_input, "bad rational '" + v + "'");
    q.canonicalize();
    l.lambda.push_back(q);
  }
  return l;
}

py::dict half_period_dict(const std::string& target) {
  const auto r = half_period(resolve(target));
  py::dict d;
  d["N"] = r.N;
  d["sigma"] = r.sigma.cycles();
  d["perm"] = r.sigma.perm;
  d["color_behavior"] = to_string(r.color_behavior);
  d["order"] = r.order;
  d["identity"] = r.identity;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bipartite belt periodicity engine";

  static py::exception<Error> base_error(m, "ZamobeltError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(base_error)(e.what());
      exc.attr("code") = error_code_name(e.code());
      exc.attr("falsification") = is_falsification(e.code());
      py::set_error(base_error, exc);
    }
  });

  py::class_<LaurentPoly>(m, "LaurentPoly")
      .def(py::init([](const std::string& text, std::size_t nvars) {
             return LaurentPoly::parse(text, nvars);
           }),
           py::arg("text"), py::arg("nvars"))
      .def_property_readonly("nvars", &LaurentPoly::nvars)
      .def("__len__", &LaurentPoly::size)
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly('" + p.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("div_exact", [](const LaurentPoly& a, const LaurentPoly& b) { return div_exact(a, b); })
      .def("degree_profile", [](const LaurentPoly& a) { return degree_profile(a).degrees; })
      .def("denominator_vector", &denominator_vector);

  m.def("catalog_names", &catalog_sweep_names);
  m.def("catalog_version", &catalog_version_hash);
  m.def("bigraph_json", [](const std::string& target) { return bigraph_to_json(resolve(target)).dump(); });
  m.def("mutate", [](const std::vector<std::vector<std::int64_t>>& b, std::size_t k) {
    return mutate(IntMatrix::from_rows(b), k).to_rows();
  });
  m.def("is_recurrent", [](const std::string& target) { return is_recurrent(resolve(target)); });
  m.def("run_belt", [](const std::string& target, int steps) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : run_belt(resolve(target), steps)) {
      std::vector<std::string> row;
      for (const auto& v : s.values) row.push_back(v.to_string());
      out.push_back(row);
    }
    return out;
  });
  m.def("half_period", &half_period_dict);
  m.def("green_certificates", [](const std::string& target) {
    const auto g = resolve(target);
    const auto [w, b] = verify_bipartite_belt_mgs(g);
    nlohmann::json doc = {{"whiteFirst", certificate_to_json(w, *g.h_gamma(), *g.h_delta())},
                          {"blackFirst", certificate_to_json(b, *g.h_gamma(), *g.h_delta())}};
    return doc.dump();
  });
  m.def("frozen_isomorphism", [](const std::string& target) {
    return frozen_isomorphism_check(resolve(target)).cycles();
  });
  m.def("tropical_period", [](const std::string& target, const std::vector<std::string>& lambda,
                              int max_steps) {
    return tropical_period(resolve(target), labeling_from(lambda), max_steps);
  });
  m.def("colored_census", [](const std::string& target) {
    const auto r = colored_census(resolve(target));
    const ColoredCensus& c = r.rerun ? *r.rerun : r.primary;
    py::dict d;
    d["red"] = c.red;
    d["blue"] = c.blue;
    d["ties"] = c.ties;
    d["blue_times"] = c.blue_times;
    d["rerun"] = r.rerun.has_value();
    return d;
  });
  m.def("run_experiment", [](const std::string& config_json) {
    ExperimentResult r;
    {
      py::gil_scoped_release release;
      r = run_experiment(ExperimentConfig::from_json(nlohmann::json::parse(config_json)));
    }
    return py::make_tuple(r.exit_code, r.document);
  });
}
