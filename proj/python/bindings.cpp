#include "ezdlab/ezd.hpp"
#include "ezdlab/json_io.hpp"
#include "ezdlab/lab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace ezdlab;

namespace {

// Results cross the boundary as JSON text; the Python package decodes them.
struct Ring {
  IdealSpec spec;
  unsigned bound;
  GradedQuotient quotient;
};

Ring load(const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound, bool extend) {
  IdealSpec spec = parse_ideal(ideal, nvars);
  unsigned d = bound ? *bound : default_degree_bound(spec);
  if (extend) d = effective_degree_bound(spec, d);
  GradedQuotient q = build_quotient(spec, d);
  return {std::move(spec), d, std::move(q)};
}

Json with_ring(Json payload, const Ring& r) {
  payload["ideal"] = to_string(r.spec);
  payload["kind"] = to_string(r.spec.kind);
  payload["nvars"] = r.spec.nvars;
  payload["bound"] = r.bound;
  return payload;
}

ScanConfig scan_config(std::size_t nvars, unsigned max_degree, unsigned bound, std::size_t trials, std::uint64_t seed,
                       std::size_t workers, bool symmetry, bool require_artinian) {
  ScanConfig cfg;
  cfg.nvars = nvars;
  cfg.max_degree = max_degree;
  cfg.bound = bound;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.symmetry_reduction = symmetry;
  cfg.require_artinian = require_artinian;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in graded quotients of polynomial rings";
  m.attr("schema_version") = kSchemaVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<NonHomogeneousError>(m, "NonHomogeneousError", PyExc_ValueError);

  m.def("normalize_ideal", [](const std::string& ideal, std::size_t nvars) {
    const IdealSpec spec = parse_ideal(ideal, nvars);
    return Json{{"ideal", to_string(spec)}, {"kind", to_string(spec.kind)}, {"nvars", spec.nvars}}.dump();
  }, py::arg("ideal"), py::arg("nvars") = 0);

  m.def("hilbert", [](const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound) {
    const Ring r = load(ideal, nvars, bound, false);
    Json p = to_json(hilbert_function(r.quotient));
    p["artinian"] = is_artinian_within(r.quotient);
    return with_ring(std::move(p), r).dump();
  }, py::arg("ideal"), py::arg("nvars") = 0, py::arg("bound") = py::none());

  m.def("generic_ezd", [](const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound,
                          std::size_t trials, std::uint64_t seed) {
    const Ring r = load(ideal, nvars, bound, true);
    return with_ring(to_json(generic_ezd_decision(r.quotient, trials, seed)), r).dump();
  }, py::arg("ideal"), py::arg("nvars") = 0, py::arg("bound") = py::none(), py::arg("trials") = 3,
     py::arg("seed") = 0);

  m.def("ezd_pair", [](const std::string& ideal, const std::string& x, const std::string& y, std::size_t nvars,
                       std::optional<unsigned> bound) {
    const Ring r = load(ideal, nvars, bound, true);
    const auto n = r.spec.nvars;
    return with_ring(to_json(is_ezd_pair(r.quotient, parse_poly(x, n), parse_poly(y, n))), r).dump();
  }, py::arg("ideal"), py::arg("x"), py::arg("y"), py::arg("nvars") = 0, py::arg("bound") = py::none());

  m.def("ezd_complement", [](const std::string& ideal, const std::string& form, std::size_t nvars,
                             std::optional<unsigned> bound) {
    const Ring r = load(ideal, nvars, bound, true);
    const auto s = search_ezd_complement(r.quotient, parse_poly(form, r.spec.nvars));
    Json p{{"degree", s.degree ? Json(*s.degree) : Json(nullptr)},
           {"annihilator_dim", s.annihilator_dim},
           {"q", s.q ? Json(to_string(*s.q)) : Json(nullptr)},
           {"report", s.report ? to_json(*s.report) : Json(nullptr)},
           {"reason", s.reason}};
    return with_ring(std::move(p), r).dump();
  }, py::arg("ideal"), py::arg("form"), py::arg("nvars") = 0, py::arg("bound") = py::none());

  m.def("wlp", [](const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound, std::size_t trials,
                  std::uint64_t seed) {
    const Ring r = load(ideal, nvars, bound, true);
    return with_ring(to_json(wlp_check(r.quotient, trials, seed)), r).dump();
  }, py::arg("ideal"), py::arg("nvars") = 0, py::arg("bound") = py::none(), py::arg("trials") = 3,
     py::arg("seed") = 0);

  m.def("socle", [](const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound) {
    const Ring r = load(ideal, nvars, bound, true);
    return with_ring(to_json(socle_dims(r.quotient)), r).dump();
  }, py::arg("ideal"), py::arg("nvars") = 0, py::arg("bound") = py::none());

  m.def("yoshino", [](const std::string& ideal, std::size_t nvars, std::optional<unsigned> bound) {
    const Ring r = load(ideal, nvars, bound, true);
    Json p = to_json(yoshino_conditions(r.quotient));
    p["N"] = generator_count_N(r.spec.nvars);
    p["minimal_generators"] = minimal_generator_count(r.spec);
    return with_ring(std::move(p), r).dump();
  }, py::arg("ideal"), py::arg("nvars") = 0, py::arg("bound") = py::none());

  m.def("generator_count_N", &generator_count_N, py::arg("n"));

  m.def("example", [](std::size_t n, unsigned d) { return to_json(closed_form_example(n, d)).dump(); }, py::arg("n"),
        py::arg("d"));

  m.def("scan", [](const std::string& family, std::size_t nvars, unsigned max_degree, unsigned bound,
                   std::size_t trials, std::uint64_t seed, std::size_t workers, bool symmetry, bool require_artinian,
                   bool full) {
    const ScanConfig cfg = scan_config(nvars, max_degree, bound, trials, seed, workers, symmetry, require_artinian);
    ScanReport report;
    {
      py::gil_scoped_release release;
      if (family == "monomial") report = conjecture_scan_monomial(cfg);
      else if (family == "binomial") report = conjecture_scan_binomial(cfg);
      else throw std::invalid_argument("unknown scan family '" + family + "'");
    }
    return to_json(report, full).dump();
  }, py::arg("family"), py::arg("nvars") = 2, py::arg("max_degree") = 2, py::arg("bound") = 0,
     py::arg("trials") = 3, py::arg("seed") = 0, py::arg("workers") = 1, py::arg("symmetry") = true,
     py::arg("require_artinian") = true, py::arg("full") = false);

  m.def("rank", [](const std::vector<std::vector<std::string>>& rows) {
    std::vector<Vector> parsed;
    for (const auto& row : rows) {
      Vector v;
      for (const auto& x : row) v.push_back(parse_rational(x));
      parsed.push_back(std::move(v));
    }
    return rank(QMatrix::from_rows(parsed));
  }, py::arg("rows"));
}
