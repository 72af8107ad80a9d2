#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "anderson/cli.hpp"
#include "anderson/literals.hpp"
#include "anderson/report.hpp"

namespace py = pybind11;
using namespace anderson;

namespace {

std::string spectrum_json(const std::string& ring_literal, int samples,
                          std::uint64_t seed) {
  RingSpec ring = parse_ring(ring_literal);
  return render_json(nlohmann::json(maximal_spectrum(ring, samples, seed)));
}

bool check_predicate(const std::string& ring_literal,
                     const std::string& predicate) {
  RingPredicates preds = predicates(parse_ring(ring_literal));
  if (predicate == "vnr") return preds.is_vnr;
  if (predicate == "reduced") return preds.is_reduced;
  if (predicate == "pir") return preds.is_pir;
  if (predicate == "local") return preds.is_local;
  if (predicate == "field") return preds.is_field;
  throw std::invalid_argument("unknown predicate '" + predicate + "'");
}

std::string member_outcome(const std::string& fraction,
                           const std::string& ideal_spec, int degree) {
  LocElem x = parse_fraction(fraction);
  MembershipPolicy policy{degree, degree};
  LocIdeal ideal = parse_ideal_spec(x.ring(), ideal_spec, policy);
  MembershipResult result = membership(x, ideal);
  switch (result.status) {
    case MembershipStatus::Member: return "member";
    case MembershipStatus::NotMember: return "not-member";
    default:
      return "not-found-up-to(" + std::to_string(result.bound.value_or(degree)) +
             ")";
  }
}

std::string gen_search_json(const std::string& ring_literal,
                            const std::string& ideal_spec, int degree) {
  RingSpec ring = parse_ring(ring_literal);
  LocIdeal ideal = parse_ideal_spec(ring, ideal_spec);
  return render_json(nlohmann::json(generator_search(ideal, degree)));
}

std::string theorem_json(const std::string& id, const std::string& ring_literal,
                         int degree, int trials, std::uint64_t seed) {
  RingSpec ring = parse_ring(ring_literal);
  if (id == "pir2") return render_json(nlohmann::json(check_pir2(ring, degree)));
  if (id == "vnr-prufer")
    return render_json(nlohmann::json(check_vnr_prufer(ring)));
  if (id == "gaussian") {
    GaussianOptions options;
    options.trials = trials;
    options.seed = seed;
    return render_json(nlohmann::json(check_gaussian(ring, options)));
  }
  throw std::invalid_argument(
      "theorem() binds ring-level ids: pir2, vnr-prufer, gaussian");
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = run_command(args, out);
  return py::make_tuple(code, out.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact localization toolkit for R[X] over finite product rings";

  m.def("spectrum_json", &spectrum_json, py::arg("ring"),
        py::arg("samples") = 8, py::arg("seed") = 1,
        "Two-layer prime spectrum report of the constant-term-one "
        "localization, as a JSON string.");
  m.def("check_predicate", &check_predicate, py::arg("ring"),
        py::arg("predicate"),
        "Exact ring predicate: vnr, reduced, pir, local or field.");
  m.def("member", &member_outcome, py::arg("fraction"), py::arg("ideal_spec"),
        py::arg("degree") = 3,
        "Membership outcome string for a fraction literal in an ideal spec.");
  m.def("gen_search_json", &gen_search_json, py::arg("ring"),
        py::arg("ideal_spec"), py::arg("degree") = 3,
        "Single-generator search report for a (...)+X ideal, as JSON.");
  m.def("theorem_json", &theorem_json, py::arg("id"), py::arg("ring"),
        py::arg("degree") = 3, py::arg("trials") = 200, py::arg("seed") = 1,
        "Ring-level theorem check (pir2, vnr-prufer, gaussian), as JSON.");
  m.def("run", &run_cli, py::arg("args"),
        "Full CLI entry point; returns (exit_code, json_output).");
}
