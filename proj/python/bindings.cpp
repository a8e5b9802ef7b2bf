// Python extension. Structured values cross the boundary as JSON text; the
// package wrapper converts them to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>

#include "phasediag/fixtures.hpp"
#include "phasediag/io.hpp"
#include "phasediag/large_dev.hpp"
#include "phasediag/linear_rep.hpp"
#include "phasediag/orbit_category.hpp"
#include "phasediag/phase_diagram.hpp"
#include "phasediag/singularity.hpp"

namespace py = pybind11;
namespace pd = phasediag;

namespace {

pd::Json parse(const std::string& text) {
  try {
    return pd::Json::parse(text);
  } catch (const pd::Json::parse_error& e) {
    throw pd::ValidationError(e.what());
  }
}

std::vector<std::string> strings(const std::vector<pd::Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(pd::toString(v));
  return out;
}

std::string groupInfo(const std::string& groupJson) {
  const auto g = pd::groupFromJson(parse(groupJson));
  const auto lattice = pd::buildLattice(g);
  pd::Json classes = pd::Json::array();
  for (const auto& cls : lattice.classes) {
    classes.push_back({{"label", pd::classLabel(cls)},
                       {"order", cls.representative.order()},
                       {"conjugates", cls.orbitOfSubgroups.size()},
                       {"weylOrder", pd::weylGroup(g, cls.representative).order()}});
  }
  return pd::Json{{"order", g.order()}, {"subgroups", lattice.subgroups.size()}, {"classes", classes}}.dump();
}

std::string phase(const std::string& groupJson, const std::string& complexJson) {
  auto g = pd::groupFromJson(parse(groupJson));
  auto space = pd::GSpace::create(g, pd::complexFromJson(parse(complexJson)));
  auto orbit = pd::buildOrbitCategory(std::move(g));
  return pd::exportOlog(pd::buildPhaseDiagram(orbit, pd::pi0FixPresheaf(orbit, space)).category).dump();
}

std::string quiver(const std::string& groupJson, const std::string& repJson) {
  const auto g = pd::groupFromJson(parse(groupJson));
  std::size_t dim = 0;
  auto gens = pd::representationFromJson(parse(repJson), dim);
  const auto action = pd::LinearAction::create(g, dim, std::move(gens));
  const auto lattice = pd::buildLattice(g);
  return pd::quiverToJson(g, lattice, pd::degeneracyQuiver(g, lattice, action)).dump();
}

std::optional<std::size_t> milnor(const std::string& germ) {
  const auto local = pd::milnorNumber(pd::parseGerm(germ));
  if (!local.isolated) return std::nullopt;
  return local.mu;
}

std::vector<std::string> spectrum(const std::string& germText, std::optional<std::string> weights) {
  auto germ = pd::parseGerm(germText);
  std::vector<pd::Rational> w;
  if (weights) {
    w = pd::parseWeights(*weights);
  } else if (auto inferred = pd::inferWeights(germ)) {
    w = *inferred;
  } else {
    throw pd::ValidationError("germ is not quasihomogeneous; pass weights");
  }
  return strings(pd::spectrumGrading(pd::QuasihomogeneousGerm::create(std::move(germ), w)));
}

pd::DiscreteObservable observable(const std::vector<std::pair<double, double>>& outcomes) {
  std::vector<pd::Outcome> out;
  for (auto [v, p] : outcomes) out.push_back({v, p});
  return pd::DiscreteObservable(std::move(out));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Phase diagrams of finite group actions, singularity invariants, rate functions";

  auto validation = py::register_exception<pd::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<pd::CapExceeded>(m, "CapExceeded", validation.ptr());
  py::register_exception<pd::DomainError>(m, "DomainError", validation.ptr());
  py::register_exception<pd::ParseError>(m, "ParseError", validation.ptr());

  m.def("group_info", &groupInfo, py::arg("group_json"));
  m.def(
      "orbit_category",
      [](const std::string& g) { return pd::exportOlog(pd::buildOrbitCategory(pd::groupFromJson(parse(g))).category).dump(); },
      py::arg("group_json"));
  m.def("phase_diagram", &phase, py::arg("group_json"), py::arg("complex_json"));
  m.def(
      "strata_category",
      [](const std::string& s) { return pd::exportOlog(pd::strataCategory(pd::stratifiedFromJson(parse(s)))).dump(); },
      py::arg("strata_json"));
  m.def("degeneracy_quiver", &quiver, py::arg("group_json"), py::arg("rep_json"));
  m.def(
      "export_dot", [](const std::string& olog) { return pd::exportDot(pd::importOlog(parse(olog))); },
      py::arg("olog_json"));
  m.def(
      "categories_isomorphic",
      [](const std::string& a, const std::string& b) {
        return pd::categoryIsomorphic(pd::importOlog(parse(a)), pd::importOlog(parse(b))).has_value();
      },
      py::arg("olog_a"), py::arg("olog_b"));

  m.def("milnor_number", &milnor, py::arg("germ"));
  m.def("spectrum", &spectrum, py::arg("germ"), py::arg("weights") = std::nullopt);
  m.def(
      "stabilize", [](const std::string& g) { return pd::stabilize(pd::parseGerm(g)).poly.toString(); },
      py::arg("germ"));
  m.def(
      "weight_milnor", [](const std::string& w) { return pd::toString(pd::weightMilnor(pd::parseWeights(w))); },
      py::arg("weights"));
  m.def("corpus", [] { return pd::corpusToJson(pd::corpusAdjacency()).dump(); });

  m.def(
      "cgf", [](const std::vector<std::pair<double, double>>& o, double t) { return pd::cgf(observable(o), t); },
      py::arg("outcomes"), py::arg("theta"));
  m.def(
      "legendre",
      [](const std::vector<std::pair<double, double>>& o, double x) { return pd::legendreExtended(observable(o), x); },
      py::arg("outcomes"), py::arg("x"));
  m.def(
      "cramer", [](const std::vector<std::pair<double, double>>& o, double x) { return pd::cramer(observable(o), x); },
      py::arg("outcomes"), py::arg("x"));
  m.def("binary_entropy", &pd::binaryEntropy, py::arg("x"));
  m.def("bernoulli_rate", &pd::bernoulliRate, py::arg("p"), py::arg("x"));

  m.def(
      "seed_fixtures",
      [](const std::filesystem::path& dir) {
        std::vector<std::string> out;
        for (const auto& p : pd::fixtures::seed(dir)) out.push_back(p.string());
        return out;
      },
      py::arg("directory"));
}
