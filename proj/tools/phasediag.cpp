// Command-line front end. Exit codes: 0 success, 1 validation error,
// 2 usage error. Diagnostics go to stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "phasediag/fixtures.hpp"
#include "phasediag/gspace.hpp"
#include "phasediag/io.hpp"
#include "phasediag/large_dev.hpp"
#include "phasediag/linear_rep.hpp"
#include "phasediag/orbit_category.hpp"
#include "phasediag/phase_diagram.hpp"
#include "phasediag/singularity.hpp"

namespace pd = phasediag;
namespace fs = std::filesystem;

namespace {

void flush(const pd::Diagnostics& diag) {
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
}

/// Olog JSON unless the path (or --format) asks for DOT.
void emitCategory(const pd::FiniteCategory& cat, const std::string& out, const std::string& format) {
  bool dot = format == "dot";
  if (format.empty() && !out.empty()) dot = fs::path(out).extension() == ".dot";
  const std::string text = dot ? pd::exportDot(cat) : pd::exportOlog(cat).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    pd::writeFileAtomic(out, text);
  }
}

void emitJson(const pd::Json& j, const std::string& out) {
  const auto text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    pd::writeFileAtomic(out, text);
  }
}

pd::FiniteGroup loadGroup(const std::string& path, pd::Diagnostics& diag) {
  return pd::groupFromJson(pd::readJsonFile(path), &diag);
}

std::string formatRow(double x, double a, double b) {
  std::ostringstream s;
  s << std::setprecision(12) << x << "\t" << a << "\t" << b;
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase diagrams of finite group actions, singularity invariants and rate functions"};
  app.require_subcommand(0, 1);

  std::string seedDir;
  app.add_option("--seed-fixtures", seedDir, "Write the bundled example inputs into DIR");

  // group info
  auto* groupCmd = app.add_subcommand("group", "Finite permutation groups");
  auto* infoCmd = groupCmd->add_subcommand("info", "Order, subgroup classes, normalizers");
  groupCmd->require_subcommand(1);
  std::string groupFile;
  std::vector<std::string> cycles;
  std::size_t degree = 0;
  infoCmd->add_option("-i,--input", groupFile, "Group JSON");
  infoCmd->add_option("--degree", degree, "Degree when generators are given inline");
  infoCmd->add_option("--cycles", cycles, "Generator in cycle notation (repeatable)");

  // orbitcat
  auto* orbitCmd = app.add_subcommand("orbitcat", "Orbit category of a group");
  std::string orbitIn, orbitOut, orbitFormat;
  orbitCmd->add_option("-i,--input", orbitIn, "Group JSON")->required();
  orbitCmd->add_option("-o,--output", orbitOut, "Output file (.dot or .json)");
  orbitCmd->add_option("--format", orbitFormat, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // phase
  auto* phaseCmd = app.add_subcommand("phase", "Phase diagram of a G-complex");
  std::string phaseGroup, phaseComplex, phaseOut, phaseFormat;
  phaseCmd->add_option("-g,--group", phaseGroup, "Group JSON")->required();
  phaseCmd->add_option("-x,--complex", phaseComplex, "Complex JSON")->required();
  phaseCmd->add_option("-o,--output", phaseOut, "Output file (.dot or .json)");
  phaseCmd->add_option("--format", phaseFormat, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // strata
  auto* strataCmd = app.add_subcommand("strata", "Category of a stratified complex");
  std::string strataIn, strataOut, strataFormat;
  strataCmd->add_option("-i,--input", strataIn, "Stratified complex JSON")->required();
  strataCmd->add_option("-o,--output", strataOut, "Output file (.dot or .json)");
  strataCmd->add_option("--format", strataFormat, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // quiver
  auto* quiverCmd = app.add_subcommand("quiver", "Degeneracy quiver of a linear representation");
  std::string quiverGroup, quiverRep, quiverOut;
  quiverCmd->add_option("-g,--group", quiverGroup, "Group JSON")->required();
  quiverCmd->add_option("-r,--rep", quiverRep, "Representation JSON")->required();
  quiverCmd->add_option("-o,--output", quiverOut, "Output JSON");

  // sing
  auto* singCmd = app.add_subcommand("sing", "Singularity invariants");
  singCmd->require_subcommand(1);
  std::string germText, weightText;
  auto addGerm = [&](CLI::App* cmd) {
    cmd->add_option("--germ", germText, "Polynomial in x, y, z")->required();
    cmd->add_option("--weights", weightText, "Weights such as 1/3,1/4");
  };
  auto* muCmd = singCmd->add_subcommand("mu", "Milnor number");
  auto* spectrumCmd = singCmd->add_subcommand("spectrum", "Euler eigenvalues on the local algebra");
  auto* stabilizeCmd = singCmd->add_subcommand("stabilize", "Add the square of a new variable");
  for (auto* cmd : {muCmd, spectrumCmd, stabilizeCmd}) addGerm(cmd);

  // ldp
  auto* ldpCmd = app.add_subcommand("ldp", "Rate function table");
  std::string dist, grid = "0.1:0.9:0.1";
  std::optional<double> bernoulliP;
  auto* distOpt = ldpCmd->add_option("--dist", dist, "Outcomes value:prob,...");
  auto* bernOpt = ldpCmd->add_option("--bernoulli", bernoulliP, "Bernoulli success probability");
  distOpt->excludes(bernOpt);
  ldpCmd->add_option("--grid", grid, "a:b:step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  pd::Diagnostics diag;
  try {
    if (!seedDir.empty()) {
      for (const auto& p : pd::fixtures::seed(seedDir)) std::cout << p.string() << "\n";
      if (app.get_subcommands().empty()) return 0;
    } else if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return 2;
    }

    if (infoCmd->parsed()) {
      std::optional<pd::FiniteGroup> group;
      if (!groupFile.empty()) {
        group = loadGroup(groupFile, diag);
      } else if (degree > 0) {
        std::vector<pd::Permutation> gens;
        for (const auto& c : cycles) gens.push_back(pd::Permutation::fromCycles(degree, c));
        group = pd::FiniteGroup::closure(degree, std::move(gens), &diag);
      } else {
        std::cerr << "group info needs -i FILE or --degree N [--cycles C ...]\n";
        return 2;
      }
      const auto lattice = pd::buildLattice(*group, &diag);
      pd::Json classes = pd::Json::array();
      for (const auto& cls : lattice.classes) {
        const auto n = pd::normalizer(*group, cls.representative);
        pd::Json gens = pd::Json::array();
        for (auto m : cls.representative.members) gens.push_back(group->element(m).toCycles());
        classes.push_back({{"label", pd::classLabel(cls)},
                           {"order", cls.representative.order()},
                           {"conjugates", cls.orbitOfSubgroups.size()},
                           {"normalizerOrder", n.order()},
                           {"weylOrder", n.order() / cls.representative.order()},
                           {"members", gens}});
      }
      emitJson({{"degree", group->degree()},
                {"order", group->order()},
                {"subgroups", lattice.subgroups.size()},
                {"classes", classes}},
               "");
    } else if (orbitCmd->parsed()) {
      auto orbit = pd::buildOrbitCategory(loadGroup(orbitIn, diag), &diag);
      emitCategory(orbit.category, orbitOut, orbitFormat);
    } else if (phaseCmd->parsed()) {
      auto group = loadGroup(phaseGroup, diag);
      auto space = pd::GSpace::create(group, pd::complexFromJson(pd::readJsonFile(phaseComplex)), &diag);
      auto orbit = pd::buildOrbitCategory(std::move(group), &diag);
      const auto presheaf = pd::pi0FixPresheaf(orbit, space);
      const auto diagram = pd::buildPhaseDiagram(orbit, presheaf);
      emitCategory(diagram.category, phaseOut, phaseFormat);
    } else if (strataCmd->parsed()) {
      const auto cat = pd::strataCategory(pd::stratifiedFromJson(pd::readJsonFile(strataIn)), &diag);
      emitCategory(cat, strataOut, strataFormat);
    } else if (quiverCmd->parsed()) {
      const auto group = loadGroup(quiverGroup, diag);
      std::size_t dim = 0;
      auto gens = pd::representationFromJson(pd::readJsonFile(quiverRep), dim);
      const auto action = pd::LinearAction::create(group, dim, std::move(gens));
      const auto lattice = pd::buildLattice(group, &diag);
      emitJson(pd::quiverToJson(group, lattice, pd::degeneracyQuiver(group, lattice, action)), quiverOut);
    } else if (muCmd->parsed()) {
      const auto germ = pd::parseGerm(germText);
      const auto local = pd::milnorNumber(germ);
      if (local.isolated) {
        std::cout << local.mu << "\n";
      } else {
        std::cout << "NonIsolated\n";
      }
      if (!weightText.empty()) {
        const auto expected = pd::weightMilnor(pd::parseWeights(weightText));
        if (!local.isolated || pd::Rational(static_cast<long>(local.mu)) != expected) {
          std::cerr << "warning: weight formula gives " << pd::toString(expected) << "\n";
        }
      }
    } else if (spectrumCmd->parsed()) {
      auto germ = pd::parseGerm(germText);
      std::vector<pd::Rational> weights;
      if (!weightText.empty()) {
        weights = pd::parseWeights(weightText);
      } else if (auto inferred = pd::inferWeights(germ)) {
        weights = *inferred;
      } else {
        throw pd::ValidationError("germ is not quasihomogeneous; pass --weights");
      }
      const auto qh = pd::QuasihomogeneousGerm::create(std::move(germ), weights);
      const auto spectrum = pd::spectrumGrading(qh);
      for (std::size_t i = 0; i < spectrum.size(); ++i) std::cout << (i ? " " : "") << pd::toString(spectrum[i]);
      std::cout << "\n";
    } else if (stabilizeCmd->parsed()) {
      std::cout << pd::stabilize(pd::parseGerm(germText)).poly.toString() << "\n";
    } else if (ldpCmd->parsed()) {
      std::optional<pd::DiscreteObservable> obs;
      if (bernoulliP) {
        obs = pd::DiscreteObservable::bernoulli(*bernoulliP);
      } else if (!dist.empty()) {
        obs = pd::DiscreteObservable::parse(dist);
      } else {
        std::cerr << "ldp needs --dist or --bernoulli\n";
        return 2;
      }
      std::cout << "x\trate\tcramer\n";
      for (const auto& row : pd::rateTable(*obs, pd::parseGrid(grid))) {
        std::cout << formatRow(row.x, row.rate, row.cramer) << "\n";
      }
    }
  } catch (const pd::ValidationError& e) {
    flush(diag);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    flush(diag);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  flush(diag);
  return 0;
}
