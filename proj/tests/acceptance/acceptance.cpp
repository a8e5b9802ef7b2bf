// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <cmath>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "phasediag/fixtures.hpp"
#include "phasediag/io.hpp"
#include "phasediag/large_dev.hpp"
#include "phasediag/linear_rep.hpp"
#include "phasediag/orbit_category.hpp"
#include "phasediag/phase_diagram.hpp"
#include "phasediag/singularity.hpp"

namespace pd = phasediag;
namespace fx = phasediag::fixtures;

namespace {

/// Collects the first few failure messages of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

struct PhaseFixture {
  std::string name;
  pd::OrbitCategory orbit;
  pd::GSpace space;
  pd::Pi0FixPresheaf presheaf;
  pd::PhaseDiagram diagram;
};

std::vector<PhaseFixture> phaseFixtures() {
  std::vector<PhaseFixture> out;
  for (const auto& c : fx::complexes()) {
    auto group = fx::group(c.groupName).build();
    auto space = pd::GSpace::create(group, c.complex);
    auto orbit = pd::buildOrbitCategory(std::move(group));
    auto presheaf = pd::pi0FixPresheaf(orbit, space);
    auto diagram = pd::buildPhaseDiagram(orbit, presheaf);
    out.push_back({c.name, std::move(orbit), std::move(space), std::move(presheaf), std::move(diagram)});
  }
  return out;
}

void orbitOracle(Check& check) {
  for (const auto& gf : fx::groups()) {
    const auto orbit = pd::buildOrbitCategory(gf.build());
    const auto& g = orbit.group;
    const auto n = orbit.lattice.classes.size();
    std::set<oracle::PermSet> found;
    for (const auto& h : orbit.lattice.subgroups) found.insert(oracle::toSet(g, h));
    check.expect(found == oracle::twoGeneratedSubgroups(g.elements()), gf.name + ": subgroup lattice incomplete");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto expected = oracle::equivariantMapCount(g.elements(), oracle::toSet(g, orbit.representative(a)),
                                                          oracle::toSet(g, orbit.representative(b)));
        const auto got = orbit.category.homSet(a, b).size();
        std::ostringstream msg;
        msg << gf.name << " hom(" << a << "," << b << ") = " << got << ", oracle " << expected;
        check.expect(got == expected, msg.str());
      }
  }
}

void pointIdentity(Check& check) {
  for (const auto& gf : fx::groups()) {
    const auto& c = fx::complex("point_" + gf.name);
    auto group = gf.build();
    auto space = pd::GSpace::create(group, c.complex);
    auto orbit = pd::buildOrbitCategory(std::move(group));
    const auto diagram = pd::buildPhaseDiagram(orbit, pd::pi0FixPresheaf(orbit, space));
    const auto witness = pd::categoryIsomorphic(diagram.category, orbit.category);
    check.expect(witness && !pd::checkIsomorphism(diagram.category, orbit.category, *witness),
                 gf.name + ": no isomorphism found");
  }
}

void objectCountOracle(Check& check, const std::vector<PhaseFixture>& fixtures) {
  for (const auto& f : fixtures) {
    const auto& g = f.orbit.group;
    const auto act = oracle::vertexActions(g, f.space.complex());
    std::size_t expected = 0;
    for (const auto& cls : f.orbit.lattice.classes)
      expected += oracle::fixComponentCount(f.space.complex(), act, oracle::toSet(g, cls.representative));
    check.expect(f.diagram.category.objectCount() == expected,
                 f.name + ": " + std::to_string(f.diagram.category.objectCount()) + " objects, oracle " +
                     std::to_string(expected));
    if (f.name == "square_reflection") {
      check.expect(f.diagram.autOrders == std::vector<std::size_t>{2, 1, 1}, "square_reflection Aut orders");
    }
  }
}

void functoriality(Check& check, const std::vector<PhaseFixture>& fixtures) {
  for (const auto& f : fixtures) {
    auto record = [&](const std::optional<std::string>& err, const std::string& what) {
      check.expect(!err, f.name + " " + what + ": " + err.value_or(""));
    };
    record(f.diagram.category.validate(), "category laws");
    record(pd::checkFunctor(f.diagram.category, f.orbit.category, pd::forgetfulFunctor(f.diagram)), "forgetful");
    const auto q = pd::quotientFunctor(f.orbit, f.presheaf, f.diagram, f.space);
    record(pd::checkQuotientFunctor(f.orbit, f.diagram, f.space, q), "quotient");
  }
}

void linearExactness(Check& check) {
  for (const auto& r : fx::representations()) {
    const auto group = fx::group(r.groupName).build();
    const auto action = pd::LinearAction::create(group, r.dimension, r.generators);
    const auto lattice = pd::buildLattice(group);
    for (const auto& h : lattice.subgroups) {
      const auto p = pd::averagingProjector(action, h);
      check.expect(p * p == p, r.name + ": projector not idempotent");
      for (auto m : h.members) check.expect(action.matrix(m) * p == p, r.name + ": rho(h) P != P");
    }
    const auto quiver = pd::degeneracyQuiver(group, lattice, action);
    for (const auto& a : quiver.arrows) {
      const auto lhs = quiver.nodes[a.sourceClass].fixDimension;
      const auto rhs = quiver.nodes[a.targetClass].fixDimension + a.normal.dimension();
      check.expect(lhs == rhs, r.name + ": dimension additivity fails on " + std::to_string(a.sourceClass) + "->" +
                                   std::to_string(a.targetClass));
    }
  }
}

void singularities(Check& check) {
  const auto corpus = pd::corpusAdjacency();
  auto expectMu = [&](const std::string& name, long mu) {
    const auto& e = corpus.entry(name);
    const auto local = pd::milnorNumber(e.germ());
    check.expect(local.isolated && static_cast<long>(local.mu) == mu, name + ": mu " + std::to_string(local.mu));
    check.expect(pd::weightMilnor(e.weights) == pd::Rational(mu), name + ": weight formula");
  };
  for (long k = 1; k <= 8; ++k) expectMu("A" + std::to_string(k), k);
  for (long k = 4; k <= 8; ++k) expectMu("D" + std::to_string(k), k);
  expectMu("E6", 6);
  expectMu("E7", 7);
  expectMu("E8", 8);

  check.expect(!pd::milnorNumber(pd::parseGerm("x^2*y")).isolated, "x^2*y should be non-isolated");

  for (const auto& e : corpus.entries) {
    const auto germ = e.germ();
    const auto mu = pd::milnorNumber(germ).mu;
    if (germ.variableCount < pd::kMaxVariables) {
      check.expect(pd::milnorNumber(pd::stabilize(germ)).mu == mu, e.name + ": stabilization changes mu");
    }
    const auto qh = pd::QuasihomogeneousGerm::create(germ, e.weights);
    check.expect(pd::eulerOperator(qh).apply(germ.poly) == germ.poly, e.name + ": D(f) != f");
  }
  for (const auto& [from, to] : corpus.arrows) {
    const auto a = pd::milnorNumber(corpus.entry(from).germ()).mu;
    const auto b = pd::milnorNumber(corpus.entry(to).germ()).mu;
    check.expect(a == b + 1, from + " -> " + to + " does not drop mu by 1");
  }

  const auto& e6 = corpus.entry("E6");
  const auto spectrum = pd::spectrumGrading(pd::QuasihomogeneousGerm::create(e6.germ(), e6.weights));
  const std::vector<pd::Rational> expected{0, pd::ratio(1, 4), pd::ratio(1, 3), pd::ratio(1, 2), pd::ratio(7, 12),
                                           pd::ratio(5, 6)};
  check.expect(spectrum == expected, "E6 spectrum");
}

void largeDeviations(Check& check) {
  for (double p : {0.1, 0.3, 0.5, 0.7}) {
    const auto obs = pd::DiscreteObservable::bernoulli(p);
    for (int i = 1; i <= 9; ++i) {
      const double x = i / 10.0;
      const double err = std::abs(pd::legendre(obs, x) - oracle::bernoulliKl(p, x));
      check.expect(err <= 1e-9, "Bernoulli p=" + std::to_string(p) + " x=" + std::to_string(x));
    }
    check.expect(std::abs(pd::cgf(obs, 0.0)) <= 1e-14, "cgf(0) != 0");
    check.expect(pd::legendre(obs, obs.mean()) <= 1e-12, "rate at mean");
    for (int t = -2; t <= 2; ++t) {
      const double closedForm = std::log(1 - p * (1 - std::exp(static_cast<double>(t))));
      check.expect(std::abs(pd::cgf(obs, t) - closedForm) <= 1e-12, "cgf closed form at theta=" + std::to_string(t));
    }
    const double h = 1e-3;
    for (int k = -10000 + 1; k < 10000; ++k) {
      const double t = k * h;
      const double second = pd::cgf(obs, t + h) - 2 * pd::cgf(obs, t) + pd::cgf(obs, t - h);
      if (second < -1e-9) {
        check.expect(false, "convexity at theta=" + std::to_string(t));
        break;
      }
    }
  }
}

void determinism(Check& check, const std::vector<PhaseFixture>& fixtures) {
  std::vector<std::pair<std::string, pd::FiniteCategory>> cats;
  for (const auto& gf : fx::groups()) cats.emplace_back("orbit " + gf.name, pd::buildOrbitCategory(gf.build()).category);
  for (const auto& f : fixtures) cats.emplace_back("phase " + f.name, f.diagram.category);
  for (const auto& s : fx::strata()) cats.emplace_back("strata " + s.name, pd::strataCategory(s.strata));
  for (const auto& [name, cat] : cats) {
    check.expect(pd::exportDot(cat) == pd::exportDot(cat), name + ": DOT output differs between runs");
    const auto olog = pd::exportOlog(cat);
    const auto text = olog.dump();
    const auto imported = pd::importOlog(pd::Json::parse(text));
    const auto map = oracle::ologIdMap(cat, olog, imported);
    const auto err = pd::checkIsomorphism(cat, imported, map);
    check.expect(!err, name + ": round trip " + err.value_or(""));
    check.expect(pd::exportOlog(imported).dump() == text, name + ": re-export differs");
  }
  // A second, independent construction must also serialize identically.
  for (const auto& f : phaseFixtures()) {
    for (const auto& g : fixtures)
      if (g.name == f.name) check.expect(pd::exportDot(f.diagram.category) == pd::exportDot(g.diagram.category), f.name + ": rebuild differs");
  }
}

}  // namespace

int main() {
  const auto fixtures = phaseFixtures();
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"orbit-category hom-sets equal brute-force equivariant map counts", orbitOracle},
      {"phase diagram of a point is isomorphic to the orbit category", pointIdentity},
      {"phase diagram object count equals the sum of fixed-set component counts",
       [&](Check& c) { objectCountOracle(c, fixtures); }},
      {"quotient and forgetful functors preserve identities and composites",
       [&](Check& c) { functoriality(c, fixtures); }},
      {"averaging projectors are exact idempotents and quiver dimensions add up", linearExactness},
      {"Milnor numbers, stabilization, adjacency drops, Euler identity and E6 spectrum", singularities},
      {"Bernoulli rate function, cgf closed form and convexity", largeDeviations},
      {"DOT determinism and olog round trip", [&](Check& c) { determinism(c, fixtures); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << ": " << criteria[i].first << " (" << check.count << " checks)\n";
    for (std::size_t k = 0; k < check.failures.size() && k < 5; ++k) std::cout << "    " << check.failures[k] << "\n";
  }
  return failed;
}
