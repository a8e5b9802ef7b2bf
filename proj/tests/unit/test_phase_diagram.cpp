#include <doctest.h>

#include "phasediag/fixtures.hpp"
#include "phasediag/phase_diagram.hpp"

using namespace phasediag;

namespace {

struct Built {
  OrbitCategory orbit;
  GSpace space;
  Pi0FixPresheaf presheaf;
  PhaseDiagram diagram;
};

Built build(const std::string& name) {
  const auto& c = fixtures::complex(name);
  auto g = fixtures::group(c.groupName).build();
  auto space = GSpace::create(g, c.complex);
  auto orbit = buildOrbitCategory(std::move(g));
  auto pre = pi0FixPresheaf(orbit, space);
  auto diagram = buildPhaseDiagram(orbit, pre);
  return {std::move(orbit), std::move(space), std::move(pre), std::move(diagram)};
}

std::size_t nonAutomorphismArrows(const FiniteCategory& c) {
  std::size_t n = 0;
  for (const auto& m : c.morphisms()) n += m.source != m.target;
  return n;
}

}  // namespace

TEST_CASE("square with reflection") {
  const auto b = build("square_reflection");
  const auto& cat = b.diagram.category;
  REQUIRE(cat.objectCount() == 3);
  CHECK(b.diagram.autOrders == std::vector<std::size_t>{2, 1, 1});
  CHECK(cat.homSet(0, 1).size() == 1);
  CHECK(cat.homSet(0, 2).size() == 1);
  CHECK(nonAutomorphismArrows(cat) == 2);

  const auto q = quotientFunctor(b.orbit, b.presheaf, b.diagram, b.space);
  CHECK(b.diagram.objects[q.objectMap[0]].subgroupClass == 1);
  CHECK(b.diagram.objects[q.objectMap[0]].componentId == 0);
  CHECK(b.diagram.objects[q.objectMap[1]].subgroupClass == 0);
  CHECK_FALSE(checkQuotientFunctor(b.orbit, b.diagram, b.space, q));

  // Fiber of the forgetful functor over the reflection class.
  std::size_t fiber = 0;
  for (auto o : b.diagram.forgetful.objectMap) fiber += o == 1;
  CHECK(fiber == 2);
}

TEST_CASE("free half-turn") {
  const auto b = build("square_halfturn");
  REQUIRE(b.diagram.category.objectCount() == 1);
  CHECK(b.diagram.autOrders == std::vector<std::size_t>{2});
  CHECK(nonAutomorphismArrows(b.diagram.category) == 0);
  std::size_t fiber = 0;
  for (auto o : b.diagram.forgetful.objectMap) fiber += o == 1;
  CHECK(fiber == 0);
}

TEST_CASE("point gives the orbit category") {
  for (const auto& g : fixtures::groups()) {
    const auto b = build("point_" + g.name);
    const auto& f = forgetfulFunctor(b.diagram);
    CHECK_FALSE(checkIsomorphism(b.diagram.category, b.orbit.category, f));
  }
}

TEST_CASE("trivial group reduces to components") {
  auto c = fixtures::complex("square_reflection").complex;
  GComplex two;
  two.vertexCount = 5;
  two.simplices = closeUnderFaces({{0, 1}, {1, 2}, {3, 4}});
  two.action = {};
  auto g = fixtures::group("trivial").build();
  auto space = GSpace::create(g, two);
  auto orbit = buildOrbitCategory(std::move(g));
  const auto pre = pi0FixPresheaf(orbit, space);
  const auto d = buildPhaseDiagram(orbit, pre);
  CHECK(d.category.objectCount() == 2);
  const auto q = quotientFunctor(orbit, pre, d, space);
  CHECK(q.objectMap == std::vector<std::size_t>{0, 0, 0, 1, 1});
}

TEST_CASE("strata categories") {
  const auto all = fixtures::strata();
  const auto segment = strataCategory(all[0].strata);
  CHECK(segment.objectCount() == 2);
  CHECK(nonAutomorphismArrows(segment) == 1);

  const auto chain = strataCategory(fixtures::chainStrata(5));
  REQUIRE(chain.objectCount() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(chain.homSet(i, j).size() == (i <= j ? 1u : 0u));
  CHECK_FALSE(chain.validate());

  StratifiedComplex single;
  single.vertexCount = 3;
  single.simplices = {{0}, {1}, {2}, {0, 1}};
  single.assignment = {0, 0, 0, 0};
  single.strataCount = 1;
  const auto discrete = strataCategory(single);
  CHECK(discrete.objectCount() == 2);
  CHECK(nonAutomorphismArrows(discrete) == 0);
}

TEST_CASE("strata validation") {
  auto s = fixtures::strata()[0].strata;
  s.relations.clear();  // the midpoint is a face of the open edges
  CHECK_THROWS_AS(strataCategory(s), ValidationError);

  Diagnostics diag;
  auto t = fixtures::strata()[0].strata;
  t.codim = std::vector<long>{0, 1};
  strataCategory(t, &diag);
  CHECK_FALSE(diag.warnings.empty());
}

TEST_CASE("isotropy strata agree with the phase diagram object-wise") {
  const auto b = build("square_reflection");
  const auto strata = strataCategory(fixtures::strata()[2].strata);
  // Stratum 0 is the trivial-isotropy level, stratum 1 the reflection level.
  CHECK(strata.objectCount() == b.diagram.category.objectCount());
  std::vector<std::pair<std::size_t, std::size_t>> a, c;
  for (const auto& o : strata.objects()) a.emplace_back(*o.classIndex, *o.componentId);
  for (const auto& o : b.diagram.objects) c.emplace_back(o.subgroupClass, o.componentId);
  CHECK(a == c);
}

TEST_CASE("subdivided triangle under S3") {
  // Each reflection fixes the opposite vertex and the midpoint of its edge.
  const auto b = build("triangle_symmetric_subdivided");
  std::vector<std::size_t> perClass(b.orbit.lattice.classes.size(), 0);
  for (const auto& o : b.diagram.objects) ++perClass[o.subgroupClass];
  CHECK(perClass == std::vector<std::size_t>{1, 2, 0, 0});
}

TEST_CASE("forgetful functor has unique lifts of arrows into each object") {
  for (const auto& c : fixtures::complexes()) {
    const auto b = build(c.name);
    const auto& d = b.diagram.category;
    const auto& f = b.diagram.forgetful;
    for (std::size_t obj = 0; obj < d.objectCount(); ++obj) {
      const auto cls = f.objectMap[obj];
      for (std::size_t src = 0; src < b.orbit.category.objectCount(); ++src) {
        for (auto alpha : b.orbit.category.homSet(src, cls)) {
          std::size_t lifts = 0;
          for (std::size_t m = 0; m < d.morphismCount(); ++m)
            lifts += d.morphism(m).target == obj && f.morphismMap[m] == alpha;
          CHECK_MESSAGE(lifts == 1, c.name);
        }
      }
    }
  }
}
