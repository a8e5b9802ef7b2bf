#include <doctest.h>

#include "phasediag/fixtures.hpp"
#include "phasediag/gspace.hpp"

using namespace phasediag;

namespace {

struct Bound {
  FiniteGroup group;
  GSpace space;
  SubgroupLattice lattice;
};

Bound bindFixture(const std::string& name) {
  const auto& c = fixtures::complex(name);
  auto g = fixtures::group(c.groupName).build();
  auto s = GSpace::create(g, c.complex);
  auto l = buildLattice(g);
  return {std::move(g), std::move(s), std::move(l)};
}

}  // namespace

TEST_CASE("components of small complexes") {
  CHECK(components(closeUnderFaces({{0, 1}, {1, 2}, {2, 3}})).size() == 1);
  CHECK(components({{0}, {3}}).size() == 2);
  CHECK(components(fixtures::complex("square_reflection").complex.simplices).size() == 1);
}

TEST_CASE("fixed subcomplexes of the square") {
  auto r = bindFixture("square_reflection");
  const auto& c2 = r.lattice.classes.back().representative;
  CHECK(fixedSubcomplex(r.space, c2) == std::vector<Simplex>{{0}, {2}});
  CHECK(fixedSubcomplex(r.space, r.lattice.classes.front().representative) == r.space.complex().simplices);

  auto h = bindFixture("square_halfturn");
  CHECK(fixedSubcomplex(h.space, h.lattice.classes.back().representative).empty());
}

TEST_CASE("isotropy and orbits") {
  auto r = bindFixture("square_reflection");
  CHECK(isotropy(r.group, r.space, 0).order() == 2);
  CHECK(isotropy(r.group, r.space, 1).order() == 1);
  auto h = bindFixture("square_halfturn");
  CHECK(isotropy(h.group, h.space, 1).order() == 1);
  CHECK(orbitOf(h.space, 1) == std::vector<std::uint32_t>{1, 3});
  auto p = bindFixture("point_trivial");
  CHECK(orbitOf(p.space, 0).size() == 1);
}

TEST_CASE("fix presheaf") {
  auto r = bindFixture("square_reflection");
  const auto orbit = buildOrbitCategory(r.group, r.lattice);
  const auto pre = pi0FixPresheaf(orbit, r.space);
  CHECK(pre.fix[0].components.size() == 1);
  CHECK(pre.fix[1].components.size() == 2);
  const auto arrow = orbit.category.homSet(0, 1).front();
  CHECK(pre.inducedMaps[arrow] == std::vector<std::size_t>{0, 0});

  auto h = bindFixture("square_halfturn");
  const auto horbit = buildOrbitCategory(h.group, h.lattice);
  const auto hpre = pi0FixPresheaf(horbit, h.space);
  CHECK(hpre.fix[0].components.size() == 1);
  CHECK(hpre.fix[1].components.empty());

  for (const auto& f : fixtures::groups()) {
    auto p = bindFixture("point_" + f.name);
    const auto porbit = buildOrbitCategory(p.group, p.lattice);
    for (const auto& fr : pi0FixPresheaf(porbit, p.space).fix) CHECK(fr.components.size() == 1);
  }
}

TEST_CASE("invalid actions are rejected") {
  const auto c2 = fixtures::group("C2").build();
  auto square = fixtures::complex("square_reflection").complex;
  auto bad = square;
  bad.action = {{1, 0, 2, 3}};  // not simplicial: edge {0,3} goes to {1,3}
  CHECK_THROWS_AS(GSpace::create(c2, bad), ValidationError);
  bad.action = {{1, 2, 3, 0}};  // rotation of order 4 fails the relation g^2 = 1
  CHECK_THROWS_AS(GSpace::create(c2, bad), ValidationError);
  bad.action = {};
  CHECK_THROWS_AS(GSpace::create(c2, bad), ValidationError);
}

TEST_CASE("setwise-fixed simplices warn") {
  Diagnostics diag;
  auto c = fixtures::complex("square_halfturn").complex;
  c.action = {{1, 0, 3, 2}};  // swaps the ends of edges {0,1} and {2,3}
  GSpace::create(fixtures::group("C2").build(), c, &diag);
  CHECK_FALSE(diag.warnings.empty());
}

TEST_CASE("subdivision removes setwise-only fixed simplices") {
  Diagnostics diag;
  const auto d4 = fixtures::group("D4").build();
  const auto sub = fixtures::complex("square_dihedral_subdivided").complex;
  CHECK(sub.vertexCount == 8);
  GSpace::create(d4, sub, &diag);
  CHECK(diag.warnings.empty());
}
