#include <doctest.h>

#include "../support/oracles.hpp"
#include "phasediag/fixtures.hpp"
#include "phasediag/perm_group.hpp"

using namespace phasediag;

namespace {

FiniteGroup make(std::size_t degree, std::vector<std::string> cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::fromCycles(degree, c));
  return FiniteGroup::closure(degree, gens);
}

const Subgroup& classRep(const SubgroupLattice& l, std::size_t order, std::size_t skip = 0) {
  for (const auto& c : l.classes)
    if (c.representative.order() == order && skip-- == 0) return c.representative;
  FAIL("no class of that order");
  return l.classes.front().representative;
}

}  // namespace

TEST_CASE("permutation basics") {
  const auto a = Permutation::fromCycles(3, "(0 1)");
  const auto b = Permutation::fromCycles(3, "(0 1 2)");
  CHECK((a * b)(0) == a(b(0)));
  CHECK((b * b.inverse()).isIdentity());
  CHECK(b.toCycles() == "(0 1 2)");
  CHECK(Permutation::identity(4).toCycles() == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation::fromCycles(3, "(0 5)"), ValidationError);
  CHECK_THROWS_AS(Permutation::fromCycles(3, "(0 1"), ParseError);
}

TEST_CASE("closure orders agree with breadth-first oracle") {
  CHECK(make(3, {"(0 1)", "(0 1 2)"}).order() == 6);
  CHECK(make(3, {}).order() == 1);
  CHECK(make(4, {"(0 1 2 3)"}).order() == 4);
  for (const auto& f : fixtures::groups()) {
    const auto g = f.build();
    CHECK(g.order() == oracle::closure(g.degree(), g.generators()).size());
    CHECK(g.element(0).isIdentity());
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.multiply(a, g.inverse(a)) == 0);
      CHECK(g.element(g.multiply(a, 1 % g.order())) == g.element(a) * g.element(1 % g.order()));
    }
  }
}

TEST_CASE("subgroup lattice against two-generated enumeration") {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> known{
      {"trivial", {1, 1}}, {"C2", {2, 2}}, {"C4", {3, 3}}, {"S3", {6, 4}},
      {"D4", {10, 8}},     {"A4", {10, 5}}, {"S4", {30, 11}}};
  for (const auto& f : fixtures::groups()) {
    const auto g = f.build();
    const auto lattice = buildLattice(g);
    std::set<oracle::PermSet> ours;
    for (const auto& h : lattice.subgroups) ours.insert(oracle::toSet(g, h));
    CHECK(ours == oracle::twoGeneratedSubgroups(g.elements()));
    CHECK(lattice.subgroups.size() == known.at(f.name).first);
    CHECK(lattice.classes.size() == known.at(f.name).second);
    for (const auto& h : lattice.subgroups) CHECK(g.order() % h.order() == 0);
  }
}

TEST_CASE("abelian groups have one class per subgroup") {
  for (auto name : {"C2", "C4"}) {
    const auto l = buildLattice(fixtures::group(name).build());
    CHECK(l.classes.size() == l.subgroups.size());
  }
}

TEST_CASE("transporters, normalizers, Weyl groups in S3") {
  const auto g = make(3, {"(0 1)", "(0 1 2)"});
  const auto l = buildLattice(g);
  const auto& trivial = classRep(l, 1);
  const auto& two = classRep(l, 2);
  const auto& three = classRep(l, 3);
  const auto& whole = classRep(l, 6);
  CHECK(transporter(g, two, three).empty());
  CHECK(transporter(g, trivial, two).size() == 6);
  CHECK(transporter(g, two, two) == normalizer(g, two).members);
  CHECK(normalizer(g, two).order() == 2);
  CHECK(weylGroup(g, whole).order() == 1);
  CHECK(weylGroup(g, trivial).order() == 6);
  CHECK(weylGroup(g, three).order() == 2);
  CHECK(classLabel(l.classes[1]) == "H1:2");
}

TEST_CASE("order warning and cap") {
  Diagnostics diag;
  // S6 has order 720: above the warning threshold, below the cap.
  const auto s6 = FiniteGroup::closure(
      6, {Permutation::fromCycles(6, "(0 1)"), Permutation::fromCycles(6, "(0 1 2 3 4 5)")}, &diag);
  CHECK(s6.order() == 720);
  CHECK(diag.warnings.size() == 1);
  CHECK_THROWS_AS(make(7, {"(0 1)", "(0 1 2 3 4 5 6)"}), CapExceeded);
}
