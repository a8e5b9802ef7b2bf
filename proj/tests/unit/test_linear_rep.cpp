#include <doctest.h>

#include "phasediag/fixtures.hpp"
#include "phasediag/linear_rep.hpp"

using namespace phasediag;

namespace {

struct Rep {
  FiniteGroup group;
  SubgroupLattice lattice;
  LinearAction action;
};

Rep load(const std::string& name) {
  for (const auto& r : fixtures::representations()) {
    if (r.name != name) continue;
    auto g = fixtures::group(r.groupName).build();
    auto l = buildLattice(g);
    auto a = LinearAction::create(g, r.dimension, r.generators);
    return {std::move(g), std::move(l), std::move(a)};
  }
  FAIL("unknown representation");
  throw 0;
}

const Subgroup& ofOrder(const SubgroupLattice& l, std::size_t order) {
  for (const auto& c : l.classes)
    if (c.representative.order() == order) return c.representative;
  throw 0;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(toString(ratio(2, -4)) == "-1/2");
  CHECK(parseRational("6/8") == ratio(3, 4));
  CHECK_THROWS_AS(parseRational("1/0"), ValidationError);
  CHECK_THROWS_AS(parseRational("a"), ValidationError);
  const auto m = RatMatrix::fromRows({{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(columnSpaceBasis(m).size() == 1);
}

TEST_CASE("projectors") {
  auto c2 = load("C2_sign");
  const auto& whole = ofOrder(c2.lattice, 2);
  CHECK(averagingProjector(c2.action, whole) == RatMatrix::fromRows({{1, 0}, {0, 0}}));
  CHECK(averagingProjector(c2.action, ofOrder(c2.lattice, 1)) == RatMatrix::identity(2));
  CHECK(fixSubspace(c2.action, whole) == std::vector<RatVector>{{1, 0}});
  CHECK(fixSubspace(c2.action, ofOrder(c2.lattice, 1)).size() == 2);

  auto s3 = load("S3_standard");
  CHECK(averagingProjector(s3.action, ofOrder(s3.lattice, 6)).isZero());
  CHECK(fixSubspace(s3.action, ofOrder(s3.lattice, 6)).empty());
}

TEST_CASE("relative normal spaces") {
  auto c2 = load("C2_sign");
  const auto& one = ofOrder(c2.lattice, 1);
  const auto& two = ofOrder(c2.lattice, 2);
  const auto n = relativeNormal(c2.group, c2.action, one, two, 0);
  REQUIRE(n.dimension() == 1);
  // N_K(1) = C2 acts on the second axis by -1.
  bool sawMinusOne = false;
  for (const auto& m : n.restrictedAction) sawMinusOne |= m == RatMatrix::fromRows({{-1}});
  CHECK(sawMinusOne);
  CHECK(relativeNormal(c2.group, c2.action, two, two, 0).dimension() == 0);

  auto s3 = load("S3_standard");
  CHECK(relativeNormal(s3.group, s3.action, ofOrder(s3.lattice, 2), ofOrder(s3.lattice, 6), 0).dimension() == 1);
  CHECK_THROWS_AS(relativeNormal(s3.group, s3.action, ofOrder(s3.lattice, 2), ofOrder(s3.lattice, 3), 0),
                  ValidationError);
}

TEST_CASE("quivers") {
  auto triv = fixtures::group("trivial").build();
  const auto lt = buildLattice(triv);
  const auto qt = degeneracyQuiver(triv, lt, LinearAction::create(triv, 3, {}));
  CHECK(qt.nodes.size() == 1);
  CHECK(qt.arrows.empty());

  auto c2 = load("C2_sign");
  const auto q2 = degeneracyQuiver(c2.group, c2.lattice, c2.action);
  REQUIRE(q2.nodes.size() == 2);
  CHECK(q2.nodes[0].fixDimension == 2);
  CHECK(q2.nodes[1].fixDimension == 1);
  REQUIRE(q2.arrows.size() == 1);
  CHECK(q2.arrows[0].normal.dimension() == 1);

  auto s3 = load("S3_standard");
  const auto q3 = degeneracyQuiver(s3.group, s3.lattice, s3.action);
  std::vector<std::size_t> dims;
  for (const auto& n : q3.nodes) dims.push_back(n.fixDimension);
  CHECK(dims == std::vector<std::size_t>{2, 1, 0, 0});
  // Covers of subconjugacy: 1 < C2, 1 < A3, C2 < S3, A3 < S3.
  CHECK(q3.arrows.size() == 4);
}

TEST_CASE("isotypic decomposition of the cyclic permutation module") {
  auto c4 = load("C4_permutation");
  const auto& whole = ofOrder(c4.lattice, 4);
  const auto parts = isotypicDecomposition(c4.group, c4.action, whole);
  // Q^4 under a 4-cycle: the regular module, one piece per divisor 1, 2, 4
  // of dimensions 1, 1, 2.
  REQUIRE(parts.size() == 3);
  std::size_t total = 0;
  for (const auto& p : parts) total += p.basis.size();
  CHECK(total == 4);
  CHECK(parts[0].basis.size() == 1);
  CHECK(parts[2].basis.size() == 2);
}

TEST_CASE("invalid representations are rejected") {
  const auto c2 = fixtures::group("C2").build();
  CHECK_THROWS_AS(LinearAction::create(c2, 2, {RatMatrix::fromRows({{1, 1}, {0, 1}})}), ValidationError);
  CHECK_THROWS_AS(LinearAction::create(c2, 2, {RatMatrix::fromRows({{1, 0}, {0, 0}})}), ValidationError);
  CHECK_THROWS_AS(LinearAction::create(c2, 2, {}), ValidationError);
}
