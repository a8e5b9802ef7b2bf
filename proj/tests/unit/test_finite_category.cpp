#include <doctest.h>

#include "phasediag/finite_category.hpp"
#include "phasediag/fixtures.hpp"
#include "phasediag/orbit_category.hpp"

using namespace phasediag;

namespace {

FiniteCategory twoObjects(bool withArrow) {
  FiniteCategory c;
  c.addObject({"a", {}, {}});
  c.addObject({"b", {}, {}});
  if (withArrow) c.addMorphism(0, 1, "f");
  return c;
}

}  // namespace

TEST_CASE("categories compare with themselves by the identity") {
  const auto s3 = buildOrbitCategory(fixtures::group("S3").build()).category;
  const auto w = categoryIsomorphic(s3, s3);
  REQUIRE(w);
  for (std::size_t i = 0; i < w->objectMap.size(); ++i) CHECK(w->objectMap[i] == i);
  for (std::size_t i = 0; i < w->morphismMap.size(); ++i) CHECK(w->morphismMap[i] == i);
}

TEST_CASE("poset versus discrete") {
  CHECK_FALSE(categoryIsomorphic(twoObjects(true), twoObjects(false)));
  CHECK(categoryIsomorphic(twoObjects(true), twoObjects(true)));
}

TEST_CASE("missing composites are reported") {
  FiniteCategory c;
  c.addObject({"a", {}, {}});
  c.addMorphism(0, 0, "s");
  CHECK(c.validate());
  CHECK_THROWS_AS(c.compose(1, 1), ValidationError);
  c.setComposite(1, 1, 0);
  CHECK_FALSE(c.validate());
}

TEST_CASE("functor checks catch broken maps") {
  const auto a = twoObjects(true);
  FunctorData swap{{1, 0}, {1, 0, 2}};
  CHECK(checkFunctor(a, a, swap));
  FunctorData id{{0, 1}, {0, 1, 2}};
  CHECK_FALSE(checkIsomorphism(a, a, id));
}

TEST_CASE("isomorphism search respects the object cap") {
  FiniteCategory big;
  for (std::size_t i = 0; i <= kMaxIsomorphismObjects; ++i) big.addObject({"o", {}, {}});
  CHECK_THROWS_AS(categoryIsomorphic(big, big), CapExceeded);
}
