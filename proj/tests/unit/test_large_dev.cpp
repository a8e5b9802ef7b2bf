#include <doctest.h>

#include <cmath>
#include <limits>

#include "../support/oracles.hpp"
#include "phasediag/large_dev.hpp"

using namespace phasediag;

TEST_CASE("cumulant generating function") {
  const auto b = DiscreteObservable::bernoulli(0.3);
  CHECK(cgf(b, 0) == doctest::Approx(0).epsilon(1e-15));
  CHECK(std::abs(cgf(b, 1) - std::log(0.7 + 0.3 * std::exp(1.0))) < 1e-14);
  const DiscreteObservable two({{0, 0.5}, {2, 0.5}});
  CHECK(std::abs(cgf(two, 1) - std::log((1 + std::exp(2.0)) / 2)) < 1e-14);
  CHECK(std::isfinite(cgf(b, 1000)));
  CHECK(std::abs(cgfDerivative(b, 0) - 0.3) < 1e-14);
}

TEST_CASE("Legendre transform") {
  const auto b = DiscreteObservable::bernoulli(0.3);
  CHECK(legendre(b, 0.3) <= 1e-12);
  CHECK(std::abs(legendre(b, 0.5) - oracle::bernoulliKl(0.3, 0.5)) < 1e-9);
  CHECK(std::abs(legendre(b, 0.5) - 0.08715) < 1e-4);
  CHECK(std::abs(legendre(b, 0.999999) + std::log(0.3)) < 1e-4);
  CHECK(legendreExtended(b, 1.0) == doctest::Approx(-std::log(0.3)));
  CHECK(legendreExtended(b, 0.0) == doctest::Approx(-std::log(0.7)));
  CHECK(legendreExtended(b, 1.5) == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(legendre(b, 1.0), DomainError);
  CHECK(std::abs(bernoulliRate(0.3, 0.5) - oracle::bernoulliKl(0.3, 0.5)) < 1e-15);
}

TEST_CASE("Fenchel inequality and non-negativity") {
  const DiscreteObservable obs({{-1, 0.2}, {0.5, 0.5}, {3, 0.3}});
  for (double x = -0.9; x < 2.95; x += 0.25) {
    const double rate = legendre(obs, x);
    CHECK(rate >= 0);
    for (double t = -5; t <= 5; t += 0.5) CHECK(t * x - cgf(obs, t) <= rate + 1e-10);
  }
}

TEST_CASE("Cramer function and entropy") {
  CHECK(binaryEntropy(0.5) == doctest::Approx(std::log(2.0)));
  CHECK(binaryEntropy(0) == 0);
  CHECK(binaryEntropy(1) == 0);
  const auto b = DiscreteObservable::bernoulli(0.3);
  for (int i = 1; i <= 9; ++i) CHECK(cramer(b, i / 10.0) + legendre(b, i / 10.0) == 0);
}

TEST_CASE("observable validation and parsing") {
  CHECK_THROWS_AS(DiscreteObservable({{0, 0.5}, {1, 0.4}}), ValidationError);
  CHECK_THROWS_AS(DiscreteObservable({{1, 1.0}}), ValidationError);
  CHECK_THROWS_AS(DiscreteObservable::bernoulli(1.0), ValidationError);
  const auto d = DiscreteObservable::parse("0:0.7,1:0.3");
  CHECK(d.mean() == doctest::Approx(0.3));
  CHECK_THROWS_AS(DiscreteObservable::parse("0:0.7;1"), ValidationError);
  const auto grid = parseGrid("0.1:0.9:0.1");
  CHECK(grid.size() == 9);
  CHECK(rateTable(d, parseGrid("0:1:0.25")).size() == 3);
}
