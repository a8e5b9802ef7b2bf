#pragma once

// Cumulant generating functions of finite discrete observables, their
// Legendre transforms (large-deviation rate functions) and Cramer functions.
// Natural logarithms throughout.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace phasediag {

struct Outcome {
  double value = 0;
  double probability = 0;
};

class DiscreteObservable {
 public:
  /// Throws ValidationError unless probabilities are positive, sum to 1
  /// within 1e-12, and at least two distinct values occur.
  explicit DiscreteObservable(std::vector<Outcome> outcomes);

  static DiscreteObservable bernoulli(double p);
  /// Parses "0:0.7,1:0.3".
  static DiscreteObservable parse(std::string_view text);

  const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
  double mean() const noexcept { return mean_; }
  double minValue() const noexcept { return min_; }
  double maxValue() const noexcept { return max_; }

 private:
  std::vector<Outcome> outcomes_;
  double mean_ = 0;
  double min_ = 0;
  double max_ = 0;
};

/// log E exp(theta L), evaluated with a max-shift.
double cgf(const DiscreteObservable& obs, double theta);
/// d/dtheta of the cgf: the mean of the exponentially tilted distribution.
double cgfDerivative(const DiscreteObservable& obs, double theta);
double cgfSecondDerivative(const DiscreteObservable& obs, double theta);

struct LegendreResult {
  double value = 0;   ///< sup_theta (theta x - cgf(theta))
  double theta = 0;   ///< maximizer
};

/// Convex conjugate at x inside the open outcome hull. The maximizer solves
/// cgf'(theta) = x; it is bracketed and bisected to 1e-12 in theta, then
/// polished with damped Newton steps. Throws DomainError outside the hull.
LegendreResult legendreSolve(const DiscreteObservable& obs, double x);
double legendre(const DiscreteObservable& obs, double x);

/// Rate function on the whole line: the boundary values -log P(L = extreme)
/// at the hull endpoints and +infinity outside.
double legendreExtended(const DiscreteObservable& obs, double x);

/// C(x) = -legendre(x).
double cramer(const DiscreteObservable& obs, double x);

/// S(x) = -x log x - (1-x) log(1-x), with S(0) = S(1) = 0.
double binaryEntropy(double x);

/// Relative entropy x log(x/p) + (1-x) log((1-x)/(1-p)): the closed form of
/// the Bernoulli rate function.
double bernoulliRate(double p, double x);

struct RateProfile {
  double x = 0;
  double rate = 0;     ///< legendre
  double cramer = 0;   ///< -rate
};

/// Evaluates the rate function on a grid; points outside the open hull are
/// skipped.
std::vector<RateProfile> rateTable(const DiscreteObservable& obs, const std::vector<double>& grid);

/// Parses "a:b:step" into an inclusive grid (tolerant of rounding at b).
std::vector<double> parseGrid(std::string_view text);

}  // namespace phasediag
