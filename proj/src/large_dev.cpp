#include "phasediag/large_dev.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "phasediag/error.hpp"

namespace phasediag {

namespace {

constexpr double kThetaTolerance = 1e-12;

double parseDouble(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError("malformed number '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw ValidationError("malformed number '" + s + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

}  // namespace

DiscreteObservable::DiscreteObservable(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
  double total = 0;
  std::set<double> distinct;
  for (const auto& o : outcomes_) {
    if (!std::isfinite(o.value)) throw ValidationError("outcome values must be finite");
    if (!(o.probability > 0)) throw ValidationError("probabilities must be positive");
    total += o.probability;
    distinct.insert(o.value);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  if (distinct.size() < 2) throw ValidationError("an observable needs at least two distinct values");
  min_ = *distinct.begin();
  max_ = *distinct.rbegin();
  for (const auto& o : outcomes_) mean_ += o.value * o.probability;
}

DiscreteObservable DiscreteObservable::bernoulli(double p) {
  if (!(p > 0 && p < 1)) throw ValidationError("Bernoulli parameter must lie in (0,1)");
  return DiscreteObservable({{0.0, 1.0 - p}, {1.0, p}});
}

DiscreteObservable DiscreteObservable::parse(std::string_view text) {
  std::vector<Outcome> outcomes;
  for (auto pair : split(text, ',')) {
    const auto parts = split(pair, ':');
    if (parts.size() != 2) throw ValidationError("expected value:probability, got '" + std::string(pair) + "'");
    outcomes.push_back({parseDouble(parts[0]), parseDouble(parts[1])});
  }
  return DiscreteObservable(std::move(outcomes));
}

double cgf(const DiscreteObservable& obs, double theta) {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& o : obs.outcomes()) shift = std::max(shift, theta * o.value);
  double sum = 0;
  for (const auto& o : obs.outcomes()) sum += o.probability * std::exp(theta * o.value - shift);
  return std::log(sum) + shift;
}

double cgfDerivative(const DiscreteObservable& obs, double theta) {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& o : obs.outcomes()) shift = std::max(shift, theta * o.value);
  double z = 0, first = 0;
  for (const auto& o : obs.outcomes()) {
    const double w = o.probability * std::exp(theta * o.value - shift);
    z += w;
    first += w * o.value;
  }
  return first / z;
}

double cgfSecondDerivative(const DiscreteObservable& obs, double theta) {
  double shift = -std::numeric_limits<double>::infinity();
  for (const auto& o : obs.outcomes()) shift = std::max(shift, theta * o.value);
  double z = 0, first = 0, second = 0;
  for (const auto& o : obs.outcomes()) {
    const double w = o.probability * std::exp(theta * o.value - shift);
    z += w;
    first += w * o.value;
    second += w * o.value * o.value;
  }
  const double m = first / z;
  return std::max(0.0, second / z - m * m);
}

LegendreResult legendreSolve(const DiscreteObservable& obs, double x) {
  if (!(x > obs.minValue() && x < obs.maxValue())) {
    throw DomainError("x = " + std::to_string(x) + " is outside the open hull (" + std::to_string(obs.minValue()) +
                      ", " + std::to_string(obs.maxValue()) + ")");
  }
  double lo = -1, hi = 1;
  for (int i = 0; i < 2000 && cgfDerivative(obs, lo) > x; ++i) lo *= 2;
  for (int i = 0; i < 2000 && cgfDerivative(obs, hi) < x; ++i) hi *= 2;
  for (int i = 0; i < 400 && hi - lo > kThetaTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cgfDerivative(obs, mid) < x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double theta = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double curvature = cgfSecondDerivative(obs, theta);
    if (curvature <= 0) break;
    const double residual = cgfDerivative(obs, theta) - x;
    const double candidate = theta - residual / curvature;
    if (!(candidate >= lo && candidate <= hi)) break;
    if (std::abs(cgfDerivative(obs, candidate) - x) >= std::abs(residual)) break;
    theta = candidate;
  }
  // theta = 0 is always a candidate and gives 0, so the supremum is >= 0.
  return {std::max(0.0, theta * x - cgf(obs, theta)), theta};
}

double legendre(const DiscreteObservable& obs, double x) { return legendreSolve(obs, x).value; }

double legendreExtended(const DiscreteObservable& obs, double x) {
  if (x > obs.minValue() && x < obs.maxValue()) return legendre(obs, x);
  if (x == obs.minValue() || x == obs.maxValue()) {
    double mass = 0;
    for (const auto& o : obs.outcomes())
      if (o.value == x) mass += o.probability;
    return -std::log(mass);
  }
  return std::numeric_limits<double>::infinity();
}

double cramer(const DiscreteObservable& obs, double x) { return -legendre(obs, x); }

double binaryEntropy(double x) {
  if (x < 0 || x > 1) throw DomainError("binary entropy is defined on [0,1]");
  if (x == 0 || x == 1) return 0;
  return -x * std::log(x) - (1 - x) * std::log(1 - x);
}

double bernoulliRate(double p, double x) {
  auto term = [](double a, double b) { return a == 0 ? 0.0 : a * std::log(a / b); };
  return term(x, p) + term(1 - x, 1 - p);
}

std::vector<RateProfile> rateTable(const DiscreteObservable& obs, const std::vector<double>& grid) {
  std::vector<RateProfile> out;
  for (double x : grid) {
    if (!(x > obs.minValue() && x < obs.maxValue())) continue;
    const double rate = legendre(obs, x);
    out.push_back({x, rate, -rate});
  }
  return out;
}

std::vector<double> parseGrid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ValidationError("grid must be start:stop:step");
  const double a = parseDouble(parts[0]), b = parseDouble(parts[1]), step = parseDouble(parts[2]);
  if (!(step > 0)) throw ValidationError("grid step must be positive");
  if (b < a) throw ValidationError("grid stop precedes start");
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  if (count > 1000000) throw ValidationError("grid is too large");
  std::vector<double> grid;
  for (std::size_t i = 0; i < count; ++i) grid.push_back(a + static_cast<double>(i) * step);
  return grid;
}

}  // namespace phasediag
