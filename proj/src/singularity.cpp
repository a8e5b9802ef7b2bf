#include "phasediag/singularity.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "phasediag/error.hpp"

namespace phasediag {

namespace {

/// Graded reverse lexicographic comparison: true when a > b.
bool degrevlexGreater(const Monomial& a, const Monomial& b) {
  const auto da = totalDegree(a), db = totalDegree(b);
  if (da != db) return da > db;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void monomialsBelow(std::size_t variables, unsigned degree, std::size_t var, Monomial& current,
                    std::vector<Monomial>& out) {
  if (var == variables) {
    out.push_back(current);
    return;
  }
  const unsigned used = totalDegree(current);
  for (unsigned e = 0; used + e < degree; ++e) {
    current[var] = e;
    monomialsBelow(variables, degree, var + 1, current, out);
  }
  current[var] = 0;
}

using SparseRow = std::map<std::size_t, Rational>;

}  // namespace

PolyGerm parseGerm(std::string_view text) {
  PolyGerm germ;
  germ.poly = parsePolynomial(text);
  if (germ.poly.constantTerm() != 0) {
    throw ValidationError("germ has nonzero constant term " + toString(germ.poly.constantTerm()) +
                          "; germs must vanish at the origin");
  }
  germ.variableCount = std::max<std::size_t>(1, germ.poly.variablesUsed());
  return germ;
}

std::pair<std::size_t, std::vector<Monomial>> truncatedQuotient(const PolyGerm& germ, unsigned degree) {
  std::vector<Monomial> monomials;
  Monomial scratch{};
  monomialsBelow(germ.variableCount, degree, 0, scratch, monomials);
  std::sort(monomials.begin(), monomials.end(), degrevlexGreater);
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);

  std::unordered_map<std::size_t, SparseRow> pivots;
  auto insertRow = [&](SparseRow row) {
    while (!row.empty()) {
      const auto [lead, coeff] = *row.begin();
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational inv = 1 / coeff;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead, std::move(row));
        return;
      }
      const Rational factor = coeff;
      for (const auto& [c, v] : it->second) {
        auto [slot, inserted] = row.emplace(c, -factor * v);
        if (!inserted) {
          slot->second -= factor * v;
          if (slot->second == 0) row.erase(slot);
        }
      }
    }
  };

  for (std::size_t i = 0; i < germ.variableCount; ++i) {
    const Polynomial partial = germ.poly.derivative(i);
    if (partial.isZero()) continue;
    for (const auto& m : monomials) {
      SparseRow row;
      for (const auto& [t, c] : partial.terms()) {
        const Monomial product = m * t;
        if (totalDegree(product) >= degree) continue;
        row.emplace(column.at(product), c);
      }
      if (!row.empty()) insertRow(std::move(row));
    }
  }
  std::vector<Monomial> basis;
  for (std::size_t i = monomials.size(); i-- > 0;)
    if (!pivots.count(i)) basis.push_back(monomials[i]);
  return {basis.size(), std::move(basis)};
}

LocalAlgebra milnorNumber(const PolyGerm& germ, const MilnorOptions& options) {
  if (germ.variableCount == 0 || germ.variableCount > kMaxVariables) {
    throw ValidationError("germs must have between 1 and 3 variables");
  }
  if (germ.poly.constantTerm() != 0) throw ValidationError("germ has a nonzero constant term");
  const unsigned runs = std::max(1u, options.stableRuns);
  const unsigned step = std::max(1u, options.step);
  const unsigned start = options.startDegree ? options.startDegree : std::max(2u, 2 * germ.poly.maxDegree());
  const unsigned cap = std::max(options.capDegree, start + step * (runs - 1));

  LocalAlgebra out;
  std::vector<Monomial> lastBasis;
  for (unsigned k = start; k <= cap; k += step) {
    auto [dim, basis] = truncatedQuotient(germ, k);
    out.trace.emplace_back(k, dim);
    lastBasis = std::move(basis);
    if (out.trace.size() < runs) continue;
    const auto first = out.trace.end() - runs;
    if (std::all_of(first, out.trace.end(), [&](const auto& t) { return t.second == dim; })) {
      out.isolated = true;
      out.mu = dim;
      out.basis = std::move(lastBasis);
      return out;
    }
  }
  return out;
}

Rational weightMilnor(const std::vector<Rational>& weights) {
  Rational product = 1;
  for (const auto& w : weights) {
    if (w <= 0 || w >= 1) throw ValidationError("weight " + toString(w) + " is outside (0,1)");
    product *= 1 / w - 1;
  }
  return product;
}

std::vector<Rational> parseWeights(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parseRational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<std::vector<Rational>> inferWeights(const PolyGerm& germ) {
  const std::size_t n = germ.variableCount;
  if (germ.poly.isZero()) return std::nullopt;
  RatMatrix augmented(germ.poly.terms().size(), n + 1);
  std::size_t r = 0;
  for (const auto& [m, c] : germ.poly.terms()) {
    for (std::size_t i = 0; i < n; ++i) augmented(r, i) = m[i];
    augmented(r, n) = 1;
    ++r;
  }
  const RowEchelon e = rref(augmented);
  if (e.pivots.size() != n) return std::nullopt;  // inconsistent or underdetermined
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) w[e.pivots[i]] = e.reduced(i, n);
  for (const auto& x : w)
    if (x <= 0) return std::nullopt;
  return w;
}

QuasihomogeneousGerm QuasihomogeneousGerm::create(PolyGerm germ, std::vector<Rational> weights) {
  if (weights.size() != germ.variableCount) {
    throw ValidationError("expected " + std::to_string(germ.variableCount) + " weights, got " +
                          std::to_string(weights.size()));
  }
  for (const auto& w : weights)
    if (w <= 0) throw ValidationError("weight " + toString(w) + " is not positive");
  const EulerOperator euler(weights);
  for (const auto& [m, c] : germ.poly.terms()) {
    if (euler.eigenvalue(m) != 1) {
      throw ValidationError("monomial " + monomialText(m) + " has weighted degree " + toString(euler.eigenvalue(m)) +
                            ", not 1");
    }
  }
  QuasihomogeneousGerm q;
  q.germ_ = std::move(germ);
  q.weights_ = std::move(weights);
  return q;
}

Polynomial EulerOperator::apply(const Polynomial& p) const {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) out = out + Polynomial::monomial(m, c * eigenvalue(m));
  return out;
}

Rational EulerOperator::eigenvalue(const Monomial& m) const {
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) total += weights_[i] * m[i];
  for (std::size_t i = weights_.size(); i < kMaxVariables; ++i) {
    if (m[i] != 0) throw ValidationError("monomial uses a variable without a weight");
  }
  return total;
}

EulerOperator eulerOperator(const QuasihomogeneousGerm& germ) { return EulerOperator(germ.weights()); }

Rational applyEuler(const QuasihomogeneousGerm& germ, const Monomial& m) {
  return eulerOperator(germ).eigenvalue(m);
}

std::vector<Rational> spectrumGrading(const QuasihomogeneousGerm& germ, const MilnorOptions& options) {
  const LocalAlgebra algebra = milnorNumber(germ.germ(), options);
  if (!algebra.isolated) throw ValidationError("germ does not have an isolated singularity");
  const EulerOperator euler = eulerOperator(germ);
  std::vector<Rational> out;
  for (const auto& m : algebra.basis) out.push_back(euler.eigenvalue(m));
  std::sort(out.begin(), out.end());
  return out;
}

long modality(long mu, long codim) {
  if (codim < 0) throw ValidationError("codimension must be non-negative");
  const long m = (mu - 1) - codim;
  if (m < 0) {
    throw ValidationError("negative modality (mu=" + std::to_string(mu) + ", codim=" + std::to_string(codim) +
                          "): inconsistent inputs");
  }
  return m;
}

PolyGerm stabilize(const PolyGerm& germ) {
  if (germ.variableCount >= kMaxVariables) {
    throw ValidationError("cannot stabilize a germ that already uses " + std::to_string(kMaxVariables) + " variables");
  }
  PolyGerm out;
  out.variableCount = germ.variableCount + 1;
  out.poly = germ.poly + Polynomial::variable(germ.variableCount).pow(2);
  return out;
}

const CorpusEntry& AdjacencyCorpus::entry(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw ValidationError("no corpus entry named '" + std::string(name) + "'");
}

bool AdjacencyCorpus::hasArrow(std::string_view from, std::string_view to) const {
  return std::any_of(arrows.begin(), arrows.end(), [&](const auto& a) { return a.first == from && a.second == to; });
}

AdjacencyCorpus corpusAdjacency() {
  AdjacencyCorpus corpus;
  auto add = [&](std::string name, std::string form, std::vector<Rational> weights, long mu) {
    corpus.entries.push_back({std::move(name), std::move(form), std::move(weights), mu, mu - 1});
  };
  for (long k = 1; k <= 8; ++k) add("A" + std::to_string(k), "x^" + std::to_string(k + 1), {ratio(1, k + 1)}, k);
  for (long k = 4; k <= 8; ++k) {
    add("D" + std::to_string(k), "x^2*y + y^" + std::to_string(k - 1), {ratio(k - 2, 2 * (k - 1)), ratio(1, k - 1)},
        k);
  }
  add("E6", "x^3 + y^4", {ratio(1, 3), ratio(1, 4)}, 6);
  add("E7", "x^3 + x*y^3", {ratio(1, 3), ratio(2, 9)}, 7);
  add("E8", "x^3 + y^5", {ratio(1, 3), ratio(1, 5)}, 8);

  auto arrow = [&](std::string from, std::string to) { corpus.arrows.emplace_back(std::move(from), std::move(to)); };
  for (int k = 2; k <= 8; ++k) arrow("A" + std::to_string(k), "A" + std::to_string(k - 1));
  for (int k = 4; k <= 8; ++k) {
    arrow("D" + std::to_string(k), "A" + std::to_string(k - 1));
    if (k > 4) arrow("D" + std::to_string(k), "D" + std::to_string(k - 1));
  }
  arrow("E6", "A5");
  arrow("E6", "D5");
  arrow("E7", "E6");
  arrow("E7", "D6");
  arrow("E7", "A6");
  arrow("E8", "E7");
  arrow("E8", "D7");
  arrow("E8", "A7");
  return corpus;
}

std::vector<std::string> validateCorpus(const AdjacencyCorpus& corpus) {
  std::vector<std::string> issues;
  for (const auto& e : corpus.entries) {
    try {
      if (weightMilnor(e.weights) != e.mu) issues.push_back(e.name + ": weight formula disagrees with stored mu");
      if (modality(e.mu, e.codim) != 0) issues.push_back(e.name + ": modality is not zero");
      QuasihomogeneousGerm::create(e.germ(), e.weights);
    } catch (const ValidationError& err) {
      issues.push_back(e.name + ": " + err.what());
    }
  }
  for (const auto& [from, to] : corpus.arrows) {
    try {
      if (corpus.entry(from).mu - corpus.entry(to).mu != 1) issues.push_back(from + " -> " + to + ": mu drop is not 1");
    } catch (const ValidationError& err) {
      issues.push_back(from + " -> " + to + ": " + err.what());
    }
  }
  return issues;
}

RelativeCokernel relativeCokernel(const AdjacencyCorpus& corpus, std::string_view f, std::string_view g) {
  const auto& higher = corpus.entry(f);
  const auto& lower = corpus.entry(g);
  if (f != g && !corpus.hasArrow(f, g)) {
    throw ValidationError("no adjacency " + std::string(f) + " -> " + std::string(g) + " in the corpus");
  }
  RelativeCokernel out;
  out.dimension = higher.mu - lower.mu;
  if (out.dimension == 1) {
    const auto q = QuasihomogeneousGerm::create(higher.germ(), higher.weights);
    const auto algebra = milnorNumber(q.germ());
    const EulerOperator euler = eulerOperator(q);
    const Monomial* top = nullptr;
    for (const auto& m : algebra.basis)
      if (!top || euler.eigenvalue(m) > euler.eigenvalue(*top)) top = &m;
    if (top) {
      out.topWeight = euler.eigenvalue(*top);
      out.extraMonomial = *top;
    }
  }
  return out;
}

}  // namespace phasediag
