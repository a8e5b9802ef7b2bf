#pragma once

// Invariants of isolated hypersurface singularities at the origin: local
// algebras and Milnor numbers by truncated linear algebra, quasihomogeneous
// weights, Euler derivations and their spectra, modality, stabilization,
// and a bundled corpus of the simple (ADE) singularities with adjacencies.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phasediag/polynomial.hpp"
#include "phasediag/rational.hpp"

namespace phasediag {

struct PolyGerm {
  std::size_t variableCount = 1;
  Polynomial poly;
};

/// Parses a germ. The variable count is the number of variables up to the
/// last one used (at least 1). Rejects a nonzero constant term.
PolyGerm parseGerm(std::string_view text);

struct MilnorOptions {
  unsigned startDegree = 0;   ///< 0: twice the maximal total degree of f
  unsigned step = 2;
  unsigned stableRuns = 3;    ///< consecutive equal dimensions required
  unsigned capDegree = 40;    ///< raised to fit at least stableRuns degrees
};

struct LocalAlgebra {
  bool isolated = false;
  std::size_t mu = 0;                     ///< Milnor number when isolated
  std::vector<Monomial> basis;            ///< standard monomials, ascending degree
  /// (truncation degree k, dim Q[x]/(J + m^k)) for every degree tried.
  std::vector<std::pair<unsigned, std::size_t>> trace;
};

/// Dimension of Q[x]/(J(f) + m^k) and its standard monomials under a graded
/// reverse-lexicographic order, by sparse exact elimination of the truncated
/// Macaulay matrix { x^a df/dx_i mod m^k }.
std::pair<std::size_t, std::vector<Monomial>> truncatedQuotient(const PolyGerm& germ, unsigned degree);

/// Milnor number of f at the origin. The truncated dimension is accepted
/// once it is stable over stableRuns consecutive degrees; if the cap is
/// reached first the germ is reported as non-isolated. The stability test is
/// a heuristic for the non-isolated verdict.
LocalAlgebra milnorNumber(const PolyGerm& germ, const MilnorOptions& options = {});

/// prod(1/w_i - 1). Throws ValidationError unless every 0 < w_i < 1.
Rational weightMilnor(const std::vector<Rational>& weights);

/// Parses "1/3,1/4".
std::vector<Rational> parseWeights(std::string_view text);

/// Unique weights making every monomial of f weighted-homogeneous of degree
/// 1, if they exist.
std::optional<std::vector<Rational>> inferWeights(const PolyGerm& germ);

class QuasihomogeneousGerm {
 public:
  /// Throws ValidationError unless the weights are positive, one per
  /// variable, and every monomial has weighted degree 1.
  static QuasihomogeneousGerm create(PolyGerm germ, std::vector<Rational> weights);

  const PolyGerm& germ() const noexcept { return germ_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

 private:
  PolyGerm germ_;
  std::vector<Rational> weights_;
};

/// The Euler derivation D = sum w_i x_i d/dx_i of a quasihomogeneous germ.
class EulerOperator {
 public:
  explicit EulerOperator(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  Polynomial apply(const Polynomial& p) const;
  /// Eigenvalue of the monomial x^a: sum w_i a_i.
  Rational eigenvalue(const Monomial& m) const;
  const std::vector<Rational>& weights() const noexcept { return weights_; }

 private:
  std::vector<Rational> weights_;
};

EulerOperator eulerOperator(const QuasihomogeneousGerm& germ);
Rational applyEuler(const QuasihomogeneousGerm& germ, const Monomial& m);

/// Sorted Euler eigenvalues of the monomial basis of the local algebra.
/// Throws ValidationError for non-isolated germs.
std::vector<Rational> spectrumGrading(const QuasihomogeneousGerm& germ, const MilnorOptions& options = {});

/// (mu - 1) - codim. Throws ValidationError when the result is negative.
long modality(long mu, long codim);

/// f -> f + (next variable)^2. Throws ValidationError at three variables.
PolyGerm stabilize(const PolyGerm& germ);

struct CorpusEntry {
  std::string name;
  std::string normalForm;
  std::vector<Rational> weights;
  long mu = 0;
  long codim = 0;

  PolyGerm germ() const { return parseGerm(normalForm); }
};

struct AdjacencyCorpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::pair<std::string, std::string>> arrows;  ///< (more degenerate, less degenerate)

  const CorpusEntry& entry(std::string_view name) const;
  bool hasArrow(std::string_view from, std::string_view to) const;
};

/// A_k (k <= 8), D_k (4 <= k <= 8), E6, E7, E8 with their degenerations.
AdjacencyCorpus corpusAdjacency();

/// Problems found when re-deriving corpus facts: weight formula versus
/// stored mu, unit mu drop along arrows, zero modality. Empty when sound.
std::vector<std::string> validateCorpus(const AdjacencyCorpus& corpus);

struct RelativeCokernel {
  long dimension = 0;                       ///< mu(f) - mu(g)
  std::optional<Rational> topWeight;        ///< set when dimension == 1
  std::optional<Monomial> extraMonomial;    ///< top-weight basis monomial of o_f
};

/// Cokernel data for an adjacency f -> g of the corpus (or f = g). For a
/// unit jump the extra direction is the top-weight (socle) monomial of the
/// local algebra of f. Throws ValidationError when no arrow exists.
RelativeCokernel relativeCokernel(const AdjacencyCorpus& corpus, std::string_view f, std::string_view g);

}  // namespace phasediag
