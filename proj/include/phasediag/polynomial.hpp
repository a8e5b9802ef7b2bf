#pragma once

// Sparse polynomials in at most three variables x, y, z with exact rational
// coefficients, and a recursive-descent parser for them.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "phasediag/rational.hpp"

namespace phasediag {

inline constexpr std::size_t kMaxVariables = 3;

using Monomial = std::array<unsigned, kMaxVariables>;

unsigned totalDegree(const Monomial& m);
Monomial operator*(const Monomial& a, const Monomial& b);
/// "1", "x", "x^2*y", ...
std::string monomialText(const Monomial& m);

class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool isZero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constantTerm() const { return coefficient(Monomial{}); }
  unsigned maxDegree() const;
  /// 1 + largest variable index that occurs, 0 for constants.
  std::size_t variablesUsed() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t variable) const;

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

  /// Terms in descending graded order, e.g. "x^3 + y^4", "x^2*y - 1/2*y^3".
  std::string toString() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Parses an expression over x, y, z with integer, decimal or rational
/// coefficients, + - * / (by constants), ^ (non-negative integer exponents)
/// and parentheses. Juxtaposition multiplies ("2x^2"). Throws ParseError
/// with the offending position.
Polynomial parsePolynomial(std::string_view text);

}  // namespace phasediag
