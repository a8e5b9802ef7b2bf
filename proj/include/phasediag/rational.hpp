#pragma once

// Exact rational scalars and dense matrices over Q.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace phasediag {

using Rational = mpq_class;

/// p/q in lowest terms. Throws ValidationError when q = 0.
Rational ratio(long p, long q);

/// Parses "p", "-p" or "p/q". Throws ValidationError on malformed text or q = 0.
Rational parseRational(std::string_view text);

/// Canonical text form: "p" for integers, otherwise "p/q" in lowest terms.
std::string toString(const Rational& value);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  static RatMatrix fromRows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  RatMatrix operator+(const RatMatrix& rhs) const;
  RatMatrix operator-(const RatMatrix& rhs) const;
  RatMatrix scaled(const Rational& factor) const;
  RatMatrix transposed() const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  bool operator==(const RatMatrix& rhs) const;

  bool isZero() const;
  Rational trace() const;

  std::vector<std::vector<Rational>> toRows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form.
RowEchelon rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical basis of the column space: the nonzero rows of rref(m^T).
/// Each returned vector has length m.rows().
std::vector<std::vector<Rational>> columnSpaceBasis(const RatMatrix& m);

}  // namespace phasediag
