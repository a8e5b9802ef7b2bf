#include "phasediag/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "phasediag/error.hpp"

namespace phasediag {

unsigned totalDegree(const Monomial& m) { return m[0] + m[1] + m[2]; }

Monomial operator*(const Monomial& a, const Monomial& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

std::string monomialText(const Monomial& m) {
  static constexpr char names[] = {'x', 'y', 'z'};
  std::string out;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.add(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m{};
  m.at(index) = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  p.add(m, c);
  return p;
}

void Polynomial::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::maxDegree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, totalDegree(m));
  return d;
}

std::size_t Polynomial::variablesUsed() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (m[i] > 0) n = std::max(n, i + 1);
  return n;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) out.add(a * b, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  for (const auto& [m, v] : terms_) out.add(m, v * c);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = constant(1);
  for (unsigned i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::derivative(std::size_t variable) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[variable] == 0) continue;
    Monomial d = m;
    --d[variable];
    out.add(d, c * m[variable]);
  }
  return out;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (totalDegree(a.first) != totalDegree(b.first)) return totalDegree(a.first) > totalDegree(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [m, c] : ordered) {
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unitCoefficient = magnitude == 1 && totalDegree(m) > 0;
    if (!unitCoefficient) {
      out += phasediag::toString(magnitude);
      if (totalDegree(m) > 0) out += '*';
    }
    if (totalDegree(m) > 0) out += monomialText(m);
  }
  return out;
}

namespace {

constexpr unsigned kMaxExponent = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool startsPrimary() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) ||
           c == '.';
  }

  Polynomial expression() {
    Polynomial acc;
    skip();
    if (pos_ >= text_.size()) fail("empty expression");
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Polynomial divisor = unary();
        if (divisor.variablesUsed() != 0) {
          pos_ = at;
          fail("division is only allowed by constants");
        }
        if (divisor.isZero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc.scaled(1 / divisor.constantTerm());
      } else if (startsPrimary()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
    const std::size_t start = pos_;
    unsigned long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      ++pos_;
      if (e > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
    }
    return base.pow(static_cast<unsigned>(e));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (name == "x") return Polynomial::variable(0);
      if (name == "y") return Polynomial::variable(1);
      if (name == "z") return Polynomial::variable(2);
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    std::string digits;
    std::size_t fractionDigits = 0;
    bool seenPoint = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits += c;
        if (seenPoint) ++fractionDigits;
      } else if (c == '.' && !seenPoint) {
        seenPoint = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("malformed number");
    }
    mpz_class numerator(digits);
    mpz_class denominator = 1;
    for (std::size_t i = 0; i < fractionDigits; ++i) denominator *= 10;
    Rational value(numerator, denominator);
    value.canonicalize();
    return Polynomial::constant(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace phasediag
