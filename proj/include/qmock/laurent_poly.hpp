#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qmock/rational.hpp"

namespace qmock {

/// Finite Laurent polynomial in the single formal symbol x over the rationals.
///
/// Stored as a strictly increasing list of (exponent, coefficient) pairs with no
/// zero coefficients, so structural equality is exact equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<Term> terms);

  /// c * x^d
  static LaurentPoly monomial(const Rational& c, int d);
  /// Builds from arbitrary (exponent, coeff) pairs: sorts, merges, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] int min_degree() const { return terms_.front().first; }
  [[nodiscard]] int max_degree() const { return terms_.back().first; }
  /// Coefficient of x^d (zero when absent).
  [[nodiscard]] Rational coeff(int d) const;
  /// Constant term when the polynomial is x-free; throws otherwise.
  [[nodiscard]] Rational constant_value() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  /// this += c x^d
  void add_term(int d, const Rational& c);
  /// this += c x^d * p
  void add_scaled(const LaurentPoly& p, const Rational& c, int d);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Multiplies by x^d.
  [[nodiscard]] LaurentPoly shifted(int d) const;
  /// d/dx, termwise x^d -> d x^(d-1).
  [[nodiscard]] LaurentPoly derivative() const;
  /// Value at x = v (v must be nonzero if negative exponents occur).
  [[nodiscard]] Rational evaluate(const Rational& v) const;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient p / divisor in the Laurent ring. Throws
/// std::domain_error("inexact Laurent division") when divisor does not divide p.
LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& divisor);

/// Monic gcd (lowest exponent 0) of two Laurent polynomials; gcd(0, 0) = 0.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Monic least common multiple with lowest exponent 0.
LaurentPoly lp_lcm(const LaurentPoly& a, const LaurentPoly& b);
/// True when a = u * b for a unit u = c x^d of the Laurent ring.
bool lp_associated(const LaurentPoly& a, const LaurentPoly& b);
/// Representative of the associate class: lowest exponent 0, leading coeff 1.
LaurentPoly lp_normalized(const LaurentPoly& a);

/// Dense scratch buffer for summing many Laurent-polynomial products.
class LpAccumulator {
 public:
  void add_product(const LaurentPoly& a, const LaurentPoly& b);
  void add(const LaurentPoly& a);
  void sub(const LaurentPoly& a);
  /// Returns the accumulated value and resets the buffer.
  LaurentPoly take();

 private:
  void reserve_range(int lo, int hi);
  int low_ = 0;
  std::vector<Rational> dense_;
  bool used_ = false;
};

}  // namespace qmock
