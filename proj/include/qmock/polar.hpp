#pragma once

#include <vector>

#include "qmock/laurent_poly.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

/// The q^0 factor 1 - c x^d, kept with d > 0.
struct Binomial {
  Rational c;
  int d = 1;

  [[nodiscard]] LaurentPoly poly() const;
  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend bool operator<(const Binomial& a, const Binomial& b) {
    return a.d != b.d ? a.d < b.d : a.c < b.c;
  }
};

/// Writes 1 - c x^d (d != 0) as unit * binomial; the unit is returned as a
/// monomial with qexp 0.
std::pair<Monomial, Binomial> split_binomial(const Rational& c, int d);

/// ser * zeros / prod(poles): a series with finitely many q^0 factors kept
/// symbolically so that they can be cancelled or cleared exactly.
struct Polar {
  QSeries ser;
  LaurentPoly zeros{1};
  std::vector<Binomial> poles;

  explicit Polar(QSeries s) : ser(std::move(s)) {}

  /// Drops poles that divide the zero polynomial exactly.
  void cancel();
  [[nodiscard]] LaurentPoly denominator() const;
};

/// A finite sum of polar terms; the regular part is term 0 when present.
class PolarSum {
 public:
  PolarSum() = default;
  explicit PolarSum(QSeries s) { add(Polar(std::move(s))); }
  explicit PolarSum(Polar p) { add(std::move(p)); }

  void add(Polar p);
  [[nodiscard]] const std::vector<Polar>& terms() const { return terms_; }
  std::vector<Polar>& terms() { return terms_; }

  PolarSum& operator+=(const PolarSum& o);
  PolarSum& operator-=(const PolarSum& o);
  PolarSum& operator*=(const Rational& c);
  PolarSum& operator*=(const LaurentPoly& p);
  PolarSum& operator*=(const Monomial& m);
  friend PolarSum operator+(PolarSum a, const PolarSum& b) { return a += b; }
  friend PolarSum operator-(PolarSum a, const PolarSum& b) { return a -= b; }
  friend PolarSum operator-(PolarSum a) { return a *= Rational(-1); }
  friend PolarSum operator*(PolarSum a, const Rational& c) { return a *= c; }
  friend PolarSum operator*(const Rational& c, PolarSum a) { return a *= c; }
  friend PolarSum operator*(PolarSum a, const LaurentPoly& p) { return a *= p; }
  friend PolarSum operator*(PolarSum a, const Monomial& m) { return a *= m; }
  /// Termwise Cauchy product.
  friend PolarSum operator*(const PolarSum& a, const PolarSum& b);

  /// Smallest order over all terms (INT_MAX when empty).
  [[nodiscard]] int order() const;
  /// Monic least common multiple of the term denominators.
  [[nodiscard]] LaurentPoly clearing() const;
  /// All pole factors, one entry per term and multiplicity.
  [[nodiscard]] std::vector<Binomial> pole_factors() const;
  /// sum of ser * zeros * (c / denominator); c must be a multiple of clearing().
  [[nodiscard]] QSeries cleared(const LaurentPoly& c, int order) const;

 private:
  std::vector<Polar> terms_;
};

}  // namespace qmock
