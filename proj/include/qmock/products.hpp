#pragma once

#include <vector>

#include "qmock/polar.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

/// (a; q^step)_length raised to an integer power; length < 0 means infinite.
struct PochFactor {
  Monomial a;
  int step = 1;
  int length = -1;
  int power = 1;
};

/// A finite product of q-Pochhammer symbols (and their inverses) times a
/// monomial. Kept symbolic until applied to a series, so infinite products
/// are expanded only as far as the target window needs.
class Product {
 public:
  static constexpr int kInfinite = -1;

  Product() = default;
  explicit Product(const Monomial& m) : scale_(m) {}

  /// (a; q^step)_n, n = kInfinite for the infinite product.
  static Product poch(const Monomial& a, int step = 1, int n = kInfinite);
  /// [a_1, ..., a_m; q^step]_inf = prod (a_i, q^step / a_i; q^step)_inf
  static Product bracket(const std::vector<Monomial>& args, int step = 1);

  Product& operator*=(const Product& o);
  Product& operator/=(const Product& o);
  friend Product operator*(Product a, const Product& b) { return a *= b; }
  friend Product operator/(Product a, const Product& b) { return a /= b; }
  friend Product operator*(Product a, const Monomial& m) { return a *= Product(m); }
  [[nodiscard]] Product pow(int e) const;
  [[nodiscard]] Product inverse() const { return pow(-1); }

  /// Multiplies a polar term by the product on the term's own window.
  /// Throws "degenerate parameter configuration" if a denominator vanishes.
  [[nodiscard]] Polar apply(Polar p) const;
  [[nodiscard]] PolarSum apply(const PolarSum& s) const;
  /// The product itself as a polar term known below q^order.
  [[nodiscard]] Polar expand(int order) const;

  friend PolarSum operator*(const Product& p, const PolarSum& s) { return p.apply(s); }
  friend PolarSum operator*(const Product& p, const QSeries& s) { return p.apply(PolarSum(s)); }

  /// True when some numerator factor is exactly 1 - 1.
  [[nodiscard]] bool vanishes() const;

  [[nodiscard]] const std::vector<PochFactor>& factors() const { return factors_; }

 private:
  Monomial scale_;
  std::vector<PochFactor> factors_;
};

/// A product series together with the flag for an identically vanishing product.
struct ProductSeries {
  QSeries series;
  bool zero = false;
};

/// prod_{k<n} (1 - a q^(step k))
ProductSeries poch_finite(const Monomial& a, int n, int step, int order);
/// prod_{k>=0} (1 - a q^(step k)), all factors of valuation below the order.
ProductSeries poch_inf(const Monomial& a, int step, int order);
/// prod over args of (a; q^step)_inf (q^step / a; q^step)_inf
ProductSeries bracket_inf(const std::vector<Monomial>& args, int step, int order);

}  // namespace qmock
