#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmock/laurent_poly.hpp"
#include "qmock/rational.hpp"

namespace qmock {

/// c * x^xdeg * q^qexp with c != 0.
struct Monomial {
  Rational coeff{1};
  int xdeg = 0;
  int qexp = 0;

  Monomial() = default;
  Monomial(Rational c, int d, int m);

  /// c q^m
  static Monomial q(int m, Rational c = Rational(1)) { return {std::move(c), 0, m}; }
  /// c x^d q^m
  static Monomial x(int d, int m, Rational c = Rational(1)) { return {std::move(c), d, m}; }

  [[nodiscard]] Monomial inverse() const;
  [[nodiscard]] Monomial pow(long e) const;
  [[nodiscard]] bool is_one() const { return coeff.is_one() && xdeg == 0 && qexp == 0; }
  [[nodiscard]] LaurentPoly x_part() const { return LaurentPoly::monomial(coeff, xdeg); }
  [[nodiscard]] std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  friend Monomial operator-(const Monomial& a) { return {-a.coeff, a.xdeg, a.qexp}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// First index where two series disagree, with both values.
struct Mismatch {
  int n = 0;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

/// Truncated Laurent series in q with Laurent-polynomial coefficients in x.
///
/// Holds the coefficients of q^v ... q^(N-1); everything below q^v is exactly
/// zero and everything from q^N on is unknown. Values are immutable in spirit:
/// every operation returns a new series.
class QSeries {
 public:
  /// The zero series on [v, N). Requires N > v.
  QSeries(int valuation, int order);
  QSeries(int valuation, std::vector<LaurentPoly> coeffs);

  static QSeries constant(const LaurentPoly& c, int order);
  /// m as a series on [min(qexp, order-1), order); empty if qexp >= order.
  static QSeries monomial(const Monomial& m, int order);
  /// Rational coefficient list c0 + c1 q + ... starting at q^v; order = v + size.
  static QSeries from_rationals(int valuation, const std::vector<Rational>& cs);

  [[nodiscard]] int valuation() const { return v_; }
  [[nodiscard]] int order() const { return v_ + static_cast<int>(c_.size()); }
  /// Coefficient of q^n: zero below the valuation, throws at or beyond the order.
  [[nodiscard]] const LaurentPoly& coeff(int n) const;
  [[nodiscard]] const std::vector<LaurentPoly>& coeffs() const { return c_; }
  [[nodiscard]] bool is_x_free() const;
  /// Raises the valuation past leading zero coefficients (keeps at least one slot).
  [[nodiscard]] QSeries normalized() const;
  /// Index of the first nonzero coefficient, or order() if none.
  [[nodiscard]] int effective_valuation() const;
  /// Same series with the window cut to [v, min(order, N)).
  [[nodiscard]] QSeries truncated(int order) const;
  /// Rational coefficients q^v..q^(N-1); throws if any coefficient involves x.
  [[nodiscard]] std::vector<Rational> rationals() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const LaurentPoly& c) { return a.scale(c); }
  friend QSeries operator*(const LaurentPoly& c, QSeries a) { return a.scale(c); }
  friend QSeries operator*(QSeries a, const Monomial& m) { return a.mul_monomial(m); }

  QSeries& scale(const LaurentPoly& c);
  /// Exact multiplication by c x^d q^m (shifts the window).
  QSeries& mul_monomial(const Monomial& m);
  /// In-place multiplication by (1 - u).
  QSeries& mul_one_minus(const Monomial& u);
  /// In-place multiplication by (1 - u)^(-p), p >= 1. Errors as expand_reciprocal.
  QSeries& div_one_minus(const Monomial& u, int p = 1);

 private:
  int v_;
  std::vector<LaurentPoly> c_;
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
/// Inverse of a series whose lowest nonzero coefficient is a single monomial.
QSeries series_inv_unit(const QSeries& a);
/// 1/(1-u)^p on [.., order), p in {1, 2} (any p >= 1 accepted).
QSeries expand_reciprocal(const Monomial& u, int p, int order);

/// Target of an x-substitution: x -> coeff * q^qexp.
struct XTarget {
  Rational coeff{1};
  int qexp = 0;
};
/// Ring homomorphism x^d q^e -> coeff^d q^(e + d*qexp) on the same window.
QSeries subst_x(const QSeries& a, const XTarget& target);
/// Formal derivative in x, coefficientwise.
QSeries ddx(const QSeries& a);
/// q -> q^D for D >= 1; window becomes [Dv, D(N-1)+1).
QSeries q_rescale(const QSeries& a, int factor);
/// Coefficient of q^n; same rules as QSeries::coeff.
LaurentPoly coeff(const QSeries& a, int n);

/// First mismatch of two series on [min valuation, min order), if any.
std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b);

}  // namespace qmock
