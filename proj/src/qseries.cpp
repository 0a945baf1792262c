#include "qmock/qseries.hpp"

#include <algorithm>

#include "qmock/error.hpp"

namespace qmock {

Monomial::Monomial(Rational c, int d, int m) : coeff(std::move(c)), xdeg(d), qexp(m) {
  if (coeff.is_zero()) throw Error("monomial coefficient must be nonzero");
}

Monomial Monomial::inverse() const { return {Rational(1) / coeff, -xdeg, -qexp}; }

Monomial Monomial::pow(long e) const {
  return {qmock::pow(coeff, e), static_cast<int>(xdeg * e), static_cast<int>(qexp * e)};
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return {a.coeff * b.coeff, a.xdeg + b.xdeg, a.qexp + b.qexp};
}

std::string Monomial::str() const {
  std::string s = coeff.str();
  if (xdeg != 0) s += "*x^" + std::to_string(xdeg);
  if (qexp != 0) s += "*q^" + std::to_string(qexp);
  return s;
}

QSeries::QSeries(int valuation, int order) : v_(valuation) {
  if (order <= valuation) throw Error("empty truncation window");
  c_.resize(static_cast<std::size_t>(order - valuation));
}

QSeries::QSeries(int valuation, std::vector<LaurentPoly> coeffs)
    : v_(valuation), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("empty truncation window");
}

QSeries QSeries::constant(const LaurentPoly& c, int order) {
  QSeries s(std::min(0, order - 1), order);
  if (order > 0) s.c_[static_cast<std::size_t>(-s.v_)] = c;
  return s;
}

QSeries QSeries::monomial(const Monomial& m, int order) {
  if (m.qexp >= order) return {order - 1, order};
  QSeries s(m.qexp, order);
  s.c_[0] = m.x_part();
  return s;
}

QSeries QSeries::from_rationals(int valuation, const std::vector<Rational>& cs) {
  std::vector<LaurentPoly> c;
  c.reserve(cs.size());
  for (const auto& r : cs) c.emplace_back(r);
  return {valuation, std::move(c)};
}

const LaurentPoly& QSeries::coeff(int n) const {
  static const LaurentPoly kZero;
  if (n < v_) return kZero;
  if (n >= order()) throw Error("coefficient outside truncation window");
  return c_[static_cast<std::size_t>(n - v_)];
}

bool QSeries::is_x_free() const {
  return std::all_of(c_.begin(), c_.end(), [](const LaurentPoly& p) { return p.is_constant(); });
}

int QSeries::effective_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return v_ + static_cast<int>(i);
  }
  return order();
}

QSeries QSeries::normalized() const {
  const int ev = std::min(effective_valuation(), order() - 1);
  if (ev == v_) return *this;
  return {ev, std::vector<LaurentPoly>(c_.begin() + (ev - v_), c_.end())};
}

QSeries QSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  if (order <= v_) return {order - 1, order};
  return {v_, std::vector<LaurentPoly>(c_.begin(), c_.begin() + (order - v_))};
}

std::vector<Rational> QSeries::rationals() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& p : c_) out.push_back(p.constant_value());
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) { return *this = series_add(*this, o); }

QSeries& QSeries::operator-=(const QSeries& o) { return *this = series_add(*this, -o); }

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  for (auto& p : r.c_) p = -p;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

QSeries& QSeries::scale(const LaurentPoly& c) {
  if (c.is_constant()) {
    const Rational k = c.constant_value();
    for (auto& p : c_) p *= k;
  } else {
    for (auto& p : c_) p = p * c;
  }
  return *this;
}

QSeries& QSeries::mul_monomial(const Monomial& m) {
  v_ += m.qexp;
  for (auto& p : c_) {
    if (!p.is_zero()) p = p.shifted(m.xdeg) * m.coeff;
  }
  return *this;
}

QSeries& QSeries::mul_one_minus(const Monomial& u) {
  const LaurentPoly ux = u.x_part();
  if (u.qexp == 0) return scale(LaurentPoly(1) - ux);
  const int m = u.qexp;
  if (m > 0) {
    const Rational neg = -u.coeff;
    for (std::size_t i = c_.size(); i-- > static_cast<std::size_t>(m);) {
      c_[i].add_scaled(c_[i - static_cast<std::size_t>(m)], neg, u.xdeg);
    }
    return *this;
  }
  // Negative exponent: the valuation drops by |m| and the top of the window
  // drops with it, since x_{n+|m|} is needed for y_n.
  const auto k = static_cast<std::size_t>(-m);
  std::vector<LaurentPoly> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    // output index i corresponds to n = v + m + i
    if (i >= k) out[i] = c_[i - k];
    out[i].add_scaled(c_[i], -u.coeff, u.xdeg);
  }
  v_ += m;
  c_ = std::move(out);
  return *this;
}

QSeries& QSeries::div_one_minus(const Monomial& u, int p) {
  if (p < 1) throw Error("reciprocal power must be positive");
  if (u.qexp == 0) {
    if (u.xdeg != 0) throw Error("q^0 pole in x");
    if (u.coeff.is_one()) throw Error("exact pole");
    scale(LaurentPoly(pow(Rational(1) - u.coeff, -p)));
    return *this;
  }
  if (u.qexp < 0) {
    // 1/(1-u) = -u^{-1} / (1 - u^{-1})
    const Monomial w = u.inverse();
    mul_monomial((-w).pow(p));
    return div_one_minus(w, p);
  }
  const auto m = static_cast<std::size_t>(u.qexp);
  for (int rep = 0; rep < p; ++rep) {
    for (std::size_t i = m; i < c_.size(); ++i) c_[i].add_scaled(c_[i - m], u.coeff, u.xdeg);
  }
  return *this;
}

QSeries series_add(const QSeries& a, const QSeries& b) {
  const int v = std::min(a.valuation(), b.valuation());
  const int n = std::min(a.order(), b.order());
  if (n <= v) return {n - 1, n};
  std::vector<LaurentPoly> c(static_cast<std::size_t>(n - v));
  for (int k = std::max(v, a.valuation()); k < n; ++k) c[static_cast<std::size_t>(k - v)] = a.coeff(k);
  for (int k = std::max(v, b.valuation()); k < n; ++k) c[static_cast<std::size_t>(k - v)] += b.coeff(k);
  return {v, std::move(c)};
}

namespace {

QSeries mul_rational(const QSeries& a, int va, const QSeries& b, int vb, int order) {
  const int v = va + vb;
  std::vector<Rational> ar, br;
  for (int i = va; i < order - vb; ++i) ar.push_back(a.coeff(i).constant_value());
  for (int j = vb; j < order - va; ++j) br.push_back(b.coeff(j).constant_value());
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < ar.size(); ++i) {
    if (!ar[i].is_zero()) nz.push_back(i);
  }
  std::vector<Rational> out(static_cast<std::size_t>(order - v));
  for (std::size_t i : nz) {
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j].add_product(ar[i], br[j]);
  }
  return QSeries::from_rationals(v, out);
}

}  // namespace

QSeries series_mul(const QSeries& a, const QSeries& b) {
  const int va = a.effective_valuation();
  const int vb = b.effective_valuation();
  const int order = std::min(a.order() + vb, b.order() + va);
  const int v = va + vb;
  if (va == a.order() || vb == b.order() || order <= v) {
    return {std::min(v, order - 1), order};
  }
  if (a.is_x_free() && b.is_x_free()) return mul_rational(a, va, b, vb, order);
  std::vector<int> nzb;
  for (int j = vb; j < order - va; ++j) {
    if (!b.coeff(j).is_zero()) nzb.push_back(j);
  }
  std::vector<LaurentPoly> c(static_cast<std::size_t>(order - v));
  LpAccumulator acc;
  for (int n = v; n < order; ++n) {
    for (int j : nzb) {
      const int i = n - j;
      if (i < va) break;
      acc.add_product(a.coeff(i), b.coeff(j));
    }
    c[static_cast<std::size_t>(n - v)] = acc.take();
  }
  return {v, std::move(c)};
}

QSeries series_inv_unit(const QSeries& a) {
  const int v = a.effective_valuation();
  if (v == a.order()) throw Error("non-unit leading coefficient");
  const LaurentPoly& lead = a.coeff(v);
  if (!lead.is_monomial()) throw Error("non-unit leading coefficient");
  const int m = a.order() - v;
  const auto [ld, lc] = lead.terms()[0];
  const Rational inv_c = Rational(1) / lc;
  if (a.is_x_free()) {
    std::vector<Rational> ar, r(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ar.push_back(a.coeff(v + i).constant_value());
    r[0] = inv_c;
    for (int n = 1; n < m; ++n) {
      Rational s;
      for (int i = 1; i <= n; ++i) s.add_product(ar[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(n - i)]);
      r[static_cast<std::size_t>(n)] = -(s * inv_c);
    }
    return QSeries::from_rationals(-v, r);
  }
  std::vector<LaurentPoly> r(static_cast<std::size_t>(m));
  r[0] = LaurentPoly::monomial(inv_c, -ld);
  LpAccumulator acc;
  for (int n = 1; n < m; ++n) {
    for (int i = 1; i <= n; ++i) acc.add_product(a.coeff(v + i), r[static_cast<std::size_t>(n - i)]);
    r[static_cast<std::size_t>(n)] = acc.take().shifted(-ld) * (-inv_c);
  }
  return {-v, std::move(r)};
}

QSeries expand_reciprocal(const Monomial& u, int p, int order) {
  QSeries s = QSeries::constant(LaurentPoly(1), order);
  s.div_one_minus(u, p);
  return s.truncated(order);
}

QSeries subst_x(const QSeries& a, const XTarget& target) {
  if (target.coeff.is_zero()) throw Error("substitution target must be nonzero");
  const int v = a.valuation();
  const int n_end = a.order();
  std::vector<Rational> out(static_cast<std::size_t>(n_end - v));
  for (int n = v; n < n_end; ++n) {
    for (const auto& [d, c] : a.coeff(n).terms()) {
      const long e = n + static_cast<long>(d) * target.qexp;
      if (e < v) throw Error("substitution underflow");
      if (e >= n_end) continue;
      out[static_cast<std::size_t>(e - v)] += c * pow(target.coeff, d);
    }
  }
  return QSeries::from_rationals(v, out);
}

QSeries ddx(const QSeries& a) {
  std::vector<LaurentPoly> c;
  c.reserve(a.coeffs().size());
  for (const auto& p : a.coeffs()) c.push_back(p.derivative());
  return {a.valuation(), std::move(c)};
}

QSeries q_rescale(const QSeries& a, int factor) {
  if (factor < 1) throw Error("rescale factor must be positive");
  const int v = a.valuation();
  QSeries r(factor * v, factor * (a.order() - 1) + 1);
  std::vector<LaurentPoly> c(r.coeffs().size());
  for (int n = v; n < a.order(); ++n) c[static_cast<std::size_t>(factor * (n - v))] = a.coeff(n);
  return {factor * v, std::move(c)};
}

LaurentPoly coeff(const QSeries& a, int n) { return a.coeff(n); }

std::optional<Mismatch> first_mismatch(const QSeries& a, const QSeries& b) {
  const int v = std::min(a.valuation(), b.valuation());
  const int n = std::min(a.order(), b.order());
  for (int k = v; k < n; ++k) {
    if (a.coeff(k) != b.coeff(k)) return Mismatch{k, a.coeff(k), b.coeff(k)};
  }
  return std::nullopt;
}

}  // namespace qmock
