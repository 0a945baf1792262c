#include "qmock/products.hpp"

#include <map>
#include <tuple>

#include "qmock/error.hpp"

namespace qmock {

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tie(a.qexp, a.xdeg) != std::tie(b.qexp, b.xdeg)
               ? std::tie(a.qexp, a.xdeg) < std::tie(b.qexp, b.xdeg)
               : a.coeff < b.coeff;
  }
};

// Everything a product contributes on a window of the given width.
struct Expansion {
  Monomial unit;
  LaurentPoly zeros{1};
  std::vector<Binomial> poles;
  std::map<Monomial, int, MonoLess> factors;  // (1 - u)^e with u.qexp > 0
  bool vanishes = false;
};

void add_factor(Expansion& ex, const Monomial& u, int e) {
  if (u.qexp > 0) {
    int& slot = ex.factors[u];
    slot += e;
    if (slot == 0) ex.factors.erase(u);
    return;
  }
  if (u.qexp < 0) {
    // 1 - u = (-u) (1 - u^-1)
    ex.unit = ex.unit * (-u).pow(e);
    add_factor(ex, u.inverse(), e);
    return;
  }
  if (u.xdeg == 0) {
    if (u.coeff.is_one()) {
      if (e < 0) throw Error("degenerate parameter configuration");
      ex.vanishes = true;
      return;
    }
    ex.unit = ex.unit * Monomial::q(0, pow(Rational(1) - u.coeff, e));
    return;
  }
  if (e > 0) {
    const LaurentPoly b = LaurentPoly(1) - u.x_part();
    for (int i = 0; i < e; ++i) ex.zeros = ex.zeros * b;
    return;
  }
  const auto [unit, bin] = split_binomial(u.coeff, u.xdeg);
  ex.unit = ex.unit * unit.pow(e);
  for (int i = 0; i < -e; ++i) ex.poles.push_back(bin);
}

Expansion expand_factors(const Monomial& scale, const std::vector<PochFactor>& fs, int width) {
  Expansion ex;
  ex.unit = scale;
  for (const auto& f : fs) {
    for (int k = 0; f.length < 0 || k < f.length; ++k) {
      const Monomial u = f.a * Monomial::q(f.step * k);
      if (f.length < 0 && u.qexp >= width) break;
      if (u.qexp >= width && u.qexp > 0) continue;
      add_factor(ex, u, f.power);
    }
  }
  return ex;
}

}  // namespace

Product Product::poch(const Monomial& a, int step, int n) {
  if (step < 1) throw Error("product step must be positive");
  Product p;
  p.factors_.push_back({a, step, n, 1});
  return p;
}

Product Product::bracket(const std::vector<Monomial>& args, int step) {
  Product p;
  for (const auto& a : args) {
    p *= poch(a, step);
    p *= poch(Monomial::q(step) / a, step);
  }
  return p;
}

Product& Product::operator*=(const Product& o) {
  scale_ = scale_ * o.scale_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  return *this;
}

Product& Product::operator/=(const Product& o) { return *this *= o.inverse(); }

Product Product::pow(int e) const {
  Product p;
  p.scale_ = scale_.pow(e);
  for (auto f : factors_) {
    f.power *= e;
    if (f.power != 0) p.factors_.push_back(f);
  }
  return p;
}

bool Product::vanishes() const {
  for (const auto& f : factors_) {
    if (f.power <= 0 || f.a.xdeg != 0 || !f.a.coeff.is_one() || f.a.qexp > 0) continue;
    if (f.a.qexp % f.step != 0) continue;
    const int k = -f.a.qexp / f.step;
    if (f.length < 0 || k < f.length) return true;
  }
  return false;
}

Polar Product::apply(Polar p) const {
  const int width = p.ser.order() - p.ser.valuation();
  const Expansion ex = expand_factors(scale_, factors_, width);
  if (ex.vanishes) return Polar(QSeries(p.ser.order() - 1, p.ser.order()));
  for (const auto& [u, e] : ex.factors) {
    if (e > 0) {
      for (int i = 0; i < e; ++i) p.ser.mul_one_minus(u);
    } else {
      p.ser.div_one_minus(u, -e);
    }
  }
  p.ser.mul_monomial(ex.unit);
  p.zeros = p.zeros * ex.zeros;
  p.poles.insert(p.poles.end(), ex.poles.begin(), ex.poles.end());
  p.cancel();
  return p;
}

PolarSum Product::apply(const PolarSum& s) const {
  PolarSum out;
  for (const auto& t : s.terms()) out.add(apply(t));
  return out;
}

Polar Product::expand(int order) const {
  // Start from 1 on [0, order) and shift afterwards: the unit's q-power moves
  // the whole window, so build on a window of the same width.
  Polar p = apply(Polar(QSeries::constant(LaurentPoly(1), order)));
  return p;
}

namespace {

ProductSeries to_series(const Product& p, int order) {
  Polar e = p.expand(order);
  return {e.ser * e.zeros, p.vanishes()};
}

}  // namespace

ProductSeries poch_finite(const Monomial& a, int n, int step, int order) {
  return to_series(Product::poch(a, step, n), order);
}

ProductSeries poch_inf(const Monomial& a, int step, int order) {
  return to_series(Product::poch(a, step), order);
}

ProductSeries bracket_inf(const std::vector<Monomial>& args, int step, int order) {
  return to_series(Product::bracket(args, step), order);
}

}  // namespace qmock
