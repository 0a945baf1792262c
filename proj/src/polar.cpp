#include "qmock/polar.hpp"

#include <algorithm>
#include <climits>

#include "qmock/error.hpp"

namespace qmock {

LaurentPoly Binomial::poly() const { return LaurentPoly{{0, Rational(1)}, {d, -c}}; }

std::pair<Monomial, Binomial> split_binomial(const Rational& c, int d) {
  if (d == 0) throw Error("binomial without x");
  if (d > 0) return {Monomial(Rational(1), 0, 0), Binomial{c, d}};
  // 1 - c x^-e = (-c x^-e) (1 - c^-1 x^e)
  return {Monomial(-c, d, 0), Binomial{Rational(1) / c, -d}};
}

void Polar::cancel() {
  if (poles.empty() || zeros.is_constant()) return;
  for (auto it = poles.begin(); it != poles.end();) {
    try {
      zeros = lp_exact_div(zeros, it->poly());
      it = poles.erase(it);
    } catch (const Error&) {
      ++it;
    }
    if (zeros.is_constant()) break;
  }
}

LaurentPoly Polar::denominator() const {
  LaurentPoly d(1);
  for (const auto& b : poles) d = d * b.poly();
  return d;
}

namespace {

bool same_shape(const Polar& a, const Polar& b) { return a.poles == b.poles && a.zeros == b.zeros; }

}  // namespace

void PolarSum::add(Polar p) {
  std::sort(p.poles.begin(), p.poles.end());
  for (auto& t : terms_) {
    if (same_shape(t, p)) {
      t.ser += p.ser;
      return;
    }
  }
  terms_.push_back(std::move(p));
}

PolarSum& PolarSum::operator+=(const PolarSum& o) {
  for (const auto& t : o.terms_) add(t);
  return *this;
}

PolarSum& PolarSum::operator-=(const PolarSum& o) { return *this += -o; }

PolarSum& PolarSum::operator*=(const Rational& c) {
  for (auto& t : terms_) t.ser.scale(LaurentPoly(c));
  return *this;
}

PolarSum& PolarSum::operator*=(const LaurentPoly& p) {
  if (p.is_constant()) return *this *= p.constant_value();
  PolarSum out;
  for (auto t : terms_) {
    t.zeros = t.zeros * p;
    t.cancel();
    out.add(std::move(t));
  }
  return *this = std::move(out);
}

PolarSum& PolarSum::operator*=(const Monomial& m) {
  for (auto& t : terms_) t.ser.mul_monomial(m);
  return *this;
}

PolarSum operator*(const PolarSum& a, const PolarSum& b) {
  PolarSum out;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Polar p(s.ser * t.ser);
      p.zeros = s.zeros * t.zeros;
      p.poles = s.poles;
      p.poles.insert(p.poles.end(), t.poles.begin(), t.poles.end());
      p.cancel();
      out.add(std::move(p));
    }
  }
  return out;
}

int PolarSum::order() const {
  int n = INT_MAX;
  for (const auto& t : terms_) n = std::min(n, t.ser.order());
  return n;
}

LaurentPoly PolarSum::clearing() const {
  LaurentPoly c(1);
  for (const auto& t : terms_) {
    if (!t.poles.empty()) c = lp_lcm(c, t.denominator());
  }
  return lp_normalized(c);
}

std::vector<Binomial> PolarSum::pole_factors() const {
  std::vector<Binomial> out;
  for (const auto& t : terms_) out.insert(out.end(), t.poles.begin(), t.poles.end());
  std::sort(out.begin(), out.end());
  return out;
}

QSeries PolarSum::cleared(const LaurentPoly& c, int order) const {
  QSeries acc(order - 1, order);
  for (const auto& t : terms_) {
    const LaurentPoly m = lp_exact_div(c, t.denominator()) * t.zeros;
    acc += t.ser.truncated(order) * m;
  }
  return acc;
}

}  // namespace qmock
