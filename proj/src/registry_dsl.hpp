#pragma once
// Shorthand used by the identity registry. Not installed.

#include <vector>

#include "qmock/lambert.hpp"
#include "qmock/products.hpp"
#include "qmock/verify.hpp"

namespace qmock::dsl {

/// c q^m
inline Monomial q(int m, Rational c = Rational(1)) { return Monomial::q(m, std::move(c)); }
/// -q^m
inline Monomial nq(int m) { return Monomial::q(m, Rational(-1)); }
/// c x^d q^m
inline Monomial xq(int d, int m, Rational c = Rational(1)) { return Monomial::x(d, m, std::move(c)); }

inline Product br(const std::vector<Monomial>& a, int step) { return Product::bracket(a, step); }
inline Product pc(const Monomial& a, int step) { return Product::poch(a, step); }
/// (a; q^step)_n
inline Product pcn(const Monomial& a, int step, int n) { return Product::poch(a, step, n); }
/// (q^step; q^step)_inf
inline Product qq(int step) { return Product::poch(q(step), step); }
inline Product mono(const Monomial& m) { return Product(m); }

inline PolarSum cst(const LaurentPoly& c, int w) { return PolarSum(QSeries::constant(c, w)); }
inline PolarSum unit(int w) { return cst(LaurentPoly(1), w); }
inline PolarSum expand(const Product& p, int w) { return PolarSum(p.expand(w)); }
inline PolarSum series(QSeries s) { return PolarSum(std::move(s)); }

/// sum_k (alpha + beta k) sign^k ratio^k q^(A k^2 + B k + C) / (1 - b q^(step k))^p
class Lam {
 public:
  Lam& w(Rational alpha, Rational beta = Rational(0)) {
    s_.alpha = std::move(alpha);
    s_.beta = std::move(beta);
    return *this;
  }
  Lam& alt() {
    s_.sign = -s_.sign;
    return *this;
  }
  Lam& e(Rational A, Rational B, Rational C = Rational(0)) {
    s_.A = std::move(A);
    s_.B = std::move(B);
    s_.C = std::move(C);
    return *this;
  }
  Lam& den(const Monomial& b, int step, int p = 1) {
    s_.denom = LambertDenom{b, step, p};
    return *this;
  }
  Lam& ratio(const Monomial& r) {
    s_.ratio = r;
    return *this;
  }
  Lam& pre(LaurentPoly p) {
    s_.prefactor = std::move(p);
    return *this;
  }
  Lam& from(int k) {
    s_.range = BilateralSpec::Range::from;
    s_.from = k;
    return *this;
  }
  Lam& skip(int k) {
    s_.range = BilateralSpec::Range::all_except;
    s_.excluded.push_back(k);
    return *this;
  }
  [[nodiscard]] PolarSum at(int w) const { return bilateral_sum(s_, w); }
  [[nodiscard]] const BilateralSpec& spec() const { return s_; }

 private:
  BilateralSpec s_;
};

/// sum_{m>=0} q^(e0 + step m) / (1 - c q^(e0 + step m))
inline Lam geo(int e0, int step, Rational c = Rational(1)) {
  return Lam().e(0, step, e0).den(q(e0, std::move(c)), step).from(0);
}

inline int P(const Params& p, const char* key) { return p.at(key); }

}  // namespace qmock::dsl
