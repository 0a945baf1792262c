#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qmock/error.hpp"
#include "qmock/lambert.hpp"
#include "qmock/mockforms.hpp"
#include "qmock/products.hpp"

using namespace qmock;

namespace {

QSeries regular(const PolarSum& s) {
  REQUIRE(s.terms().size() == 1);
  REQUIRE(s.terms()[0].poles.empty());
  return s.terms()[0].ser * s.terms()[0].zeros;
}

}  // namespace

TEST_CASE("pentagonal spec reproduces (q;q)_inf") {
  BilateralSpec s;
  s.sign = -1;
  s.A = Rational(3, 2);
  s.B = Rational(1, 2);
  const QSeries r = regular(bilateral_sum(s, 60));
  const auto pent = oracle::pentagonal(60);
  for (int n = 0; n < 60; ++n) CHECK(r.coeff(n) == LaurentPoly(Rational(pent[static_cast<std::size_t>(n)])));
}

TEST_CASE("sum q^k/(1-q^k)^2 has sigma(n) coefficients") {
  BilateralSpec s;
  s.B = 1;
  s.range = BilateralSpec::Range::from;
  s.from = 1;
  s.denom = LambertDenom{Monomial::q(0), 1, 2};
  const QSeries r = regular(bilateral_sum(s, 501));
  for (int n = 1; n <= 500; ++n) CHECK(r.coeff(n) == LaurentPoly(Rational(oracle::sigma(n))));
  CHECK(r.coeff(5) == LaurentPoly(6));
}

TEST_CASE("Appell-Lerch inner sum of f") {
  BilateralSpec s;
  s.sign = -1;
  s.A = Rational(3, 2);
  s.B = Rational(1, 2);
  s.denom = LambertDenom{Monomial::q(0, -1), 1, 1};
  s.range = BilateralSpec::Range::from;
  s.from = 0;
  // on a window of width 1 only k = 0 contributes: 1/(1+1)
  CHECK(regular(bilateral_sum(s, 1)).coeff(0) == LaurentPoly(Rational(1, 2)));
  BilateralSpec full = s;
  full.range = BilateralSpec::Range::all;
  full.alpha = 2;
  const PolarSum f = Product::poch(Monomial::q(1)).inverse() * bilateral_sum(full, 50);
  const oracle::Ser want = oracle::f(50);
  const QSeries got = regular(f);
  for (int n = 0; n < 50; ++n) CHECK(got.coeff(n) == LaurentPoly(want[static_cast<std::size_t>(n)]));
}

TEST_CASE("detect_q0_poles") {
  BilateralSpec lhs;
  lhs.sign = -1;
  lhs.A = Rational(3, 2);
  lhs.B = Rational(1, 2);
  lhs.denom = LambertDenom{Monomial::x(1, 0), 1, 1};
  const auto p = detect_q0_poles(lhs);
  REQUIRE(p.size() == 1);
  CHECK(lp_associated(p[0], LaurentPoly{{0, 1}, {1, -1}}));

  BilateralSpec mid = lhs;
  mid.sign = 1;
  mid.denom = LambertDenom{Monomial::x(1, 0, -1), 1, 2};
  const auto m = detect_q0_poles(mid);
  REQUIRE(m.size() == 2);
  CHECK(lp_associated(m[0], LaurentPoly{{0, 1}, {1, 1}}));
  CHECK(lp_associated(m[1], LaurentPoly{{0, 1}, {1, 1}}));

  BilateralSpec none = lhs;
  none.denom = LambertDenom{Monomial::x(1, 1, -1), 2, 1};
  CHECK(detect_q0_poles(none).empty());
}

TEST_CASE("bivariate sum keeps the q^0 pole symbolic") {
  BilateralSpec s;
  s.sign = -1;
  s.A = Rational(3, 2);
  s.B = Rational(1, 2);
  s.denom = LambertDenom{Monomial::x(1, 0), 1, 1};
  const PolarSum p = bilateral_sum(s, 20);
  CHECK(lp_associated(p.clearing(), LaurentPoly{{0, 1}, {1, -1}}));
}

TEST_CASE("cutoff soundness: K and K+5 agree on random specs") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> halfA(1, 8), halfB(-8, 8), cst(-4, 6), coin(0, 1), stepd(1, 6), qe(-5, 5),
      pw(1, 2), rq(-2, 2), xd(-1, 1);
  int checked = 0;
  while (checked < 50) {
    BilateralSpec s;
    s.A = Rational(halfA(rng), 2);
    s.B = Rational(halfB(rng), 2);
    s.C = cst(rng);
    s.sign = coin(rng) ? 1 : -1;
    s.alpha = Rational(halfB(rng));
    s.beta = Rational(cst(rng));
    const int d = xd(rng);
    s.ratio = Monomial::x(d, rq(rng), Rational(coin(rng) ? 1 : -1));
    if (coin(rng)) {
      const int step = stepd(rng);
      s.denom = LambertDenom{Monomial::x(xd(rng), qe(rng), Rational(coin(rng) ? 1 : -1)), step, pw(rng)};
    }
    // A k^2 + B k = A k(k-1) + (A+B) k is integral iff A + B is
    if (!(s.A + s.B).is_integer()) continue;
    const int order = 40;
    PolarSum a, b;
    try {
      a = bilateral_sum(s, order, 0);
      b = bilateral_sum(s, order, 5);
    } catch (const Error&) {
      continue;  // exact pole or non-integral exponent
    }
    const LaurentPoly c = lp_normalized(lp_lcm(a.clearing(), b.clearing()));
    const QSeries ca = a.cleared(c, order), cb = b.cleared(c, order);
    CHECK_FALSE(first_mismatch(ca, cb).has_value());
    ++checked;
  }
}
