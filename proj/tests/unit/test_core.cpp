#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qmock/error.hpp"
#include "qmock/laurent_poly.hpp"
#include "qmock/qseries.hpp"
#include "qmock/rational.hpp"

using namespace qmock;

namespace {

const LaurentPoly X = LaurentPoly::monomial(1, 1);

QSeries ser(int v, std::vector<LaurentPoly> c) { return {v, std::move(c)}; }

bool same(const QSeries& a, const QSeries& b) {
  return a.valuation() == b.valuation() && a.order() == b.order() && !first_mismatch(a, b);
}

// Equal on the common window, regardless of stored valuation.
bool agree(const QSeries& a, const QSeries& b) { return !first_mismatch(a, b); }

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/x"));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  Rational acc(1, 2);
  acc.add_product(Rational(1, 3), Rational(3));
  CHECK(acc == Rational(3, 2));
}

TEST_CASE("laurent poly basics") {
  const LaurentPoly p{{-1, 1}, {0, 2}, {3, -1}};
  CHECK(p.str() == "x^-1 + 2 - x^3");
  CHECK(p.coeff(0) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK((p - p).is_zero());
  CHECK(p * LaurentPoly(0) == LaurentPoly());
  CHECK((X * X.shifted(-2)) == LaurentPoly(1));
  LaurentPoly a{{0, 1}, {2, 1}};
  a.add_scaled(LaurentPoly{{0, 1}, {1, 1}}, Rational(-1), 2);
  CHECK(a == LaurentPoly{{0, 1}, {3, -1}});
}

TEST_CASE("lp_exact_div") {
  const LaurentPoly one_minus_x{{0, 1}, {1, -1}};
  CHECK(lp_exact_div(LaurentPoly{{0, 1}, {2, -1}}, one_minus_x) == LaurentPoly{{0, 1}, {1, 1}});
  CHECK(lp_exact_div(LaurentPoly{{1, 1}, {3, -1}}, LaurentPoly{{0, 1}, {2, -1}}) == X);
  CHECK_THROWS_WITH(lp_exact_div(one_minus_x, LaurentPoly{{0, 1}, {1, 1}}), "inexact Laurent division");
}

TEST_CASE("series_add") {
  const QSeries a = ser(0, {1, 1}), b = ser(0, {1, -1});
  CHECK(same(a + b, ser(0, {2, 0})));
  const QSeries xq = ser(1, {X}), xiq = ser(1, {X.shifted(-2)});
  CHECK(agree(xq + xiq, ser(1, {X + X.shifted(-2)})));
  const QSeries w5(0, 5), w3(0, 3);
  CHECK((w5 + w3).order() == 3);
}

TEST_CASE("series_mul") {
  CHECK(agree(ser(0, {1, 1, 0}) * ser(0, {1, -1, 0}), ser(0, {1, 0, -1})));
  const QSeries p = ser(0, {1, X, 0}), m = ser(0, {1, -X, 0});
  CHECK(agree(p * m, ser(0, {1, 0, -(X * X)})));
  const QSeries qi = ser(-1, {1, 0, 0}), qv = ser(1, {1, 0, 0});
  const QSeries prod = qi * qv;
  CHECK(prod.coeff(0) == LaurentPoly(1));
  CHECK(prod.coeff(1).is_zero());
}

TEST_CASE("series_inv_unit") {
  const QSeries inv = series_inv_unit(ser(0, {1, -1, 0, 0, 0}));
  for (int n = 0; n < 5; ++n) CHECK(inv.coeff(n) == LaurentPoly(1));
  // 1 / (x + q)
  const QSeries i2 = series_inv_unit(ser(0, {X, 1, 0, 0}));
  CHECK(i2.coeff(0) == LaurentPoly::monomial(1, -1));
  CHECK(i2.coeff(1) == LaurentPoly::monomial(-1, -2));
  CHECK(i2.coeff(2) == LaurentPoly::monomial(1, -3));
  CHECK_THROWS_WITH(series_inv_unit(ser(0, {LaurentPoly{{0, 1}, {1, -1}}, 0})), "non-unit leading coefficient");
}

TEST_CASE("expand_reciprocal") {
  const QSeries g = expand_reciprocal(Monomial::q(1), 1, 4);
  for (int n = 0; n < 4; ++n) CHECK(g.coeff(n) == LaurentPoly(1));
  const QSeries h = expand_reciprocal(Monomial::x(1, 1, -1), 1, 3);
  CHECK(h.coeff(1) == -X);
  CHECK(h.coeff(2) == X * X);
  // 1/(1 - x/q) = -q/x - q^2/x^2 - ...
  const QSeries neg = expand_reciprocal(Monomial::x(1, -1), 1, 4);
  CHECK(neg.coeff(0).is_zero());
  CHECK(neg.coeff(1) == LaurentPoly::monomial(-1, -1));
  CHECK(neg.coeff(2) == LaurentPoly::monomial(-1, -2));
  const QSeries half = expand_reciprocal(Monomial::q(0, -1), 1, 3);
  CHECK(half.coeff(0) == LaurentPoly(Rational(1, 2)));
  CHECK(half.coeff(1).is_zero());
  // squared: sum (n+1) q^n
  const QSeries sq = expand_reciprocal(Monomial::q(1), 2, 6);
  for (int n = 0; n < 6; ++n) CHECK(sq.coeff(n) == LaurentPoly(n + 1));
}

TEST_CASE("subst_x, ddx, q_rescale, coeff") {
  const QSeries a = ser(0, {1, X, 0});
  const QSeries s = subst_x(a, {Rational(-1), 0});
  CHECK(s.coeff(1) == LaurentPoly(-1));
  const QSeries b = ser(0, {X * X, 0, 0});
  const QSeries t = subst_x(b, {Rational(1), 1});
  CHECK(t.coeff(2) == LaurentPoly(1));
  CHECK(t.coeff(0).is_zero());
  // x^-2 q^2 -> q^0 would fall below the window
  CHECK_THROWS_WITH(subst_x(ser(2, {X.shifted(-2), 0}), {Rational(1), 1}), "substitution underflow");

  CHECK(ddx(ser(1, {X * X})).coeff(1) == LaurentPoly::monomial(2, 1));
  CHECK(ddx(ser(0, {3, 4})).coeff(0).is_zero());

  const QSeries r = q_rescale(ser(0, {1, 1}), 2);
  CHECK(r.coeff(2) == LaurentPoly(1));
  CHECK(r.coeff(1).is_zero());
  CHECK(q_rescale(ser(-1, {1}), 3).valuation() == -3);
  const QSeries c = ser(0, {1, 0, 3});
  CHECK(same(q_rescale(c, 1), c));
  CHECK(coeff(c, 2) == LaurentPoly(3));
  CHECK(coeff(c, 1).is_zero());
  CHECK_THROWS(coeff(c, 5));
}

TEST_CASE("ring axioms on random bivariate series") {
  std::mt19937 rng(20240521);
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries a = oracle::random_series(rng, -1, 10);
    const QSeries b = oracle::random_series(rng, 0, 10);
    const QSeries c = oracle::random_series(rng, 1, 10);
    CHECK(agree(a * b, b * a));
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK(agree(a + b, b + a));
    CHECK(agree((a - a), QSeries(-1, a.order())));
  }
}

TEST_CASE("subst_x is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    // nonnegative x-degrees: x -> c q^m must not move terms below the window
    const QSeries a = oracle::random_series(rng, 3, 12, 0, 3);
    const QSeries b = oracle::random_series(rng, 2, 12, 0, 3);
    for (XTarget t : {XTarget{Rational(-1), 0}, XTarget{Rational(1), 1}, XTarget{Rational(-1), 2}, XTarget{Rational(2), 0}}) {
      CHECK(agree(subst_x(a * b, t), subst_x(a, t) * subst_x(b, t)));
      CHECK(agree(subst_x(a + b, t), subst_x(a, t) + subst_x(b, t)));
    }
  }
}

TEST_CASE("ddx satisfies Leibniz") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const QSeries a = oracle::random_series(rng, 0, 10, -3, 3);
    const QSeries b = oracle::random_series(rng, -2, 10, -3, 3);
    CHECK(agree(ddx(a * b), ddx(a) * b + a * ddx(b)));
  }
}

TEST_CASE("inverse times series is one") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<LaurentPoly> c(12);
    c[0] = LaurentPoly::monomial(Rational(trial % 3 + 1), trial % 4 - 2);
    const QSeries tail = oracle::random_series(rng, 1, 11);
    for (int n = 1; n < 12; ++n) c[static_cast<std::size_t>(n)] = tail.coeff(n);
    const QSeries a(0, c);
    const QSeries p = a * series_inv_unit(a);
    CHECK(p.coeff(0) == LaurentPoly(1));
    for (int n = 1; n < p.order(); ++n) CHECK(p.coeff(n).is_zero());
  }
}
