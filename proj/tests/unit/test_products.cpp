#include "doctest.h"
#include "oracle.hpp"
#include "qmock/error.hpp"
#include "qmock/products.hpp"

using namespace qmock;

namespace {

const LaurentPoly X = LaurentPoly::monomial(1, 1);

std::vector<Rational> head(const QSeries& s, int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(s.coeff(i).constant_value());
  return out;
}

}  // namespace

TEST_CASE("poch_finite") {
  CHECK(head(poch_finite(Monomial::q(1, -1), 2, 1, 6).series, 6) == std::vector<Rational>{1, 1, 1, 1, 0, 0});
  CHECK(head(poch_finite(Monomial::q(1), 1, 2, 4).series, 4) == std::vector<Rational>{1, -1, 0, 0});
  const QSeries s = poch_finite(Monomial::x(1, 0), 2, 1, 4).series;
  CHECK(s.coeff(0) == LaurentPoly{{0, 1}, {1, -1}});
  CHECK(s.coeff(1) == LaurentPoly{{1, -1}, {2, 1}});
  CHECK(s.coeff(2).is_zero());
}

TEST_CASE("poch_inf against the pentagonal number theorem") {
  const QSeries e = poch_inf(Monomial::q(1), 1, 200).series;
  CHECK(head(e, 200) == oracle::as_rationals(oracle::pentagonal(200)));
  CHECK(head(e, 6) == std::vector<Rational>{1, -1, -1, 0, 0, 1});
}

TEST_CASE("(-q;q)_inf counts partitions into distinct parts") {
  const QSeries d = poch_inf(Monomial::q(1, -1), 1, 120).series;
  CHECK(head(d, 120) == oracle::as_rationals(oracle::distinct_partitions(120)));
  CHECK(head(d, 5) == std::vector<Rational>{1, 1, 1, 2, 2});
}

TEST_CASE("(x;q)_inf low coefficients") {
  const QSeries s = poch_inf(Monomial::x(1, 0), 1, 4).series;
  CHECK(s.coeff(0) == LaurentPoly{{0, 1}, {1, -1}});
  CHECK(s.coeff(1) == LaurentPoly{{1, -1}, {2, 1}});
}

TEST_CASE("bracket_inf") {
  CHECK(bracket_inf({Monomial::x(1, 0)}, 1, 4).series.coeff(0) == LaurentPoly{{0, 1}, {1, -1}});
  CHECK(bracket_inf({Monomial::q(0, -1)}, 1, 4).series.coeff(0) == LaurentPoly(2));
  CHECK(bracket_inf({Monomial::q(1)}, 1, 6).zero);
  CHECK_FALSE(bracket_inf({Monomial::q(1, -1)}, 1, 6).zero);
}

TEST_CASE("product inverse cancels") {
  const Product p = Product::bracket({Monomial::q(1, -1), Monomial::x(1, 2)}, 3) * Product::poch(Monomial::q(2), 2);
  const Polar one = (p * p.inverse()).expand(40);
  const QSeries s = one.ser * one.zeros;
  CHECK(s.coeff(0) == LaurentPoly(1));
  for (int n = 1; n < 40; ++n) CHECK(s.coeff(n).is_zero());
}

TEST_CASE("Jacobi triple product at z = -1, q -> q^(3/2) is the pentagonal series") {
  // (q;q^3)(q^2;q^3)(q^3;q^3) = (q;q)
  const Product jtp = Product::bracket({Monomial::q(1)}, 3) * Product::poch(Monomial::q(3), 3);
  const Polar e = jtp.expand(150);
  CHECK(head(e.ser * e.zeros, 150) == oracle::as_rationals(oracle::pentagonal(150)));
}

TEST_CASE("vanishing denominator is degenerate") {
  const Product p = Product::bracket({Monomial::q(2)}, 1).inverse();
  CHECK_THROWS_WITH((void)p.expand(10), "degenerate parameter configuration");
}
