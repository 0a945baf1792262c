#include "doctest.h"
#include "oracle.hpp"
#include "qmock/error.hpp"
#include "qmock/mockforms.hpp"

using namespace qmock;

namespace {

std::vector<Rational> head(const QSeries& s, int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) out.push_back(s.coeff(i).constant_value());
  return out;
}

}  // namespace

TEST_CASE("Eulerian series against the naive oracle") {
  CHECK(head(eulerian_series(MockName::f, 120), 120) == oracle::f(120));
  CHECK(head(eulerian_series(MockName::omega, 120), 120) == oracle::omega(120));
  CHECK(head(eulerian_series(MockName::B, 80), 80) == oracle::B(80));
}

TEST_CASE("first coefficients") {
  CHECK(head(eulerian_series(MockName::f, 4), 4) == std::vector<Rational>{1, 1, -2, 3});
  CHECK(head(eulerian_series(MockName::omega, 5), 5) == std::vector<Rational>{1, 2, 3, 4, 6});
  CHECK(coeff_c(MockName::B, 0) == 1);
}

TEST_CASE("Appell-Lerch forms agree with the Eulerian forms") {
  for (MockName n : {MockName::f, MockName::omega, MockName::B}) {
    CHECK(head(appell_form(n, 100), 100) == head(eulerian_series(n, 100), 100));
  }
  CHECK_THROWS(appell_form(MockName::nu2, 10));
}

TEST_CASE("Ftilde = -2 nu2") {
  const auto a = head(eulerian_series(MockName::Ftilde, 150), 150);
  const auto b = head(eulerian_series(MockName::nu2, 150), 150);
  for (int n = 0; n < 150; ++n) CHECK(a[static_cast<std::size_t>(n)] == Rational(-2) * b[static_cast<std::size_t>(n)]);
}

TEST_CASE("parity parts") {
  const QSeries s = QSeries::from_rationals(0, {1, 1, 1});
  const QSeries e = parity_part(s, Parity::even), o = parity_part(s, Parity::odd);
  CHECK(head(e, 3) == std::vector<Rational>{1, 0, 1});
  CHECK(head(o, 3) == std::vector<Rational>{0, 1, 0});
  const QSeries w = eulerian_series(MockName::omega, 60);
  CHECK_FALSE(first_mismatch(parity_part(w, Parity::even) + parity_part(w, Parity::odd), w).has_value());
  CHECK(head(eulerian_series(MockName::omegaEven, 40), 40) == head(parity_part(w, Parity::even), 40));
  CHECK(head(eulerian_series(MockName::omegaOdd, 40), 40) == head(parity_part(w, Parity::odd), 40));
}

TEST_CASE("negate_q") {
  const QSeries s = QSeries::from_rationals(0, {1, 2, 3, 4});
  CHECK(head(negate_q(s), 4) == std::vector<Rational>{1, -2, 3, -4});
}

TEST_CASE("coeff_c") {
  CHECK(coeff_c(MockName::f, 0) == 1);
  CHECK(coeff_c(MockName::f, Rational(3, 2)) == 0);
  CHECK(coeff_c(MockName::f, 2) == -2);
  CHECK(coeff_c(MockName::f, -1) == 0);
  const auto want = oracle::f(300);
  CHECK(coeff_c(MockName::f, 299) == want[299]);
}

TEST_CASE("names") {
  CHECK(parse_mock_name("omega") == MockName::omega);
  CHECK(mock_name_str(MockName::nu2) == "nu2");
  CHECK_THROWS(parse_mock_name("psi"));
}
