#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "qmock/divisor.hpp"
#include "qmock/error.hpp"
#include "qmock/recursion.hpp"

using namespace qmock;

TEST_CASE("sigma") {
  CHECK(sigma(1) == 1);
  CHECK(sigma(6) == 12);
  CHECK(sigma(Rational(3, 2)) == 0);
  CHECK(sigma(0) == 0);
  CHECK(sigma(-4) == 0);
  for (int n = 1; n <= 500; ++n) CHECK(sigma(n) == Rational(oracle::sigma(n)));
}

TEST_CASE("d_weight") {
  const Rational s(1, 6);
  CHECK(d_weight({-1, 1, s, s}) == Rational(1, 3));
  CHECK(d_weight({0, -1, s, s}) == Rational(2, 3));
  for (int n = -4; n <= 4; ++n) CHECK(d_weight({n, n, Rational(1, 3), Rational(1, 3)}) == 0);
}

TEST_CASE("signed_divisor_pairs") {
  using P = std::vector<std::pair<long, long>>;
  CHECK(signed_divisor_pairs(2) == P{{1, 2}, {2, 1}, {-1, -2}, {-2, -1}});
  CHECK(signed_divisor_pairs(1) == P{{1, 1}, {-1, -1}});
  CHECK_THROWS(signed_divisor_pairs(0));
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(1, 10000);
  for (int i = 0; i < 50; ++i) {
    const long m = pick(rng);
    long divisors = 0;
    for (long d = 1; d <= m; ++d) divisors += m % d == 0;
    const auto ps = signed_divisor_pairs(m);
    CHECK(static_cast<long>(ps.size()) == 2 * divisors);
    for (const auto& [a, b] : ps) CHECK(a * b == m);
  }
}

TEST_CASE("r_n and r_tilde") {
  CHECK(r_n(1) == Rational(1, 3));
  CHECK(r_n(2) == Rational(-2, 3));
  CHECK(r_n(4) == Rational(-4, 3));
  CHECK(r_tilde(1) == Rational(1, 6));
  CHECK(r_tilde(2) == Rational(-2, 3));
}

TEST_CASE("hand-anchored n = 1 of the first recursion") {
  CHECK(lhs_recursion(Recursion::t1id, 1) == Rational(-2, 3));
  CHECK(rhs_theorem(Recursion::t1id, 1) == Rational(-2, 3));
}

TEST_CASE("pinned values from an independent enumeration") {
  struct Row {
    int n;
    Rational t1, t9, t919, t9201, t9202;
  };
  const Row rows[] = {
      {1, Rational(-2, 3), Rational(-2, 3), Rational(1, 3), Rational(1, 3), 0},
      {2, 0, Rational(1, 3), Rational(-1, 3), Rational(-2, 3), Rational(2, 3)},
      {3, Rational(10, 3), Rational(-2, 3), -1, 1, Rational(-4, 3)},
      {5, Rational(14, 3), Rational(8, 3), Rational(1, 3), 2, Rational(-8, 3)},
      {8, -16, Rational(-8, 3), Rational(5, 3), Rational(-8, 3), Rational(14, 3)},
  };
  for (const auto& r : rows) {
    CHECK(rhs_theorem(Recursion::t1id, r.n) == r.t1);
    CHECK(rhs_theorem(Recursion::t9, r.n) == r.t9);
    CHECK(rhs_theorem(Recursion::t919, r.n) == r.t919);
    CHECK(rhs_theorem(Recursion::t9201, r.n) == r.t9201);
    CHECK(rhs_theorem(Recursion::t9202, r.n) == r.t9202);
  }
  const long corb[] = {1, 2, 4, 6, 6, 8, 8, 10, 13, 12};
  for (int n = 1; n <= 10; ++n) CHECK(lhs_recursion(Recursion::corB, n) == Rational(corb[n - 1]));
}

TEST_CASE("recursions hold for n <= 80") {
  for (Recursion r : all_recursions()) {
    for (int n = 1; n <= 80; ++n) {
      INFO(recursion_name(r), " n=", n);
      CHECK(lhs_recursion(r, n) == rhs_theorem(r, n));
    }
  }
}

TEST_CASE("sum and difference of the omega parity recursions") {
  for (int n = 1; n <= 80; ++n) {
    CHECK(rhs_theorem(Recursion::t9201, n) + rhs_theorem(Recursion::t9202, n) == rhs_theorem(Recursion::t920c, n));
    CHECK(rhs_theorem(Recursion::t9201, n) - rhs_theorem(Recursion::t9202, n) == rhs_theorem(Recursion::t920d, n));
  }
}

TEST_CASE("the literal readings fail") {
  for (Recursion r : {Recursion::t919, Recursion::corB}) {
    bool any = false;
    for (int n = 1; n <= 80 && !any; ++n) any = lhs_recursion(r, n, Reading::literal) != rhs_theorem(r, n, Reading::literal);
    CHECK(any);
  }
  // the other recursions have a single reading
  for (int n = 1; n <= 20; ++n) {
    CHECK(lhs_recursion(Recursion::t1id, n, Reading::literal) == lhs_recursion(Recursion::t1id, n));
  }
}

TEST_CASE("lemmas hold for n <= 60") {
  for (Lemma l : all_lemmas()) {
    for (int n = 1; n <= 60; ++n) {
      INFO(lemma_name(l), " n=", n);
      CHECK(lemma_check(l, n));
    }
  }
  CHECK(lemma_check(Lemma::split1, 1));
  CHECK_THROWS(lemma_check(Lemma::t1irr, 0));
}

TEST_CASE("names round-trip") {
  for (Recursion r : all_recursions()) CHECK(parse_recursion(recursion_name(r)) == r);
  for (Lemma l : all_lemmas()) CHECK(parse_lemma(lemma_name(l)) == l);
  CHECK_THROWS_WITH(parse_recursion("t2"), doctest::Contains("unknown recursion"));
  CHECK_THROWS_WITH(parse_lemma("nope"), doctest::Contains("unknown lemma"));
}
