#include <algorithm>
#include <random>

#include "common/random_gls.hpp"
#include "doctest.h"
#include "qmock/error.hpp"
#include "qmock/gls.hpp"
#include "qmock/verify.hpp"

using namespace qmock;

namespace {

Monomial q(int m, Rational c = Rational(1)) { return Monomial::q(m, std::move(c)); }
Monomial x(int d, int m, Rational c = Rational(1)) { return Monomial::x(d, m, std::move(c)); }

QSeries cleared(const PolarSum& s, int order) { return s.cleared(lp_normalized(s.clearing()), order); }

}  // namespace

TEST_CASE("lhs builds for an all-monomial r = 0, s = 2 instance") {
  const GlsInstance inst{1, {}, {q(1, -1), q(2, -1)}};
  CHECK_NOTHROW(build_gls_lhs(inst, 20));
  // b_2 / b_1 = q is a zero of the bracket, so the idem side is degenerate
  CHECK_THROWS_WITH(build_gls_rhs(inst, 20), "degenerate parameter configuration");
}

TEST_CASE("b_i = q^m is degenerate") {
  CHECK_THROWS_WITH(build_gls_lhs({1, {}, {q(2), x(1, 0)}}, 10), "degenerate parameter configuration");
  CHECK_THROWS_WITH(build_gls_lhs({6, {}, {q(12), x(1, 0)}}, 10), "degenerate parameter configuration");
  CHECK_NOTHROW(build_gls_lhs({6, {}, {q(3), x(1, 0)}}, 10));
}

TEST_CASE("shape errors") {
  CHECK_THROWS_WITH(validate_gls({1, {q(1, -1)}, {q(1, -1)}}), "requires r < s");
  CHECK_THROWS_WITH(validate_gls({0, {}, {q(1, -1)}}), "base must be positive");
  GlsInstance big{1, {}, {}};
  for (int i = 0; i < 7; ++i) big.b.push_back(q(i, Rational(-(i + 2))));
  CHECK_THROWS_WITH(validate_gls(big), "at most 6 denominator parameters");
}

TEST_CASE("base-6 instance with l = 1, j = -3 passes to order 100") {
  const GlsInstance inst{6, {q(-2, -1)}, {q(-3, -1), q(-1, -1)}};
  CHECK_NOTHROW(build_gls_lhs(inst, 120));
  const VerificationReport r = verify_gls(inst, 100);
  CHECK(r.status == Status::pass);
}

TEST_CASE("r = 0, s = 3 with b = (x, -xq/a, -ax), a = -q") {
  // -xq/a = x, which would repeat b_1; take a = 2q as the monomial specialization
  const GlsInstance inst{1, {}, {x(1, 0), x(1, 0, Rational(-1, 2)), x(1, 1, -2)}};
  CHECK(verify_gls(inst, 80).status == Status::pass);
}

TEST_CASE("r = 2, s = 3 base-6 instance with b formal") {
  const GlsInstance inst{6, {q(0, -1), q(-2, -1)}, {x(1, 0, -1), q(-1, -1), q(-3, -1)}};
  CHECK(verify_gls(inst, 80).status == Status::pass);
}

TEST_CASE("idem side is invariant under permuting b") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    GlsInstance inst = testing_support::random_gls(rng);
    if (inst.s() < 2) continue;
    GlsInstance perm = inst;
    std::reverse(perm.b.begin(), perm.b.end());
    const int order = 30;
    const QSeries a = cleared(build_gls_rhs(inst, order + 8), order);
    const QSeries b = cleared(build_gls_rhs(perm, order + 8), order);
    CHECK_FALSE(first_mismatch(a, b).has_value());
  }
}

TEST_CASE("random small instances pass") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    const GlsInstance inst = testing_support::random_gls(rng);
    const VerificationReport r = verify_gls(inst, 30);
    INFO(inst.str());
    CHECK(r.status == Status::pass);
  }
}

TEST_CASE("a wrong sign on one side is detected") {
  const GlsInstance inst{6, {q(-2, -1)}, {q(-3, -1), q(-1, -1)}};
  const Comparison c = compare_sides([&](int w) { return build_gls_lhs(inst, w); },
                                     [&](int w) { return -build_gls_rhs(inst, w); }, 40);
  CHECK(c.mismatch.has_value());
}
