#pragma once
// Random non-degenerate monomial instances of the two-sided Lambert identity,
// shared by the unit and acceptance tests.

#include <random>

#include "qmock/error.hpp"
#include "qmock/gls.hpp"

namespace testing_support {

/// (r, s) with r < s <= 3 and r <= 2; at most one parameter carries x.
inline qmock::GlsInstance random_gls(std::mt19937& rng) {
  using qmock::Monomial;
  using qmock::Rational;
  std::uniform_int_distribution<int> sdist(1, 3), qexp(-2, 3), coin(0, 1), cidx(0, 3), basedist(1, 3);
  const Rational coeffs[] = {Rational(1), Rational(2), Rational(1, 2), Rational(3)};
  for (;;) {
    qmock::GlsInstance inst;
    inst.base = basedist(rng);
    const int s = sdist(rng);
    std::uniform_int_distribution<int> rdist(0, std::min(2, s - 1));
    const int r = rdist(rng);
    const int total = r + s;
    std::uniform_int_distribution<int> xslot(-1, total - 1);
    const int with_x = coin(rng) ? xslot(rng) : -1;
    for (int i = 0; i < total; ++i) {
      const Rational c = coeffs[cidx(rng)] * Rational(coin(rng) ? 1 : -1);
      const Monomial m = Monomial::x(i == with_x ? 1 : 0, qexp(rng), c);
      (i < r ? inst.a : inst.b).push_back(m);
    }
    try {
      qmock::validate_gls(inst);
    } catch (const qmock::Error&) {
      continue;
    }
    return inst;
  }
}

}  // namespace testing_support
