#pragma once

#include <string>
#include <vector>

#include "qmock/polar.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

/// Parameters of the two-sided Lambert identity
///   [a_1..a_r] (q)^2 / [b_1..b_s] = sum_i idem-term(b_i)
/// with q replaced by q^base throughout.
struct GlsInstance {
  int base = 1;
  std::vector<Monomial> a;
  std::vector<Monomial> b;

  [[nodiscard]] int r() const { return static_cast<int>(a.size()); }
  [[nodiscard]] int s() const { return static_cast<int>(b.size()); }
  [[nodiscard]] std::string str() const;
};

/// Throws on r >= s, s > 6, base < 1 or a vanishing bracket denominator on
/// either side.
void validate_gls(const GlsInstance& inst);

/// The product side. Only the [b_i] denominators need to be nonzero here.
PolarSum build_gls_lhs(const GlsInstance& inst, int order);
/// The idem-sum; also needs every [b_j / b_i] to be nonzero.
PolarSum build_gls_rhs(const GlsInstance& inst, int order);

/// True when b = q^(base k) for some integer k, i.e. [b; q^base] = 0.
bool bracket_vanishes(const Monomial& b, int base);

}  // namespace qmock
