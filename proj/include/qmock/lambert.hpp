#pragma once

#include <optional>
#include <vector>

#include "qmock/polar.hpp"
#include "qmock/qseries.hpp"

namespace qmock {

/// The denominator (1 - b q^(step k))^power of a Lambert-type sum.
struct LambertDenom {
  Monomial b;
  int step = 1;
  int power = 1;
};

/// sum over k of prefactor (alpha + beta k) sign^k ratio^k q^(A k^2 + B k + C)
///   / (1 - b q^(L k))^p
///
/// ratio is c x^d q^m taken to the k-th power; it carries the
/// (a_1...a_r b_1^(s-r-1) / b_2...b_s)^k factor of the two-sided identities.
struct BilateralSpec {
  enum class Range { all, all_except, from };

  Rational alpha{1};
  Rational beta{0};
  int sign = 1;
  Rational A{0};
  Rational B{0};
  Rational C{0};
  Monomial ratio;
  std::optional<LambertDenom> denom;
  LaurentPoly prefactor{1};
  Range range = Range::all;
  std::vector<int> excluded;
  int from = 0;
};

/// The exact sum below q^order; k with a q^0 pole in x become separate polar
/// terms. extra_terms widens the summation cutoff (used to test the bound).
PolarSum bilateral_sum(const BilateralSpec& spec, int order, int extra_terms = 0);

/// Factors 1 - c x^d the sum meets at q^0, one per unit of multiplicity.
std::vector<LaurentPoly> detect_q0_poles(const BilateralSpec& spec);

/// Largest |k| the bilateral sum visits for this order (before extra terms).
int summation_cutoff(const BilateralSpec& spec, int order);

}  // namespace qmock
