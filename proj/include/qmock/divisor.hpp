#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmock/rational.hpp"

namespace qmock {

/// Sum of the positive divisors of x; 0 unless x is a positive integer.
Rational sigma(const Rational& x);

struct DWeightArgs {
  Rational N, Nt, t, tt;
};
/// sgn+(N) sgn+(Nt) (|N + t| - |Nt + tt|), with sgn+(0) = 1.
Rational d_weight(const DWeightArgs& args);

/// Every ordered (a, b) in Z^2 with ab = m: positive divisors a first, in
/// increasing order, then their negatives. Throws for m = 0.
std::vector<std::pair<long, long>> signed_divisor_pairs(long m);

/// (2/3)(sigma(n/4) - sigma(n/2)) for even n, sigma(n)/3 for odd n.
Rational r_n(int n);
/// (1/3)(sigma(n/4) - 2 sigma(n/2)) for even n, sigma(n)/6 for odd n.
Rational r_tilde(int n);

enum class Lemma {
  split1,
  t1irr,
  key1_sum,
  split2,
  s1gen,
  s2gen,
  split3,
  pt920b,
  rtilde_diff,
  e2_coeff,
};

const std::vector<Lemma>& all_lemmas();
std::string_view lemma_name(Lemma l);
Lemma parse_lemma(std::string_view s);

/// Evaluates both sides of the finite identity at n by direct enumeration
/// (or against a series coefficient) and reports exact equality.
bool lemma_check(Lemma l, int n);

}  // namespace qmock
