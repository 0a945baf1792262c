#include "qmock/divisor.hpp"

#include <cmath>

#include "qmock/error.hpp"
#include "qmock/lambert.hpp"
#include "qmock/mockforms.hpp"

namespace qmock {

Rational sigma(const Rational& x) {
  if (!x.is_integer() || x.sign() <= 0) return Rational(0);
  const long n = *x.to_long();
  long s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += d;
    if (d * d != n) s += n / d;
  }
  return Rational(s);
}

namespace {

int sgn_plus(const Rational& x) { return x.sign() >= 0 ? 1 : -1; }

bool divides(long m, long v) { return v % m == 0; }

bool odd(long v) { return v % 2 != 0; }

// Positive pairs (a, b) with ab = m, a increasing.
std::vector<std::pair<long, long>> positive_pairs(long m) {
  std::vector<std::pair<long, long>> out;
  for (const auto& [a, b] : signed_divisor_pairs(m)) {
    if (a > 0) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

Rational d_weight(const DWeightArgs& g) {
  const Rational diff = abs(g.N + g.t) - abs(g.Nt + g.tt);
  return diff * Rational(sgn_plus(g.N) * sgn_plus(g.Nt));
}

std::vector<std::pair<long, long>> signed_divisor_pairs(long m) {
  if (m == 0) throw Error("unbounded factorization set");
  const long am = m < 0 ? -m : m;
  std::vector<long> divs;
  std::vector<long> high;
  for (long d = 1; d * d <= am; ++d) {
    if (am % d != 0) continue;
    divs.push_back(d);
    if (d * d != am) high.push_back(am / d);
  }
  divs.insert(divs.end(), high.rbegin(), high.rend());
  std::vector<std::pair<long, long>> out;
  out.reserve(2 * divs.size());
  for (long a : divs) out.emplace_back(a, m / a);
  for (long a : divs) out.emplace_back(-a, -(m / a));
  return out;
}

Rational r_n(int n) {
  if (n % 2 == 0) return Rational(2, 3) * (sigma(Rational(n, 4)) - sigma(Rational(n, 2)));
  return Rational(1, 3) * sigma(Rational(n));
}

Rational r_tilde(int n) {
  if (n % 2 == 0) return Rational(1, 3) * (sigma(Rational(n, 4)) - Rational(2) * sigma(Rational(n, 2)));
  return Rational(1, 6) * sigma(Rational(n));
}

const std::vector<Lemma>& all_lemmas() {
  static const std::vector<Lemma> v = {Lemma::split1, Lemma::t1irr,  Lemma::key1_sum,    Lemma::split2,
                                       Lemma::s1gen,  Lemma::s2gen,  Lemma::split3,      Lemma::pt920b,
                                       Lemma::rtilde_diff, Lemma::e2_coeff};
  return v;
}

std::string_view lemma_name(Lemma l) {
  switch (l) {
    case Lemma::split1: return "split1";
    case Lemma::t1irr: return "t1irr";
    case Lemma::key1_sum: return "key1-sum";
    case Lemma::split2: return "split2";
    case Lemma::s1gen: return "s1gen";
    case Lemma::s2gen: return "s2gen";
    case Lemma::split3: return "split3";
    case Lemma::pt920b: return "pt920b";
    case Lemma::rtilde_diff: return "rtilde-diff";
    case Lemma::e2_coeff: return "e2-coeff";
  }
  return "?";
}

Lemma parse_lemma(std::string_view s) {
  for (Lemma l : all_lemmas()) {
    if (lemma_name(l) == s) return l;
  }
  throw Error("unknown lemma '" + std::string(s) + "'");
}

namespace {

// The two sides of the t1id-type d-sum, split by sign class.
Rational t1_dsum(int n) {
  Rational s;
  for (const auto& [a, b] : signed_divisor_pairs(2L * n)) {
    if (!divides(6, 3 * a + b - 1)) continue;
    s += d_weight({Rational(-3 * a + b - 1, 6), Rational(3 * a + b - 1, 6), Rational(1, 6), Rational(1, 6)});
  }
  return s;
}

bool split1(int n) {
  Rational rhs;
  for (const auto& [a, b] : positive_pairs(2L * n)) {
    if (!odd(a - b)) continue;
    if (b < 3 * a) rhs += Rational(b, 3);
    if (b > 3 * a) rhs -= Rational(a);
  }
  return t1_dsum(n) == rhs;
}

bool t1irr(int n) {
  Rational lhs, below;
  for (const auto& [a, b] : positive_pairs(2L * n)) {
    if (!odd(a - b)) continue;
    if (b > 3 * a) lhs += Rational(b);
    if (b < 3 * a) below += Rational(b);
  }
  return lhs == Rational(3) * sigma(Rational(n)) - Rational(4) * sigma(Rational(n, 2)) - below;
}

bool key1_sum(int n) {
  Rational lhs;
  for (long m = -n - 1; m <= n + 1; ++m) {
    if (3 * m * m + m > 2L * n) continue;
    lhs += Rational(6 * m + 1) * coeff_c(MockName::f, Rational(n) - Rational(3 * m * m + m, 2));
  }
  Rational rhs = Rational(-4) * sigma(Rational(n)) - Rational(16) * sigma(Rational(n, 2));
  for (const auto& [a, b] : positive_pairs(2L * n)) {
    if (b > 3 * a && odd(a - b)) rhs += Rational(4 * (3 * a + b));
  }
  return lhs == rhs;
}

bool cond12(long v, long shift) { return divides(12, v - shift) || divides(12, v + shift); }

Rational s1_value(int n) {
  Rational s;
  for (const auto& [a, b] : positive_pairs(4L * n + 1)) {
    if (b <= 3 * a - 2 && cond12(3 * a - b, 2)) s += Rational(b);
  }
  return s;
}

Rational s2_value(int n) {
  Rational s;
  for (const auto& [a, b] : positive_pairs(4L * n + 1)) {
    if (b >= 3 * a + 2 && cond12(3 * a - b, 2)) s += Rational(a);
  }
  return s;
}

bool split2(int n) {
  Rational lhs;
  for (const auto& [a, b] : signed_divisor_pairs(4L * n + 1)) {
    if (!divides(12, 3 * a - b - 2)) continue;
    lhs += d_weight({Rational(3 * a - b - 2, 12), Rational(3 * a + b - 4, 12), Rational(1, 6), Rational(1, 3)});
  }
  return Rational(-6) * lhs == s1_value(n) - Rational(3) * s2_value(n);
}

Rational series_coeff(const BilateralSpec& s, int n) {
  const PolarSum p = bilateral_sum(s, n + 1);
  return p.terms()[0].ser.coeff(n).constant_value();
}

bool s1gen(int n) {
  // sum (6l+1) q^(3l^2+2l) / (1 - q^(6l+1))
  BilateralSpec s;
  s.alpha = 1;
  s.beta = 6;
  s.A = 3;
  s.B = 2;
  s.denom = LambertDenom{Monomial::q(1), 6, 1};
  return s1_value(n) == series_coeff(s, n);
}

bool s2gen(int n) {
  // sum (2l-1) q^(3l^2+2l-2) / (1 - q^(6l-3))
  BilateralSpec s;
  s.alpha = -1;
  s.beta = 2;
  s.A = 3;
  s.B = 2;
  s.C = -2;
  s.denom = LambertDenom{Monomial::q(-3), 6, 1};
  return s2_value(n) == series_coeff(s, n);
}

bool split3(int n) {
  Rational lhs;
  for (const auto& [a, b] : signed_divisor_pairs(4L * n + 3)) {
    if (!divides(12, 3 * a - b - 4)) continue;
    lhs += d_weight({Rational(3 * a - b - 4, 12), Rational(3 * a + b - 2, 12), Rational(1, 3), Rational(1, 6)});
  }
  // The printed form carries an extra (-1)^(n+1); it fails at every even n.
  lhs *= Rational(6);
  Rational rhs;
  for (const auto& [a, b] : positive_pairs(4L * n + 3)) {
    if (!cond12(3 * a - b, 4)) continue;
    if (b >= 3 * a + 2) rhs += Rational(3 * a);
    if (b <= 3 * a - 1) rhs -= Rational(b);
  }
  return lhs == rhs;
}

// sum (3m+1) c(omega(-q); n - 3m^2 - 2m - 1)
Rational omega_minus_sum(int n) {
  Rational s;
  for (long m = -n - 1; m <= n + 1; ++m) {
    const long k = n - 3 * m * m - 2 * m - 1;
    if (k < 0) continue;
    Rational c = coeff_c(MockName::omega, Rational(k));
    if (odd(k)) c = -c;
    s += Rational(3 * m + 1) * c;
  }
  return s;
}

bool pt920b(int n) {
  const Rational six_r = Rational(6) * r_n(n);
  Rational v1 = six_r, v2 = six_r, v3 = six_r;
  for (const auto& [a, b] : positive_pairs(n)) {
    const long r = ((a - 3 * b) % 12 + 12) % 12;
    const bool cls = r == 2 || r == 4 || r == 8 || r == 10;
    if (cls && a <= 3 * b - 1) v1 -= Rational(a);
    if (cls && a >= 3 * b + 1) v1 += Rational(3 * b);
    if (odd(a - b)) continue;
    if (a <= 3 * b - 1) v2 -= Rational(a);
    if (a >= 3 * b + 1) v2 += Rational(3 * b);
    if (a <= 3 * b) v3 -= Rational(a);
    if (a >= 3 * b) v3 += Rational(3 * b);
  }
  const Rational v0 = omega_minus_sum(n);
  return v0 == v1 && v1 == v2 && v2 == v3;
}

bool rtilde_diff(int n) {
  const Rational lhs = Rational(6) * (r_n(n) - r_tilde(n));
  Rational pairs;
  for (const auto& [a, b] : positive_pairs(n)) {
    if (!odd(a - b)) pairs += Rational(a);
  }
  // sum 2k q^(4k)/(1-q^(4k)) + sum (2k-1) q^(2k-1)/(1-q^(4k-2)), k >= 1
  BilateralSpec e;
  e.alpha = 0;
  e.beta = 2;
  e.B = 4;
  e.range = BilateralSpec::Range::from;
  e.from = 1;
  e.denom = LambertDenom{Monomial::q(0), 4, 1};
  BilateralSpec o;
  o.alpha = -1;
  o.beta = 2;
  o.B = 2;
  o.C = -1;
  o.range = BilateralSpec::Range::from;
  o.from = 1;
  o.denom = LambertDenom{Monomial::q(-2), 4, 1};
  const Rational gen = series_coeff(e, n) + series_coeff(o, n);
  return lhs == pairs && pairs == gen;
}

bool e2_coeff(int n) {
  Rational rhs = Rational(6) * r_tilde(n);
  for (const auto& [a, b] : positive_pairs(n)) {
    if (odd(a - b)) continue;
    if (a > 3 * b) rhs += Rational(a);
    if (a > 3 * b - 2) rhs += Rational(3 * b);
  }
  return omega_minus_sum(n) == rhs;
}

}  // namespace

bool lemma_check(Lemma l, int n) {
  if (n < 1) throw Error("n must be positive");
  switch (l) {
    case Lemma::split1: return split1(n);
    case Lemma::t1irr: return t1irr(n);
    case Lemma::key1_sum: return key1_sum(n);
    case Lemma::split2: return split2(n);
    case Lemma::s1gen: return s1gen(n);
    case Lemma::s2gen: return s2gen(n);
    case Lemma::split3: return split3(n);
    case Lemma::pt920b: return pt920b(n);
    case Lemma::rtilde_diff: return rtilde_diff(n);
    case Lemma::e2_coeff: return e2_coeff(n);
  }
  return false;
}

}  // namespace qmock
