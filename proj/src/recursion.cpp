#include "qmock/recursion.hpp"

#include <string>

#include "qmock/divisor.hpp"
#include "qmock/error.hpp"
#include "qmock/mockforms.hpp"

namespace qmock {

const std::vector<Recursion>& all_recursions() {
  static const std::vector<Recursion> v = {Recursion::t1id,  Recursion::t9,    Recursion::t919,
                                           Recursion::t9201, Recursion::t9202, Recursion::t920c,
                                           Recursion::t920d, Recursion::corB};
  return v;
}

std::string_view recursion_name(Recursion r) {
  switch (r) {
    case Recursion::t1id: return "t1id";
    case Recursion::t9: return "t9";
    case Recursion::t919: return "t919";
    case Recursion::t9201: return "t9201";
    case Recursion::t9202: return "t9202";
    case Recursion::t920c: return "t920c";
    case Recursion::t920d: return "t920d";
    case Recursion::corB: return "corB";
  }
  return "?";
}

Recursion parse_recursion(std::string_view s) {
  for (Recursion r : all_recursions()) {
    if (recursion_name(r) == s) return r;
  }
  throw Error("unknown recursion '" + std::string(s) + "'");
}

namespace {

long bound(int n) {
  long m = 0;
  while (m * m <= 2L * n + 4) ++m;
  return m + 1;
}

Rational omega_signed(long k) {
  Rational c = coeff_c(MockName::omega, Rational(k));
  return k % 2 != 0 ? -c : c;
}

// sum over m with 3m^2 + 2m + 1 <= n of (m + 1/3) g(n - 3m^2 - 2m - 1)
template <class G>
Rational omega_type(int n, G g) {
  Rational s;
  for (long m = -bound(n); m <= bound(n); ++m) {
    const long k = n - 3 * m * m - 2 * m - 1;
    if (k < 0) continue;
    s += (Rational(m) + Rational(1, 3)) * g(k);
  }
  return s;
}

Rational dsum_third(int n, long shift) {
  Rational s;
  for (const auto& [a, b] : signed_divisor_pairs(n)) {
    if ((a - 3 * b - shift) % 12 != 0) continue;
    s += d_weight({Rational(a - 3 * b - 2, 6), Rational(a + 3 * b - 2, 6), Rational(1, 3), Rational(1, 3)});
  }
  return s;
}

}  // namespace

Rational lhs_recursion(Recursion r, int n, Reading reading) {
  if (n < 1) throw Error("n must be positive");
  const long M = bound(n);
  Rational s;
  switch (r) {
    case Recursion::t1id:
      for (long m = -M; m <= M; ++m) {
        if (3 * m * m + m > 2L * n) continue;
        s += (Rational(m) + Rational(1, 6)) * coeff_c(MockName::f, Rational(n) - Rational(3 * m * m + m, 2));
      }
      return s;
    case Recursion::t9:
      for (long m = -M; m <= M; ++m) {
        if (3 * m * m + 2 * m > n) continue;
        s += (Rational(m) + Rational(1, 3)) *
             coeff_c(MockName::f, Rational(n, 2) - Rational(3 * m * m, 2) - Rational(m));
      }
      return s;
    case Recursion::t919:
      for (long m = -M; m <= M; ++m) {
        const long lim = reading == Reading::literal ? 3 * m * m + 2 * m : 3 * m * m + m;
        if (lim > n) continue;
        s += (Rational(m) + Rational(1, 6)) * coeff_c(MockName::omega, Rational(n - 3 * m * m - m));
      }
      return s;
    case Recursion::t9201:
      return omega_type(n, [](long k) { return coeff_c(MockName::omegaEven, Rational(k)); });
    case Recursion::t9202:
      return omega_type(n, [](long k) { return coeff_c(MockName::omegaOdd, Rational(k)); });
    case Recursion::t920c:
      return omega_type(n, [](long k) { return coeff_c(MockName::omega, Rational(k)); });
    case Recursion::t920d:
      return omega_type(n, omega_signed);
    case Recursion::corB:
      for (long m = reading == Reading::literal ? 1 : 0; m <= M; ++m) {
        const long lim = reading == Reading::literal ? 2 * m * m + m + 1 : 2 * m * m + 2 * m + 1;
        if (lim > n) continue;
        const Rational w(m % 2 == 0 ? 2 * m + 1 : -(2 * m + 1));
        s += w * coeff_c(MockName::B, Rational(n - 2 * m * m - 2 * m - 1));
      }
      return s;
  }
  return s;
}

Rational rhs_theorem(Recursion r, int n, Reading reading) {
  if (n < 1) throw Error("n must be positive");
  Rational s;
  switch (r) {
    case Recursion::t1id:
      for (const auto& [a, b] : signed_divisor_pairs(2L * n)) {
        if ((3 * a + b - 1) % 6 != 0) continue;
        s += d_weight({Rational(-3 * a + b - 1, 6), Rational(3 * a + b - 1, 6), Rational(1, 6), Rational(1, 6)});
      }
      return Rational(4, 3) * sigma(Rational(n)) - Rational(16, 3) * sigma(Rational(n, 2)) - Rational(2) * s;
    case Recursion::t9:
      for (const auto& [a, b] : signed_divisor_pairs(4L * n + 1)) {
        if ((3 * a - b - 2) % 12 != 0) continue;
        s += d_weight({Rational(3 * a - b - 2, 12), Rational(3 * a + b - 4, 12), Rational(1, 6), Rational(1, 3)});
      }
      return Rational(-2) * s;
    case Recursion::t919:
      for (const auto& [a, b] : signed_divisor_pairs(4L * n + 3)) {
        if ((3 * a - b - 4) % 12 != 0) continue;
        s += d_weight({Rational(3 * a - b - 4, 12), Rational(3 * a + b - 2, 12), Rational(1, 3), Rational(1, 6)});
      }
      return n % 2 == 0 ? -s : s;
    case Recursion::t9201:
      return r_n(n) - dsum_third(n, 8);
    case Recursion::t9202:
      return -r_n(n) + dsum_third(n, 2);
    case Recursion::t920c:
      return dsum_third(n, 2) - dsum_third(n, 8);
    case Recursion::t920d:
      return Rational(2) * r_n(n) - dsum_third(n, 8) - dsum_third(n, 2);
    case Recursion::corB: {
      for (const auto& [d, e] : signed_divisor_pairs(n)) {
        if (d > 0 && e % 2 != 0) s += Rational(d);
      }
      Rational pairs;
      if (n % 2 == 0) {
        for (const auto& [a, b] : signed_divisor_pairs(n / 2)) {
          if (a > 0 && a < b && (a - b) % 2 != 0) pairs += Rational(a % 2 == 0 ? a : -a);
        }
      }
      return s - (reading == Reading::literal ? pairs : Rational(2) * pairs);
    }
  }
  return s;
}

}  // namespace qmock
