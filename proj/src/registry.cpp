// The identity registry: each entry builds the two sides of one displayed
// identity as polar sums on a requested window.

#include <algorithm>

#include "qmock/divisor.hpp"
#include "qmock/error.hpp"
#include "qmock/mockforms.hpp"
#include "qmock/verify.hpp"
#include "registry_dsl.hpp"

namespace qmock {

namespace {

using namespace dsl;

Rational R(long a, long b = 1) { return Rational(a, b); }

const LaurentPoly kOneMinusX{{0, Rational(1)}, {1, Rational(-1)}};
const LaurentPoly kOnePlusX{{0, Rational(1)}, {1, Rational(1)}};

IdentityEntry entry(std::string name, std::string summary, SideBuilder lhs, SideBuilder rhs,
                    std::vector<Params> instances = {Params{}}, std::string symbol = {},
                    std::optional<LaurentPoly> clearing = std::nullopt) {
  return {std::move(name), std::move(summary), std::move(instances), std::move(lhs), std::move(rhs),
          std::move(clearing), std::move(symbol)};
}

std::vector<Params> lj_instances() {
  return {{{"l", 1}, {"j", -3}}, {{"l", 1}, {"j", -1}}, {{"l", 1}, {"j", 0}}, {{"l", 1}, {"j", 1}}, {{"l", 2}, {"j", 1}}};
}

std::vector<Params> m_instances() { return {{{"m", 0}}, {{"m", 1}}, {{"m", 2}}}; }

// (q^2;q^2)^2 / (q;q^2)^2
Product q1() { return qq(2).pow(2) / pc(q(1), 2).pow(2); }
// (q^2;q^2)^2 / (-q^2;q^2)^2
Product q2() { return qq(2).pow(2) / pc(nq(2), 2).pow(2); }
// (q^2;q^2)^2 / (-q;q^2)^2
Product q3() { return qq(2).pow(2) / pc(nq(1), 2).pow(2); }
// (q^2;q^2)^3 / (-q;q^2)^2
Product w3() { return qq(2).pow(3) / pc(nq(1), 2).pow(2); }
// (q)^3 / (-q)^2
Product t3() { return qq(1).pow(3) / pc(nq(1), 1).pow(2); }

PolarSum mock(MockName n, int w) { return series(eulerian_series(n, w)); }
PolarSum omega_neg(int w) { return series(negate_q(eulerian_series(MockName::omega, w))); }

// ---- two-parameter theta family, base q^(6l) ----

Product p5(int l, int j) {
  return br({nq(l + j), q(2 * l)}, 6 * l) * qq(6 * l).pow(2) / br({nq(j), q(l), nq(2 * l + j)}, 6 * l);
}
// sum w(n) (-1)^n q^(3ln(n+1)+ln+l) / (1 + q^(6ln+j+2l))
Lam s1(int l, int j, Rational a, Rational b) {
  return Lam().w(std::move(a), std::move(b)).alt().e(3 * l, 4 * l, l).den(nq(j + 2 * l), 6 * l);
}
// sum w(n) (-1)^n q^(3ln(n+1)-ln) / (1 + q^(6ln+j))
Lam s0(int l, int j, Rational a, Rational b) {
  return Lam().w(std::move(a), std::move(b)).alt().e(3 * l, 2 * l, 0).den(nq(j), 6 * l);
}
// sum (-1)^n q^(3ln(n+1)+2ln+extra) / (1 + q^(6ln+j+3l))
Lam s3(int l, int j, int extra) { return Lam().alt().e(3 * l, 5 * l, extra).den(nq(j + 3 * l), 6 * l); }
PolarSum u_sum(int l, int w) { return geo(l, 6 * l).at(w) - geo(5 * l, 6 * l).at(w); }
Product q_l(int l) { return qq(2 * l).pow(2) / pc(q(l), 2 * l).pow(2); }
Product k_l(int l) {
  return br({q(-2 * l), q(2 * l)}, 6 * l) * qq(6 * l).pow(2) / br({q(3 * l), q(l), q(-l)}, 6 * l);
}

PolarSum lambda4(int l, int j, int w) {
  return geo(l, 6 * l).at(w) - geo(5 * l, 6 * l).at(w) + geo(l + j, 6 * l, -1).at(w) -
         geo(5 * l - j, 6 * l, -1).at(w);
}
PolarSum lambda2(int l, int j, int w) { return geo(3 * l - j, 6 * l, -1).at(w) - geo(3 * l + j, 6 * l, -1).at(w); }

// ---- section 3 pieces, base q^6 ----

// sum (6n-1)(-1)^n q^(3n^2+4n+1)/(1+q^(6n-1)) + sum (6n-3)(-1)^n q^(3n^2+2n)/(1+q^(6n-3))
PolarSum a12(int w) {
  return Lam().w(-1, 6).alt().e(3, 4, 1).den(nq(-1), 6).at(w) + Lam().w(-3, 6).alt().e(3, 2, 0).den(nq(-3), 6).at(w);
}
Product zc() {
  return mono(q(2)) * br({nq(1), q(2), q(2), nq(2), nq(3)}, 6) * qq(6).pow(4) / br({q(1)}, 6);
}
// sum (6n+3) q^(3n(n+1)+2n+2)/(1+q^(6n+3))
PolarSum b1(int w) { return Lam().w(3, 6).e(3, 5, 2).den(nq(3), 6).at(w); }
// sum (6n-1) q^(3n(n+1)-2n)/(1+q^(6n-1))
PolarSum b2(int w) { return Lam().w(-1, 6).e(3, 1, 0).den(nq(-1), 6).at(w); }
// sum (-1)^n q^(3n(n+1)+2n+2)/(1-q^(6n+3))
PolarSum c1(int w) { return Lam().alt().e(3, 5, 2).den(q(3), 6).at(w); }
Product y_prod() {
  return mono(q(1)) * br({q(2), nq(3), q(4)}, 6) * qq(6).pow(4) / br({q(1), nq(1), nq(2), nq(2), nq(4)}, 6);
}
// sum (6n+2) q^(3n^2+4n)/(1+q^(6n+2)) - sum 6n q^(3n^2+2n-1)/(1+q^(6n))
PolarSum e12(int w) {
  return Lam().w(2, 6).e(3, 4, 0).den(nq(2), 6).at(w) - Lam().w(0, 6).e(3, 2, -1).den(nq(0), 6).at(w);
}
PolarSum lambda_pom(int w) {
  return geo(5, 6, -1).at(w) - geo(1, 6, -1).at(w) - geo(1, 6).at(w) + geo(5, 6).at(w);
}
// sum over all j of q^(6j+1)/(1-q^(12j+2)), split at j = -1 into two one-sided sums
PolarSum cor31_sum(int w) {
  return Lam().e(0, 6, 1).den(q(2), 12).from(0).at(w) - Lam().e(0, 6, 5).den(q(10), 12).from(0).at(w);
}

// ---- Eisenstein-type pieces ----

// sum_{n>=1} c q^(step n)/(1 - q^(step n))^2
PolarSum eis2(int step, Rational c, int w) { return Lam().w(std::move(c)).e(0, step, 0).den(q(0), step, 2).from(1).at(w); }

PolarSum from_coeffs(int w, const std::function<Rational(int)>& c) {
  std::vector<Rational> cs(static_cast<std::size_t>(w));
  for (int n = 0; n < w; ++n) cs[static_cast<std::size_t>(n)] = c(n);
  return series(QSeries::from_rationals(0, cs));
}

// 1 - 4 sum n q^(mn) - 16 sum n q^(2mn) + 4 sum (6n+2m-1) q^(n(3n-1+2m)/2), n, m >= 1
PolarSum e1_rhs(int w) {
  std::vector<Rational> cs(static_cast<std::size_t>(w));
  cs[0] = 1;
  for (long n = 1; n < w; ++n) {
    for (long m = 1; m * n < w; ++m) {
      cs[static_cast<std::size_t>(m * n)] -= Rational(4 * n);
      if (2 * m * n < w) cs[static_cast<std::size_t>(2 * m * n)] -= Rational(16 * n);
    }
    for (long m = 1;; ++m) {
      const long e = n * (3 * n - 1 + 2 * m) / 2;
      if (e >= w) break;
      cs[static_cast<std::size_t>(e)] += Rational(4 * (6 * n + 2 * m - 1));
    }
  }
  return series(QSeries::from_rationals(0, cs));
}

// sum 6 R~_n q^n + sum_{ab=n, a>3b, a=b mod 2} a + sum_{ab=n, a>3b-2, a=b mod 2} 3b
Rational e2_coeff_value(int n) {
  if (n < 1) return 0;
  Rational v = Rational(6) * r_tilde(n);
  for (long a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const long b = n / a;
    if ((a - b) % 2 != 0) continue;
    if (a > 3 * b) v += Rational(a);
    if (a > 3 * b - 2) v += Rational(3 * b);
  }
  return v;
}

// sum_{n>=0} q^(n^2) / ((xq;q)_n (q/x;q)_n)
PolarSum fine3_lhs(int w) {
  PolarSum acc = cst(0, w);
  for (int n = 0; n * n < w; ++n) {
    const Product den = pcn(xq(1, 1), 1, n) * pcn(xq(-1, 1), 1, n);
    acc += den.inverse().apply(series(QSeries::monomial(q(n * n), w)));
  }
  return acc;
}

// sum_{n>=0} q^(2n^2+2n) / ((xq;q^2)_{n+1} (q/x;q^2)_{n+1})
PolarSum fine5_lhs(int w) {
  PolarSum acc = cst(0, w);
  for (int n = 0; 2 * n * n + 2 * n < w; ++n) {
    const Product den = pcn(xq(1, 1), 2, n + 1) * pcn(xq(-1, 1), 2, n + 1);
    acc += den.inverse().apply(series(QSeries::monomial(q(2 * n * n + 2 * n), w)));
  }
  return acc;
}

// Fixed generalized-Lambert instances.
GlsInstance gls_instance(int i) {
  switch (i) {
    case 1: return {1, {}, {nq(1), xq(1, 1)}};
    case 2: return {6, {nq(-2)}, {nq(-3), nq(-1)}};
    case 3: return {1, {}, {xq(1, 0), xq(1, 0, R(-1, 2)), xq(1, 1, -2)}};
    case 4: return {6, {nq(0), nq(-2)}, {xq(1, 0, -1), nq(-1), nq(-3)}};
    case 5: return {1, {q(2)}, {nq(1), xq(1, 0), xq(1, 2, -1)}};
    case 6: return {1, {nq(1), q(3)}, {nq(2), q(1, 2), xq(1, 0)}};
    default: throw Error("gls instance " + std::to_string(i) + " does not exist");
  }
}

std::vector<IdentityEntry> build_registry() {
  std::vector<IdentityEntry> r;

  r.push_back(entry(
      "gls", "two-sided Lambert identity at fixed monomial parameters",
      [](const Params& p, int w) { return build_gls_lhs(gls_instance(P(p, "i")), w); },
      [](const Params& p, int w) { return build_gls_rhs(gls_instance(P(p, "i")), w); },
      {{{"i", 1}}, {{"i", 2}}, {{"i", 3}}, {{"i", 4}}, {{"i", 5}}, {{"i", 6}}}, "free parameter"));

  // ---- lemma on (q)^2/(-q)^2 and its q^2 analogue ----
  r.push_back(entry(
      "lat2", "(q)^2/(-q)^2 sum (-1)^n q^(n(3n+1)/2)/(1-xq^n)",
      [](const Params&, int w) {
        return (qq(1).pow(2) / pc(nq(1), 1).pow(2)).apply(Lam().alt().e(R(3, 2), R(1, 2)).den(xq(1, 0), 1).at(w));
      },
      [](const Params&, int w) {
        const Product pr = mono(xq(1, 0, 4)) * qq(1).pow(2) * qq(2).pow(2) / (br({xq(1, 0, -1)}, 1) * br({xq(2, 0)}, 2));
        return expand(pr, w) + Lam().w(2).e(R(3, 2), R(1, 2)).den(xq(1, 0, -1), 1, 2).at(w) +
               Lam().w(-1, 6).e(R(3, 2), R(1, 2)).den(xq(1, 0, -1), 1).at(w);
      },
      {Params{}}, "x", kOneMinusX * kOnePlusX * kOnePlusX));

  r.push_back(entry(
      "lat3", "q (q^2;q^2)^2/(-q;q^2)^2 sum (-1)^n q^(3n(n+1))/(1-xq^(2n))",
      [](const Params&, int w) {
        return (mono(q(1)) * qq(2).pow(2) / pc(nq(1), 2).pow(2)).apply(Lam().alt().e(3, 3).den(xq(1, 0), 2).at(w));
      },
      [](const Params&, int w) {
        const Product pr = mono(xq(-1, 1)) * qq(2).pow(4) * pc(nq(1), 2).pow(2) / br({xq(1, 0), xq(1, 1, -1), xq(1, 1, -1)}, 2);
        return expand(pr, w) + Lam().e(3, 0).den(xq(1, -1, -1), 2, 2).at(w) +
               Lam().w(-1, 3).e(3, 0).den(xq(1, -1, -1), 2).at(w);
      },
      {Params{}}, "x", kOneMinusX));

  // ---- r = 0, s = 3 specializations; x := -q^m, the other parameter kept ----
  r.push_back(entry(
      "at4", "b = (x, -xq/a, -ax) with x = -q^m and a formal",
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pr = mono(xq(1, 0)) * qq(1).pow(2) * br({xq(1, 0, -1), xq(-2, 0)}, 1) /
                           br({nq(m), xq(-1, m + 1), xq(1, m)}, 1);
        return expand(pr, w);
      },
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pre = br({xq(-2, 0)}, 1) / br({xq(-1, 0, -1)}, 1);
        return pre.apply(Lam().alt().e(R(3, 2), R(1, 2)).den(nq(m), 1).at(w)) +
               Lam().e(R(3, 2), R(1, 2)).ratio(xq(-3, 0)).pre(LaurentPoly::monomial(1, -1)).den(xq(-1, m), 1).at(w) -
               Lam().e(R(3, 2), R(1, 2)).ratio(xq(3, 0)).den(xq(1, m), 1).at(w);
      },
      m_instances(), "a"));

  r.push_back(entry(
      "at3", "b = (x, -x/a, -ax) with x = -q^m and a formal",
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pr = qq(1).pow(2) * br({xq(1, 0, -1), xq(-2, 0)}, 1) / br({nq(m), xq(-1, m), xq(1, m)}, 1);
        return expand(pr, w);
      },
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pre = br({xq(-2, 0)}, 1) / br({xq(-1, 0, -1)}, 1);
        return pre.apply(Lam().alt().e(R(3, 2), R(3, 2)).den(nq(m), 1).at(w)) -
               Lam().e(R(3, 2), R(3, 2)).ratio(xq(-3, 0)).pre(LaurentPoly::monomial(1, -2)).den(xq(-1, m), 1).at(w) +
               Lam().e(R(3, 2), R(3, 2)).ratio(xq(3, 0)).pre(LaurentPoly::monomial(1, 1)).den(xq(1, m), 1).at(w);
      },
      m_instances(), "a"));

  r.push_back(entry(
      "at6", "q -> q^2, a = 1/(bq) with x = -q^m and b formal",
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pr = qq(2).pow(2) * br({xq(-1, -1, -1), xq(2, 2)}, 2) / br({nq(m), xq(1, m + 1), xq(-1, m - 1)}, 2);
        return expand(pr, w);
      },
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Product pre = br({xq(2, 2)}, 2) / br({xq(1, 1, -1)}, 2);
        return pre.apply(Lam().alt().e(3, 3).den(nq(m), 2).at(w)) -
               Lam().e(3, 0, -1).ratio(xq(3, 0)).pre(LaurentPoly::monomial(1, -1)).den(xq(1, m - 1), 2).at(w) +
               Lam().e(3, 0, -1).ratio(xq(-3, 0)).pre(LaurentPoly::monomial(1, -1)).den(xq(-1, m - 1), 2).at(w);
      },
      m_instances(), "b"));

  r.push_back(entry(
      "at8", "derivative of the b = (x, -xq/a, -ax) identity at a = 1",
      [](const Params&, int w) {
        return expand(mono(q(0, 4)) * qq(1).pow(4) * pc(nq(1), 1).pow(2) / br({xq(1, 0), xq(1, 1, -1), xq(1, 0, -1)}, 1), w);
      },
      [](const Params&, int w) {
        return (qq(1).pow(2) / pc(nq(1), 1).pow(2)).apply(Lam().alt().e(R(3, 2), R(1, 2)).den(xq(1, 0), 1).at(w)) -
               Lam().w(2).e(R(3, 2), R(1, 2)).den(xq(1, 0, -1), 1, 2).at(w) -
               Lam().w(-1, 6).e(R(3, 2), R(1, 2)).den(xq(1, 0, -1), 1).at(w);
      },
      {Params{}}, "x", kOneMinusX * kOnePlusX * kOnePlusX));

  r.push_back(entry(
      "at7", "derivative of the q^2 identity at b = 1",
      [](const Params&, int w) {
        return expand(mono(q(0, 2)) * qq(2).pow(4) * br({nq(-1)}, 2) / br({xq(1, 0), xq(1, 1, -1), xq(1, -1, -1)}, 2), w);
      },
      [](const Params&, int w) {
        return (mono(q(0, 2)) * qq(2).pow(2) / br({nq(1)}, 2)).apply(Lam().alt().e(3, 3).den(xq(1, 0), 2).at(w)) -
               Lam().w(2).e(3, 0, -1).den(xq(1, -1, -1), 2, 2).at(w) -
               Lam().w(-2, 6).e(3, 0, -1).den(xq(1, -1, -1), 2).at(w);
      },
      {Params{}}, "x", kOneMinusX));

  // ---- corollary identities and the Appell-Lerch forms ----
  r.push_back(entry(
      "c6", "(q)^3/(-q)^2 f(q) as Lambert series",
      [](const Params&, int w) { return t3().apply(mock(MockName::f, w)); },
      [](const Params&, int w) {
        return eis2(1, -4, w) + eis2(2, -16, w) + unit(w) +
               Lam().w(4).e(R(3, 2), R(1, 2)).den(q(0), 1, 2).skip(0).at(w) +
               Lam().w(-2, 12).e(R(3, 2), R(1, 2)).den(q(0), 1).skip(0).at(w);
      }));

  r.push_back(entry(
      "c5", "q (q^2;q^2)^3/(-q;q^2)^2 omega(-q) as Lambert series",
      [](const Params&, int w) { return (mono(q(1)) * w3()).apply(omega_neg(w)); },
      [](const Params&, int w) {
        return Lam().e(0, 2, -1).den(nq(-1), 2, 2).from(1).at(w) + eis2(2, -2, w) +
               Lam().e(3, 0).den(q(0), 2, 2).skip(0).at(w) + Lam().w(-1, 3).e(3, 0).den(q(0), 2).skip(0).at(w);
      }));

  r.push_back(entry(
      "mockf", "f(q) = 2/(q) sum (-1)^n q^(n(3n+1)/2)/(1+q^n)",
      [](const Params&, int w) { return mock(MockName::f, w); },
      [](const Params&, int w) {
        return qq(1).inverse().apply(Lam().w(2).alt().e(R(3, 2), R(1, 2)).den(nq(0), 1).at(w));
      }));

  r.push_back(entry(
      "om00", "omega(q) = 1/(q^2;q^2) sum (-1)^n q^(3n^2+3n)/(1-q^(2n+1))",
      [](const Params&, int w) { return mock(MockName::omega, w); },
      [](const Params&, int w) { return qq(2).inverse().apply(Lam().alt().e(3, 3).den(q(1), 2).at(w)); }));

  r.push_back(entry(
      "b-appell", "B(q) = 1/(q,q^3,q^4;q^4) sum (-1)^n q^(n(2n+3))/(1-q^(4n+1))",
      [](const Params&, int w) { return mock(MockName::B, w); },
      [](const Params&, int w) {
        return (pc(q(1), 4) * pc(q(3), 4) * qq(4)).inverse().apply(Lam().alt().e(2, 3).den(q(1), 4).at(w));
      }));

  r.push_back(entry(
      "fine-12.2.3", "sum q^(n^2)/((xq)_n (q/x)_n) = (1-x)/(q) sum (-1)^n q^(n(3n+1)/2)/(1-xq^n)",
      [](const Params&, int w) { return fine3_lhs(w); },
      [](const Params&, int w) {
        return qq(1).inverse().apply(Lam().alt().e(R(3, 2), R(1, 2)).den(xq(1, 0), 1).pre(kOneMinusX).at(w));
      },
      {Params{}}, "x"));

  r.push_back(entry(
      "fine-12.2.5", "sum q^(2n^2+2n)/((xq;q^2)_{n+1} (q/x;q^2)_{n+1})",
      [](const Params&, int w) { return fine5_lhs(w); },
      [](const Params&, int w) { return qq(2).inverse().apply(Lam().alt().e(3, 3).den(xq(1, 1), 2).at(w)); },
      {Params{}}, "x"));

  // ---- theta family in (l, j) ----
  r.push_back(entry(
      "idt5", "theta quotient times (j + 2 lambda) in Lambert series",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        const PolarSum lam = lambda4(l, j, w) - Rational(2) * lambda2(l, j, w);
        return p5(l, j).apply(cst(j, w) + Rational(2) * lam);
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return s1(l, j, 2 + j, 6).at(w) + s0(l, j, j, 6).at(w) + Rational(4) * q_l(l).apply(s3(l, j, 2 * l).at(w));
      },
      lj_instances()));

  r.push_back(entry(
      "pt51", "theta quotient times the four-term m-sum",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return p5(l, j).apply(lambda4(l, j, w));
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return Rational(2) * (u_sum(l, w) * s1(l, j, 1, 0).at(w)) + s1(l, j, 1, 1).at(w) + s0(l, j, 0, 1).at(w);
      },
      lj_instances()));

  r.push_back(entry(
      "pt52", "theta quotient times the two-term m-sum",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return p5(l, j).apply(lambda2(l, j, w));
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return u_sum(l, w) * s1(l, j, 1, 0).at(w) - s1(l, j, 0, 1).at(w) - s0(l, j, 0, 1).at(w) -
               k_l(l).apply(s3(l, j, 3 * l).at(w));
      },
      lj_instances()));

  r.push_back(entry(
      "pt53", "twice the first minus four times the second",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return p5(l, j).apply(Rational(2) * lambda4(l, j, w) - Rational(4) * lambda2(l, j, w));
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return s1(l, j, 2, 6).at(w) + s0(l, j, 0, 6).at(w) + Rational(4) * q_l(l).apply(s3(l, j, 2 * l).at(w));
      },
      lj_instances()));

  r.push_back(entry(
      "pt54", "r = 1, s = 2 in base q^(6l)",
      [](const Params& p, int w) { return expand(p5(P(p, "l"), P(p, "j")), w); },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return s1(l, j, 1, 0).at(w) + s0(l, j, 1, 0).at(w);
      },
      lj_instances()));

  r.push_back(entry(
      "eastharlem", "r = 2, s = 3 in base q^(6l) with b formal",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        const Product pr = br({nq(3 * l + j), nq(j + l), q(2 * l), xq(1, 3 * l)}, 6 * l) * qq(6 * l).pow(2) /
                           br({nq(j + 2 * l), nq(j), q(3 * l), q(l), xq(1, j + 3 * l, -1)}, 6 * l);
        return expand(pr, w);
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        const Product pre1 = mono(xq(1, 0)) * br({xq(-1, 0), xq(-1, -2 * l), q(2 * l)}, 6 * l) /
                             br({q(3 * l), q(l), xq(-1, -l)}, 6 * l);
        const Product pre2 = br({q(l), xq(1, 3 * l)}, 6 * l) / br({q(3 * l), xq(1, l)}, 6 * l);
        return pre1.apply(Lam().w(-1).alt().e(3 * l, 5 * l, 3 * l).den(xq(1, j + 3 * l, -1), 6 * l).at(w)) +
               pre2.apply(Lam().alt().ratio(xq(-1, 0)).e(3 * l, 4 * l, l).den(nq(j + 2 * l), 6 * l).at(w)) +
               Lam().alt().ratio(xq(-1, 0)).e(3 * l, 2 * l, 0).den(nq(j), 6 * l).at(w);
      },
      lj_instances(), "b"));

  r.push_back(entry(
      "t53-display", "theta quotient with [q^(2l+j), q^(4l)] over [-q^j, -q^(2l), -q^(4l+j)]",
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        const Product pr = br({q(2 * l + j), q(4 * l)}, 6 * l) * qq(6 * l).pow(2) / br({nq(j), nq(2 * l), nq(4 * l + j)}, 6 * l);
        const int s = 6 * l;
        const PolarSum lam = Rational(2) * (geo(2 * l, s, -1).at(w) - geo(4 * l, s, -1).at(w) - geo(2 * l + j, s).at(w) +
                                            geo(4 * l - j, s).at(w)) -
                             Rational(4) * (geo(4 * l + j, s).at(w) - geo(2 * l - j, s).at(w));
        return pr.apply(cst(j, w) + lam);
      },
      [](const Params& p, int w) {
        const int l = P(p, "l"), j = P(p, "j");
        return Lam().w(j, 6).e(3 * l, l, 0).den(nq(j), 6 * l).at(w) -
               Lam().w(4 + j, 6).e(3 * l, 5 * l, 2 * l).den(nq(j + 4 * l), 6 * l).at(w) +
               Rational(2) * (qq(2 * l).pow(2) / pc(nq(2 * l), 2 * l).pow(2))
                                 .apply(Lam().alt().e(3 * l, 5 * l, 2 * l).den(q(j + 4 * l), 6 * l).at(w));
      },
      {{{"l", 1}, {"j", -1}}}));

  // ---- section 3 chain ----
  r.push_back(entry(
      "e1", "(q)^3/(-q)^2 f(q) as double sums",
      [](const Params&, int w) { return t3().apply(mock(MockName::f, w)); },
      [](const Params&, int w) { return e1_rhs(w); }));

  r.push_back(entry(
      "qtp1", "sum (6n+1) q^(n(3n+1)/2) = (q)^3/(-q)^2",
      [](const Params&, int w) { return Lam().w(1, 6).e(R(3, 2), R(1, 2)).at(w); },
      [](const Params&, int w) { return expand(t3(), w); }));

  r.push_back(entry(
      "qtp2", "sum (3n+1) q^(n(3n+2)) = (q^2;q^2)^3/(-q;q^2)^2",
      [](const Params&, int w) { return Lam().w(1, 3).e(3, 2).at(w); },
      [](const Params&, int w) { return expand(w3(), w); }));

  r.push_back(entry(
      "idt9", "2 (q^2;q^2)^2/(-q;q^2)^2 sum (-1)^n q^(n(3n+1))/(1+q^(2n))",
      [](const Params&, int w) { return (mono(q(0, 2)) * q3()).apply(Lam().alt().e(3, 1).den(nq(0), 2).at(w)); },
      [](const Params&, int w) {
        return Lam().w(1, 6).e(3, 2).den(q(1), 6).at(w) - Lam().w(-3, 6).e(3, 2, -2).den(q(-3), 6).at(w);
      }));

  r.push_back(entry(
      "pt95", "l = 1, j = -3 in the theta family",
      [](const Params&, int w) {
        const Product pr = br({nq(-2), q(2)}, 6) * qq(6).pow(2) / br({nq(-3), q(1), nq(-1)}, 6);
        const PolarSum lam = geo(1, 6).at(w) - geo(5, 6).at(w) + geo(-2, 6, -1).at(w) - geo(8, 6, -1).at(w);
        return pr.apply(cst(-1, w) + Rational(2) * lam);
      },
      [](const Params&, int w) {
        return a12(w) + Rational(4) * k_l(1).apply(Lam().alt().e(3, 5, 3).den(nq(0), 6).at(w));
      }));

  r.push_back(entry(
      "cor32-a", "-1 + 2 lambda as a theta quotient (c = -q^-2)",
      [](const Params&, int w) {
        const PolarSum lam = geo(1, 6).at(w) - geo(5, 6).at(w) + geo(-2, 6, -1).at(w) - geo(8, 6, -1).at(w);
        return cst(-1, w) + Rational(2) * lam;
      },
      [](const Params&, int w) {
        return expand(mono(q(0, -1)) * br({q(10), nq(3), nq(3)}, 6) * qq(6).pow(2) / br({q(1), q(1), nq(-2), nq(8)}, 6), w);
      }));

  r.push_back(entry(
      "pt96", "the (6n-1), (6n-3) sums against a theta quotient",
      [](const Params&, int w) { return -a12(w); },
      [](const Params&, int w) {
        return -expand(zc(), w) + Rational(4) * q1().apply(Lam().alt().e(3, 5, 2).den(nq(0), 6).at(w));
      }));

  r.push_back(entry(
      "pt9f", "theta quotient as a single Lambert series",
      [](const Params&, int w) { return -expand(zc(), w); },
      [](const Params&, int w) { return Rational(-2) * q1().apply(Lam().alt().e(3, 3, 2).den(nq(0), 6).at(w)); }));

  r.push_back(entry(
      "t9f", "the (6n-1), (6n-3) sums in base q^2",
      [](const Params&, int w) { return -a12(w); },
      [](const Params&, int w) { return Rational(2) * q1().apply(Lam().alt().e(3, 1, 2).den(nq(0), 2).at(w)); }));

  r.push_back(entry(
      "t919a", "(q^2;q^2)^2/(-q^2;q^2)^2 sum (-1)^n q^(3n^2+3n)/(1-q^(2n+1))",
      [](const Params&, int w) { return q2().apply(Lam().alt().e(3, 3).den(q(1), 2).at(w)); },
      [](const Params&, int w) {
        return Lam().w(3, -6).e(3, 1, -2).den(nq(-3), 6).at(w) - Lam().w(-1, 6).e(3, 1, -1).den(nq(-1), 6).at(w);
      }));

  r.push_back(entry(
      "leid54", "l = 1, j = -1 in the second theta family",
      [](const Params&, int w) {
        const Product pr = br({q(1), q(4)}, 6) * qq(6).pow(2) / br({nq(-1), nq(2), nq(3)}, 6);
        const PolarSum lam =
            Rational(2) * (geo(2, 6, -1).at(w) - geo(4, 6, -1).at(w) - geo(1, 6).at(w) + geo(5, 6).at(w));
        return pr.apply(cst(-1, w) + lam);
      },
      [](const Params&, int w) { return b2(w) - b1(w) + Rational(2) * q2().apply(c1(w)); }));

  r.push_back(entry(
      "cor32-b", "-1 + lambda as a theta quotient (c = -q^2)",
      [](const Params&, int w) {
        return cst(-1, w) + Rational(2) * (geo(2, 6, -1).at(w) - geo(4, 6, -1).at(w) - geo(1, 6).at(w) + geo(5, 6).at(w));
      },
      [](const Params&, int w) {
        return expand(mono(q(0, -1)) * br({q(2), nq(3), nq(3)}, 6) * qq(6).pow(2) / br({q(1), q(1), nq(2), nq(4)}, 6), w);
      }));

  r.push_back(entry(
      "leid55", "the (6n+3), (6n-1) sums against a theta quotient",
      [](const Params&, int w) { return b1(w) - b2(w); },
      [](const Params&, int w) { return Rational(2) * q2().apply(c1(w)) + expand(y_prod(), w); }));

  r.push_back(entry(
      "leid56", "theta quotient as a single Lambert series",
      [](const Params&, int w) { return expand(y_prod(), w); },
      [](const Params&, int w) { return q2().apply(Lam().alt().e(3, 3, 1).den(q(3), 6).at(w)); }));

  r.push_back(entry(
      "leid57", "the (6n+3), (6n-1) sums in base q^2",
      [](const Params&, int w) { return b1(w) - b2(w); },
      [](const Params&, int w) { return q2().apply(Lam().alt().e(3, 3, 1).den(q(1), 2).at(w)); }));

  r.push_back(entry(
      "pt920a", "q (q^2;q^2)^3/(-q;q^2)^2 omega(q), modulus 12 form",
      [](const Params&, int w) { return (mono(q(1)) * w3()).apply(mock(MockName::omega, w)); },
      [](const Params&, int w) {
        return Lam().w(2, 3).e(3, 14, 8).den(q(8), 12).at(w) - Lam().w(0, 3).e(3, 2).den(q(0), 12).skip(0).at(w) -
               Lam().w(2, 3).e(3, 8, 4).den(q(8), 12).at(w) + Lam().w(0, 3).e(3, 8).den(q(0), 12).skip(0).at(w);
      }));

  r.push_back(entry(
      "equiv", "q (q^2;q^2)^3/(-q;q^2)^2 omega(q), modulus 6 forms",
      [](const Params&, int w) { return (mono(q(1)) * w3()).apply(mock(MockName::omega, w)); },
      [](const Params& p, int w) {
        if (P(p, "form") == 1) {
          return Lam().w(0, -3).e(3, 2).den(nq(0), 6).skip(0).at(w) - Lam().w(2, 3).e(3, 8, 4).den(nq(4), 6).at(w);
        }
        return Lam().w(0, -3).e(3, 2).den(nq(0), 6).at(w) + Lam().w(1, 3).e(3, 4, 1).den(nq(2), 6).at(w);
      },
      {{{"form", 1}}, {{"form", 2}}}));

  r.push_back(entry(
      "pom4", "l = 1, j = 0 in the theta family with q -> -q",
      [](const Params&, int w) {
        const Product pr = mono(q(0, 2)) * br({q(1), q(2)}, 6) * qq(6).pow(2) / br({nq(0), nq(1), nq(2)}, 6);
        return pr.apply(lambda_pom(w));
      },
      [](const Params&, int w) {
        return Lam().w(0, 6).e(3, 2).den(nq(0), 6).at(w) - Lam().w(2, 6).e(3, 4, 1).den(nq(2), 6).at(w) +
               Rational(4) * q3().apply(Lam().alt().e(3, 5, 2).den(q(3), 6).at(w));
      }));

  r.push_back(entry(
      "cor31-instance", "the four-term m-sum as a Lambert series in q^12",
      [](const Params&, int w) { return lambda_pom(w); },
      [](const Params&, int w) { return Rational(-2) * cor31_sum(w); }));

  r.push_back(entry(
      "cor31-product", "sum q^(6j+1)/(1-q^(12j+2)) as a theta quotient",
      [](const Params&, int w) { return cor31_sum(w); },
      [](const Params&, int w) { return expand(mono(q(1)) * br({q(8)}, 12) * qq(12).pow(2) / br({q(2), q(6)}, 12), w); }));

  r.push_back(entry(
      "pom4-combined", "the (6n+2), 6n sums against a theta quotient and a Lambert series",
      [](const Params&, int w) { return e12(w); },
      [](const Params&, int w) {
        const Product pr = mono(q(0, 2)) * w3() * br({q(6)}, 18).pow(3) * qq(18).pow(3) / (br({q(2), q(3)}, 6) * qq(6).pow(2));
        return expand(pr, w) + Rational(4) * q3().apply(Lam().alt().e(3, 5, 1).den(q(3), 6).at(w));
      }));

  r.push_back(entry(
      "hi-mo-consequence", "2 (q^2;q^2)^3/(-q;q^2)^2 omega(q) as two Lambert series",
      [](const Params&, int w) { return (mono(q(0, 2)) * w3()).apply(mock(MockName::omega, w)); },
      [](const Params&, int w) { return e12(w); }));

  r.push_back(entry(
      "e2", "q (q^2;q^2)^3/(-q;q^2)^2 omega(-q) as divisor sums",
      [](const Params&, int w) { return (mono(q(1)) * w3()).apply(omega_neg(w)); },
      [](const Params&, int w) { return from_coeffs(w, e2_coeff_value); }));

  // ---- section 4 ----
  r.push_back(entry(
      "l31", "(q)^2/[1/b] sum (-b)^k q^(k(k+1)/2)/(1-bq^k), b formal",
      [](const Params&, int w) {
        return (qq(1).pow(2) / br({xq(-1, 0)}, 1)).apply(Lam().alt().ratio(xq(1, 0)).e(R(1, 2), R(1, 2)).den(xq(1, 0), 1).at(w));
      },
      [](const Params&, int w) {
        return -Lam().e(0, 1).pre(LaurentPoly::monomial(1, 1)).den(xq(1, 0), 1, 2).from(0).at(w) -
               Lam().e(0, 1, 1).pre(LaurentPoly::monomial(1, -1)).den(xq(-1, 1), 1, 2).from(0).at(w) +
               Lam().w(0, 1).alt().e(R(1, 2), R(1, 2)).den(q(0), 1).skip(0).at(w);
      },
      {Params{}}, "b", kOneMinusX * kOneMinusX));

  r.push_back(entry(
      "last11", "r = 1, s = 2 with a_1 = b b_1, b_1 = -q^m, b formal",
      [](const Params& p, int w) {
        const Monomial b1 = nq(P(p, "m"));
        const Product pr = br({xq(1, 0) * b1, b1 / xq(1, 0)}, 1) * qq(1).pow(2) / br({xq(1, 0), b1, b1}, 1);
        return expand(pr, w);
      },
      [](const Params& p, int w) {
        const int m = P(p, "m");
        const Monomial b1 = nq(m);
        const Product pre = mono(xq(-1, 0)) * br({xq(1, 0)}, 1) / br({b1}, 1);
        // (-b_1)^(k+1) = q^(m(k+1)). The second sum enters with a plus sign;
        // with a minus the two sides already differ at q^0.
        return Lam().alt().ratio(xq(1, 0)).e(R(1, 2), R(1, 2)).den(xq(1, 0), 1).at(w) +
               pre.apply(Lam().e(R(1, 2), R(1, 2) + Rational(m), m).den(b1, 1).at(w));
      },
      m_instances(), "b"));

  r.push_back(entry(
      "thirty", "second derivative in b_1 of the r = 1, s = 2 identity",
      [](const Params&, int w) {
        const Product first = pc(xq(1, 1), 1) * pc(xq(-1, 1), 1) / (pcn(xq(1, 0), 1, 1) * qq(1).pow(2));
        const PolarSum inner = eis2(1, 2, w) - Lam().e(0, 1).pre(LaurentPoly::monomial(1, 1)).den(xq(1, 0), 1, 2).from(1).at(w) -
                               Lam().e(0, 1).pre(LaurentPoly::monomial(1, -1)).den(xq(-1, 0), 1, 2).from(1).at(w);
        return expand(first, w) + (br({xq(-1, 0)}, 1) / qq(1).pow(2)).apply(inner);
      },
      [](const Params&, int w) {
        const PolarSum braces = Lam().alt().e(R(1, 2), R(1, 2)).den(q(0), 1, 2).skip(0).at(w) +
                                Lam().alt().e(R(1, 2), R(3, 2)).den(q(0), 1, 2).skip(0).at(w) +
                                Lam().w(0, 1).alt().e(R(1, 2), R(1, 2)).den(q(0), 1).skip(0).at(w);
        return Lam().alt().ratio(xq(1, 0)).e(R(1, 2), R(1, 2)).den(xq(1, 0), 1).at(w) +
               (mono(xq(-1, 0)) * br({xq(1, 0)}, 1) / qq(1).pow(2)).apply(braces);
      },
      {Params{}}, "b"));

  r.push_back(entry(
      "waston", "sum q^n/(1-q^n)^2 = -sum (-1)^n q^(n(n+1)/2)(1+q^n)/(1-q^n)^2",
      [](const Params&, int w) { return eis2(1, 1, w); },
      [](const Params&, int w) {
        return Lam().w(-1).alt().e(R(1, 2), R(1, 2)).den(q(0), 1, 2).from(1).at(w) +
               Lam().w(-1).alt().e(R(1, 2), R(3, 2)).den(q(0), 1, 2).from(1).at(w);
      }));

  r.push_back(entry(
      "ftonu", "F~(q) = -2 nu_2(q)",
      [](const Params&, int w) {
        return (qq(1) * pc(nq(1), 1).pow(2)).inverse().apply(Lam().e(R(1, 2), R(1, 2)).den(nq(0), 1).at(w));
      },
      [](const Params&, int w) {
        const PolarSum inner = Lam().w(0, -1).alt().e(R(1, 2), R(1, 2)).den(q(0), 1).skip(0).at(w) - cst(R(1, 4), w) -
                               Lam().w(2).e(0, 1).den(nq(0), 1, 2).from(1).at(w);
        return (mono(q(0, -2)) * qq(1).pow(-3)).apply(inner);
      }));

  r.push_back(entry(
      "r-identity", "q (q^4;q^4)^3 B(q) as Lambert series",
      [](const Params&, int w) { return (mono(q(1)) * qq(4).pow(3)).apply(mock(MockName::B, w)); },
      [](const Params&, int w) {
        return Lam().e(0, 4, 1).den(q(1), 4, 2).from(0).at(w) + Lam().e(0, 4, 3).den(q(3), 4, 2).from(0).at(w) -
               Lam().w(0, 1).alt().e(2, 2).den(q(0), 4).skip(0).at(w);
      }));

  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return r;
}

}  // namespace

const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> r = build_registry();
  return r;
}

}  // namespace qmock
