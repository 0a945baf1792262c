#include "qmock/mockforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qmock/error.hpp"
#include "qmock/lambert.hpp"
#include "qmock/products.hpp"

namespace qmock {

namespace {

QSeries one(int order) { return QSeries::constant(LaurentPoly(1), order); }

// sum q^(n^2) / (-q; q)_n^2, term n = term (n-1) q^(2n-1) / (1 + q^n)^2
QSeries f_eulerian(int order) {
  QSeries sum = one(order);
  QSeries term = one(order);
  for (int n = 1; n * n < order; ++n) {
    term.mul_monomial(Monomial::q(2 * n - 1));
    term.div_one_minus(Monomial::q(n, -1), 2);
    sum += term.truncated(order);
  }
  return sum.truncated(order);
}

// sum q^(2n(n+1)) / (q; q^2)_(n+1)^2
QSeries omega_eulerian(int order) {
  QSeries term = one(order);
  term.div_one_minus(Monomial::q(1), 2);
  QSeries sum = term;
  for (int n = 1; 2 * n * (n + 1) < order; ++n) {
    term.mul_monomial(Monomial::q(4 * n));
    term.div_one_minus(Monomial::q(2 * n + 1), 2);
    sum += term.truncated(order);
  }
  return sum.truncated(order);
}

// sum q^n (-q; q^2)_n / (q; q^2)_(n+1)
QSeries b_eulerian(int order) {
  QSeries term = one(order);
  term.div_one_minus(Monomial::q(1));
  QSeries sum = term;
  for (int n = 1; n < order; ++n) {
    term.mul_monomial(Monomial::q(1));
    term.mul_one_minus(Monomial::q(2 * n - 1, -1));
    term.div_one_minus(Monomial::q(2 * n + 1));
    sum += term.truncated(order);
  }
  return sum.truncated(order);
}

QSeries regular(const PolarSum& s) {
  if (s.terms().size() != 1 || !s.terms()[0].poles.empty()) throw Error("unexpected pole");
  const auto& t = s.terms()[0];
  return t.ser * t.zeros;
}

BilateralSpec spec(int sign, Rational A, Rational B, Rational C) {
  BilateralSpec s;
  s.sign = sign;
  s.A = A;
  s.B = B;
  s.C = C;
  return s;
}

// (1/(q)^3) (sum_{n != 0} (-1)^(n+1) n q^(n(n+1)/2) / (1 - q^n) - 1/4 - 2 sum q^n/(1+q^n)^2)
QSeries nu2_series(int order) {
  const int w = order + 2;
  BilateralSpec a = spec(-1, Rational(1, 2), Rational(1, 2), 0);
  a.alpha = 0;
  a.beta = -1;
  a.range = BilateralSpec::Range::all_except;
  a.excluded = {0};
  a.denom = LambertDenom{Monomial::q(0), 1, 1};
  BilateralSpec e = spec(1, 0, 1, 0);
  e.range = BilateralSpec::Range::from;
  e.from = 1;
  e.denom = LambertDenom{Monomial::q(0, -1), 1, 2};
  QSeries inner = regular(bilateral_sum(a, w)) - QSeries::constant(LaurentPoly(Rational(1, 4)), w) -
                  regular(bilateral_sum(e, w)) * LaurentPoly(2);
  const Product p = Product::poch(Monomial::q(1)).pow(-3);
  return regular(p * inner).truncated(order);
}

// 1/((q)(-q)^2) sum q^(n(n+1)/2) / (1 + q^n)
QSeries ftilde_series(int order) {
  BilateralSpec s = spec(1, Rational(1, 2), Rational(1, 2), 0);
  s.denom = LambertDenom{Monomial::q(0, -1), 1, 1};
  const Product p = (Product::poch(Monomial::q(1)) * Product::poch(Monomial::q(1, -1)).pow(2)).inverse();
  return regular(p * regular(bilateral_sum(s, order))).truncated(order);
}

}  // namespace

std::string_view mock_name_str(MockName n) {
  switch (n) {
    case MockName::f: return "f";
    case MockName::omega: return "omega";
    case MockName::B: return "B";
    case MockName::nu2: return "nu2";
    case MockName::Ftilde: return "Ftilde";
    case MockName::omegaEven: return "omegaEven";
    case MockName::omegaOdd: return "omegaOdd";
  }
  return "?";
}

MockName parse_mock_name(std::string_view s) {
  for (MockName n : {MockName::f, MockName::omega, MockName::B, MockName::nu2, MockName::Ftilde,
                     MockName::omegaEven, MockName::omegaOdd}) {
    if (mock_name_str(n) == s) return n;
  }
  throw Error("unknown function '" + std::string(s) + "'");
}

QSeries eulerian_series(MockName name, int order) {
  if (order < 1) throw Error("order must be positive");
  switch (name) {
    case MockName::f: return f_eulerian(order);
    case MockName::omega: return omega_eulerian(order);
    case MockName::B: return b_eulerian(order);
    case MockName::nu2: return nu2_series(order);
    case MockName::Ftilde: return ftilde_series(order);
    case MockName::omegaEven: return parity_part(omega_eulerian(order), Parity::even);
    case MockName::omegaOdd: return parity_part(omega_eulerian(order), Parity::odd);
  }
  throw Error("unknown function");
}

QSeries appell_form(MockName name, int order) {
  if (order < 1) throw Error("order must be positive");
  switch (name) {
    case MockName::f: {
      // (2/(q)_inf) sum (-1)^n q^(n(3n+1)/2) / (1 + q^n)
      BilateralSpec s = spec(-1, Rational(3, 2), Rational(1, 2), 0);
      s.denom = LambertDenom{Monomial::q(0, -1), 1, 1};
      const Product p = Product::poch(Monomial::q(1)).inverse() * Monomial::q(0, 2);
      return regular(p * regular(bilateral_sum(s, order)));
    }
    case MockName::omega: {
      // (1/(q^2;q^2)_inf) sum (-1)^n q^(3n^2+3n) / (1 - q^(2n+1))
      BilateralSpec s = spec(-1, 3, 3, 0);
      s.denom = LambertDenom{Monomial::q(1), 2, 1};
      return regular(Product::poch(Monomial::q(2), 2).inverse() * regular(bilateral_sum(s, order)));
    }
    case MockName::B: {
      // (1/(q,q^3,q^4;q^4)_inf) sum (-1)^n q^(n(2n+3)) / (1 - q^(4n+1))
      BilateralSpec s = spec(-1, 2, 3, 0);
      s.denom = LambertDenom{Monomial::q(1), 4, 1};
      const Product p = (Product::poch(Monomial::q(1), 4) * Product::poch(Monomial::q(3), 4) *
                         Product::poch(Monomial::q(4), 4))
                            .inverse();
      return regular(p * regular(bilateral_sum(s, order)));
    }
    default:
      throw Error("no Appell-Lerch form for " + std::string(mock_name_str(name)));
  }
}

QSeries parity_part(const QSeries& a, Parity parity) {
  if (!a.is_x_free()) throw Error("parity of bivariate series undefined");
  std::vector<LaurentPoly> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int n = a.valuation() + static_cast<int>(i);
    const bool even = n % 2 == 0;
    if (even != (parity == Parity::even)) c[i] = LaurentPoly();
  }
  return {a.valuation(), std::move(c)};
}

QSeries negate_q(const QSeries& a) {
  std::vector<LaurentPoly> c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((a.valuation() + static_cast<int>(i)) % 2 != 0) c[i] = -c[i];
  }
  return {a.valuation(), std::move(c)};
}

namespace {

struct Cache {
  std::mutex mu;
  std::map<MockName, std::shared_ptr<const std::vector<Rational>>> tables;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

std::shared_ptr<const std::vector<Rational>> coefficient_table(MockName name, int count) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& t = c.tables[name];
  const int have = t ? static_cast<int>(t->size()) : 0;
  if (have < count) {
    const int grow = std::max({count, 2 * have, 64});
    const QSeries s = eulerian_series(name, grow);
    std::vector<Rational> v(static_cast<std::size_t>(grow));
    for (int n = 0; n < grow; ++n) v[static_cast<std::size_t>(n)] = s.coeff(n).constant_value();
    t = std::make_shared<const std::vector<Rational>>(std::move(v));
  }
  return t;
}

Rational coeff_c(MockName name, const Rational& n) {
  if (!n.is_integer() || n.sign() < 0) return Rational(0);
  const long k = *n.to_long();
  const auto t = coefficient_table(name, static_cast<int>(k) + 1);
  return (*t)[static_cast<std::size_t>(k)];
}

}  // namespace qmock
