#include "qmock/gls.hpp"

#include "qmock/error.hpp"
#include "qmock/lambert.hpp"
#include "qmock/products.hpp"

namespace qmock {

bool bracket_vanishes(const Monomial& b, int base) {
  return b.coeff.is_one() && b.xdeg == 0 && b.qexp % base == 0;
}

std::string GlsInstance::str() const {
  std::string out = "base=" + std::to_string(base) + " a=(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ", " : "") + a[i].str();
  out += ") b=(";
  for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + b[i].str();
  return out + ")";
}

namespace {

void check_shape(const GlsInstance& inst) {
  if (inst.base < 1) throw Error("base must be positive");
  if (inst.r() >= inst.s()) throw Error("requires r < s");
  if (inst.s() > 6) throw Error("at most 6 denominator parameters");
}

void check_lhs(const GlsInstance& inst) {
  for (const Monomial& b : inst.b) {
    if (bracket_vanishes(b, inst.base)) throw Error("degenerate parameter configuration");
  }
}

void check_rhs(const GlsInstance& inst) {
  for (int i = 0; i < inst.s(); ++i) {
    for (int j = 0; j < inst.s(); ++j) {
      if (i != j && bracket_vanishes(inst.b[j] / inst.b[i], inst.base)) {
        throw Error("degenerate parameter configuration");
      }
    }
  }
}

}  // namespace

void validate_gls(const GlsInstance& inst) {
  check_shape(inst);
  check_lhs(inst);
  check_rhs(inst);
}

PolarSum build_gls_lhs(const GlsInstance& inst, int order) {
  check_shape(inst);
  check_lhs(inst);
  const int B = inst.base;
  const Product p = Product::bracket(inst.a, B) * Product::poch(Monomial::q(B), B).pow(2) /
                    Product::bracket(inst.b, B);
  return p.apply(PolarSum(QSeries::constant(LaurentPoly(1), order)));
}

PolarSum build_gls_rhs(const GlsInstance& inst, int order) {
  validate_gls(inst);
  const int B = inst.base;
  const int d = inst.s() - inst.r();
  Monomial prod_a;
  for (const Monomial& a : inst.a) prod_a = prod_a * a;

  PolarSum total;
  for (int i = 0; i < inst.s(); ++i) {
    const Monomial& bi = inst.b[i];
    std::vector<Monomial> num;
    for (const Monomial& a : inst.a) num.push_back(a / bi);
    std::vector<Monomial> den;
    Monomial others;
    for (int j = 0; j < inst.s(); ++j) {
      if (j == i) continue;
      den.push_back(inst.b[j] / bi);
      others = others * inst.b[j];
    }
    const Product pre = Product::bracket(num, B) / Product::bracket(den, B);
    if (pre.vanishes()) continue;

    BilateralSpec spec;
    spec.sign = d % 2 == 0 ? 1 : -1;
    spec.A = Rational(B * d, 2);
    spec.B = Rational(B * d, 2);
    spec.ratio = prod_a * bi.pow(d - 1) / others;
    spec.denom = LambertDenom{bi, B, 1};
    PolarSum sum;
    try {
      sum = bilateral_sum(spec, order);
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " (idem term " + std::to_string(i + 1) + ")");
    }
    total += pre.apply(sum);
  }
  return total;
}

}  // namespace qmock
