#include "qmock/lambert.hpp"

#include <algorithm>
#include <climits>

#include "qmock/error.hpp"

namespace qmock {

namespace {

bool in_range(const BilateralSpec& s, int k) {
  switch (s.range) {
    case BilateralSpec::Range::all:
      return true;
    case BilateralSpec::Range::all_except:
      return std::find(s.excluded.begin(), s.excluded.end(), k) == s.excluded.end();
    case BilateralSpec::Range::from:
      return k >= s.from;
  }
  return true;
}

Rational weight(const BilateralSpec& s, int k) { return s.alpha + s.beta * Rational(k); }

long exponent(const BilateralSpec& s, int k) {
  const Rational kk(k);
  const Rational e = s.A * kk * kk + s.B * kk + s.C;
  if (!e.is_integer()) throw Error("non-integral q-exponent at k = " + std::to_string(k));
  return *e.to_long() + static_cast<long>(s.ratio.qexp) * k;
}

// One regular term: coef q^start / (1 - u)^p, u.qexp > 0 (or no denominator).
struct Piece {
  LaurentPoly coef;
  long start;
  std::optional<Monomial> u;
  int p = 1;
};

long binom_weight(long j, int p) {
  // binom(j + p - 1, p - 1)
  long r = 1;
  for (int i = 1; i < p; ++i) r = r * (j + i) / i;
  return r;
}

}  // namespace

int summation_cutoff(const BilateralSpec& s, int order) {
  if (s.A.sign() < 0) throw Error("negative quadratic coefficient");
  const Rational b = abs(s.B + Rational(s.ratio.qexp));
  const Rational c = abs(s.C);
  if (s.A.is_zero()) {
    if (s.range != BilateralSpec::Range::from) throw Error("non-terminating sum");
    const Rational slope = s.B + Rational(s.ratio.qexp);
    if (slope.sign() <= 0) throw Error("non-terminating sum");
    // (slope) k + C >= order for k > K
    int k = std::max(s.from, 0);
    while (slope * Rational(k + 1) + s.C < Rational(order)) ++k;
    return k;
  }
  // A t^2 - |B'| t - |C| >= order for every t > K
  int t = 0;
  const Rational vertex = b / (Rational(2) * s.A);
  while (true) {
    const Rational tt(t + 1);
    if (tt >= vertex && s.A * tt * tt - b * tt - c >= Rational(order)) return t;
    ++t;
  }
}

std::vector<LaurentPoly> detect_q0_poles(const BilateralSpec& s) {
  std::vector<LaurentPoly> out;
  if (!s.denom || s.denom->b.xdeg == 0) return out;
  const auto& d = *s.denom;
  if (d.b.qexp % d.step != 0) return out;
  const int k = -d.b.qexp / d.step;
  if (!in_range(s, k) || weight(s, k).is_zero()) return out;
  const LaurentPoly bin = LaurentPoly(1) - d.b.x_part();
  LaurentPoly pp(1);
  for (int i = 0; i < d.power; ++i) pp = pp * bin;
  try {
    lp_exact_div(s.prefactor, pp);
    return out;
  } catch (const Error&) {
  }
  for (int i = 0; i < d.power; ++i) out.push_back(bin);
  return out;
}

PolarSum bilateral_sum(const BilateralSpec& s, int order, int extra_terms) {
  if (s.sign != 1 && s.sign != -1) throw Error("sign must be +1 or -1");
  if (s.denom && (s.denom->power < 1 || s.denom->power > 2)) throw Error("denominator power must be 1 or 2");
  const int K = summation_cutoff(s, order) + extra_terms;
  const int lo = s.range == BilateralSpec::Range::from ? s.from : -K;
  const int hi = std::max(lo, K);

  std::vector<Piece> pieces;
  PolarSum poles;
  for (int k = lo; k <= hi; ++k) {
    if (!in_range(s, k)) continue;
    const Rational w = weight(s, k);
    if (w.is_zero()) continue;
    long start = exponent(s, k);
    Rational c = w * pow(s.ratio.coeff, k);
    if (s.sign < 0 && (k % 2 != 0)) c = -c;
    LaurentPoly coef = s.prefactor * LaurentPoly::monomial(c, s.ratio.xdeg * k);
    if (!s.denom) {
      if (start < order) pieces.push_back({std::move(coef), start, std::nullopt, 1});
      continue;
    }
    const int p = s.denom->power;
    Monomial u = s.denom->b * Monomial::q(s.denom->step * k);
    if (u.qexp < 0) {
      // 1/(1-u)^p = (-u^-1)^p / (1-u^-1)^p
      const Monomial lead = (-u.inverse()).pow(p);
      coef = coef.shifted(lead.xdeg) * lead.coeff;
      start += lead.qexp;
      u = u.inverse();
    }
    if (u.qexp > 0) {
      if (start < order) pieces.push_back({std::move(coef), start, u, p});
      continue;
    }
    if (u.xdeg == 0) {
      if (u.coeff.is_one()) throw Error("exact pole at k = " + std::to_string(k));
      coef *= pow(Rational(1) - u.coeff, -p);
      if (start < order) pieces.push_back({std::move(coef), start, std::nullopt, 1});
      continue;
    }
    LaurentPoly bp(1);
    const LaurentPoly bin = LaurentPoly(1) - u.x_part();
    for (int i = 0; i < p; ++i) bp = bp * bin;
    try {
      coef = lp_exact_div(coef, bp);
      if (start < order) pieces.push_back({std::move(coef), start, std::nullopt, 1});
      continue;
    } catch (const Error&) {
    }
    const auto [unit, b] = split_binomial(u.coeff, u.xdeg);
    const Monomial inv = unit.pow(-p);
    coef = coef.shifted(inv.xdeg) * inv.coeff;
    const int at = static_cast<int>(std::min<long>(start, order - 1));
    QSeries ser(at, order);
    if (start < order) {
      std::vector<LaurentPoly> cs(static_cast<std::size_t>(order - start));
      cs[0] = coef;
      ser = QSeries(static_cast<int>(start), std::move(cs));
    }
    Polar term(std::move(ser));
    term.poles.assign(static_cast<std::size_t>(p), b);
    poles.add(std::move(term));
  }

  long v = 0;
  for (const auto& pc : pieces) v = std::min(v, pc.start);
  if (v < INT_MIN / 4) throw Error("valuation out of range");
  const bool x_free = std::all_of(pieces.begin(), pieces.end(), [](const Piece& pc) {
    return pc.coef.is_constant() && (!pc.u || pc.u->xdeg == 0);
  });
  const auto width = static_cast<std::size_t>(order - v);
  QSeries regular(static_cast<int>(v), order);
  if (x_free) {
    std::vector<Rational> acc(width);
    for (const auto& pc : pieces) {
      const Rational c0 = pc.coef.constant_value();
      if (!pc.u) {
        acc[static_cast<std::size_t>(pc.start - v)] += c0;
        continue;
      }
      Rational uj(1);
      for (long j = 0, e = pc.start; e < order; ++j, e += pc.u->qexp) {
        Rational t = c0 * uj;
        if (pc.p > 1) t *= Rational(binom_weight(j, pc.p));
        acc[static_cast<std::size_t>(e - v)] += t;
        uj *= pc.u->coeff;
      }
    }
    regular = QSeries::from_rationals(static_cast<int>(v), acc);
  } else {
    std::vector<LaurentPoly> acc(width);
    for (const auto& pc : pieces) {
      if (!pc.u) {
        acc[static_cast<std::size_t>(pc.start - v)] += pc.coef;
        continue;
      }
      Rational uj(1);
      for (long j = 0, e = pc.start; e < order; ++j, e += pc.u->qexp) {
        Rational t = uj;
        if (pc.p > 1) t *= Rational(binom_weight(j, pc.p));
        acc[static_cast<std::size_t>(e - v)].add_scaled(pc.coef, t, static_cast<int>(pc.u->xdeg * j));
        uj *= pc.u->coeff;
      }
    }
    regular = QSeries(static_cast<int>(v), std::move(acc));
  }
  PolarSum out{std::move(regular)};
  out += poles;
  return out;
}

}  // namespace qmock
