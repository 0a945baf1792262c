#include "qmock/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qmock/error.hpp"

namespace qmock {

namespace {

// Ordinary polynomial helpers on dense coefficient vectors (index = degree).
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
  Dense d;
  if (p.is_zero()) return d;
  const int lo = p.min_degree();
  d.resize(static_cast<std::size_t>(p.max_degree() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d, int low) {
  std::vector<LaurentPoly::Term> t;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) t.emplace_back(low + static_cast<int>(i), d[i]);
  }
  return LaurentPoly::from_terms(std::move(t));
}

// Remainder of a modulo b (b nonzero), in place on a.
void poly_rem(Dense& a, const Dense& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i].sub_product(f, b[i]);
    a.pop_back();
    trim(a);
  }
}

Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::monomial(const Rational& c, int d) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(d, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void LaurentPoly::add_term(int d, const Rational& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == d) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.emplace(it, d, c);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Rational& c, int d) {
  if (p.terms_.empty() || c.is_zero()) return;
  // One merge pass; existing coefficients are updated in place.
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  auto a = terms_.begin();
  for (const auto& [e, v] : p.terms_) {
    const int k = e + d;
    while (a != terms_.end() && a->first < k) out.push_back(std::move(*a++));
    if (a != terms_.end() && a->first == k) {
      a->second.add_product(v, c);
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
    } else {
      out.emplace_back(k, v * c);
    }
  }
  while (a != terms_.end()) out.push_back(std::move(*a++));
  terms_ = std::move(out);
}

Rational LaurentPoly::coeff(int d) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == d) return it->second;
  return Rational(0);
}

Rational LaurentPoly::constant_value() const {
  if (!is_constant()) throw Error("Laurent polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.emplace_back(terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentPoly::monomial(a.terms_[0].second * b.terms_[0].second,
                                 a.terms_[0].first + b.terms_[0].first);
  }
  LpAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

LaurentPoly LaurentPoly::shifted(int d) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += d;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) {
    if (e != 0) r.terms_.emplace_back(e - 1, c * Rational(e));
  }
  return r;
}

Rational LaurentPoly::evaluate(const Rational& v) const {
  Rational s;
  for (const auto& [e, c] : terms_) s += c * pow(v, e);
  return s;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) out += mag.str() + "*";
    out += "x";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly lp_exact_div(const LaurentPoly& p, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw Error("inexact Laurent division");
  if (p.is_zero()) return {};
  Dense num = to_dense(p);
  const Dense den = to_dense(divisor);
  // Both dense forms have a nonzero constant term, so divisibility in the
  // Laurent ring is divisibility of the ordinary polynomials.
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) throw Error("inexact Laurent division");
  Dense quot(num.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational f = num[k + dd] / den.back();
    quot[k] = f;
    for (std::size_t i = 0; i <= dd; ++i) num[k + i].sub_product(f, den[i]);
  }
  for (const auto& c : num) {
    if (!c.is_zero()) throw Error("inexact Laurent division");
  }
  return from_dense(quot, p.min_degree() - divisor.min_degree());
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Dense x = to_dense(a), y = to_dense(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    poly_rem(x, y);
    std::swap(x, y);
  }
  return from_dense(monic(std::move(x)), 0);
}

LaurentPoly lp_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const LaurentPoly g = lp_gcd(a, b);
  return lp_normalized(lp_exact_div(lp_normalized(a) * lp_normalized(b), g));
}

LaurentPoly lp_normalized(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  LaurentPoly r = a.shifted(-a.min_degree());
  return r * (Rational(1) / r.terms().back().second);
}

bool lp_associated(const LaurentPoly& a, const LaurentPoly& b) {
  return lp_normalized(a) == lp_normalized(b);
}

void LpAccumulator::reserve_range(int lo, int hi) {
  if (!used_) {
    low_ = lo;
    dense_.assign(static_cast<std::size_t>(hi - lo + 1), Rational());
    used_ = true;
    return;
  }
  if (lo < low_) {
    dense_.insert(dense_.begin(), static_cast<std::size_t>(low_ - lo), Rational());
    low_ = lo;
  }
  const int top = low_ + static_cast<int>(dense_.size()) - 1;
  if (hi > top) dense_.resize(dense_.size() + static_cast<std::size_t>(hi - top));
}

void LpAccumulator::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return;
  reserve_range(a.min_degree() + b.min_degree(), a.max_degree() + b.max_degree());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      dense_[static_cast<std::size_t>(ea + eb - low_)].add_product(ca, cb);
    }
  }
}

void LpAccumulator::add(const LaurentPoly& a) {
  if (a.is_zero()) return;
  reserve_range(a.min_degree(), a.max_degree());
  for (const auto& [e, c] : a.terms()) dense_[static_cast<std::size_t>(e - low_)] += c;
}

void LpAccumulator::sub(const LaurentPoly& a) {
  if (a.is_zero()) return;
  reserve_range(a.min_degree(), a.max_degree());
  for (const auto& [e, c] : a.terms()) dense_[static_cast<std::size_t>(e - low_)] -= c;
}

LaurentPoly LpAccumulator::take() {
  if (!used_) return {};
  LaurentPoly r = from_dense(dense_, low_);
  used_ = false;
  dense_.clear();
  return r;
}

}  // namespace qmock
