#include "qmock/rational.hpp"

#include <limits>
#include <stdexcept>

namespace qmock {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class v;
  if (v.set_str(s, 10) != 0 || v.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  v.canonicalize();
  return Rational(v);
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) return std::nullopt;
  return q_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_integer() && b.is_integer() && is_integer()) {
    mpz_addmul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
    return;
  }
  q_ += a.q_ * b.q_;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_integer() && b.is_integer() && is_integer()) {
    mpz_submul(q_.get_num_mpz_t(), a.q_.get_num_mpz_t(), b.q_.get_num_mpz_t());
    return;
  }
  q_ -= a.q_ * b.q_;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (r.is_zero()) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(r, -e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

}  // namespace qmock
