#include "twf/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace twf {

Integer Integer::from_string(const std::string& s) {
  Integer r;
  if (mpz_set_str(r.z_, s.c_str(), 10) != 0)
    throw std::invalid_argument("not an integer: " + s);
  return r;
}

Integer Integer::factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.z_, n);
  return r;
}

Integer Integer::binomial(long n, long k) {
  Integer r(0);
  if (k < 0 || n < 0 || k > n) return r;
  mpz_bin_uiui(r.z_, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer Integer::operator-() const {
  Integer r;
  mpz_neg(r.z_, z_);
  return r;
}

Integer Integer::operator+(const Integer& o) const {
  Integer r;
  mpz_add(r.z_, z_, o.z_);
  return r;
}

Integer Integer::operator-(const Integer& o) const {
  Integer r;
  mpz_sub(r.z_, z_, o.z_);
  return r;
}

Integer Integer::operator*(const Integer& o) const {
  Integer r;
  mpz_mul(r.z_, z_, o.z_);
  return r;
}

Integer Integer::div_exact(const Integer& o) const {
  Integer r;
  mpz_divexact(r.z_, z_, o.z_);
  return r;
}

Integer Integer::gcd(const Integer& o) const {
  Integer r;
  mpz_gcd(r.z_, z_, o.z_);
  return r;
}

Integer Integer::lcm(const Integer& o) const {
  Integer r;
  mpz_lcm(r.z_, z_, o.z_);
  return r;
}

std::string Integer::str() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const Integer& n) {
  mpq_init(q_);
  mpq_set_z(q_, n.raw());
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  mpq_init(q_);
  mpq_set_z(q_, num.raw());
  mpq_t d;
  mpq_init(d);
  mpq_set_z(d, den.raw());
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational Rational::from_string(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: " + s);
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  mpq_canonicalize(r.q_);
  return r;
}

Integer Rational::num() const {
  Integer r;
  mpz_set(r.raw(), mpq_numref(q_));
  return r;
}

Integer Rational::den() const {
  Integer r;
  mpz_set(r.raw(), mpq_denref(q_));
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  mpq_add(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator-(const Rational& o) const {
  Rational r;
  mpq_sub(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator*(const Rational& o) const {
  Rational r;
  mpq_mul(r.q_, q_, o.q_);
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  Rational r;
  mpq_div(r.q_, q_, o.q_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_, q_, o.q_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_, q_, o.q_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_, q_, o.q_);
  return *this;
}

std::string Rational::str() const {
  Integer n = num(), d = den();
  if (mpz_cmp_si(d.raw(), 1) == 0) return n.str();
  return n.str() + "/" + d.str();
}

std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << z.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace twf
