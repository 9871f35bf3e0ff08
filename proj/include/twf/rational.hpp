// Exact integer and rational scalar types.
//
// Thin value-semantic wrappers over GMP. Every quantity in this library is an
// exact rational; there is no floating point anywhere in the kernel.

#ifndef TWF_RATIONAL_HPP
#define TWF_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace twf {

/// Arbitrary-precision integer with value semantics.
class Integer {
public:
  Integer() { mpz_init(z_); }
  Integer(long v) { mpz_init_set_si(z_, v); }
  Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
  Integer(Integer&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  ~Integer() { mpz_clear(z_); }

  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }

  static Integer from_string(const std::string& s);
  static Integer factorial(unsigned long n);
  static Integer binomial(long n, long k);

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  int sgn() const { return mpz_sgn(z_); }

  Integer operator-() const;
  Integer operator+(const Integer& o) const;
  Integer operator-(const Integer& o) const;
  Integer operator*(const Integer& o) const;
  /// Exact division; the caller guarantees divisibility.
  Integer div_exact(const Integer& o) const;
  Integer gcd(const Integer& o) const;
  Integer lcm(const Integer& o) const;

  bool operator==(const Integer& o) const { return mpz_cmp(z_, o.z_) == 0; }
  bool operator!=(const Integer& o) const { return !(*this == o); }
  bool operator<(const Integer& o) const { return mpz_cmp(z_, o.z_) < 0; }

  long to_long() const { return mpz_get_si(z_); }
  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  std::string str() const;

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

private:
  mpz_t z_;
};

/// Exact rational number, always kept in canonical form (reduced, den > 0).
class Rational {
public:
  Rational() { mpq_init(q_); }
  Rational(long v) {
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(long num, long den);
  explicit Rational(const Integer& n);
  Rational(const Integer& num, const Integer& den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  /// Parses "p", "-p", or "p/q".
  static Rational from_string(const std::string& s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  int sgn() const { return mpq_sgn(q_); }

  Integer num() const;
  Integer den() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
  bool operator>(const Rational& o) const { return o < *this; }

  std::string str() const;

private:
  mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Integer& z);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace twf

#endif
