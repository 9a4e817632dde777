#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace su2cp {

using BigInt = mpz_class;

/// Exact rational number: always reduced to lowest terms, denominator > 0.
/// Backed by GMP; all arithmetic is exact. Conversion to double is the only
/// lossy operation and is explicit.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {} // NOLINT: implicit by design, mirrors integer literals
  explicit Rational(const BigInt& n) : q_(n) {}

  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.q_ = -q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  /// Integer power; negative exponents require a nonzero value.
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("Rational: negative power of zero");
      return inverse().pow(-e);
    }
    Rational r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r; // powers of a canonical fraction stay canonical
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(denominator(), numerator());
  }

  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace su2cp
