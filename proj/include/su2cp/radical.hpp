#pragma once

#include "su2cp/rational.hpp"

#include <cmath>
#include <optional>

namespace su2cp {

/// Exact representation of the real number sign * sqrt(square), where square
/// is a nonnegative rational and sign is -1, 0 or +1 (0 exactly when square
/// is 0). Products and equality comparisons are exact; sums of radicals with
/// distinct radicands are not representable and are not offered.
class Radical {
public:
  Radical() : sign_(0), square_(0) {}

  Radical(int sign, Rational square) : sign_(sign), square_(std::move(square)) {
    if (square_.sign() < 0) throw std::domain_error("Radical: negative square");
    if (square_.is_zero()) {
      sign_ = 0;
    } else if (sign_ != 1 && sign_ != -1) {
      throw std::invalid_argument("Radical: sign must be +1 or -1 for a nonzero square");
    }
  }

  /// +sqrt(r); r must be >= 0.
  static Radical sqrt_of(const Rational& r) { return Radical(r.sign() > 0 ? 1 : 0, r); }

  /// Embeds a rational q as sign(q) * sqrt(q^2).
  static Radical of_rational(const Rational& q) { return Radical(q.sign(), q * q); }

  /// 2^(h/2), h any integer (so h=2 is 2, h=-1 is 1/sqrt(2)).
  static Radical half_power_of_two(long h) { return Radical(1, Rational(2).pow(h)); }

  int sign() const { return sign_; }
  const Rational& square() const { return square_; }
  bool is_zero() const { return sign_ == 0; }

  Radical operator-() const { return Radical(-sign_, square_); }

  friend Radical operator*(const Radical& a, const Radical& b) {
    return Radical(a.sign_ * b.sign_, a.square_ * b.square_);
  }
  friend Radical operator*(const Radical& a, const Rational& q) {
    return a * of_rational(q);
  }
  friend Radical operator*(const Rational& q, const Radical& a) { return a * q; }

  friend bool operator==(const Radical& a, const Radical& b) {
    return a.sign_ == b.sign_ && a.square_ == b.square_;
  }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

  /// Exact rational value, when the square is a perfect square of a rational.
  std::optional<Rational> to_rational() const {
    if (sign_ == 0) return Rational(0);
    BigInt num = square_.numerator();
    BigInt den = square_.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational v(sn, sd);
    return sign_ < 0 ? -v : v;
  }

  /// The single rounding site: sign * sqrt(num/den) in 64-bit floating point.
  double to_double() const {
    if (sign_ == 0) return 0.0;
    return sign_ * std::sqrt(square_.to_double());
  }

  friend std::ostream& operator<<(std::ostream& os, const Radical& r) {
    if (r.sign_ == 0) return os << "0";
    return os << (r.sign_ < 0 ? "-" : "") << "sqrt(" << r.square_ << ")";
  }

private:
  int sign_;
  Rational square_;
};

} // namespace su2cp
