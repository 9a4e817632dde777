#include "su2cp/hyper.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace su2cp::hyper {

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw std::domain_error("pochhammer: negative length");
  Rational r = 1;
  Rational f = a;
  for (long i = 0; i < k; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

Rational binomial(long n, long x) {
  if (x < 0 || n < 0 || x > n)
    throw std::domain_error("binomial: require 0 <= x <= n");
  x = std::min(x, n - x);
  Rational r = 1;
  for (long i = 0; i < x; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

namespace detail {

Rational terminating_series(const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower,
                            const Rational& z, long kmax) {
  Rational sum = 1;
  Rational term = 1;
  for (long k = 1; k <= kmax; ++k) {
    Rational num = 1;
    for (const auto& u : upper) num *= u + Rational(k - 1);
    if (num.is_zero()) break; // all remaining terms vanish
    Rational den = Rational(k);
    for (const auto& l : lower) den *= l + Rational(k - 1);
    if (den.is_zero())
      throw std::domain_error("terminating series: zero Pochhammer in denominator "
                              "against nonzero numerator term at k=" + std::to_string(k));
    term *= num / den * z;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

} // namespace detail

Rational hyp2f1_terminating(long a, const Rational& b, const Rational& c, const Rational& z) {
  if (a > 0) throw std::invalid_argument("hyp2f1_terminating: a must be a nonpositive integer");
  return detail::terminating_series({Rational(a), b}, {c}, z, -a);
}

Rational hyp3f2_terminating(long a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& z) {
  if (a1 > 0) throw std::invalid_argument("hyp3f2_terminating: a1 must be a nonpositive integer");
  return detail::terminating_series({Rational(a1), a2, a3}, {b1, b2}, z, -a1);
}

KrawtchoukSpec::KrawtchoukSpec(long n, long x, Rational p_, long N)
    : degree(n), point(x), p(std::move(p_)), size(N) {
  if (N < 0) throw std::domain_error("KrawtchoukSpec: N must be nonnegative");
  if (n < 0 || n > N) throw std::domain_error("KrawtchoukSpec: require 0 <= n <= N");
  if (x < 0 || x > N) throw std::domain_error("KrawtchoukSpec: require 0 <= x <= N");
  if (!(p > Rational(0) && p < Rational(1)))
    throw std::domain_error("KrawtchoukSpec: require 0 < p < 1");
}

Rational krawtchouk(const KrawtchoukSpec& spec) {
  return hyp2f1_terminating(-spec.degree, Rational(-spec.point), Rational(-spec.size),
                            spec.p.inverse());
}

Rational krawtchouk(long n, long x, const Rational& p, long N) {
  return krawtchouk(KrawtchoukSpec(n, x, p, N));
}

namespace {

void check_weight_args(long x, const Rational& p, long N) {
  if (N < 0 || x < 0 || x > N) throw std::domain_error("weight: require 0 <= x <= N");
  if (!(p > Rational(0) && p < Rational(1)))
    throw std::domain_error("weight: require 0 < p < 1");
}

} // namespace

Rational weight_printed(long x, const Rational& p, long N) {
  check_weight_args(x, p, N);
  return binomial(N, x) * p.pow(x) * (Rational(1) - p).pow(x);
}

Rational weight_standard(long x, const Rational& p, long N) {
  check_weight_args(x, p, N);
  return binomial(N, x) * p.pow(x) * (Rational(1) - p).pow(N - x);
}

Rational norm_h(long n, const Rational& p, long N) {
  if (N < 0 || n < 0 || n > N) throw std::domain_error("norm_h: require 0 <= n <= N");
  if (!(p > Rational(0) && p < Rational(1)))
    throw std::domain_error("norm_h: require 0 < p < 1");
  Rational nf = pochhammer(1, n); // n!
  Rational sign = (n % 2 == 0) ? 1 : -1;
  return sign * nf / pochhammer(Rational(-N), n) * ((Rational(1) - p) / p).pow(n);
}

Radical tilde_krawtchouk(long n, long x, long N) {
  const Rational half(1, 2);
  Rational k = krawtchouk(n, x, half, N);
  Rational sq = weight_printed(x, half, N) * k * k / norm_h(n, half, N);
  return Radical(k.sign(), sq);
}

} // namespace su2cp::hyper
