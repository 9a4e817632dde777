#pragma once

#include "su2cp/radical.hpp"
#include "su2cp/rational.hpp"

#include <vector>

namespace su2cp::hyper {

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

/// n! / (x! (n-x)!); throws std::domain_error unless 0 <= x <= n.
Rational binomial(long n, long x);

/// Terminating Gauss series 2F1(a, b; c; z) with a a nonpositive integer.
///
/// Evaluated by term-ratio accumulation: each term is the previous one times
/// (a+k-1)(b+k-1) / ((c+k-1) k) * z. A vanishing numerator factor truncates
/// the series (all later terms are zero); a vanishing denominator factor
/// against a nonzero numerator makes the series undefined and throws
/// std::domain_error.
Rational hyp2f1_terminating(long a, const Rational& b, const Rational& c, const Rational& z);

/// Terminating 3F2(a1, a2, a3; b1, b2; z) with a1 a nonpositive integer.
/// Same truncation and error rules as hyp2f1_terminating.
Rational hyp3f2_terminating(long a1, const Rational& a2, const Rational& a3,
                            const Rational& b1, const Rational& b2, const Rational& z);

namespace detail {
/// Shared kernel for the terminating series sum_{k=0}^{kmax} of
/// prod(upper)_k / (prod(lower)_k k!) z^k.
Rational terminating_series(const std::vector<Rational>& upper,
                            const std::vector<Rational>& lower,
                            const Rational& z, long kmax);
} // namespace detail

/// Arguments of a Krawtchouk polynomial value K_n(x; p, N).
struct KrawtchoukSpec {
  long degree;  ///< n >= 0
  long point;   ///< x >= 0
  Rational p;   ///< in (0, 1)
  long size;    ///< N >= 0

  KrawtchoukSpec(long n, long x, Rational p_, long N);
};

/// K_n(x; p, N) = 2F1(-n, -x; -N; 1/p), exact.
Rational krawtchouk(const KrawtchoukSpec& spec);
Rational krawtchouk(long n, long x, const Rational& p, long N);

/// binom(N,x) p^x (1-p)^x, with exponent x on both factors. This is the
/// weight the orthonormal functions and the spectral matrix are built from;
/// it does NOT satisfy the polynomial orthogonality relation.
Rational weight_printed(long x, const Rational& p, long N);

/// binom(N,x) p^x (1-p)^(N-x), the standard Krawtchouk weight; the
/// orthogonality relation holds with this one.
Rational weight_standard(long x, const Rational& p, long N);

/// Squared norm h(n, N) = (-1)^n n! / (-N)_n * ((1-p)/p)^n; strictly positive.
Rational norm_h(long n, const Rational& p, long N);

/// Orthonormal Krawtchouk function at p = 1/2 with the printed weight:
/// sign(K_n) * sqrt(w(x,N) K_n(x;1/2,N)^2 / h(n,N)).
Radical tilde_krawtchouk(long n, long x, long N);

} // namespace su2cp::hyper
