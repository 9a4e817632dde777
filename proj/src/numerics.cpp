#include "su2cp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace su2cp::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafeMin = std::numeric_limits<double>::min();

struct Sturm {
  const std::vector<double>* d;
  std::vector<double> e2;
  double pivmin;

  explicit Sturm(const SymTridiag& t) : d(&t.diagonal) {
    e2.reserve(t.offdiagonal.size());
    double e2max = 1.0;
    for (double v : t.offdiagonal) {
      e2.push_back(v * v);
      e2max = std::max(e2max, v * v);
    }
    pivmin = kSafeMin * e2max;
  }

  // Number of negative pivots of the shifted LDL^T recurrence; equals the
  // number of eigenvalues below sigma (up to ties at sigma itself, which
  // bisection tolerates).
  int count_below(double sigma) const {
    int count = 0;
    double q = 1.0;
    const std::size_t n = d->size();
    for (std::size_t i = 0; i < n; ++i) {
      q = (*d)[i] - sigma - (i > 0 ? e2[i - 1] / q : 0.0);
      if (std::abs(q) <= pivmin) q = -pivmin;
      if (q < 0.0) ++count;
    }
    return count;
  }
};

// Gershgorin interval enclosing the whole spectrum.
std::pair<double, double> spectrum_bounds(const SymTridiag& t) {
  const int n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.offdiagonal[i - 1]);
    if (i + 1 < n) r += std::abs(t.offdiagonal[i]);
    lo = std::min(lo, t.diagonal[i] - r);
    hi = std::max(hi, t.diagonal[i] + r);
  }
  const double pad = (hi - lo) * kEps * n + 2.0 * kSafeMin + 1e-30;
  return {lo - pad, hi + pad};
}

std::vector<double> bisect_eigenvalues(const Sturm& sturm, double lo, double hi,
                                       int n, double tol) {
  std::vector<double> lambda(n);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  for (int k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double width = b - a;
      if (width <= std::max(tol, 4.0 * kEps * scale)) break;
      const double mid = a + 0.5 * width;
      if (sturm.count_below(mid) >= k + 1)
        b = mid;
      else
        a = mid;
    }
    lambda[k] = 0.5 * (a + b);
  }
  return lambda;
}

// LU factorization of (T - lambda I) with partial pivoting; two
// superdiagonals of fill-in.
struct TriLU {
  std::vector<double> dl; // multipliers
  std::vector<double> dg; // pivots
  std::vector<double> du; // first superdiagonal
  std::vector<double> du2; // second superdiagonal (fill-in)
  std::vector<char> swapped;
  double pivmin;

  TriLU(const SymTridiag& t, double lambda, double pivmin_) : pivmin(pivmin_) {
    const int n = t.size();
    dg.resize(n);
    dl.assign(std::max(n - 1, 0), 0.0);
    du.assign(std::max(n - 1, 0), 0.0);
    du2.assign(std::max(n - 2, 0), 0.0);
    swapped.assign(std::max(n - 1, 0), 0);
    for (int i = 0; i < n; ++i) dg[i] = t.diagonal[i] - lambda;
    for (int i = 0; i + 1 < n; ++i) du[i] = t.offdiagonal[i];
    std::vector<double> sub(t.offdiagonal);

    for (int i = 0; i + 1 < n; ++i) {
      if (std::abs(dg[i]) >= std::abs(sub[i])) {
        double piv = dg[i];
        if (std::abs(piv) <= pivmin) piv = (piv < 0 ? -pivmin : pivmin);
        const double fact = sub[i] / piv;
        dg[i] = piv;
        dl[i] = fact;
        dg[i + 1] -= fact * du[i];
        if (i + 2 < n) du2[i] = 0.0;
      } else {
        const double fact = dg[i] / sub[i];
        dg[i] = sub[i];
        dl[i] = fact;
        const double tmp = du[i];
        du[i] = dg[i + 1];
        dg[i + 1] = tmp - fact * dg[i + 1];
        if (i + 2 < n) {
          du2[i] = du[i + 1];
          du[i + 1] = -fact * du[i + 1];
        }
        swapped[i] = 1;
      }
    }
  }

  void solve(std::vector<double>& b) const {
    const int n = static_cast<int>(dg.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl[i] * b[i];
    }
    auto safe_div = [this](double x, double piv) {
      if (std::abs(piv) <= pivmin) piv = (piv < 0 ? -pivmin : pivmin);
      return x / piv;
    };
    b[n - 1] = safe_div(b[n - 1], dg[n - 1]);
    if (n > 1) b[n - 2] = safe_div(b[n - 2] - du[n - 2] * b[n - 1], dg[n - 2]);
    for (int i = n - 3; i >= 0; --i)
      b[i] = safe_div(b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2], dg[i]);
  }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Deterministic starting vector (xorshift64), so repeated runs are
// byte-identical.
std::vector<double> start_vector(int n, std::uint64_t seed) {
  std::uint64_t s = seed * 0x9E3779B97F4A7C15ull + 1;
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    v[i] = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  const double nrm = norm2(v);
  for (double& x : v) x /= nrm;
  return v;
}

std::vector<double> tridiag_apply(const SymTridiag& t, const std::vector<double>& v) {
  const int n = t.size();
  std::vector<double> w(n, 0.0);
  for (int i = 0; i < n; ++i) {
    w[i] = t.diagonal[i] * v[i];
    if (i > 0) w[i] += t.offdiagonal[i - 1] * v[i - 1];
    if (i + 1 < n) w[i] += t.offdiagonal[i] * v[i + 1];
  }
  return w;
}

} // namespace

int sturm_count_below(const SymTridiag& t, double sigma) {
  return Sturm(t).count_below(sigma);
}

std::optional<EigenResult> eigh_tridiagonal(const SymTridiag& t, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("eigh_tridiagonal: tol must be positive");
  const int n = t.size();
  if (n == 1) {
    Matrix v(1, 1);
    v(0, 0) = 1.0;
    return EigenResult{{t.diagonal[0]}, std::move(v)};
  }

  const Sturm sturm(t);
  const auto [lo, hi] = spectrum_bounds(t);
  const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  const auto lambda = bisect_eigenvalues(sturm, lo, hi, n, tol);

  // Group near-degenerate eigenvalues; members of a group get perturbed
  // shifts and mutual reorthogonalization. Orthogonalizing across a gap g
  // only perturbs the residual by about eps*scale, so the grouping can be
  // generous.
  const double cluster_gap = std::max(1e-8, 1e-4 * scale);
  const double sep = 16.0 * kEps * scale;
  std::vector<int> cluster_start(n);
  std::vector<double> shift(lambda);
  cluster_start[0] = 0;
  for (int k = 1; k < n; ++k) {
    cluster_start[k] = (lambda[k] - lambda[k - 1] <= cluster_gap) ? cluster_start[k - 1] : k;
    if (shift[k] - shift[k - 1] < sep) shift[k] = shift[k - 1] + sep;
  }

  const double resid_tol = 10.0 * std::max(tol, 2.0 * kEps * scale * n);
  Matrix vectors(n, n);
  std::vector<std::vector<double>> accepted(n);

  for (int k = 0; k < n; ++k) {
    const TriLU lu(t, shift[k], sturm.pivmin);
    bool ok = false;
    std::vector<double> v;
    for (std::uint64_t attempt = 0; attempt < 3 && !ok; ++attempt) {
      v = start_vector(n, static_cast<std::uint64_t>(k) * 977 + attempt * 104729 + n);
      for (int it = 0; it < 8; ++it) {
        lu.solve(v);
        double nrm = norm2(v);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) break;
        for (double& x : v) x /= nrm;
        // reorthogonalize within the cluster
        for (int m = cluster_start[k]; m < k; ++m) {
          double dot = 0.0;
          for (int i = 0; i < n; ++i) dot += accepted[m][i] * v[i];
          for (int i = 0; i < n; ++i) v[i] -= dot * accepted[m][i];
        }
        nrm = norm2(v);
        if (nrm < 1e-3) break; // start vector lay in the accepted span; retry
        for (double& x : v) x /= nrm;

        const auto tv = tridiag_apply(t, v);
        double resid = 0.0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(tv[i] - lambda[k] * v[i]));
        if (resid <= resid_tol) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return std::nullopt;
    accepted[k] = std::move(v);
  }

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) vectors(i, k) = accepted[k][i];
  return EigenResult{lambda, std::move(vectors)};
}

} // namespace su2cp::numerics
