#pragma once

// Test-only reference computations, independent of the library's solvers.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<long double>>;

// Characteristic polynomial coefficients of A via Faddeev-LeVerrier:
// det(xI - A) = x^n + c[1] x^(n-1) + ... + c[n].
inline std::vector<long double> characteristic_polynomial(const Dense& a) {
  const std::size_t n = a.size();
  std::vector<long double> c(n + 1, 0.0L);
  c[0] = 1.0L;
  Dense m(n, std::vector<long double>(n, 0.0L));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I
    Dense next(n, std::vector<long double>(n, 0.0L));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long double acc = 0.0L;
        for (std::size_t l = 0; l < n; ++l) acc += a[i][l] * m[l][j];
        next[i][j] = acc + (i == j ? c[k - 1] : 0.0L);
      }
    }
    m = next;
    long double trace = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[k] = -trace / static_cast<long double>(k);
  }
  return c;
}

inline long double evaluate(const std::vector<long double>& c, long double x) {
  long double acc = 0.0L;
  for (auto coefficient : c) acc = acc * x + coefficient;
  return acc;
}

// Largest real root of det(xI - A): scan down from the max row sum (an
// upper bound on the spectral radius) for the first sign change, then
// bisect.
inline long double dominant_root(const Dense& a) {
  const auto c = characteristic_polynomial(a);
  long double hi = 0.0L;
  for (const auto& row : a) {
    long double s = 0.0L;
    for (auto v : row) s += v;
    hi = std::max(hi, s);
  }
  hi += 1.0L;
  const int scan = 200000;
  const long double step = hi / scan;
  long double upper = hi;
  long double lower = hi - step;
  const bool positive_above = evaluate(c, hi) > 0.0L;
  while (lower > 0.0L && (evaluate(c, lower) > 0.0L) == positive_above) {
    upper = lower;
    lower -= step;
  }
  for (int k = 0; k < 200; ++k) {
    const long double mid = 0.5L * (lower + upper);
    if ((evaluate(c, mid) > 0.0L) == positive_above) {
      upper = mid;
    } else {
      lower = mid;
    }
  }
  return 0.5L * (lower + upper);
}

// Closed form for 3x3 reciprocal matrices: with t = a12 a23 / a13,
// lambda_max = 1 + t^(1/3) + t^(-1/3).
inline double lambda_max_3x3(double a12, double a13, double a23) {
  const double t = a12 * a23 / a13;
  return 1.0 + std::cbrt(t) + 1.0 / std::cbrt(t);
}

inline double dot(const std::vector<double>& w, const std::vector<double>& s) {
  double acc = 0.0;
  for (std::size_t k = 0; k < w.size(); ++k) acc += w[k] * s[k];
  return acc;
}

// Under the proportional rule the composite gap between two alternatives
// (score differences d) is affine in delta:
//   G(delta) = (w_t + delta) d_t + (1 - w_t - delta) / (1 - w_t) * R,
//   R = sum_{i != t} w_i d_i.
// Returns the root delta*, or NaN when G is constant.
inline double affine_crossing(const std::vector<double>& w, const std::vector<double>& d,
                              std::size_t t) {
  double rest = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != t) rest += w[i] * d[i];
  }
  const double slope = d[t] - rest / (1.0 - w[t]);
  const double intercept = w[t] * d[t] + rest;
  if (slope == 0.0) return std::nan("");
  return -intercept / slope;
}

}  // namespace oracle
