#include "ahpeval/ahp/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ahpeval/error.hpp"

namespace ahpeval::ahp {

std::string_view to_string(WeightingMethod method) {
  switch (method) {
    case WeightingMethod::kPrincipalEigenvector: return "principal-eigenvector";
    case WeightingMethod::kGeometricMeanRows: return "geometric-mean-rows";
  }
  return "unknown";
}

WeightingMethod parse_weighting_method(std::string_view text) {
  if (text == "principal-eigenvector" || text == "eigenvector" || text == "eigen") {
    return WeightingMethod::kPrincipalEigenvector;
  }
  if (text == "geometric-mean-rows" || text == "geomean" || text == "geometric-mean") {
    return WeightingMethod::kGeometricMeanRows;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown weighting method '" + std::string(text) + "'");
}

double WeightVector::sum() const noexcept {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

std::size_t WeightVector::index_of(std::string_view label) const noexcept {
  const auto it = std::find(labels.begin(), labels.end(), label);
  return static_cast<std::size_t>(it - labels.begin());
}

namespace {

void multiply(const std::vector<double>& a, std::size_t n, const std::vector<double>& x,
              std::vector<double>& y) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = a.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void normalize_l1(std::vector<double>& v) {
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (auto& x : v) x /= s;
}

}  // namespace

EigenResult principal_eigen(const PairwiseMatrix& m, const EigenOptions& options) {
  const std::size_t n = m.order();
  const auto a = m.dense();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);

  int iterations = 0;
  double change = 0.0;
  bool converged = false;
  while (iterations < options.max_iterations) {
    multiply(a, n, w, next);
    normalize_l1(next);
    ++iterations;
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - w[i]));
    w.swap(next);
    if (change < options.tolerance) {
      converged = true;
      break;
    }
  }

  multiply(a, n, w, next);
  double lambda = 0.0;
  for (std::size_t i = 0; i < n; ++i) lambda += next[i] / w[i];
  lambda /= static_cast<double>(n);

  double residual = 0.0;
  double w_inf = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual = std::max(residual, std::abs(next[i] - lambda * w[i]));
    w_inf = std::max(w_inf, std::abs(w[i]));
  }
  residual /= w_inf;

  if (!converged) {
    throw ConvergenceError(iterations, residual,
                           "power iteration did not converge after " +
                               std::to_string(iterations) + " iterations (residual " +
                               std::to_string(residual) + ")");
  }

  // lambda_max >= n for positive reciprocal matrices; anything below is
  // rounding on a consistent matrix.
  const double order = static_cast<double>(n);
  if (lambda < order && order - lambda < 1e-12 * order) lambda = order;

  return EigenResult{std::move(w), lambda, iterations, residual};
}

WeightVector derive_weights(const PairwiseMatrix& m, WeightingMethod method) {
  WeightVector out;
  out.labels = m.labels();
  out.method = method;
  if (method == WeightingMethod::kPrincipalEigenvector) {
    out.weights = principal_eigen(m).vector;
    return out;
  }
  const std::size_t n = m.order();
  out.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double log_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto r = m.at(i, j);
      log_sum += std::log(static_cast<double>(r.num())) - std::log(static_cast<double>(r.den()));
    }
    out.weights[i] = std::exp(log_sum / static_cast<double>(n));
  }
  normalize_l1(out.weights);
  return out;
}

double principal_eigenvalue(const PairwiseMatrix& m) { return principal_eigen(m).lambda_max; }

}  // namespace ahpeval::ahp
