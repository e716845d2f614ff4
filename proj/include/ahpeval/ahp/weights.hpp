#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/pairwise_matrix.hpp"

namespace ahpeval::ahp {

enum class WeightingMethod { kPrincipalEigenvector, kGeometricMeanRows };

std::string_view to_string(WeightingMethod method);
// Accepts "principal-eigenvector"/"eigenvector" and "geometric-mean-rows"/"geomean".
WeightingMethod parse_weighting_method(std::string_view text);

struct WeightVector {
  std::vector<double> weights;
  std::vector<std::string> labels;
  WeightingMethod method = WeightingMethod::kPrincipalEigenvector;

  std::size_t size() const noexcept { return weights.size(); }
  double sum() const noexcept;
  // Index of `label`, or size() when absent.
  std::size_t index_of(std::string_view label) const noexcept;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct EigenOptions {
  double tolerance = 1e-12;  // L-infinity change between iterates
  int max_iterations = 10000;
};

struct EigenResult {
  std::vector<double> vector;  // L1-normalized Perron vector
  double lambda_max = 0.0;
  int iterations = 0;
  // ||M w - lambda w||_inf / ||w||_inf at the returned w
  double residual = 0.0;
};

// Power iteration with L1 renormalization. Throws ConvergenceError when the
// cap is reached. lambda_max is the component mean of (M w)_i / w_i.
EigenResult principal_eigen(const PairwiseMatrix& m, const EigenOptions& options = {});

WeightVector derive_weights(const PairwiseMatrix& m,
                            WeightingMethod method = WeightingMethod::kPrincipalEigenvector);

double principal_eigenvalue(const PairwiseMatrix& m);

}  // namespace ahpeval::ahp
