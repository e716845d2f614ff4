#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ahpeval/ahp/pairwise_matrix.hpp"

namespace ahpeval::ahp {

inline constexpr double kDefaultConsistencyThreshold = 0.10;

// Expected consistency index of random reciprocal matrices, by order.
class RandomIndexTable {
 public:
  explicit RandomIndexTable(std::map<std::size_t, double> values) : values_(std::move(values)) {}

  // Orders 2..15; order 10 is 1.49.
  static const RandomIndexTable& saaty();

  bool contains(std::size_t n) const { return values_.contains(n); }
  // Throws Error(kUnsupportedOrder).
  double at(std::size_t n) const;
  const std::map<std::size_t, double>& values() const noexcept { return values_; }

 private:
  std::map<std::size_t, double> values_;
};

double random_index(std::size_t n);

struct JudgmentDeviation {
  std::size_t i = 0;
  std::size_t j = 0;
  double deviation = 0.0;  // |ln(a_ij w_j / w_i)|
  friend bool operator==(const JudgmentDeviation&, const JudgmentDeviation&) = default;
};

struct ConsistencyReport {
  std::size_t order = 0;
  double lambda_max = 0.0;
  double coi = 0.0;
  double roi = 0.0;
  std::optional<double> cor;  // empty when roi == 0
  double threshold = kDefaultConsistencyThreshold;
  bool acceptable = false;
  // Every i < j pair, descending deviation.
  std::vector<JudgmentDeviation> worst_judgments;

  friend bool operator==(const ConsistencyReport&, const ConsistencyReport&) = default;
};

ConsistencyReport consistency(const PairwiseMatrix& m,
                              const RandomIndexTable& table = RandomIndexTable::saaty(),
                              double threshold = kDefaultConsistencyThreshold);

}  // namespace ahpeval::ahp
