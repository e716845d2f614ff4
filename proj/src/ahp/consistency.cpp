#include "ahpeval/ahp/consistency.hpp"

#include <algorithm>
#include <cmath>

#include "ahpeval/ahp/weights.hpp"

namespace ahpeval::ahp {

const RandomIndexTable& RandomIndexTable::saaty() {
  static const RandomIndexTable table({
      {2, 0.00},  {3, 0.58},  {4, 0.90},  {5, 1.12},  {6, 1.24},  {7, 1.32},  {8, 1.41},
      {9, 1.45},  {10, 1.49}, {11, 1.51}, {12, 1.54}, {13, 1.56}, {14, 1.57}, {15, 1.58},
  });
  return table;
}

double RandomIndexTable::at(std::size_t n) const {
  const auto it = values_.find(n);
  if (it == values_.end()) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "no random index for matrix order " + std::to_string(n));
  }
  return it->second;
}

double random_index(std::size_t n) { return RandomIndexTable::saaty().at(n); }

ConsistencyReport consistency(const PairwiseMatrix& m, const RandomIndexTable& table,
                              double threshold) {
  const std::size_t n = m.order();
  ConsistencyReport report;
  report.order = n;
  report.threshold = threshold;
  report.roi = table.at(n);

  const auto eigen = principal_eigen(m);
  report.lambda_max = eigen.lambda_max;
  report.coi = (eigen.lambda_max - static_cast<double>(n)) / static_cast<double>(n - 1);
  if (report.roi > 0.0) {
    report.cor = report.coi / report.roi;
    report.acceptable = *report.cor <= threshold;
  } else {
    report.acceptable = report.coi <= 1e-9;
  }

  const auto& w = eigen.vector;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = m.at(i, j);
      const double log_a =
          std::log(static_cast<double>(r.num())) - std::log(static_cast<double>(r.den()));
      const double d = std::abs(log_a + std::log(w[j]) - std::log(w[i]));
      report.worst_judgments.push_back({i, j, d});
    }
  }
  std::stable_sort(report.worst_judgments.begin(), report.worst_judgments.end(),
                   [](const JudgmentDeviation& a, const JudgmentDeviation& b) {
                     return a.deviation > b.deviation;
                   });
  return report;
}

}  // namespace ahpeval::ahp
