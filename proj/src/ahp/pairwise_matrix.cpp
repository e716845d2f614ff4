#include "ahpeval/ahp/pairwise_matrix.hpp"

#include <numeric>
#include <optional>

namespace ahpeval::ahp {

namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

std::size_t PairwiseMatrix::upper_index(std::size_t n, std::size_t i, std::size_t j) {
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::string> PairwiseMatrix::default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t k = 0; k < n; ++k) labels.push_back("C" + std::to_string(k + 1));
  return labels;
}

PairwiseMatrix PairwiseMatrix::from_upper(std::vector<std::string> labels,
                                          std::vector<Ratio> upper, bool elicited) {
  const std::size_t n = labels.size();
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a comparison matrix needs at least 2 criteria");
  }
  if (upper.size() != n * (n - 1) / 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "upper triangle of order " + std::to_string(n) + " needs " +
                    std::to_string(n * (n - 1) / 2) + " entries, got " +
                    std::to_string(upper.size()));
  }
  if (elicited) {
    for (const auto& v : upper) SaatyJudgment::from_ratio(v);
  }
  PairwiseMatrix m;
  m.n_ = n;
  m.labels_ = std::move(labels);
  m.upper_ = std::move(upper);
  m.elicited_ = elicited;
  return m;
}

PairwiseMatrix PairwiseMatrix::from_entries(std::size_t n, std::span<const UpperEntry> entries,
                                            bool elicited, std::vector<std::string> labels) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "a comparison matrix needs at least 2 criteria");
  }
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "label count does not match matrix order");
  }
  std::vector<std::optional<Ratio>> slots(n * (n - 1) / 2);
  for (const auto& e : entries) {
    const auto [i, j] = e.pair;
    if (!(i < j && j < n)) {
      throw Error(ErrorKind::kInvalidArgument,
                  "pair " + pair_text(i, j) + " is not in the strict upper triangle of order " +
                      std::to_string(n));
    }
    auto& slot = slots[upper_index(n, i, j)];
    if (slot) {
      throw Error(ErrorKind::kDuplicateJudgment, "duplicate judgment for pair " + pair_text(i, j));
    }
    if (elicited) SaatyJudgment::from_ratio(e.value);
    slot = e.value;
  }
  std::vector<PairIndex> missing;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!slots[upper_index(n, i, j)]) missing.push_back({i, j});
    }
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& p : missing) {
      if (!names.empty()) names += ", ";
      names += pair_text(p.i, p.j);
    }
    throw IncompleteMatrixError(missing, "incomplete matrix: missing " + names);
  }
  std::vector<Ratio> upper;
  upper.reserve(slots.size());
  for (auto& s : slots) upper.push_back(*s);
  return from_upper(std::move(labels), std::move(upper), elicited);
}

PairwiseMatrix PairwiseMatrix::consistent(std::span<const std::int64_t> priorities,
                                          std::vector<std::string> labels) {
  const std::size_t n = priorities.size();
  if (labels.empty()) labels = default_labels(n);
  std::vector<Ratio> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.emplace_back(priorities[i], priorities[j]);
  }
  return from_upper(std::move(labels), std::move(upper), false);
}

Ratio PairwiseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    throw Error(ErrorKind::kInvalidArgument, "index " + pair_text(i, j) + " out of range");
  }
  if (i == j) return Ratio(1);
  if (i < j) return upper_[upper_index(n_, i, j)];
  return upper_[upper_index(n_, j, i)].reciprocal();
}

std::vector<double> PairwiseMatrix::dense() const {
  std::vector<double> out(n_ * n_, 1.0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const auto& r = upper_[upper_index(n_, i, j)];
      out[i * n_ + j] = r.to_double();
      out[j * n_ + i] = r.reciprocal().to_double();
    }
  }
  return out;
}

PairwiseMatrix PairwiseMatrix::permuted(std::span<const std::size_t> order) const {
  if (order.size() != n_) {
    throw Error(ErrorKind::kInvalidArgument, "permutation size does not match matrix order");
  }
  std::vector<bool> seen(n_, false);
  for (auto k : order) {
    if (k >= n_ || seen[k]) throw Error(ErrorKind::kInvalidArgument, "not a permutation");
    seen[k] = true;
  }
  std::vector<std::string> labels;
  std::vector<Ratio> upper;
  for (auto k : order) labels.push_back(labels_[k]);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) upper.push_back(at(order[i], order[j]));
  }
  return from_upper(std::move(labels), std::move(upper), elicited_);
}

PairwiseMatrix PairwiseMatrix::with_entry(std::size_t i, std::size_t j, const Ratio& value) const {
  if (i == j || i >= n_ || j >= n_) {
    throw Error(ErrorKind::kInvalidArgument, "cannot set entry " + pair_text(i, j));
  }
  auto upper = upper_;
  if (i < j) {
    upper[upper_index(n_, i, j)] = value;
  } else {
    upper[upper_index(n_, j, i)] = value.reciprocal();
  }
  return from_upper(labels_, std::move(upper), elicited_);
}

PairwiseMatrix build_matrix(std::size_t n, std::span<const UpperJudgment> upper_triangle,
                            std::vector<std::string> labels) {
  std::vector<UpperEntry> entries;
  entries.reserve(upper_triangle.size());
  for (const auto& j : upper_triangle) entries.push_back({j.pair, j.value.value()});
  return PairwiseMatrix::from_entries(n, entries, true, std::move(labels));
}

}  // namespace ahpeval::ahp
