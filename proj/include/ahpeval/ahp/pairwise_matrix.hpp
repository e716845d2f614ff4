#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ahpeval/ahp/ratio.hpp"
#include "ahpeval/ahp/saaty.hpp"
#include "ahpeval/error.hpp"

namespace ahpeval::ahp {

struct UpperJudgment {
  PairIndex pair;
  SaatyJudgment value;
};

struct UpperEntry {
  PairIndex pair;
  Ratio value;
};

// Positive reciprocal comparison matrix. Only the strict upper triangle is
// stored; the diagonal is 1 and a_ji is the exact reciprocal of a_ij.
//
// `elicited()` matrices carry Saaty intensities only. Programmatic matrices
// (oracles, property tests) may hold any positive rational.
class PairwiseMatrix {
 public:
  // Builds from the complete strict upper triangle. Reports every missing
  // pair, rejects duplicates and out-of-range indices. When `elicited` is
  // true each value must be on the Saaty scale.
  static PairwiseMatrix from_entries(std::size_t n, std::span<const UpperEntry> entries,
                                     bool elicited, std::vector<std::string> labels = {});

  // Row-major strict upper triangle, n(n-1)/2 values.
  static PairwiseMatrix from_upper(std::vector<std::string> labels, std::vector<Ratio> upper,
                                   bool elicited);

  // a_ij = v_i / v_j; perfectly consistent by construction.
  static PairwiseMatrix consistent(std::span<const std::int64_t> priorities,
                                   std::vector<std::string> labels = {});

  static std::vector<std::string> default_labels(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool elicited() const noexcept { return elicited_; }
  const std::vector<Ratio>& upper() const noexcept { return upper_; }

  Ratio at(std::size_t i, std::size_t j) const;
  double value(std::size_t i, std::size_t j) const { return at(i, j).to_double(); }

  // Row-major n*n array of doubles.
  std::vector<double> dense() const;

  // Result row/column k is this matrix's row/column order[k].
  PairwiseMatrix permuted(std::span<const std::size_t> order) const;

  // Copy with a_ij (i != j) replaced; the reciprocal follows.
  PairwiseMatrix with_entry(std::size_t i, std::size_t j, const Ratio& value) const;

  static std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j);

  friend bool operator==(const PairwiseMatrix&, const PairwiseMatrix&) = default;

 private:
  PairwiseMatrix() = default;

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Ratio> upper_;
  bool elicited_ = false;
};

// Elicitation entry point: every value is a SaatyJudgment.
PairwiseMatrix build_matrix(std::size_t n, std::span<const UpperJudgment> upper_triangle,
                            std::vector<std::string> labels = {});

}  // namespace ahpeval::ahp
