#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ahpeval/ahp/pairwise_matrix.hpp"

namespace gen {

inline ahpeval::ahp::SaatyJudgment saaty(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 16);
  return ahpeval::ahp::SaatyJudgment::all()[pick(rng)];
}

inline ahpeval::ahp::PairwiseMatrix random_saaty_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<ahpeval::ahp::UpperJudgment> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back({{i, j}, saaty(rng)});
  }
  return ahpeval::ahp::build_matrix(n, upper);
}

// Arbitrary positive rationals p/q with p, q in 1..max_term.
inline ahpeval::ahp::PairwiseMatrix random_rational_matrix(std::mt19937_64& rng, std::size_t n,
                                                           std::int64_t max_term = 50) {
  std::uniform_int_distribution<std::int64_t> term(1, max_term);
  std::vector<ahpeval::ahp::Ratio> upper;
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) upper.emplace_back(term(rng), term(rng));
  return ahpeval::ahp::PairwiseMatrix::from_upper(
      ahpeval::ahp::PairwiseMatrix::default_labels(n), std::move(upper), false);
}

inline std::vector<std::int64_t> random_priorities(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> term(1, 1000);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = term(rng);
  return v;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}


}  // namespace gen
