#pragma once

#include <string>
#include <vector>

#include "ahpeval/ahp/pairwise_matrix.hpp"
#include "ahpeval/criteria/criteria.hpp"

namespace replies {

// Renders a model reply carrying the full upper triangle of `m` in the
// judgment block, with some chatter around it.
inline std::string from_matrix(const ahpeval::ahp::PairwiseMatrix& m,
                               const ahpeval::criteria::CriteriaSet& set,
                               const std::string& voice = "panel") {
  std::string out = "Reasoning summarized per pair.\n\nBEGIN JUDGMENTS\n";
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      out += set.criteria[i].id + ", " + set.criteria[j].id + ", " + m.at(i, j).to_string() +
             ", " + voice + " view on " + set.criteria[i].name + " versus " +
             set.criteria[j].name + "\n";
    }
  }
  out += "END JUDGMENTS\n\nC1: 0.3\n";
  return out;
}

inline std::string revision(const std::vector<std::string>& lines) {
  std::string out = "Revised pairs:\nBEGIN JUDGMENTS\n";
  for (const auto& l : lines) out += l + "\n";
  out += "END JUDGMENTS\n";
  return out;
}

}  // namespace replies
