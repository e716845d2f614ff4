#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/weights.hpp"

namespace ahpeval::criteria {

struct Criterion {
  std::string id;
  std::string name;
  std::string description;
  std::string ci_applicability;
  std::vector<std::string> indicators;
  // Levels 1, 3 and 5 only; 2 and 4 sit between adjacent anchors.
  std::map<int, std::string> anchors;

  friend bool operator==(const Criterion&, const Criterion&) = default;
};

struct CriteriaSetRef {
  std::string name;
  std::string version;
  friend bool operator==(const CriteriaSetRef&, const CriteriaSetRef&) = default;
};

// Ordered criteria; the order defines matrix and weight indexing.
struct CriteriaSet {
  std::string name;
  std::string version;
  std::string provenance;
  std::vector<Criterion> criteria;

  CriteriaSetRef ref() const { return {name, version}; }
  std::vector<std::string> ids() const;
  std::size_t size() const noexcept { return criteria.size(); }
  // Index of `id`, or nullopt.
  std::optional<std::size_t> index_of(std::string_view id) const;
  const Criterion& at(std::string_view id) const;

  friend bool operator==(const CriteriaSet&, const CriteriaSet&) = default;
};

// Throws ValidationError(kInvalidCriteria) naming the offending field.
void validate(const CriteriaSet& set);

// The ten cyber-range criteria for critical-infrastructure contexts,
// C1..C10, with indicators and 1/3/5 anchors.
CriteriaSet builtin_ci_criteria();

}  // namespace ahpeval::criteria
