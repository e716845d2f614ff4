#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/consistency.hpp"
#include "ahpeval/ahp/pairwise_matrix.hpp"
#include "ahpeval/ahp/saaty.hpp"
#include "ahpeval/criteria/criteria.hpp"

namespace ahpeval::panel {

struct ExpertRole {
  std::string id;
  std::string title;
  std::string perspective_brief;
  friend bool operator==(const ExpertRole&, const ExpertRole&) = default;
};

// CR architect, ICS/SCADA security engineer, CI training coordinator,
// OT operations manager.
std::vector<ExpertRole> default_roles();

enum class ElicitationMode {
  kPanelPrompt,    // one prompt simulating every role
  kRolePerPrompt,  // one prompt per role, geometric-mean consensus
};

std::string_view to_string(ElicitationMode mode);
ElicitationMode parse_elicitation_mode(std::string_view text);

struct ElicitationRequest {
  criteria::CriteriaSet criteria_set;
  std::vector<ExpertRole> roles = default_roles();
  double consistency_threshold = ahp::kDefaultConsistencyThreshold;
  ElicitationMode mode = ElicitationMode::kPanelPrompt;
  std::size_t refinement_top_k = 5;
};

// Throws ValidationError(kInvalidArgument) for an empty role list or fewer
// than two criteria.
void validate(const ElicitationRequest& request);

struct Judgment {
  std::string first;   // criterion id, earlier in set order
  std::string second;  // criterion id, later in set order
  ahp::SaatyJudgment value;
  std::string rationale;
  friend bool operator==(const Judgment&, const Judgment&) = default;
};

struct ModelMetadata {
  std::string model;
  std::string timestamp;
  std::string response_digest;  // SHA-256 hex of the raw reply
  friend bool operator==(const ModelMetadata&, const ModelMetadata&) = default;
};

// A full upper triangle of judgments, in set order, each with rationale.
struct JudgmentSet {
  std::string source;  // role id or "consensus"
  std::vector<Judgment> judgments;
  ModelMetadata metadata;
  friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;
};

inline constexpr std::string_view kJudgmentsBegin = "BEGIN JUDGMENTS";
inline constexpr std::string_view kJudgmentsEnd = "END JUDGMENTS";

std::string scale_note();
std::string output_contract();
std::string system_prompt();

// Deterministic panel prompt; identical requests give identical bytes.
std::string build_prompt(const ElicitationRequest& request);
// Single-role variant used by kRolePerPrompt.
std::string build_role_prompt(const ElicitationRequest& request, const ExpertRole& role);
// Asks the panel to revise only the `top_k` worst pairs of `current`.
std::string build_refinement_prompt(const ElicitationRequest& request, const JudgmentSet& current,
                                    const ahp::ConsistencyReport& report);

// Extracts the judgment block. Throws MalformedJudgmentError (with the
// offending span and line) or IncompleteResponseError (listing missing
// pairs). The digest is filled in; model and timestamp are left empty.
JudgmentSet parse_response(std::string_view raw, const criteria::CriteriaSet& set);

// Parses a refinement reply. Only `pairs` are read; all of them must be
// present. Lines for other (locked) pairs are ignored.
std::vector<Judgment> parse_revisions(std::string_view raw, const criteria::CriteriaSet& set,
                                      std::span<const PairIndex> pairs);

// Mean of ln(value) over the inputs.
double log_geometric_mean(std::span<const ahp::Ratio> values);

// Geometric-mean consensus per pair, snapped to the Saaty scale in log
// space. A single set is returned unchanged apart from source "consensus".
// Throws kCoverageMismatch when the sets cover different pairs.
JudgmentSet aggregate_roles(std::span<const JudgmentSet> sets);

ahp::PairwiseMatrix to_matrix(const JudgmentSet& judgments, const criteria::CriteriaSet& set);

}  // namespace ahpeval::panel
