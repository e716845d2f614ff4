#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahpeval/ahp/consistency.hpp"
#include "ahpeval/ahp/pairwise_matrix.hpp"
#include "ahpeval/ahp/weights.hpp"
#include "ahpeval/criteria/criteria.hpp"
#include "ahpeval/criteria/scoring.hpp"
#include "ahpeval/panel/elicitation.hpp"
#include "ahpeval/sensitivity/sensitivity.hpp"
#include "ahpeval/storage/json_codec.hpp"

namespace ahpeval::storage {

inline constexpr int kSchemaVersion = 2;

enum class MatrixOrigin { kManual, kPanel };

std::string_view to_string(MatrixOrigin origin);
MatrixOrigin parse_matrix_origin(std::string_view text);

struct ProjectMetadata {
  std::string name;
  std::string created;   // ISO-8601 UTC
  std::string modified;
  int schema_version = kSchemaVersion;
  // Migration and override log, oldest first.
  std::vector<std::string> notes;
  friend bool operator==(const ProjectMetadata&, const ProjectMetadata&) = default;
};

struct StoredMatrix {
  ahp::PairwiseMatrix matrix;
  ahp::ConsistencyReport report;
  MatrixOrigin origin = MatrixOrigin::kManual;
  friend bool operator==(const StoredMatrix&, const StoredMatrix&) = default;
};

struct ActiveWeights {
  ahp::WeightVector weights;
  std::optional<std::size_t> matrix_index;  // into Project::matrices
  bool override_unverified = false;
  friend bool operator==(const ActiveWeights&, const ActiveWeights&) = default;
};

// A judgment entered but not yet committed into a matrix.
struct DraftJudgment {
  PairIndex pair;  // i < j
  ahp::SaatyJudgment value;
  std::string rationale;
  friend bool operator==(const DraftJudgment&, const DraftJudgment&) = default;
};

struct ScoreSheet {
  std::string alternative;
  std::vector<criteria::RubricScore> scores;
  friend bool operator==(const ScoreSheet&, const ScoreSheet&) = default;
};

struct PanelRun {
  std::string model;
  bool accepted = false;
  int rounds = 0;
  int best_round = 0;
  panel::JudgmentSet judgments;  // best round's consensus
  std::vector<panel::TranscriptEntry> entries;
  friend bool operator==(const PanelRun&, const PanelRun&) = default;
};

struct SessionRecord {
  std::string id;
  std::string state;
  std::uint64_t revision = 0;
  friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

struct Project {
  ProjectMetadata metadata;
  criteria::CriteriaSet criteria_set;
  std::vector<StoredMatrix> matrices;
  std::optional<ActiveWeights> active_weights;
  std::vector<criteria::Evaluation> evaluations;
  std::vector<sensitivity::SensitivityReport> sensitivity_reports;
  std::vector<PanelRun> transcripts;
  std::vector<DraftJudgment> draft_judgments;  // sorted by pair
  std::vector<ScoreSheet> score_sheets;
  std::optional<SessionRecord> session;
  friend bool operator==(const Project&, const Project&) = default;
};

Project new_project(std::string name, criteria::CriteriaSet set, const std::string& now);

// Structural and referential checks. Throws ValidationError naming the field.
void validate(const Project& p);

Json to_json(const Project& p);
// Accepts the current and older schema versions; newer ones raise
// Error(kVersionMismatch). Migration appends a note to metadata.notes.
Project project_from_json(const Json& j);

std::string serialize(const Project& p);
// Syntax errors raise ParseError carrying the byte offset.
Project deserialize(std::string_view text);

// Write-temp-then-rename.
void save(const Project& p, const std::filesystem::path& destination);
Project load(const std::filesystem::path& source);

}  // namespace ahpeval::storage
