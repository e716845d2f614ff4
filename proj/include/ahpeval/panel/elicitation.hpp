#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ahpeval/ahp/consistency.hpp"
#include "ahpeval/panel/client.hpp"
#include "ahpeval/panel/panel.hpp"

namespace ahpeval::panel {

struct TranscriptEntry;

struct ElicitationOptions {
  std::string model = "gpt-4o";
  double temperature = 0.0;
  // Timestamp source; defaults to the current UTC time.
  std::function<std::string()> clock;
  // Called with the transcript so far after each round is scored.
  std::function<void(const std::vector<TranscriptEntry>&)> on_round;
};

// One model call: its prompt, verbatim reply and what was parsed from it.
struct TranscriptEntry {
  int round = 0;
  std::string kind;  // "panel", "role:<id>" or "refinement"
  std::string prompt;
  std::string raw_response;
  std::string response_digest;
  std::optional<JudgmentSet> judgments;           // the round's consensus after this call
  std::optional<ahp::ConsistencyReport> report;   // set on the last call of a round
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

struct ElicitationResult {
  ahp::PairwiseMatrix matrix;
  ahp::ConsistencyReport report;
  JudgmentSet judgments;
  bool accepted = false;
  int rounds = 0;
  int best_round = 0;
  std::vector<TranscriptEntry> transcript;
};

// Elicits a consensus matrix and enforces the consistency gate. Rejected
// rounds trigger a refinement prompt over the worst-deviation pairs. After
// `max_rounds` without acceptance the lowest-ratio attempt is returned with
// accepted == false. Parse errors propagate with "round N" context.
ElicitationResult elicit_with_gate(const ElicitationRequest& request, ChatClient& client,
                                   int max_rounds, const ElicitationOptions& options = {});

std::string utc_now_iso8601();

}  // namespace ahpeval::panel
