#include "ahpeval/panel/elicitation.hpp"

#include <chrono>
#include <ctime>

#include "ahpeval/error.hpp"
#include "ahpeval/panel/digest.hpp"

namespace ahpeval::panel {

std::string utc_now_iso8601() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

double badness(const ahp::ConsistencyReport& r) { return r.cor.value_or(r.coi); }

struct Attempt {
  JudgmentSet judgments;
  ahp::ConsistencyReport report;
  int round = 0;
};

}  // namespace

ElicitationResult elicit_with_gate(const ElicitationRequest& request, ChatClient& client,
                                   int max_rounds, const ElicitationOptions& options) {
  if (max_rounds < 1) throw Error(ErrorKind::kInvalidArgument, "max_rounds must be at least 1");
  validate(request);
  const auto& set = request.criteria_set;
  const auto clock = options.clock ? options.clock : utc_now_iso8601;

  std::vector<TranscriptEntry> transcript;
  auto call = [&](int round, std::string kind, std::string prompt) {
    ChatRequest chat{options.model, system_prompt(), prompt, options.temperature};
    ChatResponse response;
    try {
      response = client.complete(chat);
    } catch (Error& e) {
      e.add_context("round " + std::to_string(round));
      throw;
    }
    TranscriptEntry entry;
    entry.round = round;
    entry.kind = std::move(kind);
    entry.prompt = std::move(prompt);
    entry.raw_response = std::move(response.text);
    entry.response_digest = sha256_hex(entry.raw_response);
    transcript.push_back(std::move(entry));
    return &transcript.back();
  };
  auto stamp = [&](JudgmentSet& js) {
    js.metadata.model = options.model;
    js.metadata.timestamp = clock();
  };

  std::optional<Attempt> best;
  std::optional<Attempt> current;
  for (int round = 1; round <= max_rounds; ++round) {
    try {
      JudgmentSet consensus;
      if (round == 1) {
        std::vector<JudgmentSet> sets;
        if (request.mode == ElicitationMode::kPanelPrompt) {
          auto* entry = call(round, "panel", build_prompt(request));
          sets.push_back(parse_response(entry->raw_response, set));
          stamp(sets.back());
          sets.back().source = "panel";
        } else {
          for (const auto& role : request.roles) {
            auto* entry = call(round, "role:" + role.id, build_role_prompt(request, role));
            sets.push_back(parse_response(entry->raw_response, set));
            stamp(sets.back());
            sets.back().source = role.id;
            entry->judgments = sets.back();
          }
        }
        consensus = aggregate_roles(sets);
      } else {
        auto* entry =
            call(round, "refinement", build_refinement_prompt(request, current->judgments, current->report));
        std::vector<PairIndex> pairs;
        const std::size_t k =
            std::min(request.refinement_top_k, current->report.worst_judgments.size());
        for (std::size_t r = 0; r < k; ++r) {
          pairs.push_back({current->report.worst_judgments[r].i, current->report.worst_judgments[r].j});
        }
        const auto revisions = parse_revisions(entry->raw_response, set, pairs);
        consensus = current->judgments;
        for (const auto& rev : revisions) {
          for (auto& j : consensus.judgments) {
            if (j.first == rev.first && j.second == rev.second) {
              j.value = rev.value;
              j.rationale = "[revised round " + std::to_string(round) + "] " + rev.rationale;
            }
          }
        }
        consensus.metadata.model = options.model;
        consensus.metadata.timestamp = clock();
        consensus.metadata.response_digest =
            sha256_hex(current->judgments.metadata.response_digest + "\n" + entry->response_digest);
      }

      const auto matrix = to_matrix(consensus, set);
      auto report = ahp::consistency(matrix, ahp::RandomIndexTable::saaty(),
                                     request.consistency_threshold);
      transcript.back().judgments = consensus;
      transcript.back().report = report;

      if (options.on_round) options.on_round(transcript);
      current = Attempt{consensus, report, round};
      if (!best || badness(report) < badness(best->report)) best = current;
      if (report.acceptable) {
        return ElicitationResult{matrix, report, consensus, true, round, round, std::move(transcript)};
      }
    } catch (Error& e) {
      if (e.context().find("round ") != 0) e.add_context("round " + std::to_string(round));
      throw;
    }
  }
  return ElicitationResult{to_matrix(best->judgments, set), best->report, best->judgments, false,
                           max_rounds, best->round, std::move(transcript)};
}

}  // namespace ahpeval::panel
