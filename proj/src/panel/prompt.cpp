#include "ahpeval/panel/panel.hpp"

#include <fmt/format.h>

#include "ahpeval/error.hpp"

namespace ahpeval::panel {

std::vector<ExpertRole> default_roles() {
  return {
      {"cr-architect", "CR architect",
       "designs range infrastructure: emulation fidelity, isolation, scaling and upkeep"},
      {"ics-security-engineer", "ICS/SCADA security engineer",
       "protocol and device realism, containment of live malware, OT attack surfaces"},
      {"ci-training-coordinator", "CI training coordinator",
       "exercise design, trainee measurement, after-action review and accessibility"},
      {"ot-operations-manager", "OT operations manager",
       "operational safety, staff time, cost and vendor support over the range lifetime"},
  };
}

std::string_view to_string(ElicitationMode mode) {
  switch (mode) {
    case ElicitationMode::kPanelPrompt: return "panel";
    case ElicitationMode::kRolePerPrompt: return "role-per-prompt";
  }
  return "unknown";
}

ElicitationMode parse_elicitation_mode(std::string_view text) {
  if (text == "panel" || text == "single") return ElicitationMode::kPanelPrompt;
  if (text == "role-per-prompt" || text == "multi") return ElicitationMode::kRolePerPrompt;
  throw Error(ErrorKind::kInvalidArgument, "unknown elicitation mode '" + std::string(text) + "'");
}

void validate(const ElicitationRequest& request) {
  if (request.roles.empty()) {
    throw ValidationError(ErrorKind::kInvalidArgument, "roles", "at least one expert role is required");
  }
  criteria::validate(request.criteria_set);
  if (request.refinement_top_k == 0) {
    throw ValidationError(ErrorKind::kInvalidArgument, "refinement_top_k", "must be at least 1");
  }
}

std::string scale_note() {
  return "Intensity scale: 1 = nominal (equal) importance, 3 = moderate, 5 = strong, "
         "7 = very strong, 9 = extreme; 2, 4, 6 and 8 are intermediate degrees. Write the "
         "reciprocal 1/k (k = 2..9) when the second criterion of the pair is the more important "
         "one.";
}

std::string output_contract() {
  return fmt::format(
      "Output contract (machine-read, follow exactly):\n"
      "{}\n"
      "<first id>, <second id>, <intensity>, <rationale>\n"
      "{}\n"
      "- one line per pair listed above, ids exactly as given, first id first;\n"
      "- <intensity> is how much more important the first criterion is than the second: an "
      "integer 1-9 or 1/k with k = 2..9; no decimals, no other fractions;\n"
      "- <rationale> is a single-line natural-language justification and must not be empty.\n"
      "After the block, report the normalized weight vector as lines '<id>: <weight>'.",
      kJudgmentsBegin, kJudgmentsEnd);
}

std::string system_prompt() {
  return "You simulate domain experts evaluating cyber ranges for critical infrastructure. "
         "Answer with careful pairwise reasoning and follow the requested output contract "
         "exactly.";
}

namespace {

void render_criteria(std::string& out, const criteria::CriteriaSet& set) {
  out += fmt::format("Criteria ({} v{}):\n", set.name, set.version);
  for (const auto& c : set.criteria) {
    out += fmt::format("[{}] {}\n", c.id, c.name);
    out += fmt::format("  Description: {}\n", c.description);
    out += fmt::format("  CI applicability: {}\n", c.ci_applicability);
    out += "  Indicators: ";
    for (std::size_t k = 0; k < c.indicators.size(); ++k) {
      out += (k ? "; " : "") + c.indicators[k];
    }
    out += "\n  Rubric anchors:";
    for (const auto& [level, text] : c.anchors) out += fmt::format(" {} = {};", level, text);
    out.back() = '\n';
  }
}

void render_pairs(std::string& out, const criteria::CriteriaSet& set) {
  const std::size_t n = set.size();
  out += fmt::format("Pairs to compare ({}):\n", n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out += fmt::format("{} vs {}\n", set.criteria[i].id, set.criteria[j].id);
    }
  }
}

std::string render(const ElicitationRequest& request, std::span<const ExpertRole> roles,
                   bool panel) {
  validate(request);
  std::string out;
  if (panel) {
    out += fmt::format(
        "Simulate a multidisciplinary panel of {} experts deciding how important each "
        "evaluation criterion is when assessing cyber ranges (CRs) for critical infrastructure "
        "(CI) training and assessment.\n",
        roles.size());
  } else {
    out += "Act as a single expert deciding how important each evaluation criterion is when "
           "assessing cyber ranges (CRs) for critical infrastructure (CI) training and "
           "assessment.\n";
  }
  out += panel ? "Panel roles:\n" : "Your role:\n";
  for (std::size_t k = 0; k < roles.size(); ++k) {
    out += fmt::format("({}) {}: {}\n", k + 1, roles[k].title, roles[k].perspective_brief);
  }
  out += "\n";
  render_criteria(out, request.criteria_set);
  out += "\n";
  out += fmt::format(
      "For every pair below, reason step-by-step{} about which criterion matters more from a "
      "CI perspective and to what degree, using Saaty's 1–9 fundamental scale of relative "
      "importance. Weigh each criterion's influence on realism, safety, scalability, "
      "maintainability and overall training effectiveness.\n",
      panel ? " from each role's perspective and settle on one panel judgment" : "");
  out += scale_note() + "\n\n";
  render_pairs(out, request.criteria_set);
  out += "\n";
  out += fmt::format(
      "Once the pairwise comparison matrix is complete, check its internal consistency; the "
      "consistency ratio must satisfy CoR < {:.2f}. Then compute and report the normalized "
      "weight vector (weights summing to 1).\n\n",
      request.consistency_threshold);
  out += output_contract();
  out += "\n";
  return out;
}

}  // namespace

std::string build_prompt(const ElicitationRequest& request) {
  return render(request, request.roles, true);
}

std::string build_role_prompt(const ElicitationRequest& request, const ExpertRole& role) {
  return render(request, std::span<const ExpertRole>(&role, 1), false);
}

std::string build_refinement_prompt(const ElicitationRequest& request, const JudgmentSet& current,
                                    const ahp::ConsistencyReport& report) {
  validate(request);
  const auto& set = request.criteria_set;
  std::string out;
  out += fmt::format(
      "The panel's pairwise comparison matrix failed the consistency check: CoR = {:.4f}, "
      "required CoR < {:.2f} (lambda_max = {:.4f}, CoI = {:.4f}).\n",
      report.cor.value_or(report.coi), request.consistency_threshold, report.lambda_max,
      report.coi);
  out += "All judgments are locked except the pairs below, which deviate most from the "
         "priorities implied by the whole matrix. Revisit only these pairs, reason step-by-step "
         "again from each role's perspective, and restore transitivity.\n\n";
  out += "Pairs to revise (current intensity, log-deviation):\n";
  const std::size_t k = std::min(request.refinement_top_k, report.worst_judgments.size());
  for (std::size_t r = 0; r < k; ++r) {
    const auto& d = report.worst_judgments[r];
    const auto& a = set.criteria.at(d.i).id;
    const auto& b = set.criteria.at(d.j).id;
    std::string value = "?";
    for (const auto& j : current.judgments) {
      if (j.first == a && j.second == b) value = j.value.value().to_string();
    }
    out += fmt::format("{} vs {}: {} (deviation {:.4f})\n", a, b, value, d.deviation);
  }
  out += "\nLocked judgments for reference:\n";
  for (const auto& j : current.judgments) {
    out += fmt::format("{}, {}, {}\n", j.first, j.second, j.value.value().to_string());
  }
  out += "\n";
  out += scale_note() + "\n\n";
  out += "Return only the revised pairs, using the same contract:\n";
  out += output_contract();
  out += "\n";
  return out;
}

}  // namespace ahpeval::panel
