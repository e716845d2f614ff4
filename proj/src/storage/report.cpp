#include "ahpeval/storage/report.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "ahpeval/storage/json_codec.hpp"

namespace ahpeval::storage {

namespace {

void line(std::string& out, const std::string& text = {}) {
  out += text;
  out += '\n';
}

std::string verbal(const ahp::Ratio& r) {
  return r.is_one() ? "equal" : r.to_string();
}

const StoredMatrix* source_matrix(const Project& p) {
  if (p.active_weights && p.active_weights->matrix_index) {
    return &p.matrices[*p.active_weights->matrix_index];
  }
  return p.matrices.empty() ? nullptr : &p.matrices.back();
}

void weights_section(std::string& out, const Project& p) {
  const auto& w = p.active_weights->weights;
  line(out, "Criterion weights");
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto idx = p.criteria_set.index_of(w.labels[k]);
    const auto name = idx ? p.criteria_set.criteria[*idx].name : std::string();
    line(out, fmt::format("  {:<4} {:<40} {:.4f}", w.labels[k], name, w.weights[k]));
  }
  line(out);
}

void matrix_section(std::string& out, const Project& p, const StoredMatrix& s) {
  const auto index = static_cast<std::size_t>(&s - p.matrices.data());
  const auto& m = s.matrix;
  line(out, fmt::format("Pairwise comparison matrix #{} ({})", index, to_string(s.origin)));
  std::string header = "       ";
  for (const auto& l : m.labels()) header += fmt::format("{:>6}", l);
  line(out, header);
  for (std::size_t i = 0; i < m.order(); ++i) {
    std::string row = fmt::format("  {:<5}", m.labels()[i]);
    for (std::size_t j = 0; j < m.order(); ++j) row += fmt::format("{:>6}", m.at(i, j).to_string());
    line(out, row);
  }
  line(out);

  const auto& r = s.report;
  line(out, "Consistency");
  line(out, fmt::format("  lambda_max  {:.4f}", r.lambda_max));
  line(out, fmt::format("  CoI         {:.4f}", r.coi));
  line(out, fmt::format("  RoI({})     {:.2f}", r.order, r.roi));
  line(out, r.cor ? fmt::format("  CoR         {:.3f} (threshold {:.2f})", *r.cor, r.threshold)
                  : fmt::format("  CoR         undefined (RoI is 0)"));
  line(out, fmt::format("  gate        {}", r.acceptable ? "acceptable" : "NOT acceptable"));
  line(out);

  const auto top = std::min<std::size_t>(5, r.worst_judgments.size());
  line(out, fmt::format("Judgments deviating most from the weights (top {})", top));
  for (std::size_t k = 0; k < top; ++k) {
    const auto& d = r.worst_judgments[k];
    line(out, fmt::format("  {} vs {}: {:<5} deviation {:.4f}", m.labels()[d.i], m.labels()[d.j],
                          m.at(d.i, d.j).to_string(), d.deviation));
  }
  line(out);
}

void profile_section(std::string& out, const Project& p, const criteria::Evaluation& e,
                     const sensitivity::RankEntry& rank) {
  line(out, fmt::format("Profile: {} (composite {:.3f})", e.alternative_name, rank.composite));
  const auto reweighted = criteria::reweight(e, p.active_weights->weights);
  for (std::size_t k = 0; k < reweighted.profile.size(); ++k) {
    const auto& entry = reweighted.profile[k];
    const auto& score = e.scores[k];
    line(out, fmt::format("  {:<4} score {} weight {:.4f} contribution {:.4f}", entry.criterion_id,
                          entry.score, entry.weight, entry.contribution));
    std::string evidence = "       evidence: " + score.evidence;
    if (!score.evidence_refs.empty()) {
      evidence += " [";
      for (std::size_t r = 0; r < score.evidence_refs.size(); ++r) {
        if (r) evidence += "; ";
        evidence += score.evidence_refs[r];
      }
      evidence += "]";
    }
    line(out, evidence);
  }
  line(out);
}

void sensitivity_section(std::string& out, const sensitivity::SensitivityReport& s) {
  line(out, fmt::format("Sensitivity (weight shifts within +/-{:.2f}, {} grid points)", s.range, s.steps));
  std::string baseline;
  for (std::size_t k = 0; k < s.baseline.size(); ++k) baseline += (k ? " > " : "") + s.baseline[k];
  line(out, "  baseline order: " + baseline);
  for (const auto& c : s.criticality) {
    line(out, c.delta ? fmt::format("  {:<4} critical shift {:+.4f}", c.criterion, *c.delta)
                      : fmt::format("  {:<4} no reversal within range", c.criterion));
  }
  for (const auto& e : s.reversal_events) {
    line(out, fmt::format("  reversal: {} at shift {:+.4f} (first seen at grid {:+.4f}): {} ahead of {}",
                          e.criterion, e.crossing, e.delta, e.ahead, e.behind));
  }
  line(out);
}

void rationale_section(std::string& out, const Project& p) {
  for (std::size_t k = 0; k < p.transcripts.size(); ++k) {
    const auto& run = p.transcripts[k];
    line(out, fmt::format("Panel rationales, run #{} (model {}, {} after {} round(s), best round {})", k,
                          run.model, run.accepted ? "accepted" : "not accepted", run.rounds,
                          run.best_round));
    for (const auto& j : run.judgments.judgments) {
      line(out, fmt::format("  {} vs {}: {} | {}", j.first, j.second, verbal(j.value.value()), j.rationale));
    }
    line(out);
  }
}

}  // namespace

std::string_view to_string(ReportKind kind) { return kind == ReportKind::kFull ? "full" : "summary"; }

ReportKind parse_report_kind(std::string_view text) {
  if (text == "summary") return ReportKind::kSummary;
  if (text == "full") return ReportKind::kFull;
  throw Error(ErrorKind::kInvalidArgument, "report kind must be summary or full, not '" + std::string(text) + "'");
}

criteria::ChartData chart_data(const Project& p) {
  if (p.evaluations.empty()) throw Error(ErrorKind::kIncompleteProject, "no evaluations; aggregate first");
  return criteria::profile_chart_data(p.evaluations);
}

std::string export_report(const Project& p, ReportKind kind) {
  if (!p.active_weights) throw Error(ErrorKind::kIncompleteProject, "no active weights; derive weights first");
  if (p.evaluations.empty()) throw Error(ErrorKind::kIncompleteProject, "no evaluations; aggregate first");
  const auto& aw = *p.active_weights;
  const auto ranking = sensitivity::rank_alternatives(p.evaluations, aw.weights);

  std::string out;
  line(out, "Evaluation report: " + p.metadata.name);
  line(out, fmt::format("Criteria set: {} {} ({} criteria)", p.criteria_set.name, p.criteria_set.version,
                        p.criteria_set.size()));
  std::string source = aw.matrix_index ? fmt::format("matrix #{}", *aw.matrix_index) : "imported";
  line(out, fmt::format("Weights: {} from {}, {}", ahp::to_string(aw.weights.method), source,
                        aw.override_unverified ? "OVERRIDE-UNVERIFIED (consistency gate not passed)"
                                               : "consistency gate passed"));
  line(out, "Project modified: " + p.metadata.modified);
  line(out);

  line(out, "Composite scores");
  line(out, fmt::format("  {:<5} {:<24} {}", "Rank", "Alternative", "Composite"));
  for (const auto& e : ranking.entries) {
    line(out, fmt::format("  {:<5} {:<24} {:.3f}{}", e.rank, e.alternative, e.composite, e.tied ? " (tie)" : ""));
  }
  line(out);
  std::string order;
  for (std::size_t k = 0; k < ranking.entries.size(); ++k) {
    if (k) order += ranking.entries[k].rank == ranking.entries[k - 1].rank ? " = " : " > ";
    order += ranking.entries[k].alternative;
  }
  line(out, "Ranking: " + order);
  line(out);

  if (kind == ReportKind::kFull) {
    weights_section(out, p);
    if (const auto* m = source_matrix(p)) matrix_section(out, p, *m);
    for (const auto& e : ranking.entries) {
      const auto it = std::find_if(p.evaluations.begin(), p.evaluations.end(),
                                   [&](const auto& ev) { return ev.alternative_name == e.alternative; });
      profile_section(out, p, *it, e);
    }
    if (!p.sensitivity_reports.empty()) sensitivity_section(out, p.sensitivity_reports.back());
    rationale_section(out, p);
  }

  line(out, std::string(kChartBegin));
  line(out, encode(chart_data(p)).dump(2));
  line(out, std::string(kChartEnd));
  return out;
}

}  // namespace ahpeval::storage
