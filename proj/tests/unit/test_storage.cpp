#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <fmt/core.h>
#include <unistd.h>

#include "doctest.h"

#include "ahpeval/reference_case.hpp"
#include "ahpeval/storage/project.hpp"
#include "ahpeval/storage/report.hpp"
#include "ahpeval/storage/workflow.hpp"
#include "support/oracles.hpp"
#include "support/projects.hpp"

using namespace ahpeval;
using namespace ahpeval::storage;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ahpeval-storage-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

// Reference case worked through the pipeline with derived weights.
Project reference_project() {
  auto p = new_project("reference", criteria::builtin_ci_criteria(), "2026-01-01T00:00:00Z");
  for (const auto& j : reference::consensus_judgments()) {
    put_judgment(p, p.criteria_set.criteria[j.pair.i].id, p.criteria_set.criteria[j.pair.j].id, j.value,
                 "entered by hand");
  }
  const auto idx = add_matrix(p, draft_matrix(p), MatrixOrigin::kManual);
  activate_weights(p, idx, ahp::WeightingMethod::kPrincipalEigenvector, false, "2026-01-01T00:00:00Z");
  put_scores(p, "PowerCyber", reference::powercyber_scores());
  put_scores(p, "ENIGMA", reference::enigma_scores());
  aggregate_all(p);
  run_sensitivity(p);
  return p;
}

std::vector<double> raw_scores(const std::vector<criteria::RubricScore>& scores) {
  std::vector<double> out;
  for (const auto& s : scores) out.push_back(s.value);
  return out;
}

}  // namespace

TEST_CASE("reference matrix round-trips with exact rationals") {
  const auto p = reference_project();
  const auto text = serialize(p);
  const auto back = deserialize(text);
  CHECK(back == p);
  CHECK(back.matrices[0].matrix.at(8, 0) == ahp::Ratio(1, 9));
  CHECK(to_json(p)["matrices"][0]["matrix"]["upper"][0][7] == "9");
  CHECK(serialize(back) == text);
}

TEST_CASE("save and load through the filesystem") {
  const auto p = reference_project();
  const auto path = scratch("reference.json");
  save(p, path);
  CHECK(load(path) == p);
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp-" + std::to_string(::getpid())));
  CHECK_THROWS_AS(load(scratch("does-not-exist.json")), Error);
}

TEST_CASE("empty project round-trips") {
  const auto p = new_project("empty", criteria::builtin_ci_criteria(), "2026-01-01T00:00:00Z");
  CHECK(deserialize(serialize(p)) == p);
}

TEST_CASE("truncated file gives a parse error with byte offset") {
  const auto text = serialize(reference_project());
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, text.size() / 3, text.size() - 3}) {
    try {
      deserialize(text.substr(0, cut));
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.byte_offset() <= cut + 1);
      CHECK(e.kind() == ErrorKind::kParse);
    }
  }
}

TEST_CASE("structural errors name the field") {
  auto j = to_json(reference_project());
  j["matrices"][0]["matrix"]["upper"][0][2] = "6.5";
  try {
    project_from_json(j);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "matrices[0].matrix.upper[0][2]");
  }
  j = to_json(reference_project());
  j["evaluations"][0]["criteria_set"]["version"] = "9.9";
  try {
    project_from_json(j);
    FAIL("expected referential integrity error");
  } catch (const ValidationError& e) {
    CHECK(e.field() == "evaluations[0].criteria_set");
  }
}

TEST_CASE("schema versions") {
  auto j = to_json(reference_project());
  j["schema_version"] = kSchemaVersion + 1;
  try {
    project_from_json(j);
    FAIL("expected version mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kVersionMismatch);
  }

  SUBCASE("version 1 migrates with a note") {
    const auto current = reference_project();
    auto v1 = to_json(current);
    v1["schema_version"] = 1;
    v1["weights"] = v1["active_weights"]["weights"];
    for (const char* key : {"active_weights", "draft_judgments", "score_sheets", "session"}) v1.erase(key);
    v1["metadata"].erase("notes");
    const auto migrated = project_from_json(v1);
    CHECK(migrated.metadata.schema_version == kSchemaVersion);
    REQUIRE(migrated.metadata.notes.size() == 1);
    CHECK(migrated.metadata.notes[0].find("migrated from schema version 1") != std::string::npos);
    REQUIRE(migrated.active_weights.has_value());
    CHECK(migrated.active_weights->weights == current.active_weights->weights);
    CHECK(migrated.active_weights->matrix_index == std::optional<std::size_t>(0));
    CHECK_FALSE(migrated.active_weights->override_unverified);
    CHECK(migrated.evaluations == current.evaluations);
  }
}

TEST_CASE("active weights must be verified or flagged") {
  auto p = new_project("gate", criteria::builtin_ci_criteria(), "t0");
  const auto flipped = reference::consensus_matrix().with_entry(0, 8, ahp::Ratio(1, 9));
  const auto idx = add_matrix(p, flipped, MatrixOrigin::kManual);
  CHECK_FALSE(p.matrices[idx].report.acceptable);
  try {
    activate_weights(p, idx, ahp::WeightingMethod::kPrincipalEigenvector, false, "t1");
    FAIL("expected gate failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConsistencyGate);
  }
  CHECK_FALSE(p.active_weights.has_value());
  activate_weights(p, idx, ahp::WeightingMethod::kPrincipalEigenvector, true, "t1");
  CHECK(p.active_weights->override_unverified);
  CHECK(p.metadata.notes.size() == 1);
  CHECK(deserialize(serialize(p)) == p);

  p.active_weights->override_unverified = false;
  CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("draft judgments") {
  auto p = new_project("draft", criteria::builtin_ci_criteria(), "t0");
  auto status = put_judgment(p, "C9", "C1", ahp::SaatyJudgment::inverse_of(9));
  CHECK(status.entered == 1);
  CHECK(status.required == 45);
  CHECK(status.missing.size() == 44);
  CHECK_FALSE(status.report.has_value());
  CHECK(p.draft_judgments[0].pair == PairIndex{0, 8});
  CHECK(p.draft_judgments[0].value == ahp::SaatyJudgment::integer(9));
  // Idempotent re-entry.
  const auto before = p;
  put_judgment(p, "C9", "C1", ahp::SaatyJudgment::inverse_of(9));
  CHECK(p == before);
  CHECK_THROWS_AS(put_judgment(p, "C1", "C1", ahp::SaatyJudgment::integer(1)), ValidationError);
  CHECK_THROWS_AS(put_judgment(p, "C1", "C99", ahp::SaatyJudgment::integer(1)), ValidationError);
  try {
    draft_matrix(p);
    FAIL("expected incomplete matrix");
  } catch (const IncompleteMatrixError& e) {
    CHECK(e.missing().size() == 44);
  }
}

TEST_CASE("aggregate and report need weights and scores") {
  auto p = new_project("incomplete", criteria::builtin_ci_criteria(), "t0");
  CHECK_THROWS_AS(aggregate_all(p), Error);
  CHECK_THROWS_AS(export_report(p, ReportKind::kSummary), Error);
  try {
    export_report(p, ReportKind::kSummary);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIncompleteProject);
  }
}

TEST_CASE("report composites follow the dot-product oracle") {
  const auto p = reference_project();
  const auto& w = p.active_weights->weights.weights;
  const double power = oracle::dot(w, raw_scores(reference::powercyber_scores()));
  const double enigma = oracle::dot(w, raw_scores(reference::enigma_scores()));
  const auto summary = export_report(p, ReportKind::kSummary);
  CHECK(summary.find(fmt::format("{:.3f}", power)) != std::string::npos);
  CHECK(summary.find(fmt::format("{:.3f}", enigma)) != std::string::npos);
  CHECK(summary.find("Ranking: PowerCyber > ENIGMA") != std::string::npos);
  CHECK(summary.find("entered by hand") == std::string::npos);
  CHECK(summary.find("evidence") == std::string::npos);
  CHECK(summary.find("BEGIN CHART DATA") != std::string::npos);

  const auto full = export_report(p, ReportKind::kFull);
  CHECK(full.find("CoR         0.069") != std::string::npos);
  CHECK(full.find("acceptable") != std::string::npos);
  CHECK(full.find("C8   critical shift +0.11") != std::string::npos);
  CHECK(full.find("rubric level") != std::string::npos);
  CHECK(export_report(p, ReportKind::kFull) == full);
}

TEST_CASE("report composites with the published weights") {
  auto p = reference_project();
  p.active_weights = ActiveWeights{reference::published_weights(), std::nullopt, true};
  aggregate_all(p);
  const auto summary = export_report(p, ReportKind::kSummary);
  CHECK(summary.find("3.091") != std::string::npos);
  CHECK(summary.find("2.650") != std::string::npos);
  CHECK(summary.find("OVERRIDE-UNVERIFIED") != std::string::npos);
}

TEST_CASE("chart data block parses and matches the profiles") {
  const auto p = reference_project();
  const auto report = export_report(p, ReportKind::kSummary);
  const auto begin = report.find("BEGIN CHART DATA\n") + 17;
  const auto end = report.find("END CHART DATA");
  const auto j = Json::parse(report.substr(begin, end - begin));
  CHECK(j["labels"].size() == 10);
  CHECK(j["radial_min"] == 1.0);
  CHECK(j["radial_max"] == 5.0);
  CHECK(j["series"][0]["name"] == "PowerCyber");
  CHECK(j["series"][0]["values"][0] == 5.0);
  CHECK(j["series"][1]["values"][6] == 5.0);
}

TEST_CASE("panel run acceptance copies judgments and matrix") {
  auto p = new_project("panel", criteria::builtin_ci_criteria(), "t0");
  panel::ElicitationResult result{reference::consensus_matrix(), ahp::consistency(reference::consensus_matrix()),
                                  {}, true, 1, 1, {}};
  result.judgments.source = "consensus";
  for (const auto& j : reference::consensus_judgments()) {
    result.judgments.judgments.push_back(
        {p.criteria_set.criteria[j.pair.i].id, p.criteria_set.criteria[j.pair.j].id, j.value, "because"});
  }
  const auto run = record_panel_run(p, result, "model-x");
  const auto idx = accept_panel_run(p, run);
  CHECK(p.matrices[idx].origin == MatrixOrigin::kPanel);
  CHECK(p.matrices[idx].matrix == reference::consensus_matrix());
  CHECK(draft_matrix(p) == reference::consensus_matrix());
  CHECK(deserialize(serialize(p)) == p);
}

TEST_CASE("property: randomized projects round-trip field for field") {
  std::mt19937_64 rng(20260117);
  const auto path = scratch("random.json");
  int rational = 0, overridden = 0, evaluated = 0, swept = 0, runs = 0, sessions = 0;
  for (int k = 0; k < 200; ++k) {
    CAPTURE(k);
    const auto p = gen::random_project(rng);
    for (const auto& m : p.matrices) rational += m.matrix.elicited() ? 0 : 1;
    overridden += p.active_weights && p.active_weights->override_unverified;
    evaluated += !p.evaluations.empty();
    swept += !p.sensitivity_reports.empty();
    runs += !p.transcripts.empty();
    sessions += p.session.has_value();
    save(p, path);
    const auto back = load(path);
    REQUIRE(back == p);
    for (std::size_t m = 0; m < p.matrices.size(); ++m) {
      CHECK(back.matrices[m].matrix.upper() == p.matrices[m].matrix.upper());
    }
  }
  CHECK(rational > 0);
  CHECK(overridden > 0);
  CHECK(evaluated > 0);
  CHECK(swept > 0);
  CHECK(runs > 0);
  CHECK(sessions > 0);
}
