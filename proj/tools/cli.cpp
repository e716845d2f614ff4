#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "CLI11.hpp"
#include "ahpeval/panel/elicitation.hpp"
#include "ahpeval/reference_case.hpp"
#include "ahpeval/service/server.hpp"
#include "ahpeval/storage/report.hpp"
#include "ahpeval/storage/workflow.hpp"
#include "input_files.hpp"

namespace ahpeval::cli {

namespace {

using storage::Project;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string project_path = "project.json";
  std::string now;

  std::string timestamp() const { return now.empty() ? panel::utc_now_iso8601() : now; }
  Project open() const { return storage::load(project_path); }
  void commit(Project& p) const {
    p.metadata.modified = timestamp();
    storage::save(p, project_path);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kTransport: return kExitTransport;
    case ErrorKind::kConsistencyGate: return kExitConsistencyGate;
    case ErrorKind::kIo:
    case ErrorKind::kConvergenceFailure: return kExitFailure;
    default: return kExitValidation;
  }
}

std::string pair_name(const Project& p, const PairIndex& pair) {
  return p.criteria_set.criteria[pair.i].id + " vs " + p.criteria_set.criteria[pair.j].id;
}

void print_consistency(const Context& c, const Project& p, const ahp::PairwiseMatrix& m,
                       const ahp::ConsistencyReport& r, std::size_t top) {
  fmt::print(c.out, "Consistency: lambda_max {:.4f}  CoI {:.4f}  RoI({}) {:.2f}  CoR {}  (threshold {:.2f}) {}\n",
             r.lambda_max, r.coi, r.order, r.roi, r.cor ? fmt::format("{:.4f}", *r.cor) : std::string("n/a"),
             r.threshold, r.acceptable ? "acceptable" : "NOT acceptable");
  top = std::min(top, r.worst_judgments.size());
  if (top == 0) return;
  fmt::print(c.out, "Judgments deviating most from the weights:\n");
  for (std::size_t k = 0; k < top; ++k) {
    const auto& d = r.worst_judgments[k];
    fmt::print(c.out, "  {:<10} {:<5} deviation {:.4f}\n", pair_name(p, {d.i, d.j}), m.at(d.i, d.j).to_string(),
               d.deviation);
  }
}

void print_status(const Context& c, const Project& p, double threshold) {
  const auto s = storage::draft_status(p, threshold);
  fmt::print(c.out, "Judgments: {} of {} entered\n", s.entered, s.required);
  if (!s.missing.empty()) {
    std::string names;
    for (std::size_t k = 0; k < s.missing.size() && k < 10; ++k) {
      names += (k ? ", " : "") + std::string("(") + pair_name(p, s.missing[k]) + ")";
    }
    if (s.missing.size() > 10) names += fmt::format(", ... {} more", s.missing.size() - 10);
    fmt::print(c.out, "Missing: {}\n", names);
  }
  if (s.report) print_consistency(c, p, storage::draft_matrix(p), *s.report, 5);
}

void print_weights(const Context& c, const Project& p, const ahp::WeightVector& w) {
  fmt::print(c.out, "Weights ({})\n", ahp::to_string(w.method));
  for (std::size_t k = 0; k < w.size(); ++k) {
    fmt::print(c.out, "  {:<5} {:<40} {:.4f}\n", w.labels[k], p.criteria_set.criteria[k].name, w.weights[k]);
  }
  fmt::print(c.out, "  {:<46} {:.4f}\n", "sum", w.sum());
}

int cmd_init(const Context& c, const std::string& name, const std::string& criteria_file, bool force) {
  if (std::filesystem::exists(c.project_path) && !force) {
    throw ValidationError(ErrorKind::kInvalidArgument, c.project_path,
                          c.project_path + " already exists (use --force to overwrite)");
  }
  criteria::CriteriaSet set = criteria::builtin_ci_criteria();
  if (!criteria_file.empty()) {
    const auto text = read_file(criteria_file);
    storage::Json j;
    try {
      j = storage::Json::parse(text);
    } catch (const storage::Json::parse_error& e) {
      throw ParseError(e.byte, fmt::format("{}: invalid JSON at byte {}", criteria_file, e.byte));
    }
    set = storage::decode_criteria_set(j);
  }
  auto p = storage::new_project(name, std::move(set), c.timestamp());
  storage::save(p, c.project_path);
  fmt::print(c.out, "Created {} with criteria set {} {} ({} criteria, {} pairwise judgments needed)\n",
             c.project_path, p.criteria_set.name, p.criteria_set.version, p.criteria_set.size(),
             p.criteria_set.size() * (p.criteria_set.size() - 1) / 2);
  return kExitOk;
}

void interactive_judging(const Context& c, Project& p, double threshold) {
  const auto missing = storage::draft_status(p, threshold).missing;
  fmt::print(c.out, "Enter 1..9 or 1/2..1/9 (how much more important the first is); blank skips, q stops.\n");
  for (const auto& pair : missing) {
    const auto& a = p.criteria_set.criteria[pair.i];
    const auto& b = p.criteria_set.criteria[pair.j];
    while (true) {
      fmt::print(c.out, "{} ({}) vs {} ({}): ", a.id, a.name, b.id, b.name);
      c.out.flush();
      std::string line;
      if (!std::getline(c.in, line)) return;
      const auto value = line.substr(0, line.find_last_not_of(" \t\r") + 1);
      if (value == "q") return;
      if (value.empty()) break;
      const auto s = ahp::SaatyJudgment::try_parse(value.substr(value.find_first_not_of(" \t")));
      if (!s) {
        fmt::print(c.out, "  '{}' is not a Saaty intensity\n", value);
        continue;
      }
      const auto status = storage::put_judgment(p, a.id, b.id, *s, {}, threshold);
      c.commit(p);
      fmt::print(c.out, "  {}/{} entered\n", status.entered, status.required);
      break;
    }
  }
}

int cmd_judge(const Context& c, const std::string& file, bool interactive, bool replace, double threshold) {
  auto p = c.open();
  if (replace) p.draft_judgments.clear();
  if (!file.empty()) {
    for (const auto& j : parse_judgment_file(read_file(file), file)) {
      try {
        storage::put_judgment(p, j.first, j.second, j.value, {}, threshold);
      } catch (Error& e) {
        e.add_context(file + ":" + std::to_string(j.line));
        throw;
      }
    }
  }
  c.commit(p);
  if (interactive) interactive_judging(c, p, threshold);
  print_status(c, p, threshold);
  return kExitOk;
}

int cmd_weights(const Context& c, const std::string& method_text, bool allow, double threshold) {
  auto p = c.open();
  const auto method = ahp::parse_weighting_method(method_text);
  const auto matrix = storage::draft_matrix(p);
  std::optional<std::size_t> index;
  for (std::size_t k = p.matrices.size(); k-- > 0;) {
    if (p.matrices[k].matrix.upper() == matrix.upper() && p.matrices[k].report.threshold == threshold) {
      index = k;
      break;
    }
  }
  if (!index) index = storage::add_matrix(p, matrix, storage::MatrixOrigin::kManual, threshold);
  const auto& report = p.matrices[*index].report;
  print_weights(c, p, ahp::derive_weights(p.matrices[*index].matrix, method));
  print_consistency(c, p, p.matrices[*index].matrix, report, 5);
  if (!report.acceptable && !allow) {
    fmt::print(c.err, "error: consistency gate: CoR above {:.2f}; revise the judgments listed above or pass "
                      "--allow-inconsistent\n", report.threshold);
    return kExitConsistencyGate;
  }
  storage::activate_weights(p, *index, method, allow, c.timestamp());
  if (!report.acceptable) fmt::print(c.out, "Weights activated as OVERRIDE-UNVERIFIED\n");
  c.commit(p);
  return kExitOk;
}

struct PanelArgs {
  std::string fixtures;
  std::string record;
  std::string model = "gpt-4o";
  std::string mode = "panel";
  std::string base_url;
  std::string api_key_env;
  int max_rounds = 3;
  std::size_t top_k = 5;
};

int cmd_panel(const Context& c, const PanelArgs& a, double threshold) {
  auto p = c.open();
  panel::ElicitationRequest request;
  request.criteria_set = p.criteria_set;
  request.consistency_threshold = threshold;
  request.mode = panel::parse_elicitation_mode(a.mode);
  request.refinement_top_k = a.top_k;

  std::unique_ptr<panel::ChatClient> base;
  if (!a.fixtures.empty()) {
    base = std::make_unique<panel::FixtureClient>(a.fixtures);
  } else {
    panel::HttpClientConfig http;
    if (!a.base_url.empty()) http.base_url = a.base_url;
    if (!a.api_key_env.empty()) http.api_key_env = a.api_key_env;
    base = std::make_unique<panel::HttpChatClient>(http);
  }
  std::unique_ptr<panel::ChatClient> recorder;
  if (!a.record.empty()) {
    std::filesystem::create_directories(a.record);
    recorder = std::make_unique<panel::RecordingClient>(*base, a.record);
  }
  panel::ElicitationOptions options;
  options.model = a.model;
  options.clock = [&c] { return c.timestamp(); };
  const auto result =
      panel::elicit_with_gate(request, recorder ? *recorder : *base, a.max_rounds, options);

  for (const auto& e : result.transcript) {
    if (!e.report) continue;
    fmt::print(c.out, "round {}: CoR {} {}\n", e.round, e.report->cor ? fmt::format("{:.4f}", *e.report->cor) : "n/a",
               e.report->acceptable ? "acceptable" : "not acceptable");
  }
  const auto run = storage::record_panel_run(p, result, a.model);
  if (!result.accepted) {
    c.commit(p);
    fmt::print(c.err, "error: consistency gate: panel not consistent after {} round(s); transcript kept as run #{}\n",
               result.rounds, run);
    return kExitConsistencyGate;
  }
  const auto index = storage::accept_panel_run(p, run, threshold);
  c.commit(p);
  fmt::print(c.out, "Panel accepted in round {}; judgments copied to the draft, matrix #{} stored\n",
             result.rounds, index);
  return kExitOk;
}

int cmd_score(const Context& c, const std::string& alternative, const std::string& file) {
  auto p = c.open();
  auto scores = parse_score_file(read_file(file), file);
  const auto count = scores.size();
  storage::put_scores(p, alternative, std::move(scores));
  c.commit(p);
  fmt::print(c.out, "Stored {} score(s) for {}\n", count, alternative);
  return kExitOk;
}

int cmd_aggregate(const Context& c, const std::string& normalization) {
  auto p = c.open();
  const auto& evaluations = storage::aggregate_all(p, criteria::parse_normalization(normalization));
  const auto ranking = sensitivity::rank_alternatives(evaluations, p.active_weights->weights);
  c.commit(p);
  if (p.active_weights->override_unverified) fmt::print(c.out, "Weights are OVERRIDE-UNVERIFIED\n");
  for (const auto& e : ranking.entries) {
    fmt::print(c.out, "{}. {:<24} {:.3f}{}\n", e.rank, e.alternative, e.composite, e.tied ? " (tie)" : "");
  }
  for (const auto& e : evaluations) {
    fmt::print(c.out, "\n{} profile\n", e.alternative_name);
    for (const auto& entry : e.profile) {
      fmt::print(c.out, "  {:<5} score {} weight {:.4f} contribution {:.4f}\n", entry.criterion_id, entry.score,
                 entry.weight, entry.contribution);
    }
  }
  return kExitOk;
}

int cmd_sensitivity(const Context& c, double range, int steps) {
  auto p = c.open();
  const auto& r = storage::run_sensitivity(p, {range, steps});
  c.commit(p);
  std::string baseline;
  for (std::size_t k = 0; k < r.baseline.size(); ++k) baseline += (k ? " > " : "") + r.baseline[k];
  fmt::print(c.out, "Baseline: {}\n", baseline);
  fmt::print(c.out, "Critical weight shifts (within +/-{:.2f}):\n", r.range);
  for (const auto& cr : r.criticality) {
    fmt::print(c.out, "  {:<5} {}\n", cr.criterion,
               cr.delta ? fmt::format("{:+.4f}", *cr.delta) : std::string("none"));
  }
  if (r.reversal_events.empty()) fmt::print(c.out, "No rank reversals within range\n");
  for (const auto& e : r.reversal_events) {
    fmt::print(c.out, "Reversal: {} at {:+.4f}: {} ahead of {}\n", e.criterion, e.crossing, e.ahead, e.behind);
  }
  return kExitOk;
}

int cmd_report(const Context& c, const std::string& kind, const std::string& output, const std::string& chart) {
  const auto p = c.open();
  const auto text = storage::export_report(p, storage::parse_report_kind(kind));
  if (output.empty() || output == "-") {
    c.out << text;
  } else {
    write_file(output, text);
  }
  if (!chart.empty()) write_file(chart, storage::encode(storage::chart_data(p)).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify_paper(const Context& c) {
  const auto checks = reference::run_reference_checks();
  std::size_t passed = 0;
  for (const auto& r : checks) {
    fmt::print(c.out, "{} {}: {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
    passed += r.passed;
  }
  fmt::print(c.out, "{} of {} checks passed\n", passed, checks.size());
  return passed == checks.size() ? kExitOk : kExitFailure;
}

struct ServeArgs {
  std::string config;
  std::string host;
  int port = -1;
  std::string data_dir;
  std::string fixtures;
  std::string model;
  std::string llm_base_url;
  std::string api_key_env;
  std::string token;
  double threshold = 0.0;
};

int cmd_serve(const Context& c, const ServeArgs& a) {
  auto config = service::load_config(a.config.empty() ? std::nullopt : std::optional<std::filesystem::path>(a.config));
  if (!a.host.empty()) config.host = a.host;
  if (a.port >= 0) config.port = a.port;
  if (!a.data_dir.empty()) config.data_dir = a.data_dir;
  if (!a.fixtures.empty()) config.fixture_dir = a.fixtures;
  if (!a.model.empty()) config.model = a.model;
  if (!a.llm_base_url.empty()) config.llm.base_url = a.llm_base_url;
  if (!a.api_key_env.empty()) config.llm.api_key_env = a.api_key_env;
  if (!a.token.empty()) config.bearer_token = a.token;
  if (a.threshold > 0.0) config.consistency_threshold = a.threshold;
  service::Server server(config);
  const int port = server.bind();
  fmt::print(c.out, "listening on http://{}:{} (data in {})\n", config.host, port, config.data_dir.string());
  c.out.flush();
  server.serve();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Context c{in, out, err, "project.json", ""};
  CLI::App app{"AHP-based cyber range evaluation"};
  app.require_subcommand(1);
  app.add_option("-p,--project", c.project_path, "Project file")->capture_default_str();
  app.add_option("--now", c.now, "Timestamp to record instead of the current UTC time");
  double threshold = ahp::kDefaultConsistencyThreshold;
  app.add_option("--threshold", threshold, "Consistency ratio threshold")->capture_default_str();

  int code = kExitOk;
  std::function<int()> action;

  auto* init = app.add_subcommand("init", "Create a project from the builtin CI criteria or a criteria file");
  std::string init_name = "evaluation", criteria_file;
  bool force = false;
  init->add_option("--name", init_name, "Project name")->capture_default_str();
  init->add_option("--criteria", criteria_file, "Criteria set JSON file")->check(CLI::ExistingFile);
  init->add_flag("--force", force, "Overwrite an existing project file");
  init->callback([&] { action = [&] { return cmd_init(c, init_name, criteria_file, force); }; });

  auto* judge = app.add_subcommand("judge", "Import pairwise judgments (`Ci Cj intensity` per line) or enter them");
  std::string judge_file;
  bool interactive = false, replace = false;
  judge->add_option("file", judge_file, "Judgment file")->check(CLI::ExistingFile);
  judge->add_flag("-i,--interactive", interactive, "Prompt for each missing pair");
  judge->add_flag("--replace", replace, "Discard previously entered judgments first");
  judge->callback([&] { action = [&] { return cmd_judge(c, judge_file, interactive, replace, threshold); }; });

  auto* weights = app.add_subcommand("weights", "Derive weights and check consistency");
  std::string method = "eigenvector";
  bool allow = false;
  weights->add_option("--method", method, "eigenvector or geomean")->capture_default_str();
  weights->add_flag("--allow-inconsistent", allow, "Activate weights even when CoR exceeds the threshold");
  weights->callback([&] { action = [&] { return cmd_weights(c, method, allow, threshold); }; });

  auto* panel_cmd = app.add_subcommand("panel", "Elicit judgments from an LLM expert panel");
  PanelArgs pa;
  panel_cmd->add_option("--fixtures", pa.fixtures, "Replay recorded replies from this directory");
  panel_cmd->add_option("--record", pa.record, "Record every reply into this directory");
  panel_cmd->add_option("--model", pa.model, "Model name")->capture_default_str();
  panel_cmd->add_option("--mode", pa.mode, "panel or role-per-prompt")->capture_default_str();
  panel_cmd->add_option("--max-rounds", pa.max_rounds, "Refinement rounds")->capture_default_str()->check(CLI::Range(1, 20));
  panel_cmd->add_option("--top-k", pa.top_k, "Pairs sent back for revision")->capture_default_str();
  panel_cmd->add_option("--base-url", pa.base_url, "Chat-completion endpoint base URL");
  panel_cmd->add_option("--api-key-env", pa.api_key_env, "Environment variable holding the API key");
  panel_cmd->callback([&] { action = [&] { return cmd_panel(c, pa, threshold); }; });

  auto* score = app.add_subcommand("score", "Import rubric scores (`Ci | value | evidence | refs` per line)");
  std::string alternative, score_file;
  score->add_option("-a,--alternative", alternative, "Alternative name")->required();
  score->add_option("file", score_file, "Score file")->required()->check(CLI::ExistingFile);
  score->callback([&] { action = [&] { return cmd_score(c, alternative, score_file); }; });

  auto* aggregate = app.add_subcommand("aggregate", "Compute composites and profiles");
  std::string normalization = "raw";
  aggregate->add_option("--normalization", normalization, "raw or min-max")->capture_default_str();
  aggregate->callback([&] { action = [&] { return cmd_aggregate(c, normalization); }; });

  auto* sens = app.add_subcommand("sensitivity", "Sweep each weight and report rank reversals");
  double range = 0.15;
  int steps = 61;
  sens->add_option("--range", range, "Largest weight shift")->capture_default_str()->check(CLI::Range(1e-9, 1.0));
  sens->add_option("--steps", steps, "Grid points over [-range, range]")->capture_default_str()->check(CLI::Range(1, 10001));
  sens->callback([&] { action = [&] { return cmd_sensitivity(c, range, steps); }; });

  auto* report = app.add_subcommand("report", "Write the evaluation report");
  std::string kind = "summary", output, chart;
  report->add_option("--kind", kind, "summary or full")->capture_default_str();
  report->add_option("-o,--output", output, "Report file (default: standard output)");
  report->add_option("--chart", chart, "Also write spider-chart data (JSON) here");
  report->callback([&] { action = [&] { return cmd_report(c, kind, output, chart); }; });

  auto* verify = app.add_subcommand("verify-paper", "Check the reference case against the published values");
  verify->callback([&] { action = [&] { return cmd_verify_paper(c); }; });

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  ServeArgs sa;
  serve->add_option("--config", sa.config, "JSON config file")->check(CLI::ExistingFile);
  serve->add_option("--host", sa.host, "Listen address");
  serve->add_option("--port", sa.port, "Listen port (0 picks one)");
  serve->add_option("--data-dir", sa.data_dir, "Session directory");
  serve->add_option("--fixtures", sa.fixtures, "Replay LLM replies from this directory");
  serve->add_option("--model", sa.model, "Model name");
  serve->add_option("--llm-base-url", sa.llm_base_url, "Chat-completion endpoint base URL");
  serve->add_option("--api-key-env", sa.api_key_env, "Environment variable holding the API key");
  serve->add_option("--token", sa.token, "Require this bearer token");
  serve->add_option("--consistency-threshold", sa.threshold, "Consistency ratio threshold");
  serve->callback([&] { action = [&] { return cmd_serve(c, sa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e, out, err);
    return r == 0 ? kExitOk : kExitValidation;
  }
  try {
    code = action();
  } catch (const Error& e) {
    fmt::print(err, "error: {}: {}\n", to_string(e.kind()), e.what());
    code = exit_code_for(e);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    code = kExitFailure;
  }
  return code;
}

}  // namespace ahpeval::cli
