#include "ahpeval/service/server.hpp"

#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include <fmt/core.h>

#include "ahpeval/panel/elicitation.hpp"
#include "ahpeval/storage/json_codec.hpp"
#include "ahpeval/storage/report.hpp"
#include "ahpeval/storage/workflow.hpp"
#include "httplib.h"

namespace ahpeval::service {

namespace {

using storage::Json;
using storage::Project;
namespace f = storage::field;

constexpr const char* kSessionPath = R"(/api/v1/sessions/([0-9a-f]+))";

void respond(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

int status_for(const Error& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return 422;
  switch (e.kind()) {
    case ErrorKind::kNotFound: return 404;
    case ErrorKind::kConflict:
    case ErrorKind::kInvalidState: return 409;
    case ErrorKind::kParse: return 400;
    case ErrorKind::kTransport: return 502;
    case ErrorKind::kIo: return 500;
    default: return 422;
  }
}

Json error_body(const Error& e) {
  Json err{{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) err["field"] = v->field();
  if (const auto* m = dynamic_cast<const IncompleteMatrixError*>(&e)) {
    auto missing = Json::array();
    for (const auto& p : m->missing()) missing.push_back(Json::array({p.i, p.j}));
    err["missing"] = std::move(missing);
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e)) err["byte_offset"] = p->byte_offset();
  return Json{{"error", std::move(err)}};
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    auto j = Json::parse(req.body);
    if (!j.is_object()) f::fail("", "request body must be a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, fmt::format("request body is not valid JSON at byte {}", e.byte));
  }
}

std::optional<std::uint64_t> expected_revision(const httplib::Request& req, const Json& body) {
  if (const auto* r = f::optional(body, "", "revision")) return f::size(*r, "revision");
  if (req.has_header("If-Match")) {
    auto text = req.get_header_value("If-Match");
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
    try {
      std::size_t used = 0;
      const auto v = std::stoull(text, &used);
      if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(ErrorKind::kParse, "If-Match", "If-Match must carry a revision number");
  }
  return std::nullopt;
}

void require_state(const Project& p, std::initializer_list<SessionState> allowed, std::string_view action) {
  const auto state = state_of(p);
  for (auto s : allowed) {
    if (s == state) return;
  }
  std::string names;
  for (auto s : allowed) names += (names.empty() ? "" : ", ") + std::string(to_string(s));
  throw Error(ErrorKind::kInvalidState, fmt::format("cannot {} while the session is {} (allowed: {})", action,
                                                    to_string(state), names));
}

bool at_least(SessionState s, SessionState floor) { return static_cast<int>(s) >= static_cast<int>(floor); }

Json pair_json(const Project& p, const PairIndex& pair) {
  return Json::array({p.criteria_set.criteria[pair.i].id, p.criteria_set.criteria[pair.j].id});
}

Json report_json(const Project& p, const ahp::ConsistencyReport& r) {
  auto j = storage::encode(r);
  auto worst = Json::array();
  for (const auto& d : r.worst_judgments) {
    worst.push_back(Json{{"first", p.criteria_set.criteria[d.i].id},
                         {"second", p.criteria_set.criteria[d.j].id},
                         {"deviation", d.deviation}});
  }
  j["worst_judgments"] = std::move(worst);
  return j;
}

Json draft_json(const Project& p, double threshold) {
  const auto status = storage::draft_status(p, threshold);
  auto missing = Json::array();
  for (const auto& m : status.missing) missing.push_back(pair_json(p, m));
  return Json{{"entered", status.entered},
              {"required", status.required},
              {"complete", status.missing.empty()},
              {"missing", std::move(missing)},
              {"report", status.report ? report_json(p, *status.report) : Json(nullptr)}};
}

// Every weight payload carries "unverified"; it is true whenever the weights
// did not pass the consistency gate.
Json weights_json(const Project& p) {
  if (!p.active_weights) return nullptr;
  const auto& a = *p.active_weights;
  Json j{{"weights", storage::encode(a.weights)},
         {"unverified", a.override_unverified},
         {"matrix_index", a.matrix_index ? Json(*a.matrix_index) : Json(nullptr)},
         {"report", a.matrix_index ? report_json(p, p.matrices[*a.matrix_index].report) : Json(nullptr)}};
  return j;
}

Json summary_json(const Project& p, double threshold) {
  auto alternatives = Json::array();
  for (const auto& s : p.score_sheets) alternatives.push_back(s.alternative);
  return Json{{"id", p.session->id},
              {"name", p.metadata.name},
              {"state", p.session->state},
              {"criteria_set", storage::encode(p.criteria_set.ref())},
              {"judgments", draft_json(p, threshold)},
              {"matrices", p.matrices.size()},
              {"weights", weights_json(p)},
              {"alternatives", std::move(alternatives)},
              {"evaluations", p.evaluations.size()},
              {"sensitivity_reports", p.sensitivity_reports.size()},
              {"panel_runs", p.transcripts.size()}};
}

// A changed judgment invalidates everything derived from the old matrix.
void invalidate_weights(Project& p) {
  p.active_weights.reset();
  p.evaluations.clear();
  set_state(p, SessionState::kComparing);
}

struct Job {
  std::string id;
  std::string session;
  std::mutex mutex;
  std::string status = "running";
  std::vector<panel::TranscriptEntry> progress;
  std::optional<panel::ElicitationResult> result;
  std::optional<std::size_t> run_index;
  Json error;
  std::thread thread;
};

}  // namespace

ClientFactory default_client_factory(const ServiceConfig& config) {
  if (config.fixture_dir) {
    const auto dir = *config.fixture_dir;
    return [dir] { return std::make_unique<panel::FixtureClient>(dir); };
  }
  const auto llm = config.llm;
  return [llm] { return std::make_unique<panel::HttpChatClient>(llm); };
}

struct Server::Impl {
  ServiceConfig config;
  ClientFactory clients;
  SessionStore::Clock clock;
  SessionStore store;
  httplib::Server http;

  std::mutex jobs_mutex;
  std::map<std::string, std::shared_ptr<Job>> jobs;
  std::atomic<std::uint64_t> job_counter{0};

  Impl(ServiceConfig c, ClientFactory factory, SessionStore::Clock clk)
      : config(std::move(c)),
        clients(factory ? std::move(factory) : default_client_factory(config)),
        clock(clk ? std::move(clk) : SessionStore::Clock(panel::utc_now_iso8601)),
        store(config.data_dir, clock) {
    routes();
  }

  ~Impl() { join_jobs(); }

  void join_jobs() {
    std::vector<std::shared_ptr<Job>> all;
    {
      std::lock_guard lock(jobs_mutex);
      for (auto& [id, job] : jobs) all.push_back(job);
    }
    for (auto& job : all) {
      if (job->thread.joinable()) job->thread.join();
    }
  }

  template <class F>
  httplib::Server::Handler guarded(F handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const Error& e) {
        respond(res, status_for(e), error_body(e));
      } catch (const std::exception& e) {
        respond(res, 500, Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}});
      }
    };
  }

  void routes() {
    const double threshold = config.consistency_threshold;
    const std::string base = kSessionPath;

    http.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
      if (config.bearer_token.empty()) return httplib::Server::HandlerResponse::Unhandled;
      if (req.get_header_value("Authorization") == "Bearer " + config.bearer_token) {
        return httplib::Server::HandlerResponse::Unhandled;
      }
      respond(res, 401, Json{{"error", {{"kind", "unauthorized"}, {"message", "missing or wrong bearer token"}}}});
      return httplib::Server::HandlerResponse::Handled;
    });

    http.Get("/api/v1/health", [](const httplib::Request&, httplib::Response& res) {
      respond(res, 200, Json{{"status", "ok"}});
    });

    http.Post("/api/v1/sessions", guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      std::string name = "session";
      if (const auto* n = f::optional(body, "", "name")) name = f::string(*n, "name");
      criteria::CriteriaSet set;
      const auto* custom = f::optional(body, "", "criteria_set");
      const auto* builtin = f::optional(body, "", "builtin_criteria");
      if (custom && builtin && f::boolean(*builtin, "builtin_criteria")) {
        f::fail("criteria_set", "give either criteria_set or builtin_criteria, not both");
      }
      if (custom) {
        set = storage::decode_criteria_set(*custom, "criteria_set");
      } else if (builtin && f::boolean(*builtin, "builtin_criteria")) {
        set = criteria::builtin_ci_criteria();
      } else {
        f::fail("criteria_set", "a criteria set is required (or builtin_criteria: true)");
      }
      const auto id = store.create(storage::new_project(name, std::move(set), clock()));
      respond(res, 201, store.read(id, [&](const Project& p) { return summary_json(p, threshold); }));
    }));

    http.Get("/api/v1/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
      auto ids = Json::array();
      for (const auto& id : store.ids()) ids.push_back(id);
      respond(res, 200, Json{{"sessions", std::move(ids)}});
    }));

    http.Get(base, guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
      respond(res, 200, store.read(req.matches[1], [&](const Project& p) { return summary_json(p, threshold); }));
    }));

    http.Get(base + "/criteria", guarded([this](const httplib::Request& req, httplib::Response& res) {
      respond(res, 200, store.read(req.matches[1], [](const Project& p) {
        return Json{{"criteria_set", storage::encode(p.criteria_set)}};
      }));
    }));

    http.Put(base + "/criteria", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      auto set = storage::decode_criteria_set(f::require(body, "", "criteria_set"), "criteria_set");
      try {
        criteria::validate(set);
      } catch (const ValidationError& e) {
        throw ValidationError(e.kind(), "criteria_set." + e.field(), e.what());
      }
      respond(res, 200, store.mutate(req.matches[1], expected_revision(req, body), [&](Project& p) {
        require_state(p, {SessionState::kDefiningCriteria}, "change the criteria set");
        p.criteria_set = set;
        p.draft_judgments.clear();
        return Json{{"criteria_set", storage::encode(p.criteria_set)}};
      }));
    }));

    http.Get(base + "/judgments", guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
      respond(res, 200, store.read(req.matches[1], [&](const Project& p) {
        auto j = draft_json(p, threshold);
        auto list = Json::array();
        for (const auto& d : p.draft_judgments) {
          list.push_back(Json{{"first", p.criteria_set.criteria[d.pair.i].id},
                              {"second", p.criteria_set.criteria[d.pair.j].id},
                              {"value", storage::encode(d.value)},
                              {"rationale", d.rationale}});
        }
        j["judgments"] = std::move(list);
        return j;
      }));
    }));

    http.Put(base + "/judgments", guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      const auto first = f::string(f::require(body, "", "first"), "first");
      const auto second = f::string(f::require(body, "", "second"), "second");
      const auto value = storage::decode_saaty(f::require(body, "", "value"), "value");
      std::string rationale;
      if (const auto* r = f::optional(body, "", "rationale")) rationale = f::string(*r, "rationale");
      respond(res, 200, store.mutate(req.matches[1], expected_revision(req, body), [&](Project& p) {
        const auto before = p.draft_judgments;
        storage::put_judgment(p, first, second, value, rationale, threshold);
        if (p.draft_judgments != before) {
          if (at_least(state_of(p), SessionState::kWeightsReady)) invalidate_weights(p);
          set_state(p, SessionState::kComparing);
        }
        auto j = draft_json(p, threshold);
        j["state"] = p.session->state;
        return j;
      }));
    }));

    http.Post(base + "/weights", guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      auto method = ahp::WeightingMethod::kPrincipalEigenvector;
      if (const auto* m = f::optional(body, "", "method")) {
        const auto text = f::string(*m, "method");
        try {
          method = ahp::parse_weighting_method(text);
        } catch (const Error& e) {
          throw ValidationError(ErrorKind::kInvalidArgument, "method", e.what());
        }
      }
      bool override_gate = false;
      if (const auto* o = f::optional(body, "", "override")) override_gate = f::boolean(*o, "override");
      const std::string id = req.matches[1];
      try {
        respond(res, 200, store.mutate(id, expected_revision(req, body), [&](Project& p) {
          require_state(p,
                        {SessionState::kComparing, SessionState::kWeightsReady, SessionState::kScoring,
                         SessionState::kComplete},
                        "derive weights");
          const auto matrix = storage::draft_matrix(p);
          std::optional<std::size_t> index;
          for (std::size_t k = p.matrices.size(); k-- > 0;) {
            if (p.matrices[k].matrix.upper() == matrix.upper() &&
                p.matrices[k].report.threshold == threshold) {
              index = k;
              break;
            }
          }
          if (!index) index = storage::add_matrix(p, matrix, storage::MatrixOrigin::kManual, threshold);
          storage::activate_weights(p, *index, method, override_gate, clock());
          set_state(p, p.score_sheets.empty() ? SessionState::kWeightsReady : SessionState::kScoring);
          auto j = weights_json(p);
          j["state"] = p.session->state;
          return j;
        }));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kConsistencyGate) throw;
        auto body_out = error_body(e);
        body_out["report"] = store.read(id, [&](const Project& p) {
          return report_json(p, ahp::consistency(storage::draft_matrix(p), ahp::RandomIndexTable::saaty(),
                                                 threshold));
        });
        body_out["report"].erase("revision");
        respond(res, 422, body_out);
      }
    }));

    http.Put(base + "/scores", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      const auto alternative = f::string(f::require(body, "", "alternative"), "alternative");
      std::vector<criteria::RubricScore> scores;
      const auto& list = f::array(f::require(body, "", "scores"), "scores");
      for (std::size_t k = 0; k < list.size(); ++k) scores.push_back(storage::decode_score(list[k], f::index("scores", k)));
      respond(res, 200, store.mutate(req.matches[1], expected_revision(req, body), [&](Project& p) {
        require_state(p, {SessionState::kWeightsReady, SessionState::kScoring, SessionState::kComplete},
                      "enter scores");
        const auto before = p.score_sheets;
        storage::put_scores(p, alternative, scores);
        if (p.score_sheets != before) {
          p.evaluations.clear();
          set_state(p, SessionState::kScoring);
        }
        auto names = Json::array();
        for (const auto& s : p.score_sheets) names.push_back(s.alternative);
        return Json{{"alternative", alternative}, {"alternatives", std::move(names)}, {"state", p.session->state}};
      }));
    }));

    http.Post(base + "/aggregate", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      auto mode = criteria::Normalization::kRaw1To5;
      if (const auto* m = f::optional(body, "", "normalization")) {
        const auto text = f::string(*m, "normalization");
        try {
          mode = criteria::parse_normalization(text);
        } catch (const Error& e) {
          throw ValidationError(ErrorKind::kInvalidArgument, "normalization", e.what());
        }
      }
      respond(res, 200, store.mutate(req.matches[1], expected_revision(req, body), [&](Project& p) {
        require_state(p, {SessionState::kScoring, SessionState::kComplete}, "aggregate");
        const auto& evaluations = storage::aggregate_all(p, mode);
        set_state(p, SessionState::kComplete);
        auto list = Json::array();
        for (const auto& e : evaluations) list.push_back(storage::encode(e));
        return Json{{"evaluations", std::move(list)},
                    {"ranking", storage::encode(sensitivity::rank_alternatives(evaluations, p.active_weights->weights))},
                    {"weights_unverified", p.active_weights->override_unverified},
                    {"state", p.session->state}};
      }));
    }));

    http.Post(base + "/sensitivity", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parse_body(req);
      sensitivity::SweepOptions options;
      if (const auto* r = f::optional(body, "", "range")) options.range = f::number(*r, "range");
      if (const auto* s = f::optional(body, "", "steps")) options.steps = static_cast<int>(f::integer(*s, "steps"));
      if (!(options.range > 0.0 && options.range <= 1.0)) f::fail("range", "must be in (0, 1]");
      if (options.steps < 1 || options.steps > 10001) f::fail("steps", "must be in 1..10001");
      respond(res, 200, store.mutate(req.matches[1], expected_revision(req, body), [&](Project& p) {
        require_state(p, {SessionState::kComplete}, "run a sensitivity analysis");
        auto j = storage::encode(storage::run_sensitivity(p, options));
        j["weights_unverified"] = p.active_weights->override_unverified;
        return j;
      }));
    }));

    http.Get(base + "/report", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto kind_text = req.has_param("kind") ? req.get_param_value("kind") : "summary";
      storage::ReportKind kind;
      try {
        kind = storage::parse_report_kind(kind_text);
      } catch (const Error& e) {
        throw ValidationError(ErrorKind::kInvalidArgument, "kind", e.what());
      }
      respond(res, 200, store.read(req.matches[1], [&](const Project& p) {
        require_state(p, {SessionState::kComplete}, "produce a report");
        return Json{{"kind", storage::to_string(kind)}, {"text", storage::export_report(p, kind)}};
      }));
    }));

    http.Get(base + "/chart", guarded([this](const httplib::Request& req, httplib::Response& res) {
      respond(res, 200, store.read(req.matches[1], [&](const Project& p) {
        require_state(p, {SessionState::kComplete}, "produce chart data");
        return Json{{"chart", storage::encode(storage::chart_data(p))}};
      }));
    }));

    http.Post(base + "/panel", guarded([this](const httplib::Request& req, httplib::Response& res) {
      start_panel(req, res);
    }));

    http.Get(base + "/panel/([0-9a-z-]+)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto job = find_job(req.matches[1], req.matches[2]);
      respond(res, 200, job_json(*job));
    }));

    http.Post(base + "/panel/([0-9a-z-]+)/accept",
              guarded([this, threshold](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                const auto job = find_job(req.matches[1], req.matches[2]);
                std::optional<std::size_t> run;
                {
                  std::lock_guard lock(job->mutex);
                  if (job->status != "succeeded") {
                    throw Error(ErrorKind::kInvalidState, "panel job " + job->id + " is " + job->status);
                  }
                  run = job->run_index;
                }
                respond(res, 200, store.mutate(job->session, expected_revision(req, body), [&](Project& p) {
                  const auto index = storage::accept_panel_run(p, *run, threshold);
                  invalidate_weights(p);
                  auto j = draft_json(p, threshold);
                  j["matrix_index"] = index;
                  j["state"] = p.session->state;
                  return j;
                }));
              }));
  }

  std::shared_ptr<Job> find_job(const std::string& session, const std::string& id) {
    std::lock_guard lock(jobs_mutex);
    const auto it = jobs.find(id);
    if (it == jobs.end() || it->second->session != session) {
      throw Error(ErrorKind::kNotFound, "no panel job '" + id + "' in session " + session);
    }
    return it->second;
  }

  static Json job_json(Job& job) {
    std::lock_guard lock(job.mutex);
    auto transcript = Json::array();
    const auto& entries = job.result ? job.result->transcript : job.progress;
    for (const auto& e : entries) transcript.push_back(storage::encode(e));
    Json j{{"job", job.id},
           {"session", job.session},
           {"status", job.status},
           {"rounds_completed", entries.empty() ? 0 : entries.back().round},
           {"transcript", std::move(transcript)}};
    if (job.result) {
      j["result"] = Json{{"accepted", job.result->accepted},
                         {"rounds", job.result->rounds},
                         {"best_round", job.result->best_round},
                         {"report", storage::encode(job.result->report)},
                         {"judgments", storage::encode(job.result->judgments)},
                         {"run_index", job.run_index ? Json(*job.run_index) : Json(nullptr)}};
    }
    if (!job.error.is_null()) j["error"] = job.error;
    return j;
  }

  void start_panel(const httplib::Request& req, httplib::Response& res) {
    const auto body = parse_body(req);
    const std::string session = req.matches[1];
    panel::ElicitationRequest request;
    request.consistency_threshold = config.consistency_threshold;
    int max_rounds = config.max_rounds;
    if (const auto* m = f::optional(body, "", "mode")) {
      const auto text = f::string(*m, "mode");
      try {
        request.mode = panel::parse_elicitation_mode(text);
      } catch (const Error& e) {
        throw ValidationError(ErrorKind::kInvalidArgument, "mode", e.what());
      }
    }
    if (const auto* r = f::optional(body, "", "max_rounds")) max_rounds = static_cast<int>(f::integer(*r, "max_rounds"));
    if (max_rounds < 1 || max_rounds > 20) f::fail("max_rounds", "must be in 1..20");
    if (const auto* k = f::optional(body, "", "refinement_top_k")) {
      request.refinement_top_k = f::size(*k, "refinement_top_k");
    }
    store.read(session, [&](const Project& p) {
      request.criteria_set = p.criteria_set;
      return Json::object();
    });
    try {
      panel::validate(request);
    } catch (const ValidationError&) {
      throw;
    } catch (const Error& e) {
      throw ValidationError(e.kind(), "", e.what());
    }

    auto job = std::make_shared<Job>();
    job->id = fmt::format("job-{}", ++job_counter);
    job->session = session;
    {
      std::lock_guard lock(jobs_mutex);
      jobs[job->id] = job;
    }
    job->thread = std::thread([this, job, request, max_rounds] { run_job(job, request, max_rounds); });
    respond(res, 202, Json{{"job", job->id}, {"status", "running"}});
  }

  void run_job(const std::shared_ptr<Job>& job, const panel::ElicitationRequest& request, int max_rounds) {
    try {
      panel::ElicitationOptions options;
      options.model = config.model;
      options.clock = clock;
      options.on_round = [job](const std::vector<panel::TranscriptEntry>& t) {
        std::lock_guard lock(job->mutex);
        job->progress = t;
      };
      auto client = clients();
      auto result = panel::elicit_with_gate(request, *client, max_rounds, options);
      std::optional<std::size_t> run;
      store.mutate(job->session, std::nullopt, [&](Project& p) {
        run = storage::record_panel_run(p, result, config.model);
        return Json::object();
      });
      std::lock_guard lock(job->mutex);
      job->result = std::move(result);
      job->run_index = run;
      job->status = "succeeded";
    } catch (const Error& e) {
      std::lock_guard lock(job->mutex);
      job->status = "failed";
      job->error = error_body(e)["error"];
    } catch (const std::exception& e) {
      std::lock_guard lock(job->mutex);
      job->status = "failed";
      job->error = Json{{"kind", "internal"}, {"message", e.what()}};
    }
  }
};

Server::Server(ServiceConfig config, ClientFactory clients, SessionStore::Clock clock)
    : impl_(std::make_unique<Impl>(std::move(config), std::move(clients), std::move(clock))) {}

Server::~Server() {
  stop();
  impl_->join_jobs();
}

int Server::bind() {
  const auto& c = impl_->config;
  if (c.port == 0) {
    const int port = impl_->http.bind_to_any_port(c.host);
    if (port < 0) throw Error(ErrorKind::kIo, "cannot bind " + c.host);
    return port;
  }
  if (!impl_->http.bind_to_port(c.host, c.port)) {
    throw Error(ErrorKind::kIo, fmt::format("cannot bind {}:{}", c.host, c.port));
  }
  return c.port;
}

void Server::serve() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

void Server::wait_for_jobs() { impl_->join_jobs(); }

SessionStore& Server::sessions() { return impl_->store; }

}  // namespace ahpeval::service
