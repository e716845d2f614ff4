#include <cmath>
#include <fstream>
#include <thread>

#include "doctest.h"

#include "ahpeval/panel/client.hpp"
#include "ahpeval/reference_case.hpp"
#include "ahpeval/service/config.hpp"
#include "support/oracles.hpp"
#include "support/replies.hpp"
#include "support/service_harness.hpp"

using namespace ahpeval;
using harness::Json;

namespace {

service::ServiceConfig config_for(const std::string& name) {
  service::ServiceConfig c;
  c.data_dir = harness::fresh_dir(name);
  return c;
}

std::string create(harness::LiveService& svc) {
  const auto r = svc.post("/api/v1/sessions", Json{{"name", "t"}, {"builtin_criteria", true}});
  REQUIRE(r.status == 201);
  return r.body["id"].get<std::string>();
}

std::string path(const std::string& id, const std::string& tail = {}) {
  return "/api/v1/sessions/" + id + tail;
}

std::vector<double> raw(const std::vector<criteria::RubricScore>& scores) {
  std::vector<double> out;
  for (const auto& s : scores) out.push_back(s.value);
  return out;
}

}  // namespace

TEST_CASE("full pipeline over HTTP") {
  harness::LiveService svc(config_for("pipeline"));
  const auto id = create(svc);

  const auto last = harness::enter_reference_judgments(svc, id);
  CHECK(last["entered"] == 45);
  CHECK(last["complete"] == true);
  CHECK(std::abs(last["report"]["cor"].get<double>() - 0.069) <= 0.002);
  CHECK(last["state"] == "comparing");

  const auto weights = svc.post(path(id, "/weights"), Json{{"method", "eigenvector"}});
  REQUIRE(weights.status == 200);
  CHECK(weights.body["unverified"] == false);
  CHECK(weights.body["state"] == "weights-ready");
  const auto published = reference::published_weights();
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::abs(weights.body["weights"]["weights"][k].get<double>() - published.weights[k]) <= 0.002);
  }
  CHECK(std::abs(weights.body["report"]["lambda_max"].get<double>() - 10.92) <= 0.01);
  CHECK(weights.body["report"]["acceptable"] == true);

  CHECK(svc.put(path(id, "/scores"), harness::scores_body("PowerCyber", reference::powercyber_scores())).status == 200);
  CHECK(svc.put(path(id, "/scores"), harness::scores_body("ENIGMA", reference::enigma_scores())).status == 200);

  const auto agg = svc.post(path(id, "/aggregate"));
  REQUIRE(agg.status == 200);
  std::vector<double> w;
  for (const auto& v : weights.body["weights"]["weights"]) w.push_back(v.get<double>());
  CHECK(agg.body["ranking"][0]["alternative"] == "PowerCyber");
  CHECK(std::abs(agg.body["ranking"][0]["composite"].get<double>() - oracle::dot(w, raw(reference::powercyber_scores()))) <= 1e-12);
  CHECK(std::abs(agg.body["ranking"][1]["composite"].get<double>() - 2.65) <= 0.005);

  const auto sens = svc.post(path(id, "/sensitivity"), Json{{"range", 0.15}, {"steps", 61}});
  REQUIRE(sens.status == 200);
  CHECK(sens.body["criticality"].size() == 10);

  const auto report = svc.get(path(id, "/report?kind=full"));
  REQUIRE(report.status == 200);
  CHECK(report.body["text"].get<std::string>().find("Ranking: PowerCyber > ENIGMA") != std::string::npos);
  const auto chart = svc.get(path(id, "/chart"));
  CHECK(chart.body["chart"]["series"].size() == 2);

  const auto summary = svc.get(path(id));
  CHECK(summary.body["state"] == "complete");
  CHECK(summary.body["revision"] == 51);  // create, 45 judgments, weights, 2 score sheets, aggregate, sensitivity
}

TEST_CASE("stale revisions are rejected") {
  harness::LiveService svc(config_for("revision"));
  const auto id = create(svc);
  const Json put{{"first", "C1"}, {"second", "C2"}, {"value", "3"}, {"revision", 1}};
  const auto ok = svc.put(path(id, "/judgments"), put);
  REQUIRE(ok.status == 200);
  CHECK(ok.body["revision"] == 2);
  auto stale = put;
  stale["value"] = "5";
  const auto conflict = svc.put(path(id, "/judgments"), stale);
  CHECK(conflict.status == 409);
  CHECK(conflict.body["error"]["kind"] == "conflict");
  CHECK(svc.get(path(id, "/judgments")).body["judgments"][0]["value"] == "3");
}

TEST_CASE("judgment puts are idempotent") {
  harness::LiveService svc(config_for("idempotent"));
  const auto id = create(svc);
  const Json put{{"first", "C2"}, {"second", "C1"}, {"value", "1/3"}};
  CHECK(svc.put(path(id, "/judgments"), put).body["revision"] == 2);
  CHECK(svc.put(path(id, "/judgments"), put).body["revision"] == 2);
  const auto list = svc.get(path(id, "/judgments")).body;
  CHECK(list["judgments"][0]["first"] == "C1");
  CHECK(list["judgments"][0]["value"] == "3");
}

TEST_CASE("incomplete matrix names the missing pair") {
  harness::LiveService svc(config_for("incomplete"));
  const auto id = create(svc);
  const auto last = harness::enter_reference_judgments(svc, id, 44);
  CHECK(last["missing"] == Json::array({Json::array({"C9", "C10"})}));
  const auto r = svc.post(path(id, "/weights"));
  CHECK(r.status == 422);
  CHECK(r.body["error"]["kind"] == "incomplete-matrix");
  CHECK(r.body["error"]["message"].get<std::string>().find("(C9, C10)") != std::string::npos);
}

TEST_CASE("inconsistent weights need an explicit override and are marked") {
  harness::LiveService svc(config_for("gate"));
  const auto id = create(svc);
  harness::enter_reference_judgments(svc, id);
  svc.put(path(id, "/judgments"), Json{{"first", "C1"}, {"second", "C9"}, {"value", "1/9"}});
  const auto refused = svc.post(path(id, "/weights"));
  CHECK(refused.status == 422);
  CHECK(refused.body["error"]["kind"] == "consistency-gate");
  CHECK(refused.body["report"]["acceptable"] == false);
  CHECK(refused.body["report"]["worst_judgments"][0] == Json{{"first", "C1"}, {"second", "C9"}, {"deviation", refused.body["report"]["worst_judgments"][0]["deviation"]}});
  CHECK(!refused.body.contains("weights"));
  const auto forced = svc.post(path(id, "/weights"), Json{{"override", true}});
  CHECK(forced.status == 200);
  CHECK(forced.body["unverified"] == true);
  CHECK(svc.get(path(id)).body["weights"]["unverified"] == true);

  // Changing a judgment drops the weights.
  svc.put(path(id, "/judgments"), Json{{"first", "C1"}, {"second", "C9"}, {"value", "9"}});
  const auto summary = svc.get(path(id)).body;
  CHECK(summary["weights"].is_null());
  CHECK(summary["state"] == "comparing");
}

TEST_CASE("state, validation and lookup errors") {
  harness::LiveService svc(config_for("errors"));
  CHECK(svc.get(path("abcdef")).status == 404);
  CHECK(svc.post("/api/v1/sessions", Json::object()).status == 422);
  CHECK(svc.raw_post("/api/v1/sessions", "{\"name\": ").status == 400);
  const auto id = create(svc);
  CHECK(svc.post(path(id, "/aggregate")).status == 409);
  CHECK(svc.put(path(id, "/scores"), harness::scores_body("X", reference::enigma_scores())).status == 409);
  const auto bad = svc.put(path(id, "/judgments"), Json{{"first", "C1"}, {"second", "C2"}, {"value", "6.5"}});
  CHECK(bad.status == 422);
  CHECK(bad.body["error"]["field"] == "value");
  CHECK(svc.put(path(id, "/judgments"), Json{{"first", "C1"}, {"second", "C77"}, {"value", "3"}}).status == 422);

  auto set = storage::encode(criteria::builtin_ci_criteria());
  set["criteria"][0]["anchors"].erase("3");
  const auto invalid = svc.put(path(id, "/criteria"), Json{{"criteria_set", set}});
  CHECK(invalid.status == 422);
  CHECK(invalid.body["error"]["field"] == "criteria_set.criteria[0].anchors");

  svc.put(path(id, "/judgments"), Json{{"first", "C1"}, {"second", "C2"}, {"value", "3"}});
  CHECK(svc.put(path(id, "/criteria"), Json{{"criteria_set", storage::encode(criteria::builtin_ci_criteria())}}).status == 409);
  CHECK(svc.get(path(id, "/report")).status == 409);
  CHECK(svc.get(path(id, "/panel/job-99")).status == 404);
}

TEST_CASE("custom criteria sets") {
  harness::LiveService svc(config_for("custom"));
  auto set = criteria::builtin_ci_criteria();
  set.criteria.resize(3);
  set.name = "three";
  const auto r = svc.post("/api/v1/sessions", Json{{"criteria_set", storage::encode(set)}});
  REQUIRE(r.status == 201);
  const auto id = r.body["id"].get<std::string>();
  CHECK(r.body["judgments"]["required"] == 3);
  CHECK(svc.get(path(id, "/criteria")).body["criteria_set"]["name"] == "three");
  set.criteria.resize(2);
  CHECK(svc.put(path(id, "/criteria"), Json{{"criteria_set", storage::encode(set)}}).body["criteria_set"]["criteria"].size() == 2);
}

TEST_CASE("bearer token") {
  auto config = config_for("auth");
  config.bearer_token = "s3cret";
  harness::LiveService svc(config);
  CHECK(svc.get("/api/v1/sessions").status == 401);
  svc.set_token("s3cret");
  CHECK(svc.get("/api/v1/sessions").status == 200);
}

TEST_CASE("sessions survive a restart") {
  auto config = config_for("restart");
  std::string id;
  Json before;
  {
    harness::LiveService svc(config);
    id = create(svc);
    harness::enter_reference_judgments(svc, id);
    svc.post(path(id, "/weights"));
    before = svc.get(path(id)).body;
  }
  harness::LiveService again(config);
  CHECK(again.get(path(id)).body == before);
}

TEST_CASE("panel elicitation job with refinement, then accept") {
  const auto set = criteria::builtin_ci_criteria();
  const auto base = reference::consensus_matrix();
  const auto flipped = base.with_entry(0, 8, ahp::Ratio(1, 9));
  const auto report = ahp::consistency(flipped);
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < 5; ++r) {
    const auto& d = report.worst_judgments[r];
    lines.push_back(set.criteria[d.i].id + ", " + set.criteria[d.j].id + ", " + base.at(d.i, d.j).to_string() + ", revised");
  }
  const std::vector<std::string> script{replies::from_matrix(flipped, set), replies::revision(lines)};
  harness::LiveService svc(config_for("panel"), [script] { return std::make_unique<panel::ScriptedClient>(script); });
  const auto id = create(svc);

  const auto started = svc.post(path(id, "/panel"), Json{{"max_rounds", 3}});
  REQUIRE(started.status == 202);
  const auto job = started.body["job"].get<std::string>();
  svc.server().wait_for_jobs();
  const auto done = svc.get(path(id, "/panel/" + job));
  REQUIRE(done.body["status"] == "succeeded");
  CHECK(done.body["result"]["accepted"] == true);
  CHECK(done.body["result"]["rounds"] == 2);
  CHECK(done.body["transcript"].size() == 2);
  CHECK(done.body["transcript"][1]["kind"] == "refinement");

  const auto accepted = svc.post(path(id, "/panel/" + job + "/accept"));
  REQUIRE(accepted.status == 200);
  CHECK(accepted.body["complete"] == true);
  CHECK(std::abs(accepted.body["report"]["cor"].get<double>() - 0.069) <= 0.002);
  CHECK(svc.post(path(id, "/weights")).body["unverified"] == false);
  CHECK(svc.get(path(id)).body["panel_runs"] == 1);
}

TEST_CASE("failed panel job reports the transport error") {
  harness::LiveService svc(config_for("panel-fail"),
                           [] { return std::make_unique<panel::ScriptedClient>(std::vector<std::string>{}); });
  const auto id = create(svc);
  const auto job = svc.post(path(id, "/panel")).body["job"].get<std::string>();
  svc.server().wait_for_jobs();
  const auto done = svc.get(path(id, "/panel/" + job)).body;
  CHECK(done["status"] == "failed");
  CHECK(done["error"]["kind"] == "elicitation-transport");
  CHECK(svc.post(path(id, "/panel/" + job + "/accept")).status == 409);
}

TEST_CASE("config file and environment overrides") {
  const auto dir = harness::fresh_dir("config");
  const auto file = dir / "service.json";
  std::ofstream(file) << R"({"port": 9000, "model": "m1", "consistency_threshold": 0.08, "fixture_dir": "fx"})";
  auto env = [](const std::string& name) -> std::optional<std::string> {
    if (name == "AHPEVAL_PORT") return "9100";
    if (name == "AHPEVAL_TOKEN") return "tok";
    return std::nullopt;
  };
  const auto c = service::load_config(file, env);
  CHECK(c.port == 9100);
  CHECK(c.model == "m1");
  CHECK(c.bearer_token == "tok");
  CHECK(c.consistency_threshold == 0.08);
  CHECK(c.fixture_dir == std::filesystem::path("fx"));

  std::ofstream(file) << R"({"prot": 1})";
  CHECK_THROWS_AS(service::load_config(file, env), ValidationError);
  auto bad_env = [](const std::string& name) -> std::optional<std::string> {
    if (name == "AHPEVAL_PORT") return "eighty";
    return std::nullopt;
  };
  CHECK_THROWS_AS(service::load_config(std::nullopt, bad_env), ValidationError);
}

TEST_CASE("concurrent writers to one session are serialized") {
  harness::LiveService svc(config_for("concurrent"));
  const auto id = create(svc);
  const auto set = criteria::builtin_ci_criteria();
  std::vector<std::thread> writers;
  for (std::size_t i = 0; i < 9; ++i) {
    writers.emplace_back([&, i] {
      httplib::Client client("127.0.0.1", svc.port());
      for (std::size_t j = i + 1; j < 10; ++j) {
        const Json body{{"first", set.criteria[i].id}, {"second", set.criteria[j].id}, {"value", "2"}};
        client.Put(path(id, "/judgments"), body.dump(), "application/json");
      }
    });
  }
  for (auto& t : writers) t.join();
  const auto summary = svc.get(path(id)).body;
  CHECK(summary["judgments"]["entered"] == 45);
  CHECK(summary["revision"] == 46);
}
