#include "ahpeval/storage/project.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/core.h>
#include <unistd.h>

namespace ahpeval::storage {

namespace {

using field::join;

std::string req_string(const Json& j, std::string_view path, const char* key) {
  return field::string(field::require(j, path, key), join(path, key));
}

template <class T, class F>
std::vector<T> optional_list(const Json& j, std::string_view path, const char* key, F decode_one) {
  std::vector<T> out;
  const auto* a = field::optional(j, path, key);
  if (!a) return out;
  const auto p = join(path, key);
  field::array(*a, p);
  for (std::size_t i = 0; i < a->size(); ++i) out.push_back(decode_one((*a)[i], field::index(p, i)));
  return out;
}

template <class T>
Json encode_list(const std::vector<T>& values) {
  auto out = Json::array();
  for (const auto& v : values) out.push_back(encode(v));
  return out;
}

[[noreturn]] void invalid(const std::string& where, const std::string& message) {
  throw ValidationError(ErrorKind::kInvalidArgument, where, where + ": " + message);
}

// Version 1 kept bare weights under "weights" and had no drafts, score
// sheets, session record or notes.
Json migrate_v1(Json j) {
  auto weights = j.contains("weights") ? j["weights"] : Json(nullptr);
  j.erase("weights");
  if (weights.is_null()) {
    j["active_weights"] = nullptr;
  } else {
    Json source = nullptr;
    if (j.contains("matrices") && j["matrices"].is_array()) {
      const auto& ms = j["matrices"];
      for (std::size_t k = ms.size(); k-- > 0;) {
        if (ms[k].contains("report") && ms[k]["report"].value("acceptable", false)) {
          source = k;
          break;
        }
      }
    }
    j["active_weights"] = Json{{"weights", std::move(weights)},
                               {"matrix_index", source},
                               {"override_unverified", source.is_null()}};
  }
  auto& meta = j["metadata"];
  if (!meta.is_object()) field::fail("metadata", "expected an object");
  if (!meta.contains("notes")) meta["notes"] = Json::array();
  meta["notes"].push_back(fmt::format("migrated from schema version 1 to {}", kSchemaVersion));
  j["schema_version"] = kSchemaVersion;
  return j;
}

}  // namespace

std::string_view to_string(MatrixOrigin origin) {
  return origin == MatrixOrigin::kPanel ? "panel" : "manual";
}

MatrixOrigin parse_matrix_origin(std::string_view text) {
  if (text == "manual") return MatrixOrigin::kManual;
  if (text == "panel") return MatrixOrigin::kPanel;
  throw Error(ErrorKind::kInvalidArgument, "unknown matrix origin '" + std::string(text) + "'");
}

Project new_project(std::string name, criteria::CriteriaSet set, const std::string& now) {
  criteria::validate(set);
  Project p;
  p.metadata.name = std::move(name);
  p.metadata.created = now;
  p.metadata.modified = now;
  p.criteria_set = std::move(set);
  return p;
}

void validate(const Project& p) {
  if (p.metadata.schema_version != kSchemaVersion) {
    throw Error(ErrorKind::kVersionMismatch,
                fmt::format("schema version {} is not {}", p.metadata.schema_version, kSchemaVersion));
  }
  try {
    criteria::validate(p.criteria_set);
  } catch (const ValidationError& e) {
    throw ValidationError(e.kind(), "criteria_set." + e.field(), e.what());
  }
  const auto ids = p.criteria_set.ids();
  const auto n = ids.size();
  for (std::size_t k = 0; k < p.matrices.size(); ++k) {
    const auto& m = p.matrices[k];
    const auto where = field::index("matrices", k);
    if (m.matrix.order() != n || m.matrix.labels() != ids) {
      invalid(where, "matrix labels do not match the criteria set");
    }
    if (m.report.order != n || m.report.worst_judgments.size() != n * (n - 1) / 2) {
      invalid(where + ".report", "report does not describe an order-" + std::to_string(n) + " matrix");
    }
  }
  if (p.active_weights) {
    const auto& a = *p.active_weights;
    if (a.weights.labels != ids || a.weights.weights.size() != n) {
      invalid("active_weights.weights", "labels do not match the criteria set");
    }
    if (a.matrix_index && *a.matrix_index >= p.matrices.size()) {
      invalid("active_weights.matrix_index", "no such matrix");
    }
    if (!a.override_unverified &&
        (!a.matrix_index || !p.matrices[*a.matrix_index].report.acceptable)) {
      invalid("active_weights", "weights must come from an acceptable matrix or be flagged override-unverified");
    }
  }
  for (std::size_t k = 0; k < p.evaluations.size(); ++k) {
    if (p.evaluations[k].criteria_set != p.criteria_set.ref()) {
      invalid(field::index("evaluations", k) + ".criteria_set", "does not refer to this project's criteria set");
    }
  }
  for (std::size_t k = 0; k < p.draft_judgments.size(); ++k) {
    const auto& d = p.draft_judgments[k];
    if (d.pair.i >= d.pair.j || d.pair.j >= n) invalid(field::index("draft_judgments", k), "pair out of range");
    if (k > 0 && !(p.draft_judgments[k - 1].pair < d.pair)) {
      invalid(field::index("draft_judgments", k), "pairs must be unique and sorted");
    }
  }
  for (std::size_t k = 0; k < p.score_sheets.size(); ++k) {
    const auto& sheet = p.score_sheets[k];
    const auto where = field::index("score_sheets", k);
    for (std::size_t m = 0; m < k; ++m) {
      if (p.score_sheets[m].alternative == sheet.alternative) invalid(where, "duplicate alternative");
    }
    for (std::size_t s = 0; s < sheet.scores.size(); ++s) {
      if (!p.criteria_set.index_of(sheet.scores[s].criterion_id)) {
        invalid(field::index(where + ".scores", s), "unknown criterion '" + sheet.scores[s].criterion_id + "'");
      }
    }
  }
}

Json to_json(const Project& p) {
  const auto& ids = p.criteria_set.ids();
  auto notes = Json::array();
  for (const auto& n : p.metadata.notes) notes.push_back(n);

  auto matrices = Json::array();
  for (const auto& m : p.matrices) {
    matrices.push_back(Json{{"origin", to_string(m.origin)},
                            {"matrix", encode(m.matrix)},
                            {"report", encode(m.report)}});
  }
  Json active = nullptr;
  if (p.active_weights) {
    const auto& a = *p.active_weights;
    active = Json{{"weights", encode(a.weights)},
                  {"matrix_index", a.matrix_index ? Json(*a.matrix_index) : Json(nullptr)},
                  {"override_unverified", a.override_unverified}};
  }
  auto runs = Json::array();
  for (const auto& r : p.transcripts) {
    runs.push_back(Json{{"model", r.model},
                        {"accepted", r.accepted},
                        {"rounds", r.rounds},
                        {"best_round", r.best_round},
                        {"judgments", encode(r.judgments)},
                        {"entries", encode_list(r.entries)}});
  }
  auto drafts = Json::array();
  for (const auto& d : p.draft_judgments) {
    drafts.push_back(Json{{"first", ids.at(d.pair.i)},
                          {"second", ids.at(d.pair.j)},
                          {"value", encode(d.value)},
                          {"rationale", d.rationale}});
  }
  auto sheets = Json::array();
  for (const auto& s : p.score_sheets) {
    sheets.push_back(Json{{"alternative", s.alternative}, {"scores", encode_list(s.scores)}});
  }
  Json session = nullptr;
  if (p.session) {
    session = Json{{"id", p.session->id}, {"state", p.session->state}, {"revision", p.session->revision}};
  }
  return Json{{"schema_version", p.metadata.schema_version},
              {"metadata",
               {{"name", p.metadata.name},
                {"created", p.metadata.created},
                {"modified", p.metadata.modified},
                {"notes", std::move(notes)}}},
              {"criteria_set", encode(p.criteria_set)},
              {"matrices", std::move(matrices)},
              {"active_weights", std::move(active)},
              {"evaluations", encode_list(p.evaluations)},
              {"sensitivity_reports", encode_list(p.sensitivity_reports)},
              {"transcripts", std::move(runs)},
              {"draft_judgments", std::move(drafts)},
              {"score_sheets", std::move(sheets)},
              {"session", std::move(session)}};
}

Project project_from_json(const Json& input) {
  if (!input.is_object()) field::fail("", "expected an object");
  const auto version = field::integer(field::require(input, "", "schema_version"), "schema_version");
  if (version > kSchemaVersion || version < 1) {
    throw Error(ErrorKind::kVersionMismatch,
                fmt::format("schema version {} is not supported (this build reads 1..{})", version,
                            kSchemaVersion));
  }
  const Json j = version == 1 ? migrate_v1(input) : input;

  Project p;
  const auto& meta = field::require(j, "", "metadata");
  p.metadata.name = req_string(meta, "metadata", "name");
  p.metadata.created = req_string(meta, "metadata", "created");
  p.metadata.modified = req_string(meta, "metadata", "modified");
  if (const auto* notes = field::optional(meta, "metadata", "notes")) {
    p.metadata.notes = field::strings(*notes, "metadata.notes");
  }
  p.criteria_set = decode_criteria_set(field::require(j, "", "criteria_set"), "criteria_set");

  p.matrices = optional_list<StoredMatrix>(j, "", "matrices", [](const Json& e, std::string_view path) {
    const auto origin = req_string(e, path, "origin");
    if (origin != "manual" && origin != "panel") field::fail(join(path, "origin"), "expected manual or panel");
    return StoredMatrix{decode_matrix(field::require(e, path, "matrix"), join(path, "matrix")),
                        decode_consistency(field::require(e, path, "report"), join(path, "report")),
                        parse_matrix_origin(origin)};
  });
  if (const auto* a = field::optional(j, "", "active_weights")) {
    ActiveWeights w;
    w.weights = decode_weights(field::require(*a, "active_weights", "weights"), "active_weights.weights");
    if (const auto* idx = field::optional(*a, "active_weights", "matrix_index")) {
      w.matrix_index = field::size(*idx, "active_weights.matrix_index");
    }
    w.override_unverified = field::boolean(field::require(*a, "active_weights", "override_unverified"),
                                           "active_weights.override_unverified");
    p.active_weights = std::move(w);
  }
  p.evaluations = optional_list<criteria::Evaluation>(j, "", "evaluations", decode_evaluation);
  p.sensitivity_reports =
      optional_list<sensitivity::SensitivityReport>(j, "", "sensitivity_reports", decode_sensitivity);
  p.transcripts = optional_list<PanelRun>(j, "", "transcripts", [](const Json& e, std::string_view path) {
    PanelRun r;
    r.model = req_string(e, path, "model");
    r.accepted = field::boolean(field::require(e, path, "accepted"), join(path, "accepted"));
    r.rounds = static_cast<int>(field::integer(field::require(e, path, "rounds"), join(path, "rounds")));
    r.best_round =
        static_cast<int>(field::integer(field::require(e, path, "best_round"), join(path, "best_round")));
    r.judgments = decode_judgment_set(field::require(e, path, "judgments"), join(path, "judgments"));
    r.entries = optional_list<panel::TranscriptEntry>(e, path, "entries", decode_transcript_entry);
    return r;
  });
  p.draft_judgments =
      optional_list<DraftJudgment>(j, "", "draft_judgments", [&](const Json& e, std::string_view path) {
        const auto judgment = decode_judgment(e, path);
        const auto a = p.criteria_set.index_of(judgment.first);
        const auto b = p.criteria_set.index_of(judgment.second);
        if (!a || !b || *a >= *b) field::fail(path, "pair must name two criteria in set order");
        return DraftJudgment{{*a, *b}, judgment.value, judgment.rationale};
      });
  p.score_sheets = optional_list<ScoreSheet>(j, "", "score_sheets", [](const Json& e, std::string_view path) {
    ScoreSheet s;
    s.alternative = req_string(e, path, "alternative");
    s.scores = optional_list<criteria::RubricScore>(e, path, "scores", decode_score);
    return s;
  });
  if (const auto* s = field::optional(j, "", "session")) {
    SessionRecord r;
    r.id = req_string(*s, "session", "id");
    r.state = req_string(*s, "session", "state");
    r.revision = field::size(field::require(*s, "session", "revision"), "session.revision");
    p.session = std::move(r);
  }
  validate(p);
  return p;
}

std::string serialize(const Project& p) {
  validate(p);
  return to_json(p).dump(2) + "\n";
}

Project deserialize(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, fmt::format("project file is not valid JSON at byte {}: {}", e.byte, e.what()));
  }
  return project_from_json(j);
}

void save(const Project& p, const std::filesystem::path& destination) {
  const auto text = serialize(p);
  auto temp = destination;
  temp += fmt::format(".tmp-{}", ::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, destination, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorKind::kIo, "cannot replace " + destination.string());
  }
}

Project load(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + source.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return deserialize(buffer.str());
  } catch (Error& e) {
    e.add_context(source.string());
    throw;
  }
}

}  // namespace ahpeval::storage
