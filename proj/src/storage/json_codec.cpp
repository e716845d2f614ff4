#include "ahpeval/storage/json_codec.hpp"

#include <cmath>

namespace ahpeval::storage {

namespace field {

std::string join(std::string_view path, std::string_view key) {
  if (path.empty()) return std::string(key);
  return std::string(path) + "." + std::string(key);
}

std::string index(std::string_view path, std::size_t i) {
  return std::string(path) + "[" + std::to_string(i) + "]";
}

void fail(std::string_view path, const std::string& message) {
  const std::string where = path.empty() ? std::string("<root>") : std::string(path);
  throw ValidationError(ErrorKind::kParse, where, where + ": " + message);
}

const Json& require(const Json& object, std::string_view path, const char* key) {
  if (!object.is_object()) fail(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) fail(join(path, key), "missing");
  return *it;
}

const Json* optional(const Json& object, std::string_view path, const char* key) {
  if (!object.is_object()) fail(path, "expected an object");
  const auto it = object.find(key);
  if (it == object.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string string(const Json& j, std::string_view path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double number(const Json& j, std::string_view path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t integer(const Json& j, std::string_view path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t size(const Json& j, std::string_view path) {
  if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

bool boolean(const Json& j, std::string_view path) {
  if (!j.is_boolean()) fail(path, "expected true or false");
  return j.get<bool>();
}

const Json& array(const Json& j, std::string_view path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<std::string> strings(const Json& j, std::string_view path) {
  std::vector<std::string> out;
  const auto& a = array(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string(a[i], index(path, i)));
  return out;
}

}  // namespace field

namespace {

using field::join;

template <class F>
auto decode_list(const Json& j, std::string_view path, F decode_one) {
  using T = decltype(decode_one(j, path));
  std::vector<T> out;
  const auto& a = field::array(j, path);
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = field::index(path, i);
    out.push_back(decode_one(a[i], p));
  }
  return out;
}

template <class T>
Json encode_list(const std::vector<T>& values) {
  auto out = Json::array();
  for (const auto& v : values) out.push_back(encode(v));
  return out;
}

Json encode_strings(const std::vector<std::string>& values) {
  auto out = Json::array();
  for (const auto& v : values) out.push_back(v);
  return out;
}

std::string req_string(const Json& j, std::string_view path, const char* key) {
  return field::string(field::require(j, path, key), join(path, key));
}

double req_number(const Json& j, std::string_view path, const char* key) {
  return field::number(field::require(j, path, key), join(path, key));
}

// Re-raises library validation errors against the JSON path being decoded.
template <class F>
auto at_path(std::string_view path, F f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    field::fail(path, e.what());
  }
}

}  // namespace

Json encode(const ahp::Ratio& r) { return r.to_string(); }

Json encode(const ahp::SaatyJudgment& s) { return s.value().to_string(); }

ahp::Ratio decode_ratio(const Json& j, std::string_view path) {
  const auto text = field::string(j, path);
  return at_path(path, [&] { return ahp::Ratio::parse(text); });
}

ahp::SaatyJudgment decode_saaty(const Json& j, std::string_view path) {
  const auto text = field::string(j, path);
  const auto s = ahp::SaatyJudgment::try_parse(text);
  if (!s) field::fail(path, "'" + text + "' is not a Saaty intensity (1..9 or 1/k)");
  return *s;
}

// Upper triangle stored row by row: row i holds a_i,i+1 .. a_i,n.
Json encode(const ahp::PairwiseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i + 1 < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = i + 1; j < m.order(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"order", m.order()},
              {"labels", encode_strings(m.labels())},
              {"elicited", m.elicited()},
              {"upper", std::move(rows)}};
}

ahp::PairwiseMatrix decode_matrix(const Json& j, std::string_view path) {
  const auto n = field::size(field::require(j, path, "order"), join(path, "order"));
  auto labels = field::strings(field::require(j, path, "labels"), join(path, "labels"));
  const bool elicited = field::boolean(field::require(j, path, "elicited"), join(path, "elicited"));
  const auto upper_path = join(path, "upper");
  const auto& rows = field::array(field::require(j, path, "upper"), upper_path);
  if (n < 1 || rows.size() != n - 1) {
    field::fail(upper_path, "expected " + std::to_string(n == 0 ? 0 : n - 1) + " rows");
  }
  std::vector<ahp::Ratio> upper;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row_path = field::index(upper_path, i);
    const auto& row = field::array(rows[i], row_path);
    if (row.size() != n - 1 - i) {
      field::fail(row_path, "expected " + std::to_string(n - 1 - i) + " entries");
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      upper.push_back(decode_ratio(row[k], field::index(row_path, k)));
    }
  }
  return at_path(path, [&] {
    return ahp::PairwiseMatrix::from_upper(std::move(labels), std::move(upper), elicited);
  });
}

Json encode(const ahp::WeightVector& w) {
  auto weights = Json::array();
  for (double v : w.weights) weights.push_back(v);
  return Json{{"method", ahp::to_string(w.method)},
              {"labels", encode_strings(w.labels)},
              {"weights", std::move(weights)}};
}

ahp::WeightVector decode_weights(const Json& j, std::string_view path) {
  ahp::WeightVector w;
  const auto method_path = join(path, "method");
  const auto method = req_string(j, path, "method");
  w.method = at_path(method_path, [&] { return ahp::parse_weighting_method(method); });
  w.labels = field::strings(field::require(j, path, "labels"), join(path, "labels"));
  w.weights = decode_list(field::require(j, path, "weights"), join(path, "weights"),
                          [](const Json& e, std::string_view p) { return field::number(e, p); });
  if (w.labels.size() != w.weights.size()) field::fail(path, "labels and weights differ in length");
  return w;
}

Json encode(const ahp::ConsistencyReport& r) {
  auto worst = Json::array();
  for (const auto& d : r.worst_judgments) {
    worst.push_back(Json{{"i", d.i}, {"j", d.j}, {"deviation", d.deviation}});
  }
  return Json{{"order", r.order},
              {"lambda_max", r.lambda_max},
              {"coi", r.coi},
              {"roi", r.roi},
              {"cor", r.cor ? Json(*r.cor) : Json(nullptr)},
              {"threshold", r.threshold},
              {"acceptable", r.acceptable},
              {"worst_judgments", std::move(worst)}};
}

ahp::ConsistencyReport decode_consistency(const Json& j, std::string_view path) {
  ahp::ConsistencyReport r;
  r.order = field::size(field::require(j, path, "order"), join(path, "order"));
  r.lambda_max = req_number(j, path, "lambda_max");
  r.coi = req_number(j, path, "coi");
  r.roi = req_number(j, path, "roi");
  if (const auto* cor = field::optional(j, path, "cor")) r.cor = field::number(*cor, join(path, "cor"));
  r.threshold = req_number(j, path, "threshold");
  r.acceptable = field::boolean(field::require(j, path, "acceptable"), join(path, "acceptable"));
  r.worst_judgments = decode_list(
      field::require(j, path, "worst_judgments"), join(path, "worst_judgments"),
      [&](const Json& e, std::string_view p) {
        ahp::JudgmentDeviation d;
        d.i = field::size(field::require(e, p, "i"), join(p, "i"));
        d.j = field::size(field::require(e, p, "j"), join(p, "j"));
        d.deviation = req_number(e, p, "deviation");
        if (d.i >= r.order || d.j >= r.order) field::fail(p, "pair index out of range");
        return d;
      });
  return r;
}

Json encode(const criteria::Criterion& c) {
  Json anchors = Json::object();
  for (const auto& [level, text] : c.anchors) anchors[std::to_string(level)] = text;
  return Json{{"id", c.id},
              {"name", c.name},
              {"description", c.description},
              {"ci_applicability", c.ci_applicability},
              {"indicators", encode_strings(c.indicators)},
              {"anchors", std::move(anchors)}};
}

criteria::Criterion decode_criterion(const Json& j, std::string_view path) {
  criteria::Criterion c;
  c.id = req_string(j, path, "id");
  c.name = req_string(j, path, "name");
  if (const auto* d = field::optional(j, path, "description")) c.description = field::string(*d, join(path, "description"));
  if (const auto* a = field::optional(j, path, "ci_applicability")) {
    c.ci_applicability = field::string(*a, join(path, "ci_applicability"));
  }
  if (const auto* ind = field::optional(j, path, "indicators")) {
    c.indicators = field::strings(*ind, join(path, "indicators"));
  }
  const auto anchors_path = join(path, "anchors");
  const auto& anchors = field::require(j, path, "anchors");
  if (!anchors.is_object()) field::fail(anchors_path, "expected an object keyed by level");
  for (const auto& [key, value] : anchors.items()) {
    const auto p = join(anchors_path, key);
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      field::fail(p, "anchor level must be an integer");
    }
    c.anchors[level] = field::string(value, p);
  }
  return c;
}

Json encode(const criteria::CriteriaSet& s) {
  return Json{{"name", s.name},
              {"version", s.version},
              {"provenance", s.provenance},
              {"criteria", encode_list(s.criteria)}};
}

criteria::CriteriaSet decode_criteria_set(const Json& j, std::string_view path) {
  criteria::CriteriaSet s;
  s.name = req_string(j, path, "name");
  s.version = req_string(j, path, "version");
  if (const auto* p = field::optional(j, path, "provenance")) s.provenance = field::string(*p, join(path, "provenance"));
  s.criteria = decode_list(field::require(j, path, "criteria"), join(path, "criteria"), decode_criterion);
  return s;
}

Json encode(const criteria::CriteriaSetRef& r) {
  return Json{{"name", r.name}, {"version", r.version}};
}

criteria::CriteriaSetRef decode_criteria_ref(const Json& j, std::string_view path) {
  return {req_string(j, path, "name"), req_string(j, path, "version")};
}

Json encode(const criteria::RubricScore& s) {
  return Json{{"criterion", s.criterion_id},
              {"value", s.value},
              {"evidence", s.evidence},
              {"evidence_refs", encode_strings(s.evidence_refs)}};
}

criteria::RubricScore decode_score(const Json& j, std::string_view path) {
  criteria::RubricScore s;
  s.criterion_id = req_string(j, path, "criterion");
  s.value = static_cast<int>(field::integer(field::require(j, path, "value"), join(path, "value")));
  s.evidence = req_string(j, path, "evidence");
  if (const auto* refs = field::optional(j, path, "evidence_refs")) {
    s.evidence_refs = field::strings(*refs, join(path, "evidence_refs"));
  }
  return s;
}

Json encode(const criteria::Evaluation& e) {
  auto profile = Json::array();
  for (const auto& p : e.profile) {
    profile.push_back(Json{{"criterion", p.criterion_id},
                           {"score", p.score},
                           {"normalized", p.normalized},
                           {"weight", p.weight},
                           {"contribution", p.contribution}});
  }
  return Json{{"alternative", e.alternative_name},
              {"criteria_set", encode(e.criteria_set)},
              {"normalization", criteria::to_string(e.normalization)},
              {"composite", e.composite},
              {"scores", encode_list(e.scores)},
              {"profile", std::move(profile)}};
}

criteria::Evaluation decode_evaluation(const Json& j, std::string_view path) {
  criteria::Evaluation e;
  e.alternative_name = req_string(j, path, "alternative");
  e.criteria_set = decode_criteria_ref(field::require(j, path, "criteria_set"), join(path, "criteria_set"));
  const auto mode = req_string(j, path, "normalization");
  e.normalization = at_path(join(path, "normalization"), [&] { return criteria::parse_normalization(mode); });
  e.composite = req_number(j, path, "composite");
  e.scores = decode_list(field::require(j, path, "scores"), join(path, "scores"), decode_score);
  e.profile = decode_list(field::require(j, path, "profile"), join(path, "profile"),
                          [](const Json& p, std::string_view pp) {
                            criteria::ProfileEntry entry;
                            entry.criterion_id = req_string(p, pp, "criterion");
                            entry.score = static_cast<int>(
                                field::integer(field::require(p, pp, "score"), join(pp, "score")));
                            entry.normalized = req_number(p, pp, "normalized");
                            entry.weight = req_number(p, pp, "weight");
                            entry.contribution = req_number(p, pp, "contribution");
                            return entry;
                          });
  return e;
}

Json encode(const criteria::ChartData& c) {
  auto series = Json::array();
  for (const auto& s : c.series) {
    auto values = Json::array();
    for (double v : s.values) values.push_back(v);
    series.push_back(Json{{"name", s.name}, {"values", std::move(values)}});
  }
  return Json{{"labels", encode_strings(c.labels)},
              {"radial_min", c.radial_min},
              {"radial_max", c.radial_max},
              {"series", std::move(series)}};
}

Json encode(const sensitivity::Ranking& r) {
  auto out = Json::array();
  for (const auto& e : r.entries) {
    out.push_back(Json{{"rank", e.rank},
                       {"alternative", e.alternative},
                       {"composite", e.composite},
                       {"tied", e.tied}});
  }
  return out;
}

Json encode(const sensitivity::SensitivityReport& r) {
  auto rankings = Json::array();
  for (const auto& p : r.rankings) {
    rankings.push_back(
        Json{{"criterion", p.criterion}, {"delta", p.delta}, {"order", encode_strings(p.order)}});
  }
  auto events = Json::array();
  for (const auto& e : r.reversal_events) {
    events.push_back(Json{{"criterion", e.criterion},
                          {"delta", e.delta},
                          {"crossing", e.crossing},
                          {"ahead", e.ahead},
                          {"behind", e.behind}});
  }
  auto criticality = Json::array();
  for (const auto& c : r.criticality) {
    criticality.push_back(
        Json{{"criterion", c.criterion}, {"delta", c.delta ? Json(*c.delta) : Json(nullptr)}});
  }
  return Json{{"range", r.range},
              {"steps", r.steps},
              {"baseline", encode_strings(r.baseline)},
              {"criticality", std::move(criticality)},
              {"reversal_events", std::move(events)},
              {"rankings", std::move(rankings)}};
}

sensitivity::SensitivityReport decode_sensitivity(const Json& j, std::string_view path) {
  sensitivity::SensitivityReport r;
  r.range = req_number(j, path, "range");
  r.steps = static_cast<int>(field::integer(field::require(j, path, "steps"), join(path, "steps")));
  r.baseline = field::strings(field::require(j, path, "baseline"), join(path, "baseline"));
  r.criticality = decode_list(field::require(j, path, "criticality"), join(path, "criticality"),
                              [](const Json& e, std::string_view p) {
                                sensitivity::Criticality c;
                                c.criterion = req_string(e, p, "criterion");
                                if (const auto* d = field::optional(e, p, "delta")) {
                                  c.delta = field::number(*d, join(p, "delta"));
                                }
                                return c;
                              });
  r.reversal_events = decode_list(
      field::require(j, path, "reversal_events"), join(path, "reversal_events"),
      [](const Json& e, std::string_view p) {
        return sensitivity::ReversalEvent{req_string(e, p, "criterion"), req_number(e, p, "delta"),
                                          req_number(e, p, "crossing"), req_string(e, p, "ahead"),
                                          req_string(e, p, "behind")};
      });
  r.rankings = decode_list(field::require(j, path, "rankings"), join(path, "rankings"),
                           [](const Json& e, std::string_view p) {
                             return sensitivity::PerturbationRanking{
                                 req_string(e, p, "criterion"), req_number(e, p, "delta"),
                                 field::strings(field::require(e, p, "order"), join(p, "order"))};
                           });
  return r;
}

Json encode(const panel::Judgment& j) {
  return Json{{"first", j.first},
              {"second", j.second},
              {"value", encode(j.value)},
              {"rationale", j.rationale}};
}

panel::Judgment decode_judgment(const Json& j, std::string_view path) {
  panel::Judgment out;
  out.first = req_string(j, path, "first");
  out.second = req_string(j, path, "second");
  out.value = decode_saaty(field::require(j, path, "value"), join(path, "value"));
  if (const auto* r = field::optional(j, path, "rationale")) out.rationale = field::string(*r, join(path, "rationale"));
  return out;
}

Json encode(const panel::JudgmentSet& s) {
  return Json{{"source", s.source},
              {"metadata",
               {{"model", s.metadata.model},
                {"timestamp", s.metadata.timestamp},
                {"response_digest", s.metadata.response_digest}}},
              {"judgments", encode_list(s.judgments)}};
}

panel::JudgmentSet decode_judgment_set(const Json& j, std::string_view path) {
  panel::JudgmentSet s;
  s.source = req_string(j, path, "source");
  const auto meta_path = join(path, "metadata");
  const auto& meta = field::require(j, path, "metadata");
  s.metadata.model = req_string(meta, meta_path, "model");
  s.metadata.timestamp = req_string(meta, meta_path, "timestamp");
  s.metadata.response_digest = req_string(meta, meta_path, "response_digest");
  s.judgments = decode_list(field::require(j, path, "judgments"), join(path, "judgments"), decode_judgment);
  return s;
}

Json encode(const panel::TranscriptEntry& t) {
  return Json{{"round", t.round},
              {"kind", t.kind},
              {"prompt", t.prompt},
              {"raw_response", t.raw_response},
              {"response_digest", t.response_digest},
              {"judgments", t.judgments ? encode(*t.judgments) : Json(nullptr)},
              {"report", t.report ? encode(*t.report) : Json(nullptr)}};
}

panel::TranscriptEntry decode_transcript_entry(const Json& j, std::string_view path) {
  panel::TranscriptEntry t;
  t.round = static_cast<int>(field::integer(field::require(j, path, "round"), join(path, "round")));
  t.kind = req_string(j, path, "kind");
  t.prompt = req_string(j, path, "prompt");
  t.raw_response = req_string(j, path, "raw_response");
  t.response_digest = req_string(j, path, "response_digest");
  if (const auto* js = field::optional(j, path, "judgments")) {
    t.judgments = decode_judgment_set(*js, join(path, "judgments"));
  }
  if (const auto* r = field::optional(j, path, "report")) {
    t.report = decode_consistency(*r, join(path, "report"));
  }
  return t;
}

}  // namespace ahpeval::storage
