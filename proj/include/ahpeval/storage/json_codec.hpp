#pragma once

#include <string_view>

#include "ahpeval/ahp/consistency.hpp"
#include "ahpeval/ahp/pairwise_matrix.hpp"
#include "ahpeval/ahp/weights.hpp"
#include "ahpeval/criteria/criteria.hpp"
#include "ahpeval/criteria/scoring.hpp"
#include "ahpeval/panel/elicitation.hpp"
#include "ahpeval/panel/panel.hpp"
#include "ahpeval/sensitivity/sensitivity.hpp"
#include "json.hpp"

// JSON encoding shared by the project file and the service wire format.
// Decoders throw ValidationError(kParse) whose field() is the dotted path of
// the offending node, prefixed with `path`.
namespace ahpeval::storage {

using Json = nlohmann::ordered_json;

Json encode(const ahp::Ratio& r);
Json encode(const ahp::SaatyJudgment& s);
Json encode(const ahp::PairwiseMatrix& m);
Json encode(const ahp::WeightVector& w);
Json encode(const ahp::ConsistencyReport& r);
Json encode(const criteria::Criterion& c);
Json encode(const criteria::CriteriaSet& s);
Json encode(const criteria::CriteriaSetRef& r);
Json encode(const criteria::RubricScore& s);
Json encode(const criteria::Evaluation& e);
Json encode(const criteria::ChartData& c);
Json encode(const sensitivity::Ranking& r);
Json encode(const sensitivity::SensitivityReport& r);
Json encode(const panel::Judgment& j);
Json encode(const panel::JudgmentSet& s);
Json encode(const panel::TranscriptEntry& t);

ahp::Ratio decode_ratio(const Json& j, std::string_view path = {});
ahp::SaatyJudgment decode_saaty(const Json& j, std::string_view path = {});
ahp::PairwiseMatrix decode_matrix(const Json& j, std::string_view path = {});
ahp::WeightVector decode_weights(const Json& j, std::string_view path = {});
ahp::ConsistencyReport decode_consistency(const Json& j, std::string_view path = {});
criteria::Criterion decode_criterion(const Json& j, std::string_view path = {});
criteria::CriteriaSet decode_criteria_set(const Json& j, std::string_view path = {});
criteria::CriteriaSetRef decode_criteria_ref(const Json& j, std::string_view path = {});
criteria::RubricScore decode_score(const Json& j, std::string_view path = {});
criteria::Evaluation decode_evaluation(const Json& j, std::string_view path = {});
sensitivity::SensitivityReport decode_sensitivity(const Json& j, std::string_view path = {});
panel::Judgment decode_judgment(const Json& j, std::string_view path = {});
panel::JudgmentSet decode_judgment_set(const Json& j, std::string_view path = {});
panel::TranscriptEntry decode_transcript_entry(const Json& j, std::string_view path = {});

// Small typed accessors, also used by the service to read request bodies.
namespace field {
std::string join(std::string_view path, std::string_view key);
std::string index(std::string_view path, std::size_t i);
[[noreturn]] void fail(std::string_view path, const std::string& message);
const Json& require(const Json& object, std::string_view path, const char* key);
const Json* optional(const Json& object, std::string_view path, const char* key);
std::string string(const Json& j, std::string_view path);
double number(const Json& j, std::string_view path);
std::int64_t integer(const Json& j, std::string_view path);
std::size_t size(const Json& j, std::string_view path);
bool boolean(const Json& j, std::string_view path);
const Json& array(const Json& j, std::string_view path);
std::vector<std::string> strings(const Json& j, std::string_view path);
}  // namespace field

}  // namespace ahpeval::storage
