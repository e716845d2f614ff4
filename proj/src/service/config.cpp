#include "ahpeval/service/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ahpeval/storage/json_codec.hpp"

namespace ahpeval::service {

namespace {

using storage::Json;

double parse_double(const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(ErrorKind::kInvalidArgument, name, name + ": '" + text + "' is not a number");
}

int parse_int(const std::string& name, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(ErrorKind::kInvalidArgument, name, name + ": '" + text + "' is not an integer");
}

void check(ServiceConfig& c) {
  if (c.port < 0 || c.port > 65535) throw ValidationError(ErrorKind::kInvalidArgument, "port", "port out of range");
  if (!(c.consistency_threshold > 0.0)) {
    throw ValidationError(ErrorKind::kInvalidArgument, "consistency_threshold", "threshold must be positive");
  }
  if (c.max_rounds < 1) throw ValidationError(ErrorKind::kInvalidArgument, "max_rounds", "must be at least 1");
}

}  // namespace

std::optional<std::string> process_environment(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

ServiceConfig load_config(const std::optional<std::filesystem::path>& file, const Environment& env) {
  ServiceConfig c;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw Error(ErrorKind::kIo, "cannot read config " + file->string());
    std::ostringstream text;
    text << in.rdbuf();
    Json j;
    try {
      j = Json::parse(text.str());
    } catch (const Json::parse_error& e) {
      throw ParseError(e.byte, "config " + file->string() + ": " + e.what());
    }
    if (!j.is_object()) storage::field::fail("", "config must be an object");
    static const std::set<std::string> known = {"host", "port", "data_dir", "bearer_token", "model",
                                                "llm_base_url", "llm_path", "llm_api_key_env",
                                                "llm_timeout_seconds", "fixture_dir",
                                                "consistency_threshold", "max_rounds"};
    for (const auto& [key, value] : j.items()) {
      if (!known.contains(key)) storage::field::fail(key, "unknown config key");
    }
    namespace f = storage::field;
    if (auto* v = f::optional(j, "", "host")) c.host = f::string(*v, "host");
    if (auto* v = f::optional(j, "", "port")) c.port = static_cast<int>(f::integer(*v, "port"));
    if (auto* v = f::optional(j, "", "data_dir")) c.data_dir = f::string(*v, "data_dir");
    if (auto* v = f::optional(j, "", "bearer_token")) c.bearer_token = f::string(*v, "bearer_token");
    if (auto* v = f::optional(j, "", "model")) c.model = f::string(*v, "model");
    if (auto* v = f::optional(j, "", "llm_base_url")) c.llm.base_url = f::string(*v, "llm_base_url");
    if (auto* v = f::optional(j, "", "llm_path")) c.llm.path = f::string(*v, "llm_path");
    if (auto* v = f::optional(j, "", "llm_api_key_env")) c.llm.api_key_env = f::string(*v, "llm_api_key_env");
    if (auto* v = f::optional(j, "", "llm_timeout_seconds")) {
      c.llm.timeout_seconds = static_cast<int>(f::integer(*v, "llm_timeout_seconds"));
    }
    if (auto* v = f::optional(j, "", "fixture_dir")) c.fixture_dir = f::string(*v, "fixture_dir");
    if (auto* v = f::optional(j, "", "consistency_threshold")) {
      c.consistency_threshold = f::number(*v, "consistency_threshold");
    }
    if (auto* v = f::optional(j, "", "max_rounds")) c.max_rounds = static_cast<int>(f::integer(*v, "max_rounds"));
  }

  if (auto v = env("AHPEVAL_HOST")) c.host = *v;
  if (auto v = env("AHPEVAL_PORT")) c.port = parse_int("AHPEVAL_PORT", *v);
  if (auto v = env("AHPEVAL_DATA_DIR")) c.data_dir = *v;
  if (auto v = env("AHPEVAL_TOKEN")) c.bearer_token = *v;
  if (auto v = env("AHPEVAL_MODEL")) c.model = *v;
  if (auto v = env("AHPEVAL_LLM_BASE_URL")) c.llm.base_url = *v;
  if (auto v = env("AHPEVAL_LLM_API_KEY_ENV")) c.llm.api_key_env = *v;
  if (auto v = env("AHPEVAL_FIXTURES")) c.fixture_dir = *v;
  if (auto v = env("AHPEVAL_CONSISTENCY_THRESHOLD")) {
    c.consistency_threshold = parse_double("AHPEVAL_CONSISTENCY_THRESHOLD", *v);
  }
  if (auto v = env("AHPEVAL_MAX_ROUNDS")) c.max_rounds = parse_int("AHPEVAL_MAX_ROUNDS", *v);
  check(c);
  return c;
}

}  // namespace ahpeval::service
