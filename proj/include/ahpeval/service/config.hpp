#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "ahpeval/panel/client.hpp"

namespace ahpeval::service {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "ahpeval-data";
  // Empty disables authentication.
  std::string bearer_token;
  panel::HttpClientConfig llm;
  std::string model = "gpt-4o";
  // Replay recorded replies instead of calling the LLM endpoint.
  std::optional<std::filesystem::path> fixture_dir;
  double consistency_threshold = 0.10;
  int max_rounds = 3;
};

using Environment = std::function<std::optional<std::string>(const std::string&)>;

std::optional<std::string> process_environment(const std::string& name);

// JSON config file (all keys optional), then AHPEVAL_* environment variables
// on top. Unknown keys are rejected.
ServiceConfig load_config(const std::optional<std::filesystem::path>& file,
                          const Environment& env = process_environment);

}  // namespace ahpeval::service
