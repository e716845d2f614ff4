#include <cstdlib>

#include "ahpeval/error.hpp"
#include "ahpeval/panel/client.hpp"
#include "httplib.h"
#include "json.hpp"

namespace ahpeval::panel {

HttpChatClient::HttpChatClient(HttpClientConfig config) : config_(std::move(config)) {}

std::string HttpChatClient::encode_request(const ChatRequest& request) {
  nlohmann::json body = {
      {"model", request.model},
      {"temperature", request.temperature},
      {"messages",
       nlohmann::json::array({{{"role", "system"}, {"content", request.system}},
                              {{"role", "user"}, {"content", request.user}}})},
  };
  return body.dump();
}

ChatResponse HttpChatClient::decode_response(const std::string& body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw TransportError(std::string("unreadable chat response: ") + e.what(), false);
  }
  const auto choices = doc.find("choices");
  if (choices == doc.end() || !choices->is_array() || choices->empty() ||
      !(*choices)[0].contains("message") || !(*choices)[0]["message"].contains("content") ||
      !(*choices)[0]["message"]["content"].is_string()) {
    throw TransportError("chat response has no choices[0].message.content", false);
  }
  ChatResponse out;
  out.text = (*choices)[0]["message"]["content"].get<std::string>();
  if (const auto usage = doc.find("usage"); usage != doc.end() && usage->is_object()) {
    out.usage.prompt_tokens = usage->value("prompt_tokens", 0);
    out.usage.completion_tokens = usage->value("completion_tokens", 0);
  }
  return out;
}

ChatResponse HttpChatClient::complete(const ChatRequest& request) {
  // One client per call, so concurrent sessions never share a connection.
  httplib::Client client(config_.base_url);
  client.set_read_timeout(config_.timeout_seconds, 0);
  client.set_write_timeout(config_.timeout_seconds, 0);
  client.set_connection_timeout(30, 0);

  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key) {
      headers.emplace(config_.auth_header, config_.auth_prefix + key);
    }
  }
  const auto result =
      client.Post(config_.path, headers, encode_request(request), "application/json");
  if (!result) {
    throw TransportError("chat request to " + config_.base_url + config_.path + " failed: " +
                         httplib::to_string(result.error()));
  }
  if (result->status != 200) {
    const bool retryable = result->status == 429 || result->status >= 500;
    throw TransportError("chat endpoint returned HTTP " + std::to_string(result->status) + ": " +
                             result->body.substr(0, 300),
                         retryable);
  }
  return decode_response(result->body);
}

}  // namespace ahpeval::panel
