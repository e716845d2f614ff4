#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

namespace ahpeval::panel {

struct ChatRequest {
  std::string model;
  std::string system;
  std::string user;
  double temperature = 0.0;
};

struct ChatUsage {
  int prompt_tokens = 0;
  int completion_tokens = 0;
};

struct ChatResponse {
  std::string text;
  ChatUsage usage;
};

// Chat-completion endpoint. Implementations throw TransportError on
// transport failures; all provided clients tolerate concurrent calls.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// SHA-256 of a canonical JSON rendering of the request.
std::string request_digest(const ChatRequest& request);

// Replays canned replies from `<dir>/<request digest>.txt`.
class FixtureClient : public ChatClient {
 public:
  explicit FixtureClient(std::filesystem::path dir);
  ChatResponse complete(const ChatRequest& request) override;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Forwards to `inner` and stores every reply under its request digest, so
// a FixtureClient on the same directory replays the session.
class RecordingClient : public ChatClient {
 public:
  RecordingClient(ChatClient& inner, std::filesystem::path dir);
  ChatResponse complete(const ChatRequest& request) override;

 private:
  ChatClient& inner_;
  std::filesystem::path dir_;
  std::mutex mutex_;
};

// Returns the scripted replies in order; throws TransportError once
// exhausted. Records every request it receives.
class ScriptedClient : public ChatClient {
 public:
  explicit ScriptedClient(std::vector<std::string> replies) : replies_(std::move(replies)) {}
  ChatResponse complete(const ChatRequest& request) override;
  std::vector<ChatRequest> requests() const;

 private:
  std::vector<std::string> replies_;
  std::vector<ChatRequest> requests_;
  std::size_t next_ = 0;
  mutable std::mutex mutex_;
};

struct HttpClientConfig {
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string auth_header = "Authorization";
  std::string auth_prefix = "Bearer ";
  std::string api_key_env = "OPENAI_API_KEY";
  int timeout_seconds = 600;
};

// OpenAI-style JSON chat endpoint:
//   {"model", "messages": [{"role","content"}...], "temperature"}
//   -> {"choices": [{"message": {"content"}}], "usage": {...}}
class HttpChatClient : public ChatClient {
 public:
  explicit HttpChatClient(HttpClientConfig config);
  ChatResponse complete(const ChatRequest& request) override;

  static std::string encode_request(const ChatRequest& request);
  static ChatResponse decode_response(const std::string& body);

 private:
  HttpClientConfig config_;
};

}  // namespace ahpeval::panel
