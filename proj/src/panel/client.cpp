#include "ahpeval/panel/client.hpp"

#include <fstream>
#include <sstream>

#include "ahpeval/error.hpp"
#include "ahpeval/panel/digest.hpp"
#include "json.hpp"

namespace ahpeval::panel {

std::string request_digest(const ChatRequest& request) {
  const nlohmann::json canonical = {
      {"model", request.model},
      {"system", request.system},
      {"user", request.user},
      {"temperature", request.temperature},
  };
  return sha256_hex(canonical.dump());
}

FixtureClient::FixtureClient(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!std::filesystem::is_directory(dir_)) {
    throw Error(ErrorKind::kIo, "fixture directory '" + dir_.string() + "' does not exist");
  }
}

ChatResponse FixtureClient::complete(const ChatRequest& request) {
  const auto digest = request_digest(request);
  const auto file = dir_ / (digest + ".txt");
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw TransportError("no recorded reply for request digest " + digest + " in " +
                             dir_.string(),
                         false);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ChatResponse{text.str(), {}};
}

RecordingClient::RecordingClient(ChatClient& inner, std::filesystem::path dir)
    : inner_(inner), dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

ChatResponse RecordingClient::complete(const ChatRequest& request) {
  auto response = inner_.complete(request);
  std::lock_guard lock(mutex_);
  std::ofstream out(dir_ / (request_digest(request) + ".txt"), std::ios::binary);
  out << response.text;
  if (!out) throw Error(ErrorKind::kIo, "cannot write fixture into " + dir_.string());
  return response;
}

ChatResponse ScriptedClient::complete(const ChatRequest& request) {
  std::lock_guard lock(mutex_);
  requests_.push_back(request);
  if (next_ >= replies_.size()) throw TransportError("scripted client has no more replies");
  return ChatResponse{replies_[next_++], {}};
}

std::vector<ChatRequest> ScriptedClient::requests() const {
  std::lock_guard lock(mutex_);
  return requests_;
}

}  // namespace ahpeval::panel
