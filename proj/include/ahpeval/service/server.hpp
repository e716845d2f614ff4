#pragma once

#include <functional>
#include <memory>

#include "ahpeval/panel/client.hpp"
#include "ahpeval/service/config.hpp"
#include "ahpeval/service/session_store.hpp"

namespace ahpeval::service {

using ClientFactory = std::function<std::unique_ptr<panel::ChatClient>()>;

// FixtureClient when config.fixture_dir is set, HttpChatClient otherwise.
ClientFactory default_client_factory(const ServiceConfig& config);

// JSON API under /api/v1. See docs/api.md for the wire schema.
class Server {
 public:
  explicit Server(ServiceConfig config, ClientFactory clients = {}, SessionStore::Clock clock = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds config.host:config.port (0 picks a free port) and returns the port.
  int bind();
  // Serves until stop(). Call bind() first.
  void serve();
  void stop();
  // Blocks until every panel job has finished.
  void wait_for_jobs();

  SessionStore& sessions();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ahpeval::service
