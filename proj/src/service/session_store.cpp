#include "ahpeval/service/session_store.hpp"

#include <random>

#include <fmt/core.h>

namespace ahpeval::service {

namespace {

constexpr std::string_view kStateNames[] = {"defining-criteria", "comparing", "weights-ready", "scoring",
                                            "complete"};

std::string new_id() {
  static std::mutex mutex;
  static std::mt19937_64 rng{std::random_device{}()};
  std::lock_guard lock(mutex);
  return fmt::format("{:016x}{:016x}", rng(), rng());
}

}  // namespace

std::string_view to_string(SessionState state) { return kStateNames[static_cast<int>(state)]; }

SessionState parse_session_state(std::string_view text) {
  for (int k = 0; k < 5; ++k) {
    if (kStateNames[k] == text) return static_cast<SessionState>(k);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown session state '" + std::string(text) + "'");
}

SessionState state_of(const storage::Project& p) {
  return p.session ? parse_session_state(p.session->state) : SessionState::kDefiningCriteria;
}

void set_state(storage::Project& p, SessionState state) {
  if (!p.session) p.session = storage::SessionRecord{};
  p.session->state = std::string(to_string(state));
}

SessionStore::SessionStore(std::filesystem::path data_dir, Clock clock)
    : data_dir_(std::move(data_dir)), clock_(std::move(clock)) {
  std::filesystem::create_directories(data_dir_);
  for (const auto& entry : std::filesystem::directory_iterator(data_dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    auto project = storage::load(entry.path());
    if (!project.session) continue;
    auto session = std::make_shared<Session>();
    const auto id = project.session->id;
    session->project = std::move(project);
    sessions_[id] = std::move(session);
  }
}

std::filesystem::path SessionStore::path_for(const std::string& id) const { return data_dir_ / (id + ".json"); }

std::string SessionStore::create(storage::Project project) {
  auto id = new_id();
  project.session = storage::SessionRecord{id, std::string(to_string(SessionState::kDefiningCriteria)), 1};
  storage::save(project, path_for(id));
  auto session = std::make_shared<Session>();
  session->project = std::move(project);
  std::lock_guard lock(mutex_);
  sessions_[id] = std::move(session);
  return id;
}

std::vector<std::string> SessionStore::ids() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, s] : sessions_) out.push_back(id);
  return out;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorKind::kNotFound, "no session '" + id + "'");
  return it->second;
}

storage::Json SessionStore::mutate(const std::string& id, std::optional<std::uint64_t> expected_revision,
                                   const std::function<storage::Json(storage::Project&)>& f) {
  const auto session = find(id);
  std::unique_lock lock(session->mutex);
  const auto current = session->project.session->revision;
  if (expected_revision && *expected_revision != current) {
    throw Error(ErrorKind::kConflict,
                fmt::format("stale revision {}: the session is at revision {}", *expected_revision, current));
  }
  auto copy = session->project;
  auto result = f(copy);
  if (copy != session->project) {
    copy.session->revision = current + 1;
    copy.metadata.modified = clock_();
    storage::save(copy, path_for(id));
    session->project = std::move(copy);
  }
  result["revision"] = session->project.session->revision;
  return result;
}

storage::Json SessionStore::read(const std::string& id,
                                 const std::function<storage::Json(const storage::Project&)>& f) const {
  const auto session = find(id);
  std::shared_lock lock(session->mutex);
  auto result = f(session->project);
  result["revision"] = session->project.session->revision;
  return result;
}

}  // namespace ahpeval::service
