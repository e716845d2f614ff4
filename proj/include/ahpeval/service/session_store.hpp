#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ahpeval/storage/project.hpp"

namespace ahpeval::service {

enum class SessionState { kDefiningCriteria, kComparing, kWeightsReady, kScoring, kComplete };

std::string_view to_string(SessionState state);
SessionState parse_session_state(std::string_view text);
SessionState state_of(const storage::Project& p);
void set_state(storage::Project& p, SessionState state);

// Sessions are projects persisted as <data_dir>/<id>.json. Mutations on one
// session are serialized; reads share a lock and see a consistent snapshot.
class SessionStore {
 public:
  using Clock = std::function<std::string()>;

  // Loads every session file already present in `data_dir`.
  SessionStore(std::filesystem::path data_dir, Clock clock);

  // Assigns an id, starts at revision 1 and persists.
  std::string create(storage::Project project);

  std::vector<std::string> ids() const;

  // `f` runs on a copy. When it returns normally and changed the project,
  // the revision is bumped, the copy is saved and then published; a throw
  // leaves the session untouched. A stale `expected_revision` raises
  // Error(kConflict). The result gets the final "revision" added.
  storage::Json mutate(const std::string& id, std::optional<std::uint64_t> expected_revision,
                       const std::function<storage::Json(storage::Project&)>& f);

  storage::Json read(const std::string& id,
                     const std::function<storage::Json(const storage::Project&)>& f) const;

  const std::filesystem::path& data_dir() const noexcept { return data_dir_; }

 private:
  struct Session {
    mutable std::shared_mutex mutex;
    storage::Project project;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::filesystem::path path_for(const std::string& id) const;

  std::filesystem::path data_dir_;
  Clock clock_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

}  // namespace ahpeval::service
