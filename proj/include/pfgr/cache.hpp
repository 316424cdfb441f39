#pragma once

// On-disk cache of multiplication tables, one JSON file per n:
//   {"format": "pfgr-gr2-table", "engine_version": V, "n": n,
//    "entries": [[[a,b], [c,d], [[[e,f], coeff], ...]], ...]}
// A file written by another engine version counts as a miss.

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "pfgr/schubert.hpp"

namespace pfgr {

inline constexpr const char* kCacheDirEnv = "PFGR_CACHE_DIR";

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);

  // Directory from the environment, if set and nonempty.
  static std::optional<std::filesystem::path> default_dir();

  std::filesystem::path path_for(int n) const;

  // nullopt on a miss or a stale engine version; CacheError on a malformed file.
  std::optional<MultiplicationTable> load(int n) const;
  void store(const MultiplicationTable& table) const;

  // Loads or builds the table for n, writes it back on a miss, and installs it
  // as the process-wide standard table. Returns true on a hit.
  bool warm(int n) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace pfgr
