#include "pfgr/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "json.hpp"

namespace pfgr {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "pfgr-gr2-table";

json partition_json(const Partition2& p) { return json::array({p.a, p.b}); }

Partition2 partition_from(const json& j) { return Partition2(j.at(0).get<int>(), j.at(1).get<int>()); }

}  // namespace

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> TableCache::default_dir() {
  const char* env = std::getenv(kCacheDirEnv);
  if (!env || !*env) return std::nullopt;
  return std::filesystem::path(env);
}

std::filesystem::path TableCache::path_for(int n) const {
  return dir_ / ("gr2_" + std::to_string(n) + ".json");
}

std::optional<MultiplicationTable> TableCache::load(int n) const {
  const auto path = path_for(n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("format") != kFormat) throw Error(ErrorKind::CacheError, path.string() + ": not a table cache file");
    if (j.at("engine_version").get<int>() != kEngineVersion) return std::nullopt;
    if (j.at("n").get<int>() != n) throw Error(ErrorKind::CacheError, path.string() + ": wrong n");
    MultiplicationTable table(n);
    const int size = table.size();
    std::vector<bool> seen(static_cast<std::size_t>(size * size), false);
    for (const auto& e : j.at("entries")) {
      const Partition2 lam = partition_from(e.at(0)), mu = partition_from(e.at(1));
      if (!lam.fits(n) || !mu.fits(n)) throw Error(ErrorKind::CacheError, path.string() + ": partition outside box");
      std::vector<MultiplicationTable::Term> terms;
      for (const auto& t : e.at(2)) {
        const Partition2 nu = partition_from(t.at(0));
        if (!nu.fits(n) || nu.size() != lam.size() + mu.size())
          throw Error(ErrorKind::CacheError, path.string() + ": bad product term");
        terms.emplace_back(box_index(nu), t.at(1).get<long>());
      }
      const int i = box_index(lam), k = box_index(mu);
      seen[static_cast<std::size_t>(i * size + k)] = true;
      table.set_product(i, k, std::move(terms));
    }
    for (bool s : seen)
      if (!s) throw Error(ErrorKind::CacheError, path.string() + ": incomplete table");
    return table;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::CacheError, path.string() + ": " + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheError) throw;
    throw Error(ErrorKind::CacheError, path.string() + ": " + e.what());
  }
}

void TableCache::store(const MultiplicationTable& table) const {
  const int n = table.ambient_n();
  const auto basis = box_partitions(n);
  json entries = json::array();
  for (int i = 0; i < table.size(); ++i)
    for (int k = 0; k < table.size(); ++k) {
      json terms = json::array();
      for (const auto& [nu, c] : table.product(i, k))
        terms.push_back(json::array({partition_json(basis[static_cast<std::size_t>(nu)]), c}));
      entries.push_back(json::array({partition_json(basis[static_cast<std::size_t>(i)]),
                                     partition_json(basis[static_cast<std::size_t>(k)]), terms}));
    }
  const json doc = {{"format", kFormat}, {"engine_version", kEngineVersion}, {"n", n}, {"entries", entries}};

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::CacheError, "cannot create " + dir_.string() + ": " + ec.message());
  const auto path = path_for(n);
  const auto tmp = std::filesystem::path(path.string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorKind::CacheError, "cannot write " + tmp.string());
    out << doc.dump() << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::CacheError, "cannot move " + tmp.string() + " to " + path.string());
}

bool TableCache::warm(int n) const {
  if (auto loaded = load(n)) {
    seed_standard_table(std::make_shared<const MultiplicationTable>(std::move(*loaded)));
    return true;
  }
  store(*standard_table(n));
  return false;
}

}  // namespace pfgr
