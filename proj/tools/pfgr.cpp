#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfgr/cache.hpp"
#include "pfgr/dsl.hpp"
#include "pfgr/grid.hpp"
#include "pfgr/report.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailure = 1, kUsage = 2, kInternal = 3 };

int report_error(const pfgr::Error& e) {
  nlohmann::json diag = {{"error", std::string(pfgr::to_string(e.kind()))}, {"message", e.what()}};
  std::cerr << diag.dump() << "\n";
  return pfgr::is_internal_inconsistency(e.kind()) ? kInternal : kUsage;
}

std::set<std::string> parse_checks(const std::string& list) {
  std::set<std::string> out;
  if (list == "all" || list.empty()) return out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.insert(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian-Grassmannian pair calculator"};
  app.require_subcommand(1);

  int n = 0, k = 0;
  std::string format = "json";
  auto* pair = app.add_subcommand("pair", "Report on one pair (n, k)");
  pair->add_option("--n", n, "dim V")->required();
  pair->add_option("--k", k, "codimension of U")->required();
  pair->add_option("--format", format, "json, markdown or csv")->capture_default_str();

  pfgr::GridRequest req;
  std::string checks = "all";
  std::string cache_dir;
  auto* grid = app.add_subcommand("grid", "Sweep a rectangle of (n, k)");
  grid->add_option("--n-min", req.n_min)->capture_default_str();
  grid->add_option("--n-max", req.n_max)->capture_default_str();
  grid->add_option("--k-min", req.k_min)->capture_default_str();
  grid->add_option("--k-max", req.k_max)->capture_default_str();
  grid->add_option("--checks", checks, "comma-separated check names, or all")->capture_default_str();
  grid->add_option("--format", format, "json, markdown or csv")->capture_default_str();
  grid->add_option("--jobs", req.jobs, "worker threads")->capture_default_str();
  grid->add_option("--cache-dir", cache_dir, std::string("table cache directory (default $") + pfgr::kCacheDirEnv + ")");

  auto* list = app.add_subcommand("checks", "List check names");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a class expression");
  eval->add_option("EXPR", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*pair) {
      const auto fmt = pfgr::parse_output_format(format);
      const auto report = pfgr::build_pair_report(pfgr::make_pair(n, k));
      std::cout << pfgr::render(report, fmt);
      return report.all_passed() ? kOk : kCheckFailure;
    }
    if (*grid) {
      req.format = pfgr::parse_output_format(format);
      req.checks = parse_checks(checks);
      pfgr::validate(req);
      std::optional<std::filesystem::path> dir;
      if (!cache_dir.empty())
        dir = cache_dir;
      else
        dir = pfgr::TableCache::default_dir();
      if (dir) {
        const pfgr::TableCache cache(*dir);
        for (int m = req.n_min; m <= req.n_max; ++m) cache.warm(m);
      }
      const auto g = pfgr::run_grid(req);
      std::cout << pfgr::render(g, req.format);
      return g.summary.fail == 0 && g.summary.errors == 0 ? kOk : kCheckFailure;
    }
    if (*list) {
      for (const auto& c : pfgr::registered_checks()) std::cout << c << "\n";
      return kOk;
    }
    if (*eval) {
      const auto v = pfgr::dsl::eval(expr);
      std::cout << pfgr::dsl::to_string(v) << "\n";
      if (const auto* b = std::get_if<bool>(&v)) return *b ? kOk : kCheckFailure;
      return kOk;
    }
  } catch (const pfgr::Error& e) {
    return report_error(e);
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kInternal;
  }
  return kUsage;
}
