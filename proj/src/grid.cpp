#include "pfgr/grid.hpp"

#include <omp.h>

#include "pfgr/chern.hpp"

namespace pfgr {

std::vector<std::pair<int, int>> grid_pairs(const GridRequest& request) {
  validate(request);
  std::vector<std::pair<int, int>> out;
  for (int n = request.n_min; n <= request.n_max; ++n)
    for (int k = request.k_min; k <= request.k_max; ++k) {
      try {
        make_pair(n, k);
      } catch (const Error&) {
        continue;
      }
      out.emplace_back(n, k);
    }
  return out;
}

GridRow compute_row(int n, int k, const std::set<std::string>& checks) {
  GridRow row;
  row.n = n;
  row.k = k;
  try {
    row.report = build_pair_report(make_pair(n, k), checks);
  } catch (const Error& e) {
    row.error = RowError{e.kind(), e.what()};
  }
  return row;
}

namespace {

GridReport finish(const GridRequest& request, std::vector<GridRow> rows) {
  GridReport g;
  g.request = request;
  g.rows = std::move(rows);
  g.summary = summarize(g.rows);
  return g;
}

}  // namespace

GridReport run_grid_serial(const GridRequest& request) {
  const auto pairs = grid_pairs(request);
  std::vector<GridRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [n, k] : pairs) rows.push_back(compute_row(n, k, request.checks));
  return finish(request, std::move(rows));
}

GridReport run_grid(const GridRequest& request) {
  const auto pairs = grid_pairs(request);
  // Tables and section data are built once per n before the workers start,
  // so the parallel region only reads them.
  for (int n = request.n_min; n <= request.n_max; ++n) {
    bool any = false;
    for (const auto& p : pairs) any = any || p.first == n;
    if (any) standard_section_calculus(n);
  }

  std::vector<GridRow> rows(pairs.size());
  const long count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(request.jobs)
  for (long i = 0; i < count; ++i) {
    const auto [n, k] = pairs[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = compute_row(n, k, request.checks);
  }
  return finish(request, std::move(rows));
}

}  // namespace pfgr
