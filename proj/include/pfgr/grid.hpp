#pragma once

// Grid sweep over (n,k). The OpenMP kernel and the serial reference produce
// identical rows; both emit them in lexicographic (n,k) order.

#include <utility>
#include <vector>

#include "pfgr/report.hpp"

namespace pfgr {

// Pairs of the request accepted by make_pair, in (n,k) order.
std::vector<std::pair<int, int>> grid_pairs(const GridRequest& request);

GridRow compute_row(int n, int k, const std::set<std::string>& checks);

GridReport run_grid(const GridRequest& request);
GridReport run_grid_serial(const GridRequest& request);

}  // namespace pfgr
