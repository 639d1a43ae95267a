#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pcw/ring.hpp"

namespace pcw {

struct TannerEdge {
  int var = 0;    // u_i, 0-based column index
  int check = 0;  // v_j, 0-based row index
  Symbol label = 0;
};

/// Bipartite Tanner graph of a parity-check matrix: one edge per nonzero
/// entry, labelled with that entry. Edges are kept in variable-major order
/// (sorted by (var, check)); covers and lifts rely on this ordering.
struct TannerGraph {
  int n = 0;
  int m = 0;
  std::vector<TannerEdge> edges;
  std::vector<std::vector<int>> var_checks;  // per variable: incident checks
  std::vector<std::vector<int>> check_vars;  // per check: incident variables
};

TannerGraph tanner_from_matrix(const ParityCheckMatrix& H);

/// (c, d) if every variable vertex has degree c and every check vertex has
/// degree d; nullopt otherwise.
std::optional<std::pair<int, int>> regularity(const TannerGraph& G);

/// Single connected component over all n + m vertices.
bool is_connected(const TannerGraph& G);

}  // namespace pcw
