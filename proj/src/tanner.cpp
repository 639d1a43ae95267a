#include "pcw/tanner.hpp"

#include <deque>

namespace pcw {

TannerGraph tanner_from_matrix(const ParityCheckMatrix& H) {
  TannerGraph G;
  G.n = H.n;
  G.m = H.m;
  G.var_checks.resize(H.n);
  G.check_vars.resize(H.m);
  for (int i = 0; i < H.n; ++i) {
    for (int j = 0; j < H.m; ++j) {
      const Symbol label = H.at(j, i);
      if (label == 0) continue;
      G.edges.push_back(TannerEdge{i, j, label});
      G.var_checks[i].push_back(j);
      G.check_vars[j].push_back(i);
    }
  }
  return G;
}

std::optional<std::pair<int, int>> regularity(const TannerGraph& G) {
  if (G.n == 0 || G.m == 0) return std::nullopt;
  const int c = static_cast<int>(G.var_checks[0].size());
  for (const auto& adj : G.var_checks) {
    if (static_cast<int>(adj.size()) != c) return std::nullopt;
  }
  const int d = static_cast<int>(G.check_vars[0].size());
  for (const auto& adj : G.check_vars) {
    if (static_cast<int>(adj.size()) != d) return std::nullopt;
  }
  if (c == 0 || d == 0) return std::nullopt;
  return std::make_pair(c, d);
}

bool is_connected(const TannerGraph& G) {
  // BFS over variable vertices [0, n) and check vertices [n, n + m).
  const int total = G.n + G.m;
  std::vector<char> seen(total, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    ++visited;
    if (v < G.n) {
      for (const int j : G.var_checks[v]) {
        if (!seen[G.n + j]) {
          seen[G.n + j] = 1;
          queue.push_back(G.n + j);
        }
      }
    } else {
      for (const int i : G.check_vars[v - G.n]) {
        if (!seen[i]) {
          seen[i] = 1;
          queue.push_back(i);
        }
      }
    }
  }
  return visited == total;
}

}  // namespace pcw
