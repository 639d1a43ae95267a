#include "pcw/cover.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "pcw/rng.hpp"

namespace pcw {

CoverAssignment random_cover(const TannerGraph& G, int M, std::uint64_t seed) {
  if (M < 1) throw InputError("cover degree M must be >= 1");
  CoverAssignment cov;
  cov.M = M;
  cov.edges.reserve(G.edges.size());
  for (const TannerEdge& e : G.edges) cov.edges.emplace_back(e.var, e.check);
  Rng rng(seed);
  cov.sigma.reserve(cov.edges.size());
  for (std::size_t e = 0; e < cov.edges.size(); ++e) {
    std::vector<int> perm(M);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    cov.sigma.push_back(std::move(perm));
  }
  return cov;
}

namespace {

std::vector<std::pair<int, int>> edge_pairs(const ParityCheckMatrix& H) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < H.n; ++i) {
    for (int j = 0; j < H.m; ++j) {
      if (H.at(j, i) != 0) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

void require_permutations(const CoverAssignment& cov) {
  if (cov.sigma.size() != cov.edges.size()) {
    throw InputError("cover has a permutation count != edge count");
  }
  for (const auto& perm : cov.sigma) {
    if (static_cast<int>(perm.size()) != cov.M) {
      throw InputError("cover permutation has wrong length");
    }
    std::vector<char> seen(cov.M, 0);
    for (const int v : perm) {
      if (v < 0 || v >= cov.M || seen[v]) {
        throw InputError("cover permutation is not a bijection");
      }
      seen[v] = 1;
    }
  }
}

}  // namespace

ParityCheckMatrix lift_matrix(const ParityCheckMatrix& H,
                              const CoverAssignment& cov) {
  if (cov.edges != edge_pairs(H)) {
    throw InputError("cover does not match the Tanner graph of the matrix");
  }
  require_permutations(cov);
  const int M = cov.M;
  ParityCheckMatrix lifted;
  lifted.m = H.m * M;
  lifted.n = H.n * M;
  lifted.q = H.q;
  lifted.entries.assign(
      static_cast<std::size_t>(lifted.m) * lifted.n, 0);
  for (std::size_t e = 0; e < cov.edges.size(); ++e) {
    const auto [i, j] = cov.edges[e];
    const Symbol label = H.at(j, i);
    for (int jstar = 0; jstar < M; ++jstar) {
      const int istar = cov.sigma[e][jstar];
      lifted.at(j * M + jstar, i * M + istar) = label;
    }
  }
  return lifted;
}

std::vector<Pseudocodeword> enumerate_pseudocodewords(
    const ParityCheckMatrix& H, const CoverAssignment& cov, double limit) {
  const ParityCheckMatrix lifted = lift_matrix(H, cov);
  std::vector<std::vector<Symbol>> sols = enumerate_solutions(lifted, limit);
  std::vector<Pseudocodeword> out;
  out.reserve(sols.size());
  for (auto& s : sols) {
    out.push_back(Pseudocodeword{cov.M, H.n, H.q, std::move(s)});
  }
  return out;
}

CountMatrix pcw_matrix(const Pseudocodeword& p) {
  CountMatrix P;
  P.n = p.n;
  P.q = p.q;
  P.M = p.M;
  P.counts.assign(static_cast<std::size_t>(p.n) * p.q, 0);
  for (int i = 0; i < p.n; ++i) {
    for (int l = 0; l < p.M; ++l) {
      ++P.at(i, p.values[static_cast<std::size_t>(i) * p.M + l]);
    }
  }
  return P;
}

FractionMatrix normalize(const CountMatrix& P) {
  FractionMatrix F;
  F.n = P.n;
  F.q = P.q;
  F.f.resize(P.counts.size());
  for (int i = 0; i < P.n; ++i) {
    std::int64_t row_sum = 0;
    for (Symbol k = 0; k < P.q; ++k) row_sum += P.at(i, k);
    if (row_sum != P.M) {
      throw InputError("count matrix row does not sum to M");
    }
    for (Symbol k = 0; k < P.q; ++k) {
      F.at(i, k) = static_cast<double>(P.at(i, k)) / P.M;
    }
  }
  return F;
}

CountInequalityReport check_count_inequalities(const CountMatrix& P,
                                               const ParityCheckMatrix& H) {
  if (P.n != H.n || P.q != H.q) {
    throw InputError("count matrix does not match the parity-check matrix");
  }
  std::vector<std::int64_t> nonzero_mass(P.n, 0);
  for (int i = 0; i < P.n; ++i) {
    for (Symbol k = 1; k < P.q; ++k) nonzero_mass[i] += P.at(i, k);
  }
  CountInequalityReport report;
  for (int j = 0; j < H.m; ++j) {
    const std::vector<int> support = H.row_support(j);
    std::int64_t total = 0;
    for (const int i : support) total += nonzero_mass[i];
    for (const int l : support) {
      ++report.evaluated;
      if (total - nonzero_mass[l] < nonzero_mass[l]) {
        report.violations.emplace_back(j, l);
      }
    }
  }
  return report;
}

std::string serialize_cover(const CoverAssignment& cov) {
  std::ostringstream out;
  out << cov.M << "\n";
  for (std::size_t e = 0; e < cov.edges.size(); ++e) {
    out << cov.edges[e].first + 1 << " " << cov.edges[e].second + 1 << " :";
    for (const int v : cov.sigma[e]) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

CoverAssignment parse_cover(std::istream& in) {
  CoverAssignment cov;
  std::string line;
  int lineno = 0;
  bool have_m = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (!have_m) {
      if (!(ls >> cov.M)) continue;  // blank/comment line before M
      if (cov.M < 1) {
        throw InputError("cover file line " + std::to_string(lineno) +
                         ": M must be >= 1");
      }
      std::string extra;
      if (ls >> extra) {
        throw InputError("cover file line " + std::to_string(lineno) +
                         ": unexpected token after M");
      }
      have_m = true;
      continue;
    }
    int i = 0, j = 0;
    std::string colon;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j >> colon) || colon != ":") {
      throw InputError("cover file line " + std::to_string(lineno) +
                       ": expected `i j : s_1 ... s_M`");
    }
    if (i < 1 || j < 1) {
      throw InputError("cover file line " + std::to_string(lineno) +
                       ": indices are 1-based");
    }
    std::vector<int> perm;
    int v = 0;
    while (ls >> v) perm.push_back(v - 1);
    if (static_cast<int>(perm.size()) != cov.M) {
      throw InputError("cover file line " + std::to_string(lineno) +
                       ": expected " + std::to_string(cov.M) + " entries");
    }
    cov.edges.emplace_back(i - 1, j - 1);
    cov.sigma.push_back(std::move(perm));
  }
  if (!have_m || cov.edges.empty()) {
    throw InputError("cover file is empty or missing the M header");
  }
  require_permutations(cov);
  return cov;
}

void require_cover_matches(const TannerGraph& G, const CoverAssignment& cov) {
  std::vector<std::pair<int, int>> expected;
  expected.reserve(G.edges.size());
  for (const TannerEdge& e : G.edges) expected.emplace_back(e.var, e.check);
  if (cov.edges != expected) {
    throw InputError(
        "cover edge list does not match the Tanner graph "
        "(edges must be listed variable-major)");
  }
  require_permutations(cov);
}

}  // namespace pcw
